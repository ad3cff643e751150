import typing

__all__ = [
  "BasisState",
]

class BasisState:
  """Computational basis state; bit q of value is qubit q."""

  __slots__ = ("width", "value")

  def __init__(self, width: int, value: int = 0) -> None:
    if value < 0 or value >> width:
      raise ValueError("value {} does not fit in {} qubits".format(value, width))
    self.width = width
    self.value = value

  @staticmethod
  def FromBits(bits: str) -> "BasisState":
    value = 0
    for q, ch in enumerate(bits):
      if ch not in "01":
        raise ValueError("bad bit {!r} in {!r}".format(ch, bits))
      if ch == "1":
        value |= 1 << q
    return BasisState(len(bits), value)

  def ToBits(self) -> str:
    return "".join("1" if (self.value >> q) & 1 else "0" for q in range(self.width))

  def GetBit(self, q: int) -> int:
    return (self.value >> q) & 1

  def ReadRegister(self, qubits: typing.Sequence[int]) -> int:
    """Register value with qubits[0] as the most significant bit."""
    result = 0
    for q in qubits:
      result = (result << 1) | ((self.value >> q) & 1)
    return result

  def WithRegister(self, qubits: typing.Sequence[int], register_value: int) -> "BasisState":
    value = self.value
    n = len(qubits)
    for i, q in enumerate(qubits):
      bit = (register_value >> (n - 1 - i)) & 1
      value = (value & ~(1 << q)) | (bit << q)
    return BasisState(self.width, value)

  def __eq__(self, other) -> bool:
    return isinstance(other, BasisState) and self.width == other.width and self.value == other.value

  def __hash__(self) -> int:
    return hash((self.width, self.value))

  def __repr__(self) -> str:
    return "BasisState({})".format(self.ToBits())
