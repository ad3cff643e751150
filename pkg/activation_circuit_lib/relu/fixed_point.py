class FixedPointValue:
  """n-bit signed fixed-point pattern, bit 0 (x1) is the sign."""

  __slots__ = ("width", "value")

  def __init__(self, width: int, value: int) -> None:
    if width < 1:
      raise ValueError("width must be positive")
    if value < 0 or value >> width:
      raise ValueError("value {} does not fit in {} bits".format(value, width))
    self.width = width
    self.value = value

  @staticmethod
  def FromBits(bits: str) -> "FixedPointValue":
    return FixedPointValue(len(bits), int(bits, 2))

  def ToBits(self) -> str:
    return format(self.value, "0{}b".format(self.width))

  def GetSignBit(self) -> int:
    return self.value >> (self.width - 1)

  def GetMagnitudeBits(self) -> int:
    return self.value & ((1 << (self.width - 1)) - 1)

  def __eq__(self, other) -> bool:
    return isinstance(other, FixedPointValue) and (self.width, self.value) == (other.width, other.value)

  def __hash__(self) -> int:
    return hash((self.width, self.value))

  def __repr__(self) -> str:
    return "FixedPointValue({})".format(self.ToBits())
