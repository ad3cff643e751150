"""Closed-form T-depth and ancilla cost of the SELECT/SWAP lookup circuit."""
import typing

from ..circuit.errors import InvalidSwapCount
from ..interface import IJsonSerializableWithDefault

__all__ = [
  "QlutCost",
  "SelectStepTDepth",
  "CostModel",
  "COST_TABLE_SWAP_QUBITS",
  "CostTableRows",
]

# swap-qubit counts per width in the standard cost grid
COST_TABLE_SWAP_QUBITS = {
  8: [1, 2, 3, 4, 5, 6, 7],
  16: [2, 4, 6, 8, 10, 12, 14],
  32: [4, 8, 12, 16, 20, 24, 28],
  64: [8, 16, 24, 32, 40, 48, 56],
  128: [16, 32, 48, 64, 80, 96, 112],
}

class QlutCost(IJsonSerializableWithDefault):
  def __init__(self, n=0, l=0, t_depth=0, ancilla=0) -> None:
    self.n = n
    self.l = l
    self.t_depth = t_depth
    self.ancilla = ancilla

  def __eq__(self, other) -> bool:
    return isinstance(other, QlutCost) and self.ToJson() == other.ToJson()

  def __repr__(self) -> str:
    return "QlutCost(n={}, l={}, t_depth={}, ancilla={})".format(self.n, self.l, self.t_depth, self.ancilla)

def SelectStepTDepth(k: int) -> int:
  """T-depth of one SELECT step with k controls."""
  if k <= 1:
    return 0
  if k == 2:
    return 4
  return 16 * k - 32

def CostModel(n: int, l: int) -> QlutCost:
  if not 0 < l < n:
    raise InvalidSwapCount("swap-qubit count must satisfy 0 < l < n, got n={}, l={}".format(n, l))
  k = n - l
  t_depth = (1 << k) * SelectStepTDepth(k) + 4 * l
  return QlutCost(n, l, t_depth, n * (1 << l))

def CostTableRows(widths: typing.Iterable[int] = (8, 16, 32, 64, 128), all_swap_counts=False) -> typing.List[QlutCost]:
  rows = []
  for n in widths:
    swap_counts = range(1, n) if all_swap_counts or n not in COST_TABLE_SWAP_QUBITS else COST_TABLE_SWAP_QUBITS[n]
    rows += [CostModel(n, l) for l in swap_counts]
  return rows
