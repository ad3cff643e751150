"""Rectangular qubit placement and the nearest-neighbour connectivity check."""
import typing

from ..circuit.errors import UnplacedQubit
from ..circuit.gates import Circuit, GateKind
from ..interface import IJsonSerializable

__all__ = [
  "GridCoord",
  "GridLayout",
  "ReluGridSide",
  "LayoutReluGrid",
  "ValidateConnectivity",
]

GridCoord = typing.Tuple[int, int]

class GridLayout(IJsonSerializable):
  def __init__(self, rows=0, cols=0, placement=None) -> None:
    self.rows = rows
    self.cols = cols
    self.__placement = {}
    self.__cells = {}
    for q, coord in (placement or {}).items():
      self.Place(q, coord)

  def Place(self, qubit: int, coord: GridCoord) -> None:
    row, col = coord
    if not (0 <= row < self.rows and 0 <= col < self.cols):
      raise ValueError("cell {} outside a {}x{} grid".format(coord, self.rows, self.cols))
    if (row, col) in self.__cells or qubit in self.__placement:
      raise ValueError("qubit {} or cell {} already placed".format(qubit, coord))
    self.__placement[qubit] = (row, col)
    self.__cells[(row, col)] = qubit

  def GetCoord(self, qubit: int) -> GridCoord:
    if qubit not in self.__placement:
      raise UnplacedQubit("qubit {} has no grid cell".format(qubit))
    return self.__placement[qubit]

  def GetQubit(self, coord: GridCoord) -> int:
    if tuple(coord) not in self.__cells:
      raise UnplacedQubit("cell {} holds no qubit".format(tuple(coord)))
    return self.__cells[tuple(coord)]

  def IsPlaced(self, qubit: int) -> bool:
    return qubit in self.__placement

  def GetPlacement(self) -> typing.Dict[int, GridCoord]:
    return dict(self.__placement)

  def Distance(self, a: int, b: int) -> int:
    (ra, ca), (rb, cb) = self.GetCoord(a), self.GetCoord(b)
    return abs(ra - rb) + abs(ca - cb)

  def IsAdjacent(self, a: int, b: int) -> bool:
    return self.Distance(a, b) == 1

  def ToJson(self) -> dict:
    return {
      "rows": self.rows,
      "cols": self.cols,
      "placement": {str(q): list(self.__placement[q]) for q in sorted(self.__placement)},
    }

  def FromJson(self, j) -> None:
    self.rows = j["rows"]
    self.cols = j["cols"]
    self.__placement = {}
    self.__cells = {}
    for q, coord in j["placement"].items():
      self.Place(int(q), tuple(coord))

def ReluGridSide(n: int) -> int:
  k = 2
  while k * k // 2 < n:
    k += 2
  return k

def LayoutReluGrid(n: int) -> GridLayout:
  """Inputs x1..xn fill the even columns top to bottom, left to right; output
  a_i sits right of x_{i+1}. Qubits: inputs 0..n-1, outputs n..2n-2, then the
  unused cells (a0 and padding) in row-major order."""
  if n < 2:
    raise ValueError("relu grid needs n >= 2, got {}".format(n))
  k = ReluGridSide(n)
  layout = GridLayout(k, k)
  for j in range(n):
    layout.Place(j, (j % k, 2 * (j // k)))
  for i in range(1, n):
    layout.Place(n + i - 1, (i % k, 2 * (i // k) + 1))
  next_qubit = 2 * n - 1
  for row in range(k):
    for col in range(k):
      try:
        layout.GetQubit((row, col))
      except UnplacedQubit:
        layout.Place(next_qubit, (row, col))
        next_qubit += 1
  return layout

def ValidateConnectivity(circuit: Circuit, layout: GridLayout) -> typing.List[dict]:
  """Every multi-qubit gate whose operands are not pairwise grid-adjacent."""
  for q in range(circuit.qubit_count):
    layout.GetCoord(q)
  violations = []
  for index, g in enumerate(circuit.gates):
    if g.kind == GateKind.BARRIER or len(g.operands) < 2:
      continue
    ops = g.GetAllQubits()
    far = [(a, b) for i, a in enumerate(ops) for b in ops[i + 1:] if not layout.IsAdjacent(a, b)]
    if far:
      violations.append({"index": index, "gate": str(g), "pairs": [list(p) for p in far]})
  return violations
