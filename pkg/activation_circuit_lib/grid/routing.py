import typing

from ..circuit.errors import DuplicateOperand
from ..circuit.gates import CircuitBuilder, Cnot, MacroGate, Swap
from .layout import GridCoord, GridLayout

__all__ = [
  "ManhattanPath",
  "RouteLongCnotGates",
  "RouteLongCnot",
]

def ManhattanPath(start: GridCoord, end: GridCoord) -> typing.List[GridCoord]:
  """Cells from start to end, along start's row first, then end's column."""
  (r0, c0), (r1, c1) = start, end
  path = [(r0, c0)]
  step = 1 if c1 > c0 else -1
  for c in range(c0 + step, c1 + step, step):
    path.append((r0, c))
  step = 1 if r1 > r0 else -1
  for r in range(r0 + step, r1 + step, step):
    path.append((r, c1))
  return path

def RouteLongCnotGates(layout: GridLayout, src: int, dst: int) -> typing.List[MacroGate]:
  if src == dst:
    raise DuplicateOperand("routed cnot needs distinct qubits, got {}".format(src))
  cells = ManhattanPath(layout.GetCoord(src), layout.GetCoord(dst))
  qubits = [layout.GetQubit(c) for c in cells]
  # walk src's state to the cell next to dst, act, then walk it back
  chain = [Swap(qubits[i], qubits[i + 1]) for i in range(len(qubits) - 2)]
  return chain + [Cnot(qubits[-2], qubits[-1])] + list(reversed(chain))

def RouteLongCnot(layout: GridLayout, src: int, dst: int, qubit_count=None):
  builder = CircuitBuilder(qubit_count if qubit_count is not None else len(layout.GetPlacement()))
  builder.Extend(RouteLongCnotGates(layout, src, dst))
  return builder.Build()
