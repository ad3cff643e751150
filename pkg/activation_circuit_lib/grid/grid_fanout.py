"""Fan-out under grid connectivity by quadrant recursion.

The grid is cut into four quadrants. The node holding the value reaches the
top-left target of the neighbouring quadrants along its row and column, the
diagonal quadrant is reached from the row neighbour, and all four quadrants
then recurse. Edges are routed CNOTs, so depth is O(sqrt n) and size O(n).
"""
import logging
import typing

from ..circuit.gates import CircuitBuilder, MacroGate
from ..synthesis.fanout import FanoutSpec
from .layout import GridLayout
from .routing import RouteLongCnotGates

__all__ = [
  "GridFanoutTree",
  "GridFanoutGates",
  "BuildGridFanout",
]

logger = logging.getLogger(__name__)

_TL, _TR, _BL, _BR = range(4)
_ROW_PARTNER = {_TL: _TR, _TR: _TL, _BL: _BR, _BR: _BL}
_COL_PARTNER = {_TL: _BL, _BL: _TL, _TR: _BR, _BR: _TR}
_DIAGONAL = {_TL: _BR, _BR: _TL, _TR: _BL, _BL: _TR}

def _SplitRegion(region):
  r0, r1, c0, c1 = region
  rm = r0 + (r1 - r0) // 2 if r1 - r0 >= 2 else r1
  cm = c0 + (c1 - c0) // 2 if c1 - c0 >= 2 else c1
  return [(r0, rm, c0, cm), (r0, rm, cm, c1), (rm, r1, c0, cm), (rm, r1, cm, c1)]

def _Inside(coord, region) -> bool:
  r0, r1, c0, c1 = region
  return r0 <= coord[0] < r1 and c0 <= coord[1] < c1

def GridFanoutTree(layout: GridLayout, source: int, targets: typing.Sequence[int]) -> typing.List[typing.List[typing.Tuple[int, int]]]:
  """Tree edges (parent, child) grouped into levels; a child's edge always
  sits in an earlier level than the edges leaving it."""
  spec = FanoutSpec(source, targets)
  spec.Validate()
  levels = []

  def AddEdge(level, parent, child):
    while len(levels) <= level:
      levels.append([])
    levels[level].append((parent, child))

  def Recurse(region, rep, nodes, depth):
    if len(nodes) <= 1:
      return
    quadrants = _SplitRegion(region)
    members = [[q for q in nodes if _Inside(layout.GetCoord(q), quad)] for quad in quadrants]
    reps = []
    for quad_index, quad_nodes in enumerate(members):
      if not quad_nodes:
        reps.append(None)
      elif rep in quad_nodes:
        reps.append(rep)
      else:
        reps.append(min(quad_nodes, key=layout.GetCoord))
    home = next(i for i, quad_nodes in enumerate(members) if rep in quad_nodes)
    row_rep = reps[_ROW_PARTNER[home]]
    col_rep = reps[_COL_PARTNER[home]]
    diag_rep = reps[_DIAGONAL[home]]
    if row_rep is not None:
      AddEdge(2 * depth, rep, row_rep)
    if col_rep is not None:
      AddEdge(2 * depth, rep, col_rep)
    if diag_rep is not None:
      parent = row_rep if row_rep is not None else (col_rep if col_rep is not None else rep)
      AddEdge(2 * depth + 1, parent, diag_rep)
    for quad, quad_nodes, quad_rep in zip(quadrants, members, reps):
      if quad_rep is not None:
        Recurse(quad, quad_rep, quad_nodes, depth + 1)

  nodes = [source] + list(spec.targets)
  Recurse((0, layout.rows, 0, layout.cols), source, nodes, 0)
  return [level for level in levels if level]

def GridFanoutGates(layout: GridLayout, source: int, targets: typing.Sequence[int]) -> typing.List[MacroGate]:
  edges = [edge for level in GridFanoutTree(layout, source, targets) for edge in level]
  from_source = []
  spread = []
  for parent, child in edges:
    gates = RouteLongCnotGates(layout, parent, child)
    if parent == source:
      from_source += gates
    else:
      spread += gates
  # uncompute the spreading tree, copy into the source's children, replay it
  return list(reversed(spread)) + from_source + spread

def BuildGridFanout(layout: GridLayout, source: int, targets: typing.Sequence[int], qubit_count=None):
  if qubit_count is None:
    qubit_count = len(layout.GetPlacement())
  builder = CircuitBuilder(qubit_count)
  builder.Extend(GridFanoutGates(layout, source, targets))
  circuit = builder.Build()
  logger.debug("grid fan-out from %d to %d targets: %d gates", source, len(targets), len(circuit.gates))
  return circuit
