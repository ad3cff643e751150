"""ReLU under 2D-grid connectivity.

Same batch as the unconstrained ReLU, written out gate by gate so that its
fan-outs can be the grid fan-out. Every remaining CNOT couples x_{i+1} with
the output cell a_i placed next to it.
"""
import functools
import logging

from ..circuit.errors import WidthTooSmall
from ..circuit.gates import CircuitBuilder, PauliX, QubitRole
from ..synthesis.toffoli_batch import SharedControlToffoliBatchGates
from .grid_fanout import GridFanoutGates
from .layout import LayoutReluGrid

__all__ = [
  "BuildReluGrid",
]

logger = logging.getLogger(__name__)

def BuildReluGrid(n: int):
  if n < 2:
    raise WidthTooSmall("relu needs n >= 2, got {}".format(n))
  layout = LayoutReluGrid(n)
  qubit_count = layout.rows * layout.cols
  inputs = list(range(n))
  outputs = list(range(n, 2 * n - 1))
  sign = inputs[0]

  builder = CircuitBuilder(qubit_count)
  builder.SetRole(range(2 * n - 1, qubit_count), QubitRole.UNUSED)
  builder.SetRole(inputs, QubitRole.INPUT).SetRole(outputs, QubitRole.OUTPUT)
  builder.Append(PauliX(sign))
  builder.Extend(SharedControlToffoliBatchGates(
    sign, list(zip(inputs[1:], outputs)), functools.partial(GridFanoutGates, layout)))
  builder.Append(PauliX(sign))
  circuit = builder.Build(metadata={"target": "relu", "bits": n, "layout": "grid"})
  logger.debug("grid relu n=%d on a %dx%d grid: %d gates", n, layout.rows, layout.cols, len(circuit.gates))
  return circuit, layout
