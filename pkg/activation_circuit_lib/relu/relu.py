"""n-bit ReLU on 2n-1 qubits: C|x>|0> = |x>|max(x, 0)>.

Inputs x1..xn sit on qubits 0..n-1, the n-1 output bits on n..2n-2.
Output bit i is x_{i+1} AND NOT x1, so one Toffoli per output shares the
control x1 (flipped by X on both sides). Lowering turns the shared-control
run into a single batch of T-depth 4.
"""
import functools
import logging

from ..circuit.errors import WidthTooSmall
from ..circuit.gates import CircuitBuilder, PauliX, QubitRole, Toffoli
from .fixed_point import FixedPointValue

__all__ = [
  "ReluQubits",
  "BuildRelu",
  "ReluReference",
  "ReluOracle",
]

logger = logging.getLogger(__name__)

class ReluQubits:
  def __init__(self, n: int) -> None:
    if n < 2:
      raise WidthTooSmall("relu needs n >= 2, got {}".format(n))
    self.n = n
    self.inputs = list(range(n))
    self.outputs = list(range(n, 2 * n - 1))
    self.qubit_count = 2 * n - 1

def BuildRelu(n: int):
  qubits = ReluQubits(n)
  sign = qubits.inputs[0]
  builder = CircuitBuilder(qubits.qubit_count)
  builder.SetRole(qubits.inputs, QubitRole.INPUT).SetRole(qubits.outputs, QubitRole.OUTPUT)
  builder.Append(PauliX(sign))
  for x, out in zip(qubits.inputs[1:], qubits.outputs):
    builder.Append(Toffoli(sign, x, out))
  builder.Append(PauliX(sign))
  logger.debug("relu n=%d on %d qubits", n, qubits.qubit_count)
  return builder.Build(metadata={"target": "relu", "bits": n})

def ReluReference(x: FixedPointValue) -> FixedPointValue:
  if x.GetSignBit():
    return FixedPointValue(x.width - 1, 0)
  return FixedPointValue(x.width - 1, x.GetMagnitudeBits())

def _ReluOnValue(value: int, n: int) -> int:
  return ReluReference(FixedPointValue(n, value)).value

def ReluOracle(n: int):
  return functools.partial(_ReluOnValue, n=n)
