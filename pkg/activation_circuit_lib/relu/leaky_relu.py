"""n-bit Leaky ReLU max(x, alpha x) for alpha = 2^-e, e in {3, 4, 5, 6}.

The output register holds n integer bits then e fraction bits (m = n + e).
Part one copies x2..xn into output bits 2..n when x1 = 0. Part two, after a
barrier, copies x_{i+1} into output bit i + k (k = 1 + e) when x1 = 1 and
writes the sign: output bit 1 for true form, output bits 1..k for 2's
complement. Each part lowers to one shared-control batch, T-depth 8 total.
"""
import enum
import functools
import logging
import math

from ..circuit.errors import InvalidAlpha, WidthTooSmall
from ..circuit.gates import Barrier, CircuitBuilder, Cnot, PauliX, QubitRole, Toffoli
from .fixed_point import FixedPointValue

__all__ = [
  "LeakyEncoding",
  "LeakySpec",
  "BuildLeakyRelu",
  "LeakyReference",
  "LeakyOracle",
  "ALPHA_EXPONENTS",
]

logger = logging.getLogger(__name__)

ALPHA_EXPONENTS = (3, 4, 5, 6)

class LeakyEncoding(enum.Enum):
  TRUE_FORM = "true"
  TWOS_COMPLEMENT = "twos"

class LeakySpec:
  def __init__(self, n: int, alpha_exponent: int, encoding=LeakyEncoding.TWOS_COMPLEMENT) -> None:
    self.n = n
    self.alpha_exponent = alpha_exponent
    self.encoding = LeakyEncoding(encoding)
    self.Validate()

  @staticmethod
  def FromAlpha(n: int, alpha: float, encoding=LeakyEncoding.TWOS_COMPLEMENT) -> "LeakySpec":
    if alpha <= 0:
      raise InvalidAlpha("alpha must be one of 2^-3..2^-6, got {}".format(alpha))
    exponent = -math.log2(alpha)
    if exponent != int(exponent):
      raise InvalidAlpha("alpha must be one of 2^-3..2^-6, got {}".format(alpha))
    return LeakySpec(n, int(exponent), encoding)

  def Validate(self) -> None:
    if self.n < 2:
      raise WidthTooSmall("leaky relu needs n >= 2, got {}".format(self.n))
    if self.alpha_exponent not in ALPHA_EXPONENTS:
      raise InvalidAlpha("alpha = 2^-{} is not one of 2^-3..2^-6".format(self.alpha_exponent))

  def GetAlpha(self) -> float:
    return 2.0 ** -self.alpha_exponent

  @property
  def m(self) -> int:
    return self.n + self.alpha_exponent

  @property
  def k(self) -> int:
    return 1 + self.alpha_exponent

def BuildLeakyRelu(spec: LeakySpec):
  spec.Validate()
  n, m, k = spec.n, spec.m, spec.k
  inputs = list(range(n))
  outputs = list(range(n, n + m))

  def Out(j):
    # output bit j, 1-based
    return outputs[j - 1]

  sign = inputs[0]
  builder = CircuitBuilder(n + m)
  builder.SetRole(inputs, QubitRole.INPUT).SetRole(outputs, QubitRole.OUTPUT)

  builder.Append(PauliX(sign))
  for j in range(2, n + 1):
    builder.Append(Toffoli(sign, inputs[j - 1], Out(j)))
  builder.Append(PauliX(sign))
  builder.Append(Barrier(range(n + m)))

  for j in range(2, n + 1):
    builder.Append(Toffoli(sign, inputs[j - 1], Out(j - 1 + k)))
  builder.Append(Cnot(sign, Out(1)))
  if spec.encoding == LeakyEncoding.TWOS_COMPLEMENT:
    for j in range(2, k + 1):
      builder.Append(Cnot(sign, Out(j)))
  logger.debug("leaky relu n=%d alpha=2^-%d %s", n, spec.alpha_exponent, spec.encoding.value)
  return builder.Build(metadata={
    "target": "leaky-relu", "bits": n, "alpha_exponent": spec.alpha_exponent, "encoding": spec.encoding.value})

def LeakyReference(x: FixedPointValue, spec: LeakySpec) -> FixedPointValue:
  e, m = spec.alpha_exponent, spec.m
  if not x.GetSignBit():
    return FixedPointValue(m, x.value << e)
  if spec.encoding == LeakyEncoding.TRUE_FORM:
    # sign-magnitude: magnitude bits keep their value in units of 2^-e
    return FixedPointValue(m, (1 << (m - 1)) | x.GetMagnitudeBits())
  signed = x.value - (1 << x.width)
  return FixedPointValue(m, signed % (1 << m))

def _LeakyOnValue(value: int, n: int, alpha_exponent: int, encoding: str) -> int:
  spec = LeakySpec(n, alpha_exponent, encoding)
  return LeakyReference(FixedPointValue(n, value), spec).value

def LeakyOracle(spec: LeakySpec):
  return functools.partial(_LeakyOnValue, n=spec.n, alpha_exponent=spec.alpha_exponent,
                           encoding=spec.encoding.value)
