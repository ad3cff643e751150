"""Bit-level minifloat / IEEE-754 codec.

Patterns are integers with the sign in the most significant bit. Encoding
rounds to nearest, ties to even, keeps subnormals, overflows to a signed
infinity, and maps NaN to the canonical quiet NaN.
"""
import math
import typing
from fractions import Fraction

import mpmath
import numpy as np

from ..circuit.errors import InvalidFormat

__all__ = [
  "FloatFormat",
  "FORMAT_NAMES",
  "EncodeFloat",
  "DecodeFloat",
  "EncodeFloatArray",
  "DecodeFloatArray",
]

FORMAT_NAMES = {
  "f8": (4, 3),
  "f16": (5, 10),
  "f32": (8, 23),
  "f64": (11, 52),
  "f128": (15, 112),
}

class FloatFormat:
  def __init__(self, exponent_bits: int, mantissa_bits: int) -> None:
    if exponent_bits < 2 or mantissa_bits < 1:
      raise InvalidFormat("format needs >= 2 exponent and >= 1 mantissa bits")
    self.exponent_bits = exponent_bits
    self.mantissa_bits = mantissa_bits

  @property
  def total(self) -> int:
    return 1 + self.exponent_bits + self.mantissa_bits

  @property
  def bias(self) -> int:
    return (1 << (self.exponent_bits - 1)) - 1

  @property
  def min_exponent(self) -> int:
    return 1 - self.bias

  @property
  def exponent_mask(self) -> int:
    return (1 << self.exponent_bits) - 1

  def GetInfinityBits(self, negative=False) -> int:
    bits = self.exponent_mask << self.mantissa_bits
    return bits | (1 << (self.total - 1)) if negative else bits

  def GetNanBits(self) -> int:
    return (self.exponent_mask << self.mantissa_bits) | (1 << (self.mantissa_bits - 1))

  def GetName(self) -> str:
    for name, fields in FORMAT_NAMES.items():
      if fields == (self.exponent_bits, self.mantissa_bits):
        return name
    return "e{}m{}".format(self.exponent_bits, self.mantissa_bits)

  @staticmethod
  def FromName(name: str) -> "FloatFormat":
    if name not in FORMAT_NAMES:
      raise InvalidFormat("unknown format {!r}; expected one of {}".format(name, ", ".join(FORMAT_NAMES)))
    return FloatFormat(*FORMAT_NAMES[name])

  @staticmethod
  def ForBits(n: int) -> "FloatFormat":
    return FloatFormat.FromName("f{}".format(n))

  def __eq__(self, other) -> bool:
    return isinstance(other, FloatFormat) and (self.exponent_bits, self.mantissa_bits) == (
      other.exponent_bits, other.mantissa_bits)

  def __hash__(self) -> int:
    return hash((self.exponent_bits, self.mantissa_bits))

  def __repr__(self) -> str:
    return "FloatFormat({}: 1/{}/{})".format(self.GetName(), self.exponent_bits, self.mantissa_bits)

def _RoundHalfEven(value: Fraction) -> int:
  q, r = divmod(value.numerator, value.denominator)
  twice = 2 * r
  if twice > value.denominator or (twice == value.denominator and q % 2):
    q += 1
  return q

def _Classify(x) -> typing.Tuple[str, bool, typing.Optional[Fraction]]:
  """('nan' | 'inf' | 'finite', negative, exact magnitude)."""
  if isinstance(x, mpmath.mpf):
    if mpmath.isnan(x):
      return "nan", False, None
    if mpmath.isinf(x):
      return "inf", x < 0, None
    man, exp = x.man_exp
    value = Fraction(man) * Fraction(2) ** exp
    return "finite", value < 0, abs(value)
  if isinstance(x, float):
    if math.isnan(x):
      return "nan", False, None
    if math.isinf(x):
      return "inf", x < 0, None
    return "finite", math.copysign(1.0, x) < 0, abs(Fraction(x))
  value = Fraction(x)
  return "finite", value < 0, abs(value)

def EncodeFloat(x, fmt: FloatFormat) -> int:
  kind, negative, magnitude = _Classify(x)
  if kind == "nan":
    return fmt.GetNanBits()
  sign = (1 << (fmt.total - 1)) if negative else 0
  if kind == "inf":
    return sign | fmt.GetInfinityBits()
  if magnitude == 0:
    return sign

  exponent = magnitude.numerator.bit_length() - magnitude.denominator.bit_length()
  if magnitude < Fraction(2) ** exponent:
    exponent -= 1
  mbits = fmt.mantissa_bits
  emin = fmt.min_exponent
  if exponent < emin:
    # subnormal; a carry into 2^mbits lands on the smallest normal
    bits = _RoundHalfEven(magnitude / Fraction(2) ** (emin - mbits))
  else:
    significand = _RoundHalfEven(magnitude / Fraction(2) ** (exponent - mbits))
    bits = ((exponent - emin) << mbits) + significand
  bits = min(bits, fmt.GetInfinityBits())
  return sign | bits

def DecodeFloat(bits: int, fmt: FloatFormat):
  """Exact value as an mpmath number (mpmath.inf / mpmath.nan for specials)."""
  if bits < 0 or bits >> fmt.total:
    raise InvalidFormat("pattern {} does not fit in {} bits".format(bits, fmt.total))
  mbits = fmt.mantissa_bits
  negative = bool(bits >> (fmt.total - 1))
  exponent_field = (bits >> mbits) & fmt.exponent_mask
  mantissa = bits & ((1 << mbits) - 1)
  if exponent_field == fmt.exponent_mask:
    if mantissa:
      return mpmath.nan
    return -mpmath.inf if negative else mpmath.inf
  if exponent_field == 0:
    significand, exponent = mantissa, fmt.min_exponent - mbits
  else:
    significand, exponent = (1 << mbits) | mantissa, exponent_field - fmt.bias - mbits
  with mpmath.workprec(mbits + 8):
    value = mpmath.ldexp(mpmath.mpf(significand), exponent)
    return -value if negative else value

def EncodeFloatArray(values, fmt: FloatFormat) -> np.ndarray:
  """Vectorized EncodeFloat for float64 inputs and formats up to 32 bits."""
  if fmt.total > 32:
    raise InvalidFormat("vectorized codec covers formats up to 32 bits")
  x = np.asarray(values, dtype=np.float64)
  mbits = fmt.mantissa_bits
  emin = fmt.min_exponent
  sign = np.signbit(x).astype(np.int64) << (fmt.total - 1)
  magnitude = np.abs(x)
  finite = np.isfinite(magnitude)
  safe = np.where(finite, magnitude, 0.0)
  _, frexp_exponent = np.frexp(safe)
  exponent = np.maximum(frexp_exponent.astype(np.int64) - 1, emin)
  significand = np.rint(np.ldexp(safe, (mbits - exponent).astype(np.int32))).astype(np.int64)
  bits = ((exponent - emin) << mbits) + significand
  bits = np.where(safe == 0, 0, bits)
  bits = np.minimum(bits, fmt.GetInfinityBits())
  bits = np.where(np.isinf(magnitude), fmt.GetInfinityBits(), bits)
  bits = bits | sign
  return np.where(np.isnan(x), fmt.GetNanBits(), bits)

def DecodeFloatArray(bits, fmt: FloatFormat) -> np.ndarray:
  if fmt.total > 32:
    raise InvalidFormat("vectorized codec covers formats up to 32 bits")
  b = np.asarray(bits, dtype=np.int64)
  mbits = fmt.mantissa_bits
  negative = ((b >> (fmt.total - 1)) & 1).astype(bool)
  exponent_field = (b >> mbits) & fmt.exponent_mask
  mantissa = b & ((1 << mbits) - 1)
  normal = np.ldexp((mantissa | (1 << mbits)).astype(np.float64),
                    (exponent_field - fmt.bias - mbits).astype(np.int32))
  subnormal = np.ldexp(mantissa.astype(np.float64), fmt.min_exponent - mbits)
  value = np.where(exponent_field == 0, subnormal, normal)
  special = exponent_field == fmt.exponent_mask
  value = np.where(special & (mantissa == 0), np.inf, value)
  value = np.where(special & (mantissa != 0), np.nan, value)
  return np.where(negative, -value, value)
