"""Exact amplitudes in Z[w]/sqrt(2)^k with w = exp(i pi/4)."""
import cmath
import math

__all__ = [
  "ExactAmplitude",
]

_OMEGA = cmath.exp(1j * math.pi / 4)

def _TimesSqrt2(a, b, c, d):
  # sqrt(2) = w - w^3
  return (b - d, a + c, b + d, c - a)

class ExactAmplitude:
  __slots__ = ("a", "b", "c", "d", "k")

  def __init__(self, a=0, b=0, c=0, d=0, k=0) -> None:
    a, b, c, d, k = int(a), int(b), int(c), int(d), int(k)
    if a == 0 and b == 0 and c == 0 and d == 0:
      k = 0
    # keep k minimal: divide by sqrt(2) while the result stays integral
    while k > 0:
      na, nb, nc, nd = _TimesSqrt2(a, b, c, d)
      if na % 2 or nb % 2 or nc % 2 or nd % 2:
        break
      a, b, c, d, k = na // 2, nb // 2, nc // 2, nd // 2, k - 1
    self.a, self.b, self.c, self.d, self.k = a, b, c, d, k

  @staticmethod
  def Zero() -> "ExactAmplitude":
    return ExactAmplitude()

  @staticmethod
  def One() -> "ExactAmplitude":
    return ExactAmplitude(1)

  def GetCoefficients(self):
    return (self.a, self.b, self.c, self.d)

  def IsZero(self) -> bool:
    return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

  def _Raised(self, k: int):
    coeffs = self.GetCoefficients()
    for _ in range(k - self.k):
      coeffs = _TimesSqrt2(*coeffs)
    return coeffs

  def __add__(self, other: "ExactAmplitude") -> "ExactAmplitude":
    k = max(self.k, other.k)
    x = self._Raised(k)
    y = other._Raised(k)
    return ExactAmplitude(*(p + q for p, q in zip(x, y)), k=k)

  def __neg__(self) -> "ExactAmplitude":
    return ExactAmplitude(-self.a, -self.b, -self.c, -self.d, self.k)

  def __sub__(self, other: "ExactAmplitude") -> "ExactAmplitude":
    return self + (-other)

  def __mul__(self, other: "ExactAmplitude") -> "ExactAmplitude":
    x = self.GetCoefficients()
    y = other.GetCoefficients()
    r = [0, 0, 0, 0]
    for i in range(4):
      for j in range(4):
        term = x[i] * y[j]
        if i + j >= 4:
          r[i + j - 4] -= term
        else:
          r[i + j] += term
    return ExactAmplitude(*r, k=self.k + other.k)

  def MulOmega(self, power: int) -> "ExactAmplitude":
    a, b, c, d = self.GetCoefficients()
    for _ in range(power % 8):
      a, b, c, d = -d, a, b, c
    return ExactAmplitude(a, b, c, d, self.k)

  def DivSqrt2(self) -> "ExactAmplitude":
    return ExactAmplitude(self.a, self.b, self.c, self.d, self.k + 1)

  def Conjugate(self) -> "ExactAmplitude":
    return ExactAmplitude(self.a, -self.d, -self.c, -self.b, self.k)

  def NormSquared(self) -> "ExactAmplitude":
    return self * self.Conjugate()

  def ToComplex(self) -> complex:
    value = self.a + self.b * _OMEGA + self.c * _OMEGA ** 2 + self.d * _OMEGA ** 3
    return value / math.sqrt(2) ** self.k

  def __eq__(self, other) -> bool:
    if not isinstance(other, ExactAmplitude):
      return NotImplemented
    return self.GetCoefficients() == other.GetCoefficients() and self.k == other.k

  def __hash__(self) -> int:
    return hash((self.a, self.b, self.c, self.d, self.k))

  def __repr__(self) -> str:
    return "ExactAmplitude({}, {}, {}, {}, k={})".format(self.a, self.b, self.c, self.d, self.k)
