"""Least-squares fits for measured depth and size series."""
import typing

import numpy as np

__all__ = [
  "FitPowerLawExponent",
  "FitLogarithmic",
  "FitLinear",
]

def _AsArrays(xs, ys):
  x = np.asarray(xs, dtype=np.float64)
  y = np.asarray(ys, dtype=np.float64)
  if x.shape != y.shape or x.size < 2:
    raise ValueError("need two equally long series of at least 2 points, got {} and {}".format(x.size, y.size))
  return x, y

def FitPowerLawExponent(xs, ys) -> float:
  """Slope of log y against log x, i.e. b in y ~ a * x^b."""
  x, y = _AsArrays(xs, ys)
  slope, _ = np.polyfit(np.log(x), np.log(y), 1)
  return float(slope)

def FitLogarithmic(xs, ys) -> typing.Tuple[float, float, float]:
  """(a, b, worst relative residual) of y ~ a + b * log2 x."""
  x, y = _AsArrays(xs, ys)
  b, a = np.polyfit(np.log2(x), y, 1)
  fitted = a + b * np.log2(x)
  residual = float(np.max(np.abs(fitted - y) / np.abs(y)))
  return float(a), float(b), residual

def FitLinear(xs, ys) -> typing.Tuple[float, float, float]:
  """(slope, intercept, R^2) of y ~ slope * x + intercept."""
  x, y = _AsArrays(xs, ys)
  slope, intercept = np.polyfit(x, y, 1)
  fitted = slope * x + intercept
  total = float(np.sum((y - np.mean(y)) ** 2))
  r_squared = 1.0 if total == 0 else 1.0 - float(np.sum((y - fitted) ** 2)) / total
  return float(slope), float(intercept), r_squared
