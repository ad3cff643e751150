"""Activation functions tabulated by the lookup-table circuits.

Each activation has a high-precision mpmath form, used to build tables, and a
float64 numpy form, used as the reference when measuring table error.
"""
import math
import typing

import mpmath
import numpy as np

from ..circuit.errors import CircuitError

__all__ = [
  "Activation",
  "ACTIVATIONS",
  "GetActivation",
]

def _Sigmoid(x):
  return 1 / (1 + mpmath.exp(-x))

def _Tanh(x):
  return mpmath.tanh(x)

def _Swish(x):
  if mpmath.isinf(x):
    return x if x > 0 else mpmath.mpf(0)
  return x * _Sigmoid(x)

def _Elu(x):
  if x > 0:
    return x
  return mpmath.expm1(x)

def _Gelu(x):
  if mpmath.isinf(x):
    return x if x > 0 else mpmath.mpf(0)
  return x / 2 * (1 + mpmath.erf(x / mpmath.sqrt(2)))

def _Relu(x):
  if x > 0:
    return x
  return mpmath.mpf(0)

def _SigmoidArray(x):
  with np.errstate(over="ignore"):
    return 1 / (1 + np.exp(-x))

def _SwishArray(x):
  return x * _SigmoidArray(x)

def _EluArray(x):
  return np.where(x > 0, x, np.expm1(np.minimum(x, 0)))

_ERF = np.vectorize(math.erf, otypes=[np.float64])

def _GeluArray(x):
  return x / 2 * (1 + _ERF(x / math.sqrt(2)))

def _ReluArray(x):
  return np.maximum(x, 0.0)

class Activation:
  def __init__(self, name: str, precise: typing.Callable, vectorized: typing.Callable) -> None:
    self.name = name
    self.precise = precise
    self.vectorized = vectorized

  def __call__(self, x):
    if mpmath.isnan(x):
      return mpmath.nan
    return self.precise(x)

  def __repr__(self) -> str:
    return "Activation({})".format(self.name)

ACTIVATIONS = {
  "sigmoid": Activation("sigmoid", _Sigmoid, _SigmoidArray),
  "tanh": Activation("tanh", _Tanh, np.tanh),
  "swish": Activation("swish", _Swish, _SwishArray),
  "elu": Activation("elu", _Elu, _EluArray),
  "gelu": Activation("gelu", _Gelu, _GeluArray),
  "relu": Activation("relu", _Relu, _ReluArray),
}

def GetActivation(name: str) -> Activation:
  if name not in ACTIVATIONS:
    raise CircuitError("unknown activation {!r}; expected one of {}".format(name, ", ".join(ACTIVATIONS)))
  return ACTIVATIONS[name]
