"""Worst-case error of a tabulated activation against float64 evaluation."""
import logging
import typing
from fractions import Fraction

import numpy as np

from ..evaluate.time_evaluator import TimeitContext
from .activations import GetActivation
from .float_format import DecodeFloatArray, EncodeFloatArray, FloatFormat
from .lookup_table import BuildTable, LookupTable

__all__ = [
  "DEFAULT_DOMAIN",
  "DEFAULT_SAMPLE_COUNT",
  "RepresentableInputs",
  "PointwiseError",
  "MaxError",
]

logger = logging.getLogger(__name__)

DEFAULT_DOMAIN = Fraction(15, 4)
DEFAULT_SAMPLE_COUNT = 10 ** 6

def RepresentableInputs(fmt: FloatFormat, domain=DEFAULT_DOMAIN) -> np.ndarray:
  """Every finite value of the format with |x| < domain."""
  values = DecodeFloatArray(np.arange(1 << fmt.total, dtype=np.int64), fmt)
  return values[np.isfinite(values) & (np.abs(values) < float(domain))]

def PointwiseError(table: LookupTable, fmt: FloatFormat, fn_name: str, x) -> np.ndarray:
  x = np.asarray(x, dtype=np.float64)
  entries = np.asarray(table.entries, dtype=np.int64)
  approx = DecodeFloatArray(entries[EncodeFloatArray(x, fmt)], fmt)
  exact = GetActivation(fn_name).vectorized(x)
  return np.abs(approx - exact)

def MaxError(fn_name: str, fmt: FloatFormat, domain=DEFAULT_DOMAIN, sample_count=DEFAULT_SAMPLE_COUNT,
             seed=0, table: typing.Optional[LookupTable] = None) -> float:
  """Largest |decode(table[encode(x)]) - fn(x)| over a seeded dense sample of
  the open interval plus every representable input inside it."""
  if table is None:
    table = BuildTable(fn_name, fmt)
  bound = float(domain)
  rng = np.random.default_rng(seed)
  samples = rng.uniform(-bound, bound, size=sample_count)
  samples = samples[np.abs(samples) < bound]
  x = np.concatenate([samples, RepresentableInputs(fmt, domain)])
  with TimeitContext("max_error"):
    errors = PointwiseError(table, fmt, fn_name, x)
  worst = float(np.nanmax(errors))
  logger.debug("max error of %s over %s on %d points: %g", fn_name, fmt.GetName(), len(x), worst)
  return worst
