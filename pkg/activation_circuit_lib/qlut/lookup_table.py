"""Exhaustive input -> output tables of an activation over a float format."""
import functools
import logging
import typing

import mpmath
from tqdm import tqdm

from ..circuit.errors import TableTooLarge
from ..dispatch import OrderedProcessMap, SplitListBySize
from ..interface import IJsonSerializable
from .activations import GetActivation
from .float_format import DecodeFloat, EncodeFloat, FloatFormat

__all__ = [
  "MAX_TABLE_BITS",
  "LookupTable",
  "BuildTable",
  "TableEntry",
]

logger = logging.getLogger(__name__)

MAX_TABLE_BITS = 16
TABLE_CHUNK_SIZE = 4096

class LookupTable(IJsonSerializable):
  def __init__(self, input_width=0, output_width=0, entries=(), metadata=None) -> None:
    self.input_width = int(input_width)
    self.output_width = int(output_width)
    self.entries = tuple(int(e) for e in entries)
    self.metadata = dict(metadata or {})
    if self.entries and len(self.entries) != 1 << self.input_width:
      raise TableTooLarge("table over {} bits needs {} entries, got {}".format(
        self.input_width, 1 << self.input_width, len(self.entries)))

  def Lookup(self, value: int) -> int:
    return self.entries[value]

  def __len__(self) -> int:
    return len(self.entries)

  def DumpLines(self, radix: str = "bin") -> typing.List[str]:
    """Lines of "input output" in binary or hex, one per input pattern."""
    if radix == "bin":
      in_fmt = "0{}b".format(self.input_width)
      out_fmt = "0{}b".format(self.output_width)
    elif radix == "hex":
      in_fmt = "0{}x".format((self.input_width + 3) // 4)
      out_fmt = "0{}x".format((self.output_width + 3) // 4)
    else:
      raise ValueError("radix must be 'bin' or 'hex', got {!r}".format(radix))
    return ["{} {}".format(format(x, in_fmt), format(y, out_fmt)) for x, y in enumerate(self.entries)]

  def ToJson(self) -> dict:
    j = {
      "input_width": self.input_width,
      "output_width": self.output_width,
      "entries": list(self.entries),
    }
    if self.metadata:
      j["metadata"] = dict(self.metadata)
    return j

  def FromJson(self, j) -> None:
    self.input_width = int(j["input_width"])
    self.output_width = int(j["output_width"])
    self.entries = tuple(int(e) for e in j["entries"])
    self.metadata = dict(j.get("metadata", {}))

  @staticmethod
  def FromFunction(width: int, fn: typing.Callable[[int], int], output_width=None, metadata=None) -> "LookupTable":
    """Table of an integer function; handy for identity and test tables."""
    if output_width is None:
      output_width = width
    return LookupTable(width, output_width, [fn(x) for x in range(1 << width)], metadata)

def _WorkingPrecision(fmt: FloatFormat) -> int:
  return 2 * (fmt.mantissa_bits + 1) + 32

def TableEntry(pattern: int, fn_name: str, fmt: FloatFormat) -> int:
  activation = GetActivation(fn_name)
  x = DecodeFloat(pattern, fmt)
  with mpmath.workprec(_WorkingPrecision(fmt)):
    y = activation(x)
  return EncodeFloat(y, fmt)

def _TableChunkProcess(item, i, obj):
  return [TableEntry(p, obj[0], obj[1]) for p in item]

def _MakeTableContext(i, fn_name, fmt):
  return (fn_name, fmt)

def BuildTable(fn_name: str, fmt: FloatFormat, worker_count=1, progress=False) -> LookupTable:
  if fmt.total > MAX_TABLE_BITS:
    raise TableTooLarge("tables are materialized up to {} bits, {} has {}".format(
      MAX_TABLE_BITS, fmt.GetName(), fmt.total))
  GetActivation(fn_name)
  patterns = list(range(1 << fmt.total))
  if worker_count > 1:
    chunks = list(SplitListBySize(patterns, TABLE_CHUNK_SIZE))
    init_obj_fn = functools.partial(_MakeTableContext, fn_name=fn_name, fmt=fmt)
    entries = [e for part in OrderedProcessMap(_TableChunkProcess, chunks, worker_count, init_obj_fn) for e in part]
  else:
    entries = [TableEntry(p, fn_name, fmt) for p in tqdm(patterns, disable=not progress, desc=fn_name)]
  logger.debug("built %s table over %s (%d entries)", fn_name, fmt.GetName(), len(entries))
  return LookupTable(fmt.total, fmt.total, entries, {"function": fn_name, "format": fmt.GetName()})
