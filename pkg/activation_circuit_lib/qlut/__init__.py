from .float_format import FloatFormat, EncodeFloat, DecodeFloat, EncodeFloatArray, DecodeFloatArray
from .activations import ACTIVATIONS, GetActivation
from .lookup_table import LookupTable, BuildTable
from .cost_model import QlutCost, CostModel, CostTableRows
from .select_swap import (
  QlutConfig,
  QlutRegisters,
  BuildSelect,
  BuildSwapNetwork,
  BuildQlut,
  CountEmptySelectSteps,
  QlutOracle,
)
from .error_analysis import MaxError
