from .fanout import FanoutSpec, BuildFanout, FanoutGates
from .toffoli_batch import (
  BuildSharedControlToffoliBatch,
  SharedControlToffoliBatchGates,
  BuildCswapBatch,
  CswapBatchGates,
)
from .multi_control import (
  BuildMultiControlledX,
  MultiControlledXGates,
  MultiControlIdleGates,
  BuildControlledFanout,
  ControlledFanoutGates,
)
