"""Toffoli and controlled-SWAP batches that share one control.

Each pair (y, t) gets the seven-T Toffoli network. The CNOTs leaving the
shared control become fan-outs and the m T gates on the shared control
collapse into one PhasePower(m), so the batch keeps T-depth 4 for any m.
"""
import logging
import typing

from ..circuit.errors import EmptyTargets, OverlappingPairs
from ..circuit.gates import (
  CircuitBuilder,
  Cnot,
  Hadamard,
  MacroGate,
  PhasePower,
  TdgGate,
  TGate,
)
from .fanout import FanoutGates

__all__ = [
  "FanoutBuilder",
  "SharedControlToffoliBatchGates",
  "BuildSharedControlToffoliBatch",
  "CswapBatchGates",
  "BuildCswapBatch",
]

logger = logging.getLogger(__name__)

FanoutBuilder = typing.Callable[[int, typing.Sequence[int]], typing.List[MacroGate]]

def _CheckPairs(control, pairs) -> None:
  if not pairs:
    raise EmptyTargets("batch on control {} has no pairs".format(control))
  qubits = [control]
  for a, b in pairs:
    qubits.extend((a, b))
  if len(set(qubits)) != len(qubits):
    raise OverlappingPairs("batch on control {}: qubits {} are not pairwise distinct".format(control, qubits))

def SharedControlToffoliBatchGates(control: int, pairs, fanout_builder: FanoutBuilder = None) -> typing.List[MacroGate]:
  pairs = [tuple(p) for p in pairs]
  _CheckPairs(control, pairs)
  if fanout_builder is None:
    fanout_builder = FanoutGates
  ys = [y for y, _ in pairs]
  ts = [t for _, t in pairs]

  gates = []
  gates += [Hadamard(t) for t in ts]
  gates += [Cnot(y, t) for y, t in pairs]
  gates += [TdgGate(t) for t in ts]
  gates += fanout_builder(control, ts)
  gates += [TGate(t) for t in ts]
  gates += [Cnot(y, t) for y, t in pairs]
  gates += [TGate(y) for y in ys]
  gates += [TdgGate(t) for t in ts]
  gates += fanout_builder(control, ts)
  gates += fanout_builder(control, ys)
  gates.append(PhasePower(control, len(pairs)))
  gates += [TdgGate(y) for y in ys]
  gates += [TGate(t) for t in ts]
  gates += fanout_builder(control, ys)
  gates += [Hadamard(t) for t in ts]
  logger.debug("toffoli batch on control %d: %d pairs, %d gates", control, len(pairs), len(gates))
  return gates

def BuildSharedControlToffoliBatch(control: int, pairs, fanout_builder: FanoutBuilder = None, qubit_count=None):
  builder = CircuitBuilder(qubit_count)
  builder.Extend(SharedControlToffoliBatchGates(control, pairs, fanout_builder))
  return builder.Build()

def CswapBatchGates(control: int, swap_pairs, fanout_builder: FanoutBuilder = None) -> typing.List[MacroGate]:
  swap_pairs = [tuple(p) for p in swap_pairs]
  _CheckPairs(control, swap_pairs)
  sandwich = [Cnot(b, a) for a, b in swap_pairs]
  return sandwich + SharedControlToffoliBatchGates(control, swap_pairs, fanout_builder) + sandwich

def BuildCswapBatch(control: int, swap_pairs, fanout_builder: FanoutBuilder = None, qubit_count=None):
  builder = CircuitBuilder(qubit_count)
  builder.Extend(CswapBatchGates(control, swap_pairs, fanout_builder))
  return builder.Build()
