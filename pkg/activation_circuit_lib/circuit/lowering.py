"""Lowering of macro gates to {H, S, Sdg, T, Tdg, CNOT}.

Consecutive Toffolis that share their first control (and touch otherwise
disjoint qubits) are lowered together as one shared-control batch, and
consecutive CSWAPs on one control as one CSWAP batch.
"""
import logging
import typing

from ..evaluate.time_evaluator import Timeit
from ..synthesis.multi_control import MultiControlledXGates
from ..synthesis.toffoli_batch import CswapBatchGates, SharedControlToffoliBatchGates
from .gates import (
  Circuit,
  Cnot,
  GateKind,
  Hadamard,
  LOWERED_KINDS,
  LoweredCircuit,
  MacroGate,
  SGate,
  TGate,
  ValidateCircuit,
)

__all__ = [
  "LowerPhasePower",
  "LowerGates",
  "LowerCircuit",
]

logger = logging.getLogger(__name__)

def LowerPhasePower(q: int, k: int) -> typing.List[MacroGate]:
  """T^k as Z^a S^b T^c with Z = S S; at most one T."""
  r = k % 8
  s_count = 2 * (r // 4) + (r % 4) // 2
  gates = [SGate(q) for _ in range(s_count)]
  if r % 2:
    gates.append(TGate(q))
  return gates

def _CollectSharedControlRun(gates, start: int, kind: GateKind):
  control = gates[start].operands[0]
  used = {control}
  pairs = []
  i = start
  while i < len(gates) and gates[i].kind == kind and gates[i].operands[0] == control:
    a, b = gates[i].operands[1:]
    if a in used or b in used:
      break
    used.update((a, b))
    pairs.append((a, b))
    i += 1
  return control, pairs, i

def LowerGates(gates: typing.Sequence[MacroGate]) -> typing.List[MacroGate]:
  lowered = []
  i = 0
  while i < len(gates):
    g = gates[i]
    if g.kind in LOWERED_KINDS:
      lowered.append(g)
      i += 1
    elif g.kind == GateKind.TOFFOLI:
      control, pairs, i = _CollectSharedControlRun(gates, i, GateKind.TOFFOLI)
      lowered += LowerGates(SharedControlToffoliBatchGates(control, pairs))
    elif g.kind == GateKind.CSWAP:
      control, pairs, i = _CollectSharedControlRun(gates, i, GateKind.CSWAP)
      lowered += LowerGates(CswapBatchGates(control, pairs))
    elif g.kind == GateKind.MCX:
      lowered += LowerGates(MultiControlledXGates(g.operands[:-1], g.operands[-1], g.ancillas))
      i += 1
    elif g.kind == GateKind.X:
      q = g.operands[0]
      lowered += [Hadamard(q), SGate(q), SGate(q), Hadamard(q)]
      i += 1
    elif g.kind == GateKind.SWAP:
      a, b = g.operands
      lowered += [Cnot(a, b), Cnot(b, a), Cnot(a, b)]
      i += 1
    elif g.kind == GateKind.PHASE_POWER:
      lowered += LowerPhasePower(g.operands[0], g.param)
      i += 1
    else:
      raise ValueError("no lowering for {}".format(g))
  return lowered

@Timeit("lower")
def LowerCircuit(circuit: Circuit) -> LoweredCircuit:
  ValidateCircuit(circuit)
  gates = LowerGates(circuit.gates)
  logger.debug("lowered %d macro gates to %d gates", len(circuit.gates), len(gates))
  return LoweredCircuit(circuit.qubit_count, gates, circuit.roles, circuit.metadata)
