"""Basis-state simulators.

SimulateMacro tracks one classical bitvector through permutation gates.
SimulateSparse keeps a map basis -> amplitude and accepts every gate kind.
SimulateStatevector keeps a dense numpy vector, indexed with qubit q on bit q.
"""
import cmath
import math
import typing

import numpy as np

from ..circuit.errors import NonPermutationGate, TooManyQubits
from ..circuit.gates import Circuit, GateKind, MacroGate, PERMUTATION_KINDS
from .basis_state import BasisState
from .exact_amplitude import ExactAmplitude

__all__ = [
  "STATEVECTOR_QUBIT_LIMIT",
  "ApplyPermutationGate",
  "SimulateMacro",
  "SimulateSparse",
  "SimulateStatevector",
  "PhaseEighths",
]

STATEVECTOR_QUBIT_LIMIT = 20
SPARSE_FLOAT_CUTOFF = 1e-12

_PHASE_EIGHTHS = {
  GateKind.S: 2,
  GateKind.SDG: 6,
  GateKind.T: 1,
  GateKind.TDG: 7,
}

def PhaseEighths(gate: MacroGate) -> int:
  if gate.kind == GateKind.PHASE_POWER:
    return gate.param % 8
  return _PHASE_EIGHTHS[gate.kind]

def _AllSet(value: int, qubits) -> bool:
  for q in qubits:
    if not (value >> q) & 1:
      return False
  return True

def ApplyPermutationGate(value: int, gate: MacroGate) -> int:
  kind = gate.kind
  ops = gate.operands
  if kind == GateKind.X:
    return value ^ (1 << ops[0])
  if kind in (GateKind.CNOT, GateKind.TOFFOLI, GateKind.MCX):
    if _AllSet(value, ops[:-1]):
      return value ^ (1 << ops[-1])
    return value
  if kind == GateKind.SWAP or kind == GateKind.CSWAP:
    if kind == GateKind.CSWAP:
      if not (value >> ops[0]) & 1:
        return value
      ops = ops[1:]
    a, b = ops
    if ((value >> a) ^ (value >> b)) & 1:
      value ^= (1 << a) | (1 << b)
    return value
  if kind == GateKind.BARRIER:
    return value
  raise NonPermutationGate("{} is not a basis-state permutation".format(gate))

def SimulateMacro(circuit: Circuit, state: BasisState) -> BasisState:
  if state.width != circuit.qubit_count:
    raise ValueError("state has {} qubits, circuit {}".format(state.width, circuit.qubit_count))
  for g in circuit.gates:
    if g.kind not in PERMUTATION_KINDS:
      raise NonPermutationGate("{} is not a basis-state permutation".format(g))
  value = state.value
  for g in circuit.gates:
    value = ApplyPermutationGate(value, g)
  return BasisState(state.width, value)

class _ComplexArithmetic:
  @staticmethod
  def One():
    return 1 + 0j

  @staticmethod
  def Zero():
    return 0j

  @staticmethod
  def Rotate(amp, eighths):
    return amp * cmath.exp(1j * math.pi * eighths / 4)

  @staticmethod
  def HalfSum(x, y):
    return (x + y) / math.sqrt(2)

  @staticmethod
  def HalfDiff(x, y):
    return (x - y) / math.sqrt(2)

  @staticmethod
  def IsZero(amp):
    return abs(amp) < SPARSE_FLOAT_CUTOFF

class _ExactArithmetic:
  @staticmethod
  def One():
    return ExactAmplitude.One()

  @staticmethod
  def Zero():
    return ExactAmplitude.Zero()

  @staticmethod
  def Rotate(amp, eighths):
    return amp.MulOmega(eighths)

  @staticmethod
  def HalfSum(x, y):
    return (x + y).DivSqrt2()

  @staticmethod
  def HalfDiff(x, y):
    return (x - y).DivSqrt2()

  @staticmethod
  def IsZero(amp):
    return amp.IsZero()

def _ApplyHadamardSparse(amplitudes: dict, q: int, arith) -> dict:
  mask = 1 << q
  result = {}
  for basis in amplitudes:
    low = basis & ~mask
    if low in result:
      continue
    a0 = amplitudes.get(low, arith.Zero())
    a1 = amplitudes.get(low | mask, arith.Zero())
    result[low] = arith.HalfSum(a0, a1)
    result[low | mask] = arith.HalfDiff(a0, a1)
  return {b: a for b, a in result.items() if not arith.IsZero(a)}

def SimulateSparse(circuit: Circuit, state: BasisState, exact: bool = False) -> typing.Dict[int, typing.Any]:
  """Map basis value -> amplitude (complex, or ExactAmplitude when exact)."""
  arith = _ExactArithmetic if exact else _ComplexArithmetic
  amplitudes = {state.value: arith.One()}
  for g in circuit.gates:
    if g.kind in PERMUTATION_KINDS:
      amplitudes = {ApplyPermutationGate(b, g): a for b, a in amplitudes.items()}
    elif g.kind == GateKind.H:
      amplitudes = _ApplyHadamardSparse(amplitudes, g.operands[0], arith)
    else:
      mask = 1 << g.operands[0]
      eighths = PhaseEighths(g)
      amplitudes = {b: (arith.Rotate(a, eighths) if b & mask else a) for b, a in amplitudes.items()}
  return amplitudes

def _PermutationIndex(index: np.ndarray, gate: MacroGate) -> np.ndarray:
  kind = gate.kind
  ops = gate.operands
  if kind == GateKind.X:
    return index ^ (1 << ops[0])
  if kind in (GateKind.CNOT, GateKind.TOFFOLI, GateKind.MCX):
    cond = np.ones(index.shape, dtype=bool)
    for c in ops[:-1]:
      cond &= ((index >> c) & 1) == 1
    return np.where(cond, index ^ (1 << ops[-1]), index)
  if kind in (GateKind.SWAP, GateKind.CSWAP):
    cond = np.ones(index.shape, dtype=bool)
    if kind == GateKind.CSWAP:
      cond = ((index >> ops[0]) & 1) == 1
      ops = ops[1:]
    a, b = ops
    diff = ((index >> a) ^ (index >> b)) & 1
    swapped = index ^ ((diff << a) | (diff << b))
    return np.where(cond, swapped, index)
  return index

def SimulateStatevector(circuit: Circuit, state: BasisState, qubit_limit: int = STATEVECTOR_QUBIT_LIMIT) -> np.ndarray:
  n = circuit.qubit_count
  if n > qubit_limit:
    raise TooManyQubits("{} qubits exceed the statevector limit of {}".format(n, qubit_limit))
  dim = 1 << n
  index = np.arange(dim, dtype=np.int64)
  psi = np.zeros(dim, dtype=np.complex128)
  psi[state.value] = 1.0
  inv_sqrt2 = 1 / math.sqrt(2)
  for g in circuit.gates:
    if g.kind == GateKind.BARRIER:
      continue
    if g.kind in PERMUTATION_KINDS:
      moved = np.empty_like(psi)
      moved[_PermutationIndex(index, g)] = psi
      psi = moved
    elif g.kind == GateKind.H:
      mask = 1 << g.operands[0]
      i0 = index[(index & mask) == 0]
      i1 = i0 | mask
      a0 = psi[i0]
      a1 = psi[i1]
      psi[i0] = (a0 + a1) * inv_sqrt2
      psi[i1] = (a0 - a1) * inv_sqrt2
    else:
      mask = 1 << g.operands[0]
      psi[(index & mask) != 0] *= cmath.exp(1j * math.pi * PhaseEighths(g) / 4)
  return psi
