"""Gate and circuit representation.

A circuit is an ordered list of macro gates over an indexed qubit register.
Qubit 0 holds the most significant bit of the first register, so an encoded
value x1...xn sits on qubits 0...n-1 with x1 the sign bit.
"""
import enum
import typing
from dataclasses import dataclass

from ..interface import IJsonSerializable
from .errors import (
  ArityMismatch,
  CircuitError,
  DuplicateOperand,
  OutOfRangeQubit,
  OverlappingOperands,
)

__all__ = [
  "GateKind",
  "QubitRole",
  "MacroGate",
  "Circuit",
  "LoweredCircuit",
  "CircuitBuilder",
  "LOWERED_KINDS",
  "PERMUTATION_KINDS",
  "Hadamard",
  "SGate",
  "SdgGate",
  "TGate",
  "TdgGate",
  "PauliX",
  "Cnot",
  "Swap",
  "Toffoli",
  "MultiControlledX",
  "Cswap",
  "PhasePower",
  "Barrier",
  "ValidateGate",
  "ValidateCircuit",
  "LoadCircuitFile",
]

class GateKind(enum.Enum):
  H = "h"
  S = "s"
  SDG = "sdg"
  T = "t"
  TDG = "tdg"
  X = "x"
  CNOT = "cnot"
  SWAP = "swap"
  TOFFOLI = "toffoli"
  MCX = "mcx"
  CSWAP = "cswap"
  PHASE_POWER = "phase_power"
  BARRIER = "barrier"

class QubitRole(enum.Enum):
  INPUT = "input"
  OUTPUT = "output"
  SWAP_ADDRESS = "swap_address"
  GARBAGE = "garbage"
  UNUSED = "unused"
  WORK = "work"

_FIXED_ARITY = {
  GateKind.H: 1,
  GateKind.S: 1,
  GateKind.SDG: 1,
  GateKind.T: 1,
  GateKind.TDG: 1,
  GateKind.X: 1,
  GateKind.PHASE_POWER: 1,
  GateKind.CNOT: 2,
  GateKind.SWAP: 2,
  GateKind.TOFFOLI: 3,
  GateKind.CSWAP: 3,
}

LOWERED_KINDS = frozenset([
  GateKind.H, GateKind.S, GateKind.SDG, GateKind.T, GateKind.TDG, GateKind.CNOT, GateKind.BARRIER])

PERMUTATION_KINDS = frozenset([
  GateKind.X, GateKind.CNOT, GateKind.SWAP, GateKind.TOFFOLI, GateKind.MCX, GateKind.CSWAP,
  GateKind.BARRIER])

@dataclass(frozen=True)
class MacroGate:
  kind: GateKind
  operands: typing.Tuple[int, ...]
  param: typing.Optional[int] = None
  ancillas: typing.Tuple[int, ...] = ()

  def GetControls(self) -> typing.Tuple[int, ...]:
    if self.kind in (GateKind.CNOT, GateKind.TOFFOLI, GateKind.MCX):
      return self.operands[:-1]
    if self.kind == GateKind.CSWAP:
      return self.operands[:1]
    return ()

  def GetTarget(self) -> int:
    return self.operands[-1]

  def IsTGate(self) -> bool:
    if self.kind in (GateKind.T, GateKind.TDG):
      return True
    return self.kind == GateKind.PHASE_POWER and self.param % 2 == 1

  def GetAllQubits(self) -> typing.Tuple[int, ...]:
    return self.operands + self.ancillas

  def ToJson(self) -> dict:
    j = {"kind": self.kind.value, "operands": list(self.operands)}
    if self.param is not None:
      j["param"] = self.param
    if self.ancillas:
      j["ancillas"] = list(self.ancillas)
    return j

  @staticmethod
  def FromJson(j) -> "MacroGate":
    try:
      kind = GateKind(j["kind"])
    except ValueError:
      raise CircuitError("unknown gate kind {!r}".format(j["kind"]))
    return MacroGate(kind, tuple(j["operands"]), j.get("param"), tuple(j.get("ancillas", ())))

  def __str__(self) -> str:
    text = "{}({})".format(self.kind.value, ",".join(str(q) for q in self.operands))
    if self.param is not None:
      text += "^{}".format(self.param)
    return text

def Hadamard(q):
  return MacroGate(GateKind.H, (q,))

def SGate(q):
  return MacroGate(GateKind.S, (q,))

def SdgGate(q):
  return MacroGate(GateKind.SDG, (q,))

def TGate(q):
  return MacroGate(GateKind.T, (q,))

def TdgGate(q):
  return MacroGate(GateKind.TDG, (q,))

def PauliX(q):
  return MacroGate(GateKind.X, (q,))

def Cnot(control, target):
  return MacroGate(GateKind.CNOT, (control, target))

def Swap(a, b):
  return MacroGate(GateKind.SWAP, (a, b))

def Toffoli(x, y, target):
  return MacroGate(GateKind.TOFFOLI, (x, y, target))

def MultiControlledX(controls, target, ancillas=()):
  return MacroGate(GateKind.MCX, tuple(controls) + (target,), None, tuple(ancillas))

def Cswap(control, a, b):
  return MacroGate(GateKind.CSWAP, (control, a, b))

def PhasePower(q, k):
  return MacroGate(GateKind.PHASE_POWER, (q,), int(k))

def Barrier(qubits):
  return MacroGate(GateKind.BARRIER, tuple(qubits))

def ValidateGate(gate: MacroGate, qubit_count: int) -> None:
  n_operands = len(gate.operands)
  if gate.kind in _FIXED_ARITY:
    if n_operands != _FIXED_ARITY[gate.kind]:
      raise ArityMismatch("{} expects {} operands, got {}".format(
        gate.kind.value, _FIXED_ARITY[gate.kind], n_operands))
  elif gate.kind == GateKind.MCX and n_operands < 2:
    raise ArityMismatch("mcx needs at least one control and a target")
  elif gate.kind == GateKind.BARRIER and n_operands < 1:
    raise ArityMismatch("barrier needs at least one qubit")
  if gate.kind == GateKind.PHASE_POWER and not isinstance(gate.param, int):
    raise ArityMismatch("phase_power needs an integer exponent")
  if gate.ancillas and gate.kind != GateKind.MCX:
    raise ArityMismatch("only mcx carries ancillas")
  for q in gate.GetAllQubits():
    if not isinstance(q, int) or q < 0 or q >= qubit_count:
      raise OutOfRangeQubit("{}: qubit {} outside [0, {})".format(gate, q, qubit_count))
  if len(set(gate.operands)) != n_operands:
    raise DuplicateOperand("{}: operands must be pairwise distinct".format(gate))
  if len(set(gate.ancillas)) != len(gate.ancillas):
    raise DuplicateOperand("{}: ancillas must be pairwise distinct".format(gate))
  if set(gate.ancillas) & set(gate.operands):
    raise OverlappingOperands("{}: ancillas overlap the operands".format(gate))

class Circuit(IJsonSerializable):
  """Immutable macro circuit; build one with CircuitBuilder."""

  def __init__(self, qubit_count=0, gates=(), roles=None, metadata=None) -> None:
    self.qubit_count = int(qubit_count)
    self.gates = tuple(gates)
    if roles is None:
      roles = [QubitRole.WORK] * self.qubit_count
    self.roles = tuple(QubitRole(r) for r in roles)
    self.metadata = dict(metadata or {})

  def GetQubitsWithRole(self, role: QubitRole) -> typing.List[int]:
    return [q for q, r in enumerate(self.roles) if r == role]

  def GetGateCount(self) -> int:
    return sum(1 for g in self.gates if g.kind != GateKind.BARRIER)

  def CountKind(self, kind: GateKind) -> int:
    return sum(1 for g in self.gates if g.kind == kind)

  def IsPermutation(self) -> bool:
    return all(g.kind in PERMUTATION_KINDS for g in self.gates)

  def ToJson(self) -> dict:
    j = {
      "qubit_count": self.qubit_count,
      "roles": [r.value for r in self.roles],
      "gates": [g.ToJson() for g in self.gates],
    }
    if self.metadata:
      j["metadata"] = dict(self.metadata)
    return j

  def FromJson(self, j) -> None:
    self.qubit_count = int(j["qubit_count"])
    self.gates = tuple(MacroGate.FromJson(g) for g in j["gates"])
    self.roles = tuple(QubitRole(r) for r in j.get("roles", [QubitRole.WORK.value] * self.qubit_count))
    self.metadata = dict(j.get("metadata", {}))

  def __len__(self) -> int:
    return len(self.gates)

  def __repr__(self) -> str:
    return "Circuit(qubits={}, gates={})".format(self.qubit_count, len(self.gates))

class LoweredCircuit(Circuit):
  """Circuit over {H, S, Sdg, T, Tdg, CNOT} plus scheduling barriers."""

  def __init__(self, qubit_count=0, gates=(), roles=None, metadata=None) -> None:
    super().__init__(qubit_count, gates, roles, metadata)
    for g in self.gates:
      if g.kind not in LOWERED_KINDS:
        raise CircuitError("{} is not a lowered gate".format(g))

def ValidateCircuit(circuit: Circuit) -> None:
  if len(circuit.roles) != circuit.qubit_count:
    raise CircuitError("role map covers {} of {} qubits".format(len(circuit.roles), circuit.qubit_count))
  for g in circuit.gates:
    ValidateGate(g, circuit.qubit_count)

def LoadCircuitFile(file_path) -> Circuit:
  circuit = Circuit()
  circuit.LoadFromJsonFile(file_path)
  ValidateCircuit(circuit)
  return circuit

class CircuitBuilder:
  def __init__(self, qubit_count=None) -> None:
    self.__qubit_count = qubit_count
    self.__gates = []
    self.__roles = {}

  def Append(self, gate: MacroGate) -> "CircuitBuilder":
    self.__gates.append(gate)
    return self

  def Extend(self, gates) -> "CircuitBuilder":
    if isinstance(gates, Circuit):
      gates = gates.gates
    self.__gates.extend(gates)
    return self

  def SetRole(self, qubits, role: QubitRole) -> "CircuitBuilder":
    for q in qubits:
      self.__roles[q] = role
    return self

  def GetGates(self) -> typing.List[MacroGate]:
    return list(self.__gates)

  def Build(self, metadata=None, validate=True) -> Circuit:
    qubit_count = self.__qubit_count
    if qubit_count is None:
      used = [q for g in self.__gates for q in g.GetAllQubits()] + list(self.__roles)
      qubit_count = max(used) + 1 if used else 0
    roles = [self.__roles.get(q, QubitRole.WORK) for q in range(qubit_count)]
    circuit = Circuit(qubit_count, self.__gates, roles, metadata)
    if validate:
      ValidateCircuit(circuit)
    return circuit
