"""Multi-controlled X on dirty ancillas and the controlled fan-out of a SELECT step."""
import typing

from ..circuit.errors import (
  ArityMismatch,
  InsufficientAncillas,
  OverlappingOperands,
)
from ..circuit.gates import (
  CircuitBuilder,
  Cnot,
  MacroGate,
  MultiControlledX,
  PauliX,
  TdgGate,
  TGate,
  Toffoli,
)
from .fanout import FanoutAroundRoot, FanoutSpec

__all__ = [
  "MultiControlledXGates",
  "BuildMultiControlledX",
  "MultiControlIdleGates",
  "MultiControlRootGate",
  "ControlledFanoutGates",
  "BuildControlledFanout",
  "ParseAddressPattern",
]

def _CheckMultiControlOperands(controls, target, dirty_ancillas) -> None:
  k = len(controls)
  if k < 1:
    raise ArityMismatch("multi-controlled X needs at least one control")
  operands = list(controls) + [target]
  if len(set(operands)) != len(operands):
    raise OverlappingOperands("controls and target must be distinct: {}".format(operands))
  if k >= 3:
    if len(dirty_ancillas) < k - 2:
      raise InsufficientAncillas("{} controls need {} dirty ancillas, got {}".format(
        k, k - 2, len(dirty_ancillas)))
    used = list(dirty_ancillas[:k - 2])
    if len(set(used)) != len(used) or set(used) & set(operands):
      raise OverlappingOperands("dirty ancillas {} overlap controls/target {}".format(used, operands))

def MultiControlledXGates(controls, target, dirty_ancillas=()) -> typing.List[MacroGate]:
  """Toffoli chain for Lambda_k(X); ancillas may hold any basis value and are restored.

  Consecutive Toffolis share a qubit only as second control or target, so each
  one adds exactly four T-layers after lowering: T-depth 16k - 32 for k >= 3.
  """
  c = list(controls)
  k = len(c)
  _CheckMultiControlOperands(c, target, dirty_ancillas)
  if k == 1:
    return [Cnot(c[0], target)]
  if k == 2:
    return [Toffoli(c[0], c[1], target)]
  a = list(dirty_ancillas[:k - 2])

  def Descend():
    return [Toffoli(c[i], a[i - 2], a[i - 1]) for i in range(k - 2, 1, -1)]

  def Ascend():
    return [Toffoli(c[i], a[i - 2], a[i - 1]) for i in range(2, k - 1)]

  top = Toffoli(c[k - 1], a[k - 3], target)
  bottom = Toffoli(c[0], c[1], a[0])
  gates = [top] + Descend() + [bottom] + Ascend() + [top]
  gates += Descend() + [bottom] + Ascend()
  return gates

def BuildMultiControlledX(k: int, controls, target, dirty_ancillas=(), qubit_count=None):
  if k != len(controls):
    raise ArityMismatch("k = {} but {} controls given".format(k, len(controls)))
  builder = CircuitBuilder(qubit_count)
  builder.Extend(MultiControlledXGates(controls, target, dirty_ancillas))
  return builder.Build()

def MultiControlIdleGates(controls, target, dirty_ancillas=()) -> typing.List[MacroGate]:
  """Identity on every basis state with the lowered T-depth of Lambda_k(X).

  k >= 3: the Toffoli chain of MultiControlledXGates with the second target
  Toffoli moved to the end, so the two target flips cancel around a chain
  that runs down and back up the dirty ancillas. k = 2: controlled-S and its
  inverse on the two controls. k = 1: no gates.
  """
  c = list(controls)
  k = len(c)
  _CheckMultiControlOperands(c, target, dirty_ancillas)
  if k == 1:
    return []
  if k == 2:
    x, y = c
    return [TGate(x), TGate(y), Cnot(x, y), TdgGate(y), Cnot(x, y),
            TdgGate(x), TdgGate(y), Cnot(x, y), TGate(y), Cnot(x, y)]
  gates = MultiControlledXGates(c, target, dirty_ancillas)
  half = len(gates) // 2
  return gates[:half] + gates[half + 1:] + [gates[half]]

def MultiControlRootGate(controls, target, dirty_ancillas=()) -> MacroGate:
  controls = tuple(controls)
  _CheckMultiControlOperands(controls, target, dirty_ancillas)
  if len(controls) == 1:
    return Cnot(controls[0], target)
  if len(controls) == 2:
    return Toffoli(controls[0], controls[1], target)
  return MultiControlledX(controls, target, tuple(dirty_ancillas[:len(controls) - 2]))

def ParseAddressPattern(address_pattern, k: int) -> typing.Tuple[int, ...]:
  if isinstance(address_pattern, str):
    bits = tuple(int(ch) for ch in address_pattern)
  elif isinstance(address_pattern, int):
    bits = tuple((address_pattern >> (k - 1 - i)) & 1 for i in range(k))
  else:
    bits = tuple(int(b) for b in address_pattern)
  if len(bits) != k or any(b not in (0, 1) for b in bits):
    raise ArityMismatch("address pattern {!r} is not {} bits".format(address_pattern, k))
  return bits

def ControlledFanoutGates(controls, address_pattern, targets, dirty_ancillas=()) -> typing.List[MacroGate]:
  controls = tuple(controls)
  pattern = ParseAddressPattern(address_pattern, len(controls))
  spec = FanoutSpec(controls[0], targets)
  spec.Validate()
  if set(controls) & set(spec.targets):
    raise OverlappingOperands("controls overlap the fan-out targets")
  flips = [PauliX(q) for q, bit in zip(controls, pattern) if bit == 0]
  root = MultiControlRootGate(controls, spec.targets[0], dirty_ancillas)
  return flips + FanoutAroundRoot(spec.targets, [root]) + flips

def BuildControlledFanout(controls, address_pattern, targets, dirty_ancillas=(), qubit_count=None):
  builder = CircuitBuilder(qubit_count)
  builder.Extend(ControlledFanoutGates(controls, address_pattern, targets, dirty_ancillas))
  return builder.Build()
