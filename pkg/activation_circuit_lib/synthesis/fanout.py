"""CNOT-only fan-out F_n: |a, b1..bn> -> |a, b1^a, ..., bn^a>.

The targets form a doubling tree rooted at the first target. The tree is
uncomputed, the source is copied into the root, and the tree is replayed,
which gives depth 2*ceil(log2 n) + 1 and size 2n - 1 without ancillas.
"""
import math
import typing

from ..circuit.errors import DuplicateOperand, EmptyTargets
from ..circuit.gates import CircuitBuilder, Cnot, MacroGate

__all__ = [
  "FanoutSpec",
  "DoublingTreeGates",
  "FanoutAroundRoot",
  "FanoutGates",
  "BuildFanout",
]

class FanoutSpec:
  def __init__(self, source: int, targets: typing.Sequence[int]) -> None:
    self.source = source
    self.targets = tuple(targets)

  def Validate(self) -> None:
    if not self.targets:
      raise EmptyTargets("fan-out from qubit {} has no targets".format(self.source))
    if len(set(self.targets)) != len(self.targets):
      raise DuplicateOperand("fan-out targets must be distinct")
    if self.source in self.targets:
      raise DuplicateOperand("fan-out source {} is also a target".format(self.source))

  def __len__(self) -> int:
    return len(self.targets)

def DoublingTreeGates(targets: typing.Sequence[int]) -> typing.List[MacroGate]:
  """Copies targets[0] into every other target in ceil(log2 n) CNOT layers."""
  n = len(targets)
  depth = math.ceil(math.log2(n)) if n > 1 else 0
  gates = []
  for i in range(depth):
    step = 1 << i
    for j in range(step):
      if j + step < n:
        gates.append(Cnot(targets[j], targets[j + step]))
  return gates

def FanoutAroundRoot(targets: typing.Sequence[int], root_gates: typing.Sequence[MacroGate]) -> typing.List[MacroGate]:
  # root_gates must flip targets[0] and leave the other targets alone
  tree = DoublingTreeGates(targets)
  return list(reversed(tree)) + list(root_gates) + tree

def FanoutGates(source: int, targets: typing.Sequence[int]) -> typing.List[MacroGate]:
  spec = FanoutSpec(source, targets)
  spec.Validate()
  return FanoutAroundRoot(spec.targets, [Cnot(source, spec.targets[0])])

def BuildFanout(spec: FanoutSpec, qubit_count=None):
  spec.Validate()
  builder = CircuitBuilder(qubit_count)
  builder.Extend(FanoutGates(spec.source, spec.targets))
  return builder.Build()
