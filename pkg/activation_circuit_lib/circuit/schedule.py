"""Layer scheduling and circuit metrics.

Every gate gets a T-level: the longest chain of T-type gates ending at it.
All T gates of one level share one layer, placed as early as their qubits
allow; the other gates are placed as soon as possible within their level.
The number of T layers is then the longest T chain, which is the lowest
T-depth any schedule of the gate list can reach.
"""
import collections
import typing

from ..evaluate.time_evaluator import Timeit
from ..interface import IJsonSerializable, IJsonSerializableWithDefault
from .gates import Circuit, GateKind, MacroGate

__all__ = [
  "LayeredCircuit",
  "Metrics",
  "ComputeTLevels",
  "ScheduleLayers",
  "ComputeMetrics",
  "AnalyzeCircuit",
]

class LayeredCircuit(IJsonSerializable):
  def __init__(self, layers=(), qubit_count=0) -> None:
    self.layers = tuple(tuple(layer) for layer in layers)
    self.qubit_count = qubit_count

  def Flatten(self) -> typing.List[MacroGate]:
    return [g for layer in self.layers for g in layer]

  def GetDepth(self) -> int:
    return len(self.layers)

  def ToJson(self) -> dict:
    return {"qubit_count": self.qubit_count, "layers": [[g.ToJson() for g in layer] for layer in self.layers]}

  def FromJson(self, j) -> None:
    self.qubit_count = j["qubit_count"]
    self.layers = tuple(tuple(MacroGate.FromJson(g) for g in layer) for layer in j["layers"])

class Metrics(IJsonSerializableWithDefault):
  def __init__(self, t_depth=0, t_count=0, depth=0, size=0, cnot_count=0, qubit_count=0) -> None:
    self.t_depth = t_depth
    self.t_count = t_count
    self.depth = depth
    self.size = size
    self.cnot_count = cnot_count
    self.qubit_count = qubit_count

  def __eq__(self, other) -> bool:
    return isinstance(other, Metrics) and self.ToJson() == other.ToJson()

  def __repr__(self) -> str:
    return "Metrics({})".format(", ".join("{}={}".format(k, v) for k, v in self.ToJson().items()))

def ComputeTLevels(gates: typing.Sequence[MacroGate]) -> typing.List[int]:
  qubit_level = collections.defaultdict(int)
  levels = []
  for g in gates:
    qubits = g.GetAllQubits()
    level = max(qubit_level[q] for q in qubits)
    if g.IsTGate():
      level += 1
    for q in qubits:
      qubit_level[q] = level
    levels.append(level)
  return levels

@Timeit("schedule")
def ScheduleLayers(gates, qubit_count=None) -> LayeredCircuit:
  if isinstance(gates, Circuit):
    qubit_count = gates.qubit_count
    gates = gates.gates
  gates = list(gates)
  if qubit_count is None:
    qubit_count = max((q + 1 for g in gates for q in g.GetAllQubits()), default=0)

  levels = ComputeTLevels(gates)
  by_level = collections.defaultdict(list)
  for g, level in zip(gates, levels):
    by_level[level].append(g)

  layers = []
  ready = collections.defaultdict(int)
  last_t_layer = -1

  def Place(g, index):
    while len(layers) <= index:
      layers.append([])
    layers[index].append(g)
    for q in g.GetAllQubits():
      ready[q] = index + 1

  for level in sorted(by_level):
    group = by_level[level]
    t_gates = [g for g in group if g.IsTGate()]
    if t_gates:
      t_layer = max([last_t_layer + 1] + [ready[q] for g in t_gates for q in g.GetAllQubits()])
      for g in t_gates:
        Place(g, t_layer)
      last_t_layer = t_layer
    for g in group:
      if g.IsTGate():
        continue
      qubits = g.GetAllQubits()
      if g.kind == GateKind.BARRIER:
        fence = max(ready[q] for q in qubits)
        for q in qubits:
          ready[q] = fence
        continue
      Place(g, max(ready[q] for q in qubits))
  return LayeredCircuit(layers, qubit_count)

def ComputeMetrics(layered: LayeredCircuit) -> Metrics:
  t_depth = 0
  t_count = 0
  size = 0
  cnot_count = 0
  for layer in layered.layers:
    layer_t = sum(1 for g in layer if g.IsTGate())
    if layer_t:
      t_depth += 1
    t_count += layer_t
    size += len(layer)
    cnot_count += sum(1 for g in layer if g.kind == GateKind.CNOT)
  return Metrics(t_depth, t_count, len(layered.layers), size, cnot_count, layered.qubit_count)

def AnalyzeCircuit(circuit: Circuit) -> Metrics:
  from .lowering import LowerCircuit
  return ComputeMetrics(ScheduleLayers(LowerCircuit(circuit)))
