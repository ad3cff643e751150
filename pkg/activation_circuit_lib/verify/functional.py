"""Basis-input verification of a circuit against a classical oracle."""
import functools
import logging
import typing

import numpy as np
from tqdm import tqdm

from ..circuit.gates import Circuit, QubitRole
from ..dispatch import OrderedProcessMap, SplitListBySize
from ..evaluate.time_evaluator import TimeitContext
from ..interface import IJsonSerializableWithDefault
from .basis_state import BasisState
from .simulators import SimulateMacro, SimulateSparse

__all__ = [
  "FunctionalReport",
  "SampleInputs",
  "BasisInputChecker",
  "VerifyFunctional",
]

logger = logging.getLogger(__name__)

DEFAULT_EXHAUSTIVE_LIMIT = 16
DEFAULT_SAMPLE_COUNT = 1000
CHUNK_SIZE = 256
BASIS_PROBABILITY_TOLERANCE = 1e-9

class FunctionalReport(IJsonSerializableWithDefault):
  def __init__(self, passed=True, exhaustive=True, checked_count=0, input_width=0, output_width=0,
               seed=None, counterexample=None) -> None:
    self.passed = passed
    self.exhaustive = exhaustive
    self.checked_count = checked_count
    self.input_width = input_width
    self.output_width = output_width
    self.seed = seed
    self.counterexample = counterexample

  def __bool__(self) -> bool:
    return bool(self.passed)

def _ToBits(value: int, width: int) -> str:
  return format(value, "0{}b".format(width)) if width else ""

def SampleInputs(width: int, count: int, seed: int) -> typing.List[int]:
  rng = np.random.default_rng(seed)
  if width <= 62:
    return [int(v) for v in rng.integers(0, 1 << width, size=count, dtype=np.int64)]
  n_bytes = (width + 7) // 8
  mask = (1 << width) - 1
  return [int.from_bytes(rng.bytes(n_bytes), "big") & mask for _ in range(count)]

class BasisInputChecker:
  """Runs one basis input through the circuit and compares with the oracle."""

  def __init__(self, circuit: Circuit, oracle, input_qubits, output_qubits) -> None:
    self.circuit = circuit
    self.oracle = oracle
    self.input_qubits = list(input_qubits)
    self.output_qubits = list(output_qubits)
    self.permutation = circuit.IsPermutation()

  def _Run(self, state: BasisState):
    if self.permutation:
      return SimulateMacro(self.circuit, state), None
    amplitudes = SimulateSparse(self.circuit, state)
    basis, amp = max(amplitudes.items(), key=lambda pair: abs(pair[1]))
    if abs(abs(amp) ** 2 - 1) > BASIS_PROBABILITY_TOLERANCE:
      return None, "output is not a basis state (max probability {:.6f})".format(abs(amp) ** 2)
    return BasisState(state.width, basis), None

  def Check(self, input_value: int):
    """Returns None on agreement, else a counterexample dict."""
    state = BasisState(self.circuit.qubit_count).WithRegister(self.input_qubits, input_value)
    result, problem = self._Run(state)
    expected = self.oracle(input_value)
    n_in = len(self.input_qubits)
    n_out = len(self.output_qubits)
    counterexample = {
      "input": _ToBits(input_value, n_in),
      "expected": _ToBits(expected, n_out),
    }
    if problem is not None:
      counterexample["reason"] = problem
      return counterexample
    actual = result.ReadRegister(self.output_qubits)
    counterexample["actual"] = _ToBits(actual, n_out)
    if actual != expected:
      counterexample["reason"] = "output register differs from oracle"
      return counterexample
    if result.ReadRegister(self.input_qubits) != input_value:
      counterexample["reason"] = "input register was modified"
      return counterexample
    return None

  def CheckChunk(self, inputs):
    for count, value in enumerate(inputs, 1):
      counterexample = self.Check(value)
      if counterexample is not None:
        return count, counterexample
    return len(inputs), None

def _MakeChecker(i, circuit, oracle, input_qubits, output_qubits):
  return BasisInputChecker(circuit, oracle, input_qubits, output_qubits)

def _CheckChunkProcess(item, i, obj):
  return obj.CheckChunk(item)

def VerifyFunctional(circuit: Circuit, oracle: typing.Callable[[int], int], input_qubits=None, output_qubits=None,
                     exhaustive_limit=DEFAULT_EXHAUSTIVE_LIMIT, sample_count=DEFAULT_SAMPLE_COUNT, seed=0,
                     worker_count=1, progress=False) -> FunctionalReport:
  if input_qubits is None:
    input_qubits = [q for q, r in enumerate(circuit.roles) if r in (QubitRole.INPUT, QubitRole.SWAP_ADDRESS)]
  if output_qubits is None:
    output_qubits = circuit.GetQubitsWithRole(QubitRole.OUTPUT)
  width = len(input_qubits)
  exhaustive = width <= exhaustive_limit
  if exhaustive:
    inputs = list(range(1 << width))
  else:
    inputs = SampleInputs(width, sample_count, seed)
  report = FunctionalReport(
    exhaustive=exhaustive, input_width=width, output_width=len(output_qubits),
    seed=None if exhaustive else seed)
  logger.info("verifying %d %s inputs over %d qubits", len(inputs),
              "exhaustive" if exhaustive else "sampled", circuit.qubit_count)

  with TimeitContext("verify"):
    if worker_count > 1:
      chunks = list(SplitListBySize(inputs, CHUNK_SIZE))
      init_obj_fn = functools.partial(_MakeChecker, circuit=circuit, oracle=oracle,
                                      input_qubits=input_qubits, output_qubits=output_qubits)
      results = OrderedProcessMap(_CheckChunkProcess, chunks, worker_count, init_obj_fn)
      for count, counterexample in results:
        report.checked_count += count
        if counterexample is not None:
          report.passed = False
          report.counterexample = counterexample
          break
    else:
      checker = BasisInputChecker(circuit, oracle, input_qubits, output_qubits)
      for value in tqdm(inputs, disable=not progress, desc="verify"):
        report.checked_count += 1
        counterexample = checker.Check(value)
        if counterexample is not None:
          report.passed = False
          report.counterexample = counterexample
          break
  if not report.passed:
    logger.info("counterexample: %s", report.counterexample)
  return report
