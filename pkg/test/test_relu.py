import numpy as np
import pytest

from activation_circuit_lib.circuit import AnalyzeCircuit, GateKind, WidthTooSmall
from activation_circuit_lib.circuit.lowering import LowerCircuit
from activation_circuit_lib.evaluate.growth_fit import FitLinear, FitLogarithmic
from activation_circuit_lib.relu import *
from activation_circuit_lib.verify import BasisState, SimulateStatevector, VerifyFunctional

def test_relu_reference():
  assert ReluReference(FixedPointValue.FromBits("01101")).ToBits() == "1101"
  assert ReluReference(FixedPointValue.FromBits("11101")).ToBits() == "0000"
  assert ReluReference(FixedPointValue.FromBits("00000")).ToBits() == "0000"
  assert ReluOracle(5)(0b01101) == 0b1101

def test_relu_shape():
  circuit = BuildRelu(5)
  assert circuit.qubit_count == 9
  assert [g.kind for g in circuit.gates] == [GateKind.X] + [GateKind.TOFFOLI] * 4 + [GateKind.X]
  with pytest.raises(WidthTooSmall):
    BuildRelu(1)

def test_relu_exhaustive():
  for n in range(2, 17):
    report = VerifyFunctional(BuildRelu(n), ReluOracle(n), worker_count=2 if n > 12 else 1)
    assert report.passed, report.counterexample
    assert report.exhaustive
    assert report.checked_count == 1 << n

def test_relu_constant_t_depth():
  for n in [2, 4, 8, 16, 32, 64]:
    metrics = AnalyzeCircuit(BuildRelu(n))
    assert metrics.t_depth == 4
    assert metrics.qubit_count == 2 * n - 1

def test_lowered_relu_statevector():
  n = 5
  lowered = LowerCircuit(BuildRelu(n))
  inputs = list(range(n))
  outputs = list(range(n, 2 * n - 1))
  oracle = ReluOracle(n)
  for x in range(1 << n):
    state = BasisState(lowered.qubit_count).WithRegister(inputs, x)
    psi = SimulateStatevector(lowered, state)
    assert abs(np.linalg.norm(psi) - 1) < 1e-10
    basis = int(np.argmax(np.abs(psi)))
    assert abs(abs(psi[basis]) - 1) < 1e-9
    result = BasisState(lowered.qubit_count, basis)
    assert result.ReadRegister(outputs) == oracle(x)
    assert result.ReadRegister(inputs) == x

def test_relu_depth_grows_logarithmically():
  bits = [4, 8, 16, 32, 64]
  metrics = [AnalyzeCircuit(BuildRelu(n)) for n in bits]
  a, b, residual = FitLogarithmic(bits, [m.depth for m in metrics])
  assert b > 0
  assert residual < 0.1
  _, _, r_squared = FitLinear(bits, [m.size for m in metrics])
  assert r_squared > 0.99
