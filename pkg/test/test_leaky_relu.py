import pytest

from activation_circuit_lib.circuit import AnalyzeCircuit, InvalidAlpha, WidthTooSmall
from activation_circuit_lib.relu import *
from activation_circuit_lib.relu.leaky_relu import ALPHA_EXPONENTS
from activation_circuit_lib.verify import VerifyFunctional

def test_leaky_spec():
  spec = LeakySpec.FromAlpha(8, 0.0625)
  assert spec.alpha_exponent == 4
  assert spec.m == 12
  assert spec.k == 5
  assert spec.GetAlpha() == 0.0625
  assert spec.encoding == LeakyEncoding.TWOS_COMPLEMENT
  with pytest.raises(InvalidAlpha):
    LeakySpec.FromAlpha(8, 0.3)
  with pytest.raises(InvalidAlpha):
    LeakySpec(8, 2)
  with pytest.raises(WidthTooSmall):
    LeakySpec(1, 3)

def test_leaky_reference():
  x = FixedPointValue.FromBits("0101")
  negative = FixedPointValue.FromBits("1011")
  twos = LeakySpec(4, 3, LeakyEncoding.TWOS_COMPLEMENT)
  true_form = LeakySpec(4, 3, LeakyEncoding.TRUE_FORM)
  assert LeakyReference(x, twos).ToBits() == "0101000"
  assert LeakyReference(x, true_form).ToBits() == "0101000"
  # -5 scaled by 1/8 is -0.625 = 1111.011 in 2's complement
  assert LeakyReference(negative, twos).ToBits() == "1111011"
  assert LeakyReference(negative, true_form).ToBits() == "1000011"

def test_leaky_exhaustive_all_variants():
  for encoding in LeakyEncoding:
    for e in ALPHA_EXPONENTS:
      for n in [2, 3, 6, 10]:
        spec = LeakySpec(n, e, encoding)
        circuit = BuildLeakyRelu(spec)
        assert circuit.qubit_count == n + spec.m
        report = VerifyFunctional(circuit, LeakyOracle(spec))
        assert report.passed, (n, e, encoding, report.counterexample)
        assert report.checked_count == 1 << n

def test_leaky_t_depth_is_eight():
  for encoding in LeakyEncoding:
    for e in ALPHA_EXPONENTS:
      for n in [4, 8, 16]:
        assert AnalyzeCircuit(BuildLeakyRelu(LeakySpec(n, e, encoding))).t_depth == 8

def test_leaky_metadata():
  circuit = BuildLeakyRelu(LeakySpec(6, 5, "true"))
  assert circuit.metadata == {"target": "leaky-relu", "bits": 6, "alpha_exponent": 5, "encoding": "true"}
