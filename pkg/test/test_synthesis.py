import pytest

from activation_circuit_lib.circuit import *
from activation_circuit_lib.circuit.lowering import LowerCircuit
from activation_circuit_lib.synthesis import *
from activation_circuit_lib.synthesis.multi_control import ParseAddressPattern
from activation_circuit_lib.verify import BasisState, CheckUnitaryEquiv, ExactAmplitude, SimulateMacro, SimulateSparse

def _Run(circuit, value):
  return SimulateMacro(circuit, BasisState(circuit.qubit_count, value)).value

def test_fanout_size_and_depth():
  for n in [1, 2, 3, 5, 8, 13]:
    circuit = BuildFanout(FanoutSpec(0, list(range(1, n + 1))))
    metrics = AnalyzeCircuit(circuit)
    assert circuit.GetGateCount() == 2 * n - 1
    assert metrics.t_depth == 0
    assert metrics.depth <= 2 * (n - 1).bit_length() + 1

def test_fanout_function():
  circuit = BuildFanout(FanoutSpec(0, list(range(1, 9))))
  assert _Run(circuit, 1) == (1 << 9) - 1
  assert _Run(circuit, 0) == 0
  # targets holding data are xored, not overwritten
  assert _Run(circuit, 1 | (1 << 3)) == ((1 << 9) - 1) ^ (1 << 3)
  twice = CircuitBuilder(9).Extend(circuit.gates).Extend(circuit.gates).Build()
  assert all(_Run(twice, v) == v for v in range(0, 1 << 9, 7))

def test_fanout_errors():
  with pytest.raises(EmptyTargets):
    BuildFanout(FanoutSpec(0, []))
  with pytest.raises(DuplicateOperand):
    BuildFanout(FanoutSpec(0, [1, 0]))
  with pytest.raises(DuplicateOperand):
    BuildFanout(FanoutSpec(0, [1, 1]))

def test_batch_errors():
  with pytest.raises(EmptyTargets):
    SharedControlToffoliBatchGates(0, [])
  with pytest.raises(OverlappingPairs):
    SharedControlToffoliBatchGates(0, [(1, 2), (2, 3)])
  with pytest.raises(OverlappingPairs):
    CswapBatchGates(0, [(0, 1)])

def test_lowered_toffoli_is_exact():
  toffoli = CircuitBuilder(3).Append(Toffoli(0, 1, 2)).Build()
  report = CheckUnitaryEquiv(LowerCircuit(toffoli), toffoli)
  assert report.equal
  assert report.exact
  assert report.columns_checked == 8

def test_toffoli_batch_matches_sequential():
  for m in range(1, 5):
    pairs = [(1 + 2 * i, 2 + 2 * i) for i in range(m)]
    batch = BuildSharedControlToffoliBatch(0, pairs, qubit_count=2 * m + 1)
    sequential = CircuitBuilder(2 * m + 1).Extend([Toffoli(0, y, t) for y, t in pairs]).Build()
    assert CheckUnitaryEquiv(batch, sequential).equal

def test_cswap_batch_matches_sequential():
  for m in range(1, 5):
    pairs = [(1 + 2 * i, 2 + 2 * i) for i in range(m)]
    batch = BuildCswapBatch(0, pairs, qubit_count=2 * m + 1)
    sequential = CircuitBuilder(2 * m + 1).Extend([Cswap(0, a, b) for a, b in pairs]).Build()
    assert CheckUnitaryEquiv(batch, sequential).equal
    assert AnalyzeCircuit(batch).t_depth == 4

def test_multi_controlled_x_function():
  for k in range(1, 6):
    controls = list(range(k))
    target = k
    ancillas = list(range(k + 1, k + 1 + max(k - 2, 0)))
    circuit = BuildMultiControlledX(k, controls, target, ancillas)
    width = circuit.qubit_count
    for value in range(1 << width):
      expected = value
      if all((value >> c) & 1 for c in controls):
        expected ^= 1 << target
      # ancillas may start dirty and must come back unchanged
      assert _Run(circuit, value) == expected

def test_multi_controlled_x_t_depth():
  for k in range(3, 8):
    controls = list(range(k))
    circuit = BuildMultiControlledX(k, controls, k, list(range(k + 1, 2 * k - 1)))
    assert circuit.CountKind(GateKind.TOFFOLI) == 4 * k - 8
    assert AnalyzeCircuit(circuit).t_depth == 16 * k - 32
  assert AnalyzeCircuit(BuildMultiControlledX(2, [0, 1], 2)).t_depth == 4
  assert AnalyzeCircuit(BuildMultiControlledX(1, [0], 1)).t_depth == 0

def test_multi_controlled_x_lowering_is_exact():
  macro = CircuitBuilder(7).Append(MultiControlledX([0, 1, 2, 3], 4)).Build()
  chain = BuildMultiControlledX(4, [0, 1, 2, 3], 4, [5, 6], qubit_count=7)
  assert CheckUnitaryEquiv(LowerCircuit(chain), macro).equal

def test_multi_control_idle_is_identity():
  for k in range(3, 7):
    controls = list(range(k))
    ancillas = list(range(k + 1, 2 * k - 1))
    idle = CircuitBuilder(2 * k - 1).Extend(MultiControlIdleGates(controls, k, ancillas)).Build()
    for value in range(1 << idle.qubit_count):
      assert _Run(idle, value) == value
    assert AnalyzeCircuit(idle).t_depth == 16 * k - 32
  idle = CircuitBuilder(3).Extend(MultiControlIdleGates([0, 1], 2)).Build()
  assert AnalyzeCircuit(idle).t_depth == 4
  for value in range(8):
    assert SimulateSparse(idle, BasisState(3, value), exact=True) == {value: ExactAmplitude.One()}
  assert MultiControlIdleGates([0], 1) == []

def test_multi_controlled_x_errors():
  with pytest.raises(InsufficientAncillas):
    MultiControlledXGates([0, 1, 2, 3], 4, [5])
  with pytest.raises(OverlappingOperands):
    MultiControlledXGates([0, 1, 2], 3, [1])
  with pytest.raises(OverlappingOperands):
    MultiControlledXGates([0, 1], 1)
  with pytest.raises(ArityMismatch):
    BuildMultiControlledX(3, [0, 1], 2)

def test_parse_address_pattern():
  assert ParseAddressPattern(5, 3) == (1, 0, 1)
  assert ParseAddressPattern("101", 3) == (1, 0, 1)
  assert ParseAddressPattern([0, 1], 2) == (0, 1)
  with pytest.raises(ArityMismatch):
    ParseAddressPattern("12", 2)
  with pytest.raises(ArityMismatch):
    ParseAddressPattern("1010", 3)

def test_controlled_fanout():
  controls = [0, 1, 2]
  targets = [3, 4, 5]
  circuit = BuildControlledFanout(controls, "101", targets, dirty_ancillas=[6], qubit_count=7)
  mask = sum(1 << t for t in targets)
  for value in range(1 << 7):
    bits = tuple((value >> c) & 1 for c in controls)
    expected = value ^ mask if bits == (1, 0, 1) else value
    assert _Run(circuit, value) == expected
  assert CheckUnitaryEquiv(LowerCircuit(circuit), circuit).equal

def test_controlled_fanout_single_control():
  circuit = BuildControlledFanout([0], "0", [1, 2], qubit_count=3)
  for value, expected in [(0b000, 0b110), (0b001, 0b001), (0b110, 0b000)]:
    assert _Run(circuit, value) == expected
  with pytest.raises(OverlappingOperands):
    ControlledFanoutGates([0, 1], "11", [1, 2])

def test_two_tier_soundness():
  # lowering each macro of a mixed circuit preserves the whole circuit
  gates = [PauliX(0), Toffoli(0, 1, 2), Cswap(3, 1, 2), Swap(0, 3), MultiControlledX([0, 1, 2], 4, [5])]
  macro = CircuitBuilder(6).Extend(gates).Build()
  assert CheckUnitaryEquiv(LowerCircuit(macro), macro).equal
