import mpmath
import numpy as np
import pytest

from activation_circuit_lib.circuit import AnalyzeCircuit, CircuitError, GateKind, InvalidFormat, InvalidSwapCount, TableTooLarge
from activation_circuit_lib.qlut import *
from activation_circuit_lib.qlut.error_analysis import DEFAULT_SAMPLE_COUNT, PointwiseError, RepresentableInputs
from activation_circuit_lib.verify import BasisState, SimulateMacro, SimulateSparse, VerifyFunctional

F8 = FloatFormat.FromName("f8")
F16 = FloatFormat.FromName("f16")
F32 = FloatFormat.FromName("f32")
F64 = FloatFormat.FromName("f64")

def _SpreadValues(count, low, high, seed):
  rng = np.random.default_rng(seed)
  return rng.standard_normal(count) * np.exp2(rng.integers(low, high, size=count).astype(np.float64))

def test_float_formats():
  assert (F8.total, F8.bias, F8.min_exponent) == (8, 7, -6)
  assert (F16.total, F16.bias) == (16, 15)
  assert FloatFormat.FromName("f128").total == 128
  assert FloatFormat.ForBits(32) == F32
  assert FloatFormat(4, 3).GetName() == "f8"
  assert FloatFormat(3, 2).GetName() == "e3m2"
  with pytest.raises(InvalidFormat):
    FloatFormat.FromName("f12")
  with pytest.raises(InvalidFormat):
    FloatFormat(1, 3)

def test_f8_codec_examples():
  assert DecodeFloat(0x30, F8) == 0.5
  assert DecodeFloat(0x38, F8) == 1
  assert DecodeFloat(0x77, F8) == 240
  assert DecodeFloat(0x01, F8) == mpmath.mpf(2) ** -9
  assert DecodeFloat(0x78, F8) == mpmath.inf
  assert DecodeFloat(0xF8, F8) == -mpmath.inf
  assert mpmath.isnan(DecodeFloat(0x79, F8))
  assert EncodeFloat(0.5, F8) == 0x30
  assert EncodeFloat(0, F8) == 0x00
  assert EncodeFloat(-0.0, F8) == 0x80
  assert EncodeFloat(-0.0, F16) == 0x8000
  assert EncodeFloat(float("nan"), F8) == F8.GetNanBits()
  assert EncodeFloat(float("-inf"), F8) == 0xF8
  with pytest.raises(InvalidFormat):
    DecodeFloat(256, F8)

def test_f8_rounding():
  # 248 is halfway between 240 and 256 and rounds to even, i.e. overflows
  assert EncodeFloat(248, F8) == 0x78
  assert EncodeFloat(244, F8) == 0x77
  assert EncodeFloat(-1000, F8) == 0xF8
  assert EncodeFloat(2.0 ** -9, F8) == 0x01
  assert EncodeFloat(2.0 ** -10, F8) == 0x00
  assert EncodeFloat(3 * 2.0 ** -11, F8) == 0x01
  # a subnormal that rounds up becomes the smallest normal
  assert EncodeFloat(7.5 * 2.0 ** -9, F8) == 0x08
  assert EncodeFloat(mpmath.mpf("0.3"), F8) == EncodeFloat(0.3, F8)

def test_f8_values_survive_decode_encode():
  for bits in range(256):
    value = DecodeFloat(bits, F8)
    if mpmath.isnan(value):
      assert EncodeFloat(value, F8) == F8.GetNanBits()
      continue
    # mpmath has no negative zero, so 0x80 comes back as 0x00
    assert DecodeFloat(EncodeFloat(value, F8), F8) == value

def test_codec_matches_numpy_f16():
  x = _SpreadValues(10 ** 5, -30, 20, seed=0)
  expected = x.astype(np.float16).view(np.uint16).astype(np.int64)
  assert np.array_equal(EncodeFloatArray(x, F16), expected)
  decoded = DecodeFloatArray(expected, F16)
  assert np.array_equal(decoded, expected.astype(np.uint16).view(np.float16).astype(np.float64))
  for value in x[:2000]:
    assert EncodeFloat(float(value), F16) == int(np.float16(value).view(np.uint16))

def test_codec_matches_numpy_f32():
  x = _SpreadValues(10 ** 5, -160, 140, seed=1)
  expected = x.astype(np.float32).view(np.uint32).astype(np.int64)
  assert np.array_equal(EncodeFloatArray(x, F32), expected)
  for value in x[:2000]:
    assert EncodeFloat(float(value), F32) == int(np.float32(value).view(np.uint32))

def test_codec_matches_numpy_f64():
  x = _SpreadValues(2000, -1000, 1000, seed=2)
  for value in x:
    assert EncodeFloat(float(value), F64) == int(np.float64(value).view(np.uint64))
    assert DecodeFloat(int(np.float64(value).view(np.uint64)), F64) == value

def test_vectorized_codec_matches_scalar_f8():
  x = _SpreadValues(3000, -12, 9, seed=3)
  encoded = EncodeFloatArray(x, F8)
  assert [int(b) for b in encoded] == [EncodeFloat(float(v), F8) for v in x]
  everything = np.arange(256)
  decoded = DecodeFloatArray(everything, F8)
  for bits in range(256):
    exact = DecodeFloat(bits, F8)
    if mpmath.isnan(exact):
      assert np.isnan(decoded[bits])
    else:
      assert decoded[bits] == float(exact)

def test_build_table():
  table = BuildTable("sigmoid", F8)
  assert len(table) == 256
  assert table.Lookup(0x00) == 0x30
  assert table.Lookup(0x80) == 0x30
  assert table.Lookup(0x78) == 0x38
  assert table.Lookup(0xF8) == 0x00
  assert table.metadata == {"function": "sigmoid", "format": "f8"}
  tanh = BuildTable("tanh", F8)
  assert tanh.Lookup(0x00) == 0
  assert tanh.Lookup(0x78) == 0x38

def test_sigmoid_table_matches_float64():
  table = BuildTable("sigmoid", F8)
  x = DecodeFloatArray(np.arange(256), F8)
  with np.errstate(over="ignore"):
    expected = EncodeFloatArray(1 / (1 + np.exp(-x)), F8)
  assert [int(e) for e in expected] == list(table.entries)

def test_table_errors_and_dump(tmp_path):
  with pytest.raises(TableTooLarge):
    BuildTable("sigmoid", F32)
  with pytest.raises(CircuitError):
    BuildTable("softmax", F8)
  table = BuildTable("sigmoid", F8)
  assert table.DumpLines("hex")[0] == "00 30"
  assert table.DumpLines("bin")[0] == "00000000 00110000"
  with pytest.raises(ValueError):
    table.DumpLines("oct")
  path = str(tmp_path / "table.json")
  table.SaveToJsonFile(path)
  loaded = LookupTable()
  loaded.LoadFromJsonFile(path)
  assert loaded.entries == table.entries

def test_parallel_table_build():
  assert BuildTable("tanh", F8, worker_count=2).entries == BuildTable("tanh", F8).entries

def test_registers():
  registers = QlutRegisters(8, 3)
  assert registers.select_controls == [0, 1, 2, 3, 4]
  assert registers.swap_address == [5, 6, 7]
  assert registers.registers[0] == list(range(8, 16))
  assert registers.registers[2][5] == 8 + 2 * 8 + 5
  assert registers.qubit_count == 8 + 8 * 8
  with pytest.raises(InvalidSwapCount):
    QlutRegisters(8, 8)
  with pytest.raises(InvalidSwapCount):
    QlutConfig(8, 0)

def test_select_loads_every_register():
  table = LookupTable.FromFunction(4, lambda x: x)
  l = 2
  registers = QlutRegisters(4, l)
  select = BuildSelect(table, l, registers)
  for x in range(16):
    state = BasisState(registers.qubit_count).WithRegister(registers.inputs, x)
    result = SimulateMacro(select, state)
    j = x >> l
    for r, register in enumerate(registers.registers):
      assert result.ReadRegister(register) == table.Lookup((j << l) | r)
    assert result.ReadRegister(registers.inputs) == x

def test_select_barriers():
  table = LookupTable.FromFunction(2, lambda x: x)
  select = BuildSelect(table, 1)
  assert sum(1 for g in select.gates if g.kind == GateKind.BARRIER) == 2
  # blocks that write nothing still get a step and a barrier
  sparse = LookupTable.FromFunction(3, lambda x: 5 if x >= 6 else 0)
  assert CountEmptySelectSteps(sparse, 1) == 3
  select = BuildSelect(sparse, 1)
  assert sum(1 for g in select.gates if g.kind == GateKind.BARRIER) == 4
  assert AnalyzeCircuit(select).t_depth == 4 * 4
  registers = QlutRegisters(3, 1)
  for x in range(8):
    state = BasisState(registers.qubit_count).WithRegister(registers.inputs, x)
    amplitudes = SimulateSparse(select, state, exact=True)
    assert len(amplitudes) == 1
    result = BasisState(registers.qubit_count, next(iter(amplitudes)))
    for r, register in enumerate(registers.registers):
      assert result.ReadRegister(register) == sparse.Lookup(((x >> 1) << 1) | r)

def test_qlut_empty_blocks_keep_model_t_depth():
  table = LookupTable.FromFunction(5, lambda x: 0b10011 if x >= 30 else 0)
  assert CountEmptySelectSteps(table, 1) == 15
  circuit = BuildQlut(QlutConfig(5, 1), table)
  assert AnalyzeCircuit(circuit).t_depth == CostModel(5, 1).t_depth == 16 * 32 + 4
  report = VerifyFunctional(circuit, QlutOracle(table))
  assert report.passed, report.counterexample
  assert report.checked_count == 32

def test_swap_network():
  n, l = 3, 2
  registers = QlutRegisters(n, l)
  swap = BuildSwapNetwork(n, l, registers)
  for value in range(1 << registers.qubit_count):
    state = BasisState(registers.qubit_count, value)
    address = state.ReadRegister(registers.swap_address)
    result = SimulateMacro(swap, state)
    assert result.ReadRegister(registers.registers[0]) == state.ReadRegister(registers.registers[address])
  assert AnalyzeCircuit(swap).t_depth == 4 * l

def test_swap_network_stage_order():
  swap = BuildSwapNetwork(4, 3)
  controls = [g.operands[0] for g in swap.gates if g.kind == GateKind.CSWAP]
  assert controls == [3] * 16 + [2] * 8 + [1] * 4

def test_qlut_sigmoid_f8():
  table = BuildTable("sigmoid", F8)
  for l in [1, 3, 5, 7]:
    circuit = BuildQlut(QlutConfig(8, l, "sigmoid"), table)
    assert circuit.qubit_count == 8 + CostModel(8, l).ancilla
    report = VerifyFunctional(circuit, QlutOracle(table))
    assert report.passed, (l, report.counterexample)
    assert report.checked_count == 256

def test_qlut_t_depth_matches_model():
  tanh = BuildTable("tanh", F8)
  sigmoid = BuildTable("sigmoid", F8)
  for l in range(1, 8):
    assert CountEmptySelectSteps(tanh, l) == 0
    assert AnalyzeCircuit(BuildQlut(QlutConfig(8, l, "tanh"), tanh)).t_depth == CostModel(8, l).t_depth
    assert AnalyzeCircuit(BuildQlut(QlutConfig(8, l, "sigmoid"), sigmoid)).t_depth == CostModel(8, l).t_depth
  assert CountEmptySelectSteps(sigmoid, 1) > 0
  assert AnalyzeCircuit(BuildQlut(QlutConfig(8, 1, "sigmoid"), sigmoid)).t_depth == 10244

EXPECTED_T_DEPTH = {
  8: [10244, 4104, 1548, 528, 148, 40, 28],
  16: [3.146e6, 6.554e5, 1.311e5, 24608, 4136, 560, 72],
  32: [1.117e11, 5.906e9, 3.02e8, 1.468e7, 6.554e5, 24672, 624],
  64: [6.226e19, 2.072e17, 6.685e14, 2.062e12, 5.906e9, 1.468e7, 24800],
  128: [9.138e36, 1.192e32, 1.509e27, 1.83e22, 2.072e17, 2.062e12, 1.468e7],
}

def test_cost_table():
  rows = CostTableRows()
  assert len(rows) == 35
  for n, expected in EXPECTED_T_DEPTH.items():
    assert [c.t_depth for c in rows if c.n == n] == pytest.approx(expected, rel=1e-3)
  assert CostModel(8, 5) == QlutCost(8, 5, 148, 256)
  assert CostModel(16, 14).ancilla == 262144
  assert CostModel(32, 4).ancilla == 512
  assert len(CostTableRows([8], all_swap_counts=True)) == 7
  with pytest.raises(InvalidSwapCount):
    CostModel(8, 8)

def test_max_error():
  assert DEFAULT_SAMPLE_COUNT >= 10 ** 6
  assert MaxError("sigmoid", F8) <= 0.5
  assert MaxError("sigmoid", F16) <= 2.0 ** -7
  relu = BuildTable("relu", F8)
  inputs = RepresentableInputs(F8)
  assert 3.5 in inputs and 3.75 not in inputs
  assert np.max(PointwiseError(relu, F8, "relu", inputs)) == 0
