"""Command-line front end.

  python -m activation_circuit_lib synth relu --bits 8 -o relu8.json
  python -m activation_circuit_lib analyze --circuit relu8.json
  python -m activation_circuit_lib simulate relu --bits 5 --input 01101
  python -m activation_circuit_lib verify --target leaky-relu --bits 10
  python -m activation_circuit_lib cost-table --qlut
  python -m activation_circuit_lib export --circuit relu8.json --lowered

Exit codes: 0 success, 1 verification failure, 2 usage or input-file error.
"""
import argparse
import csv
import io
import json
import logging
import sys

from .circuit import (
  AnalyzeCircuit,
  Circuit,
  CircuitBuilder,
  CircuitError,
  Cnot,
  Cswap,
  ExportQasm,
  LoadCircuitFile,
  MultiControlledX,
  QubitRole,
  Toffoli,
)
from .circuit.lowering import LowerCircuit
from .environment_setup import LoggingSetup
from .evaluate.growth_fit import FitLinear, FitLogarithmic, FitPowerLawExponent
from .evaluate.time_evaluator import TimeEvaluatorLogStats, TimeitContext
from .filesystem import ResolveOutputPath
from .grid import BuildReluGrid
from .qlut import (
  ACTIVATIONS,
  BuildQlut,
  BuildTable,
  CostTableRows,
  FloatFormat,
  QlutConfig,
  QlutOracle,
)
from .qlut.float_format import FORMAT_NAMES
from .relu import BuildLeakyRelu, BuildRelu, LeakyEncoding, LeakyOracle, LeakySpec, ReluOracle
from .relu.leaky_relu import ALPHA_EXPONENTS
from .synthesis import (
  BuildCswapBatch,
  BuildFanout,
  BuildMultiControlledX,
  BuildSharedControlToffoliBatch,
  FanoutSpec,
)
from .verify import BasisState, CheckUnitaryEquiv, SimulateMacro, SimulateSparse, VerifyFunctional

__all__ = [
  "BuildParser",
  "Main",
  "OracleFromMetadata",
]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

SYNTH_TARGETS = ["relu", "leaky-relu", "qlut"]
VERIFY_TARGETS = SYNTH_TARGETS + ["gates"]
ALPHA_CHOICES = ["0.125", "0.0625", "0.03125", "0.015625"]
RELU_GROWTH_BITS = [4, 8, 16, 32, 64]
GRID_GROWTH_BITS = [8, 32, 128, 512]
LEAKY_GROWTH_BITS = [4, 8, 16, 32]

class UsageError(CircuitError):
  pass

def _WriteText(text: str, path=None) -> None:
  path = ResolveOutputPath(path)
  if path is None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
      sys.stdout.write("\n")
    return
  with open(path, "w", encoding="utf-8", newline="\n") as f:
    f.write(text)
    if not text.endswith("\n"):
      f.write("\n")
  logger.info("wrote %s", path)

def _AddTargetArguments(parser, targets, positional=True):
  if positional:
    parser.add_argument("target", nargs="?", choices=targets, help="circuit family to build")
  parser.add_argument("--target", dest="target_option", choices=targets, help="same as the positional target")
  parser.add_argument("--circuit", help="read a circuit JSON file instead of synthesizing one")
  parser.add_argument("--bits", type=int, help="input width n")
  parser.add_argument("--layout", choices=["line", "grid"], default="line",
                      help="relu only: unconstrained or 2D nearest-neighbour layout")
  parser.add_argument("--alpha", choices=ALPHA_CHOICES, help="leaky-relu slope")
  parser.add_argument("--encoding", choices=[e.value for e in LeakyEncoding], default=LeakyEncoding.TWOS_COMPLEMENT.value,
                      help="leaky-relu output encoding")
  parser.add_argument("--fn", default="sigmoid", help="qlut activation: {}".format(", ".join(ACTIVATIONS)))
  parser.add_argument("--format", dest="float_format", choices=list(FORMAT_NAMES), help="qlut float format")
  parser.add_argument("--swap-qubits", type=int, help="qlut swap-qubit count l")

def _GetTarget(args):
  target = getattr(args, "target", None) or args.target_option
  if target is None and args.circuit is None:
    raise UsageError("give a target or --circuit FILE")
  return target

def _AlphaExponent(alpha: str) -> int:
  return ALPHA_EXPONENTS[ALPHA_CHOICES.index(alpha)]

def _QlutFormat(args) -> FloatFormat:
  if args.float_format is not None:
    fmt = FloatFormat.FromName(args.float_format)
    if args.bits is not None and args.bits != fmt.total:
      raise UsageError("--bits {} disagrees with --format {}".format(args.bits, args.float_format))
    return fmt
  if args.bits is None:
    raise UsageError("qlut needs --format or --bits")
  return FloatFormat.ForBits(args.bits)

def _RequireBits(args) -> int:
  if args.bits is None:
    raise UsageError("--bits is required")
  return args.bits

def _BuildTarget(args):
  """(circuit, layout or None, table or None) for the requested target."""
  target = _GetTarget(args)
  with TimeitContext("synthesize"):
    if target == "relu":
      if args.layout == "grid":
        circuit, layout = BuildReluGrid(_RequireBits(args))
        return circuit, layout, None
      return BuildRelu(_RequireBits(args)), None, None
    if target == "leaky-relu":
      if args.alpha is None:
        raise UsageError("leaky-relu needs --alpha")
      spec = LeakySpec(_RequireBits(args), _AlphaExponent(args.alpha), args.encoding)
      return BuildLeakyRelu(spec), None, None
    if target == "qlut":
      fmt = _QlutFormat(args)
      if args.swap_qubits is None:
        raise UsageError("qlut needs --swap-qubits")
      config = QlutConfig(fmt.total, args.swap_qubits, args.fn)
      table = BuildTable(args.fn, fmt)
      return BuildQlut(config, table), None, table
  raise UsageError("cannot synthesize target {!r}".format(target))

def _LoadOrBuild(args) -> Circuit:
  if args.circuit is not None:
    return LoadCircuitFile(args.circuit)
  circuit, _, _ = _BuildTarget(args)
  return circuit

def OracleFromMetadata(metadata: dict):
  """Classical reference for a circuit produced by synth, rebuilt from its metadata."""
  target = metadata.get("target")
  if target == "relu":
    return ReluOracle(int(metadata["bits"]))
  if target == "leaky-relu":
    return LeakyOracle(LeakySpec(int(metadata["bits"]), int(metadata["alpha_exponent"]), metadata["encoding"]))
  if target == "qlut":
    fmt = FloatFormat.FromName(metadata.get("format", "f{}".format(metadata["bits"])))
    return QlutOracle(BuildTable(metadata["function"], fmt))
  raise UsageError("circuit metadata names no known target: {!r}".format(metadata))

def _ParseBits(text: str, width: int) -> int:
  if len(text) != width or any(ch not in "01" for ch in text):
    raise UsageError("--input must be {} bits of 0/1, got {!r}".format(width, text))
  return int(text, 2)

def _InputQubits(circuit: Circuit):
  return [q for q, r in enumerate(circuit.roles) if r in (QubitRole.INPUT, QubitRole.SWAP_ADDRESS)]

def CmdSynth(args) -> int:
  circuit, layout, table = _BuildTarget(args)
  if args.lowered:
    circuit = LowerCircuit(circuit)
  if args.qasm:
    _WriteText(ExportQasm(circuit), args.output)
  else:
    _WriteText(circuit.ToJsonText(), args.output)
  if layout is not None and args.layout_output:
    layout.SaveToJsonFile(ResolveOutputPath(args.layout_output))
  if args.dump_table:
    if table is None:
      raise UsageError("--dump-table applies to qlut only")
    _WriteText("\n".join(table.DumpLines(args.dump_table)), args.table_output)
  return EXIT_OK

def CmdAnalyze(args) -> int:
  metrics = AnalyzeCircuit(_LoadOrBuild(args))
  _WriteText(metrics.ToJsonText(), args.output)
  return EXIT_OK

def CmdSimulate(args) -> int:
  circuit = _LoadOrBuild(args)
  if args.lowered:
    circuit = LowerCircuit(circuit)
  input_qubits = _InputQubits(circuit)
  output_qubits = circuit.GetQubitsWithRole(QubitRole.OUTPUT)
  state = BasisState(circuit.qubit_count).WithRegister(input_qubits, _ParseBits(args.input, len(input_qubits)))
  with TimeitContext("simulate"):
    if circuit.IsPermutation():
      result = SimulateMacro(circuit, state)
    else:
      amplitudes = SimulateSparse(circuit, state)
      basis, amp = max(amplitudes.items(), key=lambda pair: abs(pair[1]))
      if abs(abs(amp) - 1) > 1e-9:
        raise UsageError("output is not a basis state")
      result = BasisState(circuit.qubit_count, basis)
  value = result.ReadRegister(output_qubits)
  _WriteText(format(value, "0{}b".format(len(output_qubits))) if output_qubits else "", args.output)
  return EXIT_OK

def _GateSuite():
  """(name, lowered candidate, macro reference) triples checked for equivalence."""
  pairs = [(1, 2), (3, 4), (5, 6), (7, 8)]
  toffoli = CircuitBuilder(3).Append(Toffoli(0, 1, 2)).Build()
  sequential = CircuitBuilder(9).Extend([Toffoli(0, y, t) for y, t in pairs]).Build()
  swaps = CircuitBuilder(9).Extend([Cswap(0, a, b) for a, b in pairs]).Build()
  mcx = CircuitBuilder(7).Append(MultiControlledX([0, 1, 2, 3], 4)).Build()
  copies = CircuitBuilder(9).Extend([Cnot(0, t) for t in range(1, 9)]).Build()
  return [
    ("toffoli", LowerCircuit(toffoli), toffoli),
    ("toffoli-batch-4", LowerCircuit(BuildSharedControlToffoliBatch(0, pairs, qubit_count=9)), sequential),
    ("cswap-batch-4", LowerCircuit(BuildCswapBatch(0, pairs, qubit_count=9)), swaps),
    ("mcx-4", LowerCircuit(BuildMultiControlledX(4, [0, 1, 2, 3], 4, [5, 6], qubit_count=7)), mcx),
    ("fanout-8", LowerCircuit(BuildFanout(FanoutSpec(0, list(range(1, 9))), qubit_count=9)), copies),
  ]

def _ReportEntry(name, report):
  entry = {"name": name}
  entry.update(report.ToJson())
  return entry

def CmdVerify(args) -> int:
  target = _GetTarget(args)
  entries = []
  if target == "gates":
    for name, candidate, reference in _GateSuite():
      entries.append(_ReportEntry(name, CheckUnitaryEquiv(candidate, reference)))
  else:
    if args.circuit is not None:
      circuit = LoadCircuitFile(args.circuit)
      jobs = [("file", circuit, OracleFromMetadata(circuit.metadata))]
    elif target == "leaky-relu" and args.alpha is None:
      n = _RequireBits(args)
      jobs = []
      for encoding in LeakyEncoding:
        for e in ALPHA_EXPONENTS:
          spec = LeakySpec(n, e, encoding)
          jobs.append(("leaky-relu-{}-2^-{}".format(encoding.value, e), BuildLeakyRelu(spec), LeakyOracle(spec)))
    else:
      circuit, _, _ = _BuildTarget(args)
      jobs = [(target, circuit, OracleFromMetadata(circuit.metadata))]
    exhaustive_limit = 64 if args.exhaustive else args.exhaustive_limit
    for name, circuit, oracle in jobs:
      if args.lowered:
        circuit = LowerCircuit(circuit)
      report = VerifyFunctional(circuit, oracle, exhaustive_limit=exhaustive_limit, sample_count=args.samples,
                                seed=args.seed, worker_count=args.workers, progress=args.progress)
      entries.append(_ReportEntry(name, report))
  passed = all(entry.get("equal", entry.get("passed")) for entry in entries)
  _WriteText(json.dumps({"passed": passed, "reports": entries}, indent=2), args.output)
  return EXIT_OK if passed else EXIT_VERIFY_FAILED

def _Emit(rows, columns, as_json: bool, path) -> None:
  if as_json:
    _WriteText(json.dumps(rows, indent=2), path)
    return
  buffer = io.StringIO()
  writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
  writer.writeheader()
  writer.writerows(rows)
  _WriteText(buffer.getvalue(), path)

def _ReluRows(n: int):
  rows = []

  def Add(name, circuit, alpha="", encoding=""):
    metrics = AnalyzeCircuit(circuit)
    rows.append({"circuit": name, "bits": n, "alpha": alpha, "encoding": encoding,
                 "t_depth": metrics.t_depth, "depth": metrics.depth, "size": metrics.size,
                 "qubits": metrics.qubit_count})

  Add("relu", BuildRelu(n))
  Add("relu-grid", BuildReluGrid(n)[0])
  for encoding in LeakyEncoding:
    for e in ALPHA_EXPONENTS:
      Add("leaky-relu", BuildLeakyRelu(LeakySpec(n, e, encoding)), 2.0 ** -e, encoding.value)
  return rows

def _GrowthSeries():
  series = {}

  def Measure(name, bits, build):
    metrics = [AnalyzeCircuit(build(n)) for n in bits]
    series[name] = {
      "bits": bits,
      "depth": [m.depth for m in metrics],
      "size": [m.size for m in metrics],
    }

  Measure("relu", RELU_GROWTH_BITS, BuildRelu)
  Measure("relu-grid", GRID_GROWTH_BITS, lambda n: BuildReluGrid(n)[0])
  Measure("leaky-relu", LEAKY_GROWTH_BITS, lambda n: BuildLeakyRelu(LeakySpec(n, 3)))
  for name, data in series.items():
    a, b, residual = FitLogarithmic(data["bits"], data["depth"])
    slope, intercept, r_squared = FitLinear(data["bits"], data["size"])
    data["fits"] = {
      "depth_log": {"a": a, "b": b, "max_relative_residual": residual},
      "depth_power_exponent": FitPowerLawExponent(data["bits"], data["depth"]),
      "size_linear": {"slope": slope, "intercept": intercept, "r_squared": r_squared},
    }
  return series

def CmdCostTable(args) -> int:
  if args.growth:
    _WriteText(json.dumps(_GrowthSeries(), indent=2), args.output)
    return EXIT_OK
  if args.relu:
    rows = _ReluRows(args.bits or 8)
    _Emit(rows, ["circuit", "bits", "alpha", "encoding", "t_depth", "depth", "size", "qubits"], args.json, args.output)
    return EXIT_OK
  widths = [FloatFormat.FromName(name.strip()).total for name in args.formats.split(",") if name.strip()]
  rows = [{"n": c.n, "l": c.l, "ancilla": c.ancilla, "t_depth": c.t_depth}
          for c in CostTableRows(widths, args.all_swap_counts)]
  _Emit(rows, ["n", "l", "ancilla", "t_depth"], args.json, args.output)
  return EXIT_OK

def CmdExport(args) -> int:
  circuit = _LoadOrBuild(args)
  if args.lowered:
    circuit = LowerCircuit(circuit)
  _WriteText(ExportQasm(circuit), args.output)
  return EXIT_OK

def BuildParser() -> argparse.ArgumentParser:
  parser = argparse.ArgumentParser(prog="activation_circuit_lib",
                                   description="Clifford+T circuits for neural-network activation functions")
  parser.add_argument("--log-level", default="WARNING", help="DEBUG, INFO, WARNING, ...")
  parser.add_argument("--log-file", help="also log to this file")
  parser.add_argument("--timing", action="store_true", help="log per-stage wall-clock statistics")
  sub = parser.add_subparsers(dest="verb", required=True)

  synth = sub.add_parser("synth", help="write a circuit file")
  _AddTargetArguments(synth, SYNTH_TARGETS)
  synth.add_argument("-o", "--output", help="output path (default stdout)")
  synth.add_argument("--lowered", action="store_true", help="write the Clifford+T lowering")
  synth.add_argument("--qasm", action="store_true", help="write OpenQASM 2.0 instead of JSON")
  synth.add_argument("--layout-output", help="grid layout JSON path (relu --layout grid)")
  synth.add_argument("--dump-table", choices=["bin", "hex"], help="qlut: also dump the lookup table")
  synth.add_argument("--table-output", help="table dump path (default stdout)")
  synth.set_defaults(handler=CmdSynth)

  analyze = sub.add_parser("analyze", help="print lowered metrics as JSON")
  _AddTargetArguments(analyze, SYNTH_TARGETS)
  analyze.add_argument("-o", "--output")
  analyze.set_defaults(handler=CmdAnalyze)

  simulate = sub.add_parser("simulate", help="map an input bitstring to the output bitstring")
  _AddTargetArguments(simulate, SYNTH_TARGETS)
  simulate.add_argument("--input", required=True, help="input register bits, most significant first")
  simulate.add_argument("--lowered", action="store_true", help="simulate the Clifford+T lowering")
  simulate.add_argument("-o", "--output")
  simulate.set_defaults(handler=CmdSimulate)

  verify = sub.add_parser("verify", help="check circuits against classical references")
  _AddTargetArguments(verify, VERIFY_TARGETS)
  verify.add_argument("--exhaustive", action="store_true", help="check every input regardless of width")
  verify.add_argument("--exhaustive-limit", type=int, default=16, help="widths up to this are checked exhaustively")
  verify.add_argument("--samples", type=int, default=1000, help="sampled inputs above the exhaustive limit")
  verify.add_argument("--seed", type=int, default=0)
  verify.add_argument("--workers", type=int, default=1, help="verification processes")
  verify.add_argument("--lowered", action="store_true", help="verify the Clifford+T lowering")
  verify.add_argument("--progress", action="store_true")
  verify.add_argument("-o", "--output")
  verify.set_defaults(handler=CmdVerify)

  cost = sub.add_parser("cost-table", help="cost tables as CSV or JSON")
  mode = cost.add_mutually_exclusive_group()
  mode.add_argument("--qlut", action="store_true", help="lookup-table T-depth and ancilla grid (default)")
  mode.add_argument("--relu", action="store_true", help="measured ReLU / grid ReLU / Leaky ReLU metrics")
  mode.add_argument("--growth", action="store_true", help="depth and size series with fits")
  cost.add_argument("--bits", type=int, help="width for --relu (default 8)")
  cost.add_argument("--formats", default=",".join(FORMAT_NAMES), help="comma-separated formats for --qlut")
  cost.add_argument("--fn", default="any", help="accepted for symmetry; the cost does not depend on the function")
  cost.add_argument("--all-swap-counts", action="store_true", help="every 0 < l < n instead of the standard grid")
  cost.add_argument("--json", action="store_true", help="JSON instead of CSV")
  cost.add_argument("-o", "--output")
  cost.set_defaults(handler=CmdCostTable)

  export = sub.add_parser("export", help="OpenQASM 2.0 export")
  _AddTargetArguments(export, SYNTH_TARGETS)
  export.add_argument("--lowered", action="store_true", help="export the Clifford+T lowering")
  export.add_argument("-o", "--output")
  export.set_defaults(handler=CmdExport)
  return parser

def Main(argv=None) -> int:
  parser = BuildParser()
  try:
    args = parser.parse_args(argv)
  except SystemExit as e:
    return e.code if isinstance(e.code, int) else EXIT_USAGE
  LoggingSetup(args.log_level, args.log_file)
  try:
    code = args.handler(args)
  except (CircuitError, OSError, json.JSONDecodeError) as e:
    sys.stderr.write("error: {}\n".format(e))
    return EXIT_USAGE
  if args.timing:
    TimeEvaluatorLogStats(logging.WARNING)
  return code

if __name__ == "__main__":
  sys.exit(Main())
