import json
import logging

from activation_circuit_lib.cli import Main
from activation_circuit_lib.filesystem.filesystem_help_tools import OUTPUT_DIR_ENV

def _Run(capsys, argv):
  code = Main(argv)
  return code, capsys.readouterr().out

def test_simulate(capsys):
  code, out = _Run(capsys, ["simulate", "relu", "--bits", "5", "--input", "01101"])
  assert code == 0
  assert out.strip() == "1101"
  code, out = _Run(capsys, ["simulate", "relu", "--bits", "5", "--input", "11101", "--lowered"])
  assert code == 0
  assert out.strip() == "0000"

def test_analyze(capsys):
  code, out = _Run(capsys, ["analyze", "--target", "relu", "--bits", "8"])
  assert code == 0
  metrics = json.loads(out)
  assert metrics["t_depth"] == 4
  assert metrics["qubit_count"] == 15

def test_cost_table(capsys):
  code, out = _Run(capsys, ["cost-table", "--qlut"])
  assert code == 0
  lines = out.splitlines()
  assert lines[0] == "n,l,ancilla,t_depth"
  assert "8,5,256,148" in lines
  assert len(lines) == 36
  code, out = _Run(capsys, ["cost-table", "--formats", "f8", "--json"])
  assert json.loads(out)[0] == {"n": 8, "l": 1, "ancilla": 16, "t_depth": 10244}

def test_relu_cost_rows(capsys):
  code, out = _Run(capsys, ["cost-table", "--relu", "--bits", "4", "--json"])
  assert code == 0
  rows = json.loads(out)
  assert len(rows) == 2 + 8
  assert {row["circuit"]: row["t_depth"] for row in rows} == {"relu": 4, "relu-grid": 4, "leaky-relu": 8}

def test_synth_then_reuse_file(tmp_path, capsys):
  path = str(tmp_path / "relu4.json")
  assert Main(["synth", "relu", "--bits", "4", "-o", path]) == 0
  code, out = _Run(capsys, ["analyze", "--circuit", path])
  assert json.loads(out)["t_depth"] == 4
  code, out = _Run(capsys, ["verify", "--circuit", path])
  assert code == 0
  assert json.loads(out)["passed"]
  code, out = _Run(capsys, ["export", "--circuit", path, "--lowered"])
  assert code == 0
  assert out.startswith("OPENQASM 2.0;")

def test_verify_reports_failure(tmp_path, capsys):
  path = tmp_path / "relu4.json"
  assert Main(["synth", "relu", "--bits", "4", "-o", str(path)]) == 0
  j = json.loads(path.read_text())
  j["gates"][2]["operands"] = [0, 3, 5]
  path.write_text(json.dumps(j))
  code, out = _Run(capsys, ["verify", "--circuit", str(path)])
  assert code == 1
  report = json.loads(out)
  assert not report["passed"]
  assert report["reports"][0]["counterexample"] is not None

def test_verify_targets(capsys):
  code, out = _Run(capsys, ["verify", "--target", "gates"])
  assert code == 0
  assert len(json.loads(out)["reports"]) == 5
  code, out = _Run(capsys, ["verify", "leaky-relu", "--bits", "5"])
  assert code == 0
  assert len(json.loads(out)["reports"]) == 8
  code, _ = _Run(capsys, ["verify", "relu", "--bits", "6", "--layout", "grid"])
  assert code == 0

def test_usage_errors(capsys):
  assert Main(["synth"]) == 2
  assert Main(["synth", "leaky-relu", "--bits", "4"]) == 2
  assert Main(["synth", "qlut", "--format", "f8"]) == 2
  assert Main(["simulate", "relu", "--bits", "5", "--input", "0110"]) == 2
  assert Main(["nonsense"]) == 2
  assert Main(["export", "qlut", "--format", "f8", "--swap-qubits", "3"]) == 2

def test_output_dir_from_environment(tmp_path, monkeypatch):
  monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path))
  assert Main(["synth", "relu", "--bits", "3", "-o", "out/relu3.json"]) == 0
  assert json.loads((tmp_path / "out" / "relu3.json").read_text())["qubit_count"] == 5

def test_dump_table(tmp_path, capsys):
  circuit_path = str(tmp_path / "qlut.json")
  code, out = _Run(capsys, ["synth", "qlut", "--format", "f8", "--swap-qubits", "4", "--dump-table", "hex",
                            "-o", circuit_path])
  assert code == 0
  lines = out.splitlines()
  assert lines[0] == "00 30"
  assert len(lines) == 256

def test_input_file_errors(tmp_path, capsys):
  assert Main(["analyze", "--circuit", str(tmp_path / "missing.json")]) == 2
  assert "error:" in capsys.readouterr().err
  broken = tmp_path / "broken.json"
  broken.write_text("{not json")
  assert Main(["verify", "--circuit", str(broken)]) == 2

def test_log_file_option(tmp_path, capsys):
  path = tmp_path / "run.log"
  try:
    code, _ = _Run(capsys, ["--log-level", "INFO", "--log-file", str(path), "verify", "relu", "--bits", "3"])
  finally:
    root = logging.getLogger()
    for handler in list(root.handlers):
      if isinstance(handler, logging.FileHandler) and handler.baseFilename == str(path):
        root.removeHandler(handler)
        handler.close()
    root.setLevel(logging.WARNING)
  assert code == 0
  assert "verifying 8 exhaustive inputs" in path.read_text()
