import logging
import os

import pytest

from activation_circuit_lib.circuit import AnalyzeCircuit
from activation_circuit_lib.environment_setup import LoggingAddFileHandler, LoggingSetup
from activation_circuit_lib.evaluate.growth_fit import FitLinear, FitLogarithmic, FitPowerLawExponent
from activation_circuit_lib.evaluate.time_evaluator import TimeEvaluator, TimeitContext
from activation_circuit_lib.filesystem import ResolveOutputPath
from activation_circuit_lib.filesystem.filesystem_help_tools import OUTPUT_DIR_ENV
from activation_circuit_lib.relu import BuildRelu

def test_time_evaluator_records_stages():
  evaluator = TimeEvaluator()
  assert evaluator is TimeEvaluator()
  evaluator.ClearStats()
  with TimeitContext("custom"):
    pass
  AnalyzeCircuit(BuildRelu(4))
  stats = evaluator.GetStats()
  assert stats["custom"]["count"] == 1
  assert stats["lower"]["count"] >= 1
  assert stats["schedule"]["count"] >= 1
  assert "custom" in evaluator.FormatStats()

def test_log_file_handler(tmp_path):
  path = str(tmp_path / "run.log")
  LoggingSetup("INFO")
  handler = LoggingAddFileHandler(path)
  try:
    logging.getLogger("activation_circuit_lib.test").warning("hello %d", 7)
  finally:
    logging.getLogger().removeHandler(handler)
    handler.close()
  with open(path, encoding="utf-8") as f:
    assert "hello 7" in f.read()

def test_growth_fits():
  bits = [4, 8, 16, 32]
  assert FitPowerLawExponent(bits, [3 * n ** 0.5 for n in bits]) == pytest.approx(0.5)
  a, b, residual = FitLogarithmic(bits, [2 + 5 * (n.bit_length() - 1) for n in bits])
  assert (a, b) == (pytest.approx(2), pytest.approx(5))
  assert residual < 1e-9
  slope, intercept, r_squared = FitLinear(bits, [2 * n + 1 for n in bits])
  assert (slope, intercept, r_squared) == (pytest.approx(2), pytest.approx(1), pytest.approx(1))
  with pytest.raises(ValueError):
    FitLinear([1], [1])

def test_resolve_output_path(tmp_path, monkeypatch):
  monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)
  assert ResolveOutputPath(None) is None
  assert ResolveOutputPath("-") is None
  monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path))
  path = ResolveOutputPath("a/b/c.json")
  assert path == os.path.join(str(tmp_path), "a/b/c.json")
  assert os.path.isdir(str(tmp_path / "a" / "b"))
  absolute = str(tmp_path / "x.json")
  assert ResolveOutputPath(absolute) == absolute
