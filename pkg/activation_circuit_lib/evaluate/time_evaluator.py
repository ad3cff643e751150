"""Per-stage wall-clock statistics (synthesize, lower, schedule, simulate, verify)."""
import logging
import threading
import time
from contextlib import ContextDecorator

__all__ = [
  "TimeEvaluator",
  "TimeitContext",
  "Timeit",
  "TimeEvaluatorLogStats",
]

logger = logging.getLogger(__name__)

class TimeEvaluator:
  _instance = None
  _instance_lock = threading.Lock()

  def __new__(cls):
    if not cls._instance:
      with cls._instance_lock:
        if not cls._instance:
          cls._instance = super(TimeEvaluator, cls).__new__(cls)
          cls._instance._stats = {}
          cls._instance._stats_lock = threading.Lock()
    return cls._instance

  def Record(self, name, elapsed):
    with self._stats_lock:
      stat = self._stats.setdefault(name, {"count": 0, "total_time": 0.0, "max_time": 0.0})
      stat["count"] += 1
      stat["total_time"] += elapsed
      stat["max_time"] = max(stat["max_time"], elapsed)

  def GetStats(self):
    with self._stats_lock:
      return {k: v.copy() for k, v in self._stats.items()}

  def FormatStats(self):
    lines = ["{:<12} {:>6} {:>12} {:>12}".format("stage", "count", "total (s)", "max (s)")]
    for name, data in self.GetStats().items():
      lines.append("{:<12} {:>6} {:>12.4f} {:>12.4f}".format(
        name, data["count"], data["total_time"], data["max_time"]))
    return "\n".join(lines)

  def ClearStats(self):
    with self._stats_lock:
      self._stats.clear()

class TimerContext(ContextDecorator):
  def __init__(self, name="default"):
    self.name = name
    self.evaluator = TimeEvaluator()

  def __enter__(self):
    self.start_time = time.perf_counter()
    return self

  def __exit__(self, exc_type, exc_val, exc_tb):
    self.evaluator.Record(self.name, time.perf_counter() - self.start_time)
    return False

def TimeitContext(name="default"):
  return TimerContext(name)

def Timeit(name):
  """Decorator form: @Timeit("lower")."""
  return TimerContext(name)

def TimeEvaluatorLogStats(level=logging.INFO):
  evaluator = TimeEvaluator()
  if evaluator.GetStats():
    logger.log(level, "stage timings\n%s", evaluator.FormatStats())
