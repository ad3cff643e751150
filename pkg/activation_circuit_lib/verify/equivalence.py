"""Column-by-column unitary comparison up to global phase."""
import cmath
import logging
import math

from ..circuit.errors import TooManyQubits
from ..circuit.gates import Circuit
from ..interface import IJsonSerializableWithDefault
from .basis_state import BasisState
from .simulators import SimulateSparse

__all__ = [
  "EXACT_QUBIT_LIMIT",
  "EQUIVALENCE_QUBIT_LIMIT",
  "FLOAT_THRESHOLD",
  "EquivalenceReport",
  "CheckUnitaryEquiv",
]

logger = logging.getLogger(__name__)

EXACT_QUBIT_LIMIT = 10
EQUIVALENCE_QUBIT_LIMIT = 10
FLOAT_THRESHOLD = 1e-9

class EquivalenceReport(IJsonSerializableWithDefault):
  def __init__(self, equal=False, exact=True, phase_eighths=None, phase_angle=None,
               max_deviation=None, columns_checked=0, first_mismatch_column=None) -> None:
    self.equal = equal
    self.exact = exact
    self.phase_eighths = phase_eighths
    self.phase_angle = phase_angle
    self.max_deviation = max_deviation
    self.columns_checked = columns_checked
    self.first_mismatch_column = first_mismatch_column

  def __bool__(self) -> bool:
    return bool(self.equal)

def _FindExactPhase(column_a: dict, column_b: dict):
  if not column_b:
    return None
  basis = min(column_b)
  if basis not in column_a:
    return None
  for eighths in range(8):
    if column_b[basis].MulOmega(eighths) == column_a[basis]:
      return eighths
  return None

def _ExactColumnsEqual(column_a: dict, column_b: dict, eighths: int) -> bool:
  if column_a.keys() != column_b.keys():
    return False
  return all(column_b[b].MulOmega(eighths) == column_a[b] for b in column_b)

def CheckUnitaryEquiv(circuit_a: Circuit, circuit_b: Circuit, exact=None,
                      qubit_limit=EQUIVALENCE_QUBIT_LIMIT, threshold=FLOAT_THRESHOLD) -> EquivalenceReport:
  n = circuit_a.qubit_count
  if circuit_b.qubit_count != n:
    raise ValueError("circuits act on {} and {} qubits".format(n, circuit_b.qubit_count))
  if n > qubit_limit:
    raise TooManyQubits("{} qubits exceed the equivalence limit of {}".format(n, qubit_limit))
  if exact is None:
    exact = n <= EXACT_QUBIT_LIMIT
  report = EquivalenceReport(exact=exact)
  phase = None
  max_deviation = 0.0
  for column in range(1 << n):
    state = BasisState(n, column)
    column_a = SimulateSparse(circuit_a, state, exact)
    column_b = SimulateSparse(circuit_b, state, exact)
    report.columns_checked += 1
    if exact:
      if phase is None:
        phase = _FindExactPhase(column_a, column_b)
      if phase is None or not _ExactColumnsEqual(column_a, column_b, phase):
        report.first_mismatch_column = column
        break
    else:
      if phase is None:
        basis = max(column_b, key=lambda b: abs(column_b[b]))
        ratio = column_a.get(basis, 0j) / column_b[basis]
        phase = ratio / abs(ratio) if abs(ratio) > 0 else 1 + 0j
      keys = set(column_a) | set(column_b)
      deviation = max(abs(column_a.get(b, 0j) - phase * column_b.get(b, 0j)) for b in keys)
      max_deviation = max(max_deviation, deviation)
      if deviation > threshold and report.first_mismatch_column is None:
        report.first_mismatch_column = column
  if exact:
    report.equal = report.first_mismatch_column is None
    report.phase_eighths = phase if report.equal else None
    if report.equal:
      report.phase_angle = math.pi * phase / 4
      report.max_deviation = 0.0
  else:
    report.max_deviation = max_deviation
    report.equal = max_deviation <= threshold
    angle = cmath.phase(phase) if phase is not None else 0.0
    report.phase_angle = angle
    eighths = angle / (math.pi / 4)
    if abs(eighths - round(eighths)) < 1e-9:
      report.phase_eighths = int(round(eighths)) % 8
  logger.debug("equivalence over %d qubits: equal=%s phase=%s", n, report.equal, report.phase_eighths)
  return report
