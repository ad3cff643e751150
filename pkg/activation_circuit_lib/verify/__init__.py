from .basis_state import BasisState
from .exact_amplitude import ExactAmplitude
from .simulators import SimulateMacro, SimulateSparse, SimulateStatevector
from .equivalence import CheckUnitaryEquiv, EquivalenceReport
from .functional import VerifyFunctional, FunctionalReport
