__all__ = [
  "CircuitError",
  "OutOfRangeQubit",
  "DuplicateOperand",
  "ArityMismatch",
  "UnloweredMacro",
  "EmptyTargets",
  "OverlappingPairs",
  "InsufficientAncillas",
  "OverlappingOperands",
  "WidthTooSmall",
  "InvalidAlpha",
  "TableTooLarge",
  "InvalidSwapCount",
  "InvalidFormat",
  "UnplacedQubit",
  "NonPermutationGate",
  "TooManyQubits",
]

class CircuitError(ValueError):
  pass

class OutOfRangeQubit(CircuitError):
  pass

class DuplicateOperand(CircuitError):
  pass

class ArityMismatch(CircuitError):
  pass

class UnloweredMacro(CircuitError):
  pass

class EmptyTargets(CircuitError):
  pass

class OverlappingPairs(CircuitError):
  pass

class InsufficientAncillas(CircuitError):
  pass

class OverlappingOperands(CircuitError):
  pass

class WidthTooSmall(CircuitError):
  pass

class InvalidAlpha(CircuitError):
  pass

class TableTooLarge(CircuitError):
  pass

class InvalidSwapCount(CircuitError):
  pass

class InvalidFormat(CircuitError):
  pass

class UnplacedQubit(CircuitError):
  pass

class NonPermutationGate(CircuitError):
  pass

class TooManyQubits(CircuitError):
  pass
