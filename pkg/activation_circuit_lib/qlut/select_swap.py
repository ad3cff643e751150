"""SELECT and SWAP stages of the lookup-table circuit.

C|x>|0..0>|0..0> = |x>|f(x)>|garbage_x>

The n-l high-order input bits drive SELECT: step j fans out the table outputs
of every address (j, r) into register r. The l low-order input bits drive
SWAP, which brings register[r] to register 0 one address bit at a time.
"""
import functools
import logging
import typing

from ..circuit.errors import InvalidSwapCount
from ..circuit.gates import Barrier, Circuit, CircuitBuilder, Cswap, MacroGate, QubitRole
from ..synthesis.multi_control import ControlledFanoutGates, MultiControlIdleGates
from .activations import GetActivation
from .float_format import FloatFormat
from .lookup_table import BuildTable, LookupTable

__all__ = [
  "QlutConfig",
  "QlutRegisters",
  "SelectStepGates",
  "BuildSelect",
  "BuildSwapNetwork",
  "BuildQlut",
  "CountEmptySelectSteps",
  "QlutOracle",
]

logger = logging.getLogger(__name__)

class QlutConfig:
  def __init__(self, n: int, l: int, function: str = "sigmoid") -> None:
    if not 0 < l < n:
      raise InvalidSwapCount("swap-qubit count must satisfy 0 < l < n, got n={}, l={}".format(n, l))
    GetActivation(function)
    self.n = n
    self.l = l
    self.function = function

  def GetFormat(self) -> FloatFormat:
    return FloatFormat.ForBits(self.n)

class QlutRegisters:
  """Input qubits 0..n-1, then 2^l output registers of output_width qubits."""

  def __init__(self, n: int, l: int, output_width=None) -> None:
    if not 0 < l < n:
      raise InvalidSwapCount("swap-qubit count must satisfy 0 < l < n, got n={}, l={}".format(n, l))
    if output_width is None:
      output_width = n
    self.n = n
    self.l = l
    self.output_width = output_width
    self.inputs = list(range(n))
    self.select_controls = self.inputs[:n - l]
    self.swap_address = self.inputs[n - l:]
    self.registers = [[n + r * output_width + b for b in range(output_width)] for r in range(1 << l)]
    self.qubit_count = n + output_width * (1 << l)

  def GetOutputQubits(self) -> typing.List[int]:
    return [q for register in self.registers for q in register]

  def GetAllQubits(self) -> typing.List[int]:
    return list(range(self.qubit_count))

def _SelectTargets(table: LookupTable, j: int, registers: QlutRegisters) -> typing.List[int]:
  w = registers.output_width
  targets = []
  for r, register in enumerate(registers.registers):
    entry = table.Lookup((j << registers.l) | r)
    targets += [q for b, q in enumerate(register) if (entry >> (w - 1 - b)) & 1]
  return targets

def SelectStepGates(table: LookupTable, j: int, registers: QlutRegisters) -> typing.List[MacroGate]:
  """Controlled fan-out for high address j.

  A block that writes no 1-bit still costs one multi-control: it gets the
  identity chain of MultiControlIdleGates rooted on the first output qubit.
  """
  targets = _SelectTargets(table, j, registers)
  root = targets[0] if targets else registers.registers[0][0]
  dirty = [q for q in registers.swap_address + registers.GetOutputQubits() if q != root]
  if not targets:
    return MultiControlIdleGates(registers.select_controls, root, dirty)
  return ControlledFanoutGates(registers.select_controls, j, targets, dirty)

def CountEmptySelectSteps(table: LookupTable, l: int, output_width=None) -> int:
  registers = QlutRegisters(table.input_width, l, output_width or table.output_width)
  return sum(1 for j in range(1 << (table.input_width - l)) if not _SelectTargets(table, j, registers))

def BuildSelect(table: LookupTable, l: int, registers: typing.Optional[QlutRegisters] = None) -> Circuit:
  if registers is None:
    registers = QlutRegisters(table.input_width, l, table.output_width)
  everything = registers.GetAllQubits()
  builder = CircuitBuilder(registers.qubit_count)
  empty = 0
  for j in range(1 << (registers.n - l)):
    if not _SelectTargets(table, j, registers):
      empty += 1
    builder.Extend(SelectStepGates(table, j, registers)).Append(Barrier(everything))
  logger.debug("select over %d steps, %d empty", 1 << (registers.n - l), empty)
  return builder.Build()

def BuildSwapNetwork(n: int, l: int, registers: typing.Optional[QlutRegisters] = None) -> Circuit:
  if registers is None:
    registers = QlutRegisters(n, l)
  everything = registers.GetAllQubits()
  builder = CircuitBuilder(registers.qubit_count)
  for stage in range(l):
    # stage 0 is driven by the lowest address bit and swaps neighbouring registers
    control = registers.swap_address[l - 1 - stage]
    stride = 1 << stage
    for r in range(0, 1 << l, 2 * stride):
      for a, b in zip(registers.registers[r], registers.registers[r + stride]):
        builder.Append(Cswap(control, a, b))
    builder.Append(Barrier(everything))
  return builder.Build()

def BuildQlut(config: QlutConfig, table: typing.Optional[LookupTable] = None) -> Circuit:
  if table is None:
    table = BuildTable(config.function, config.GetFormat())
  registers = QlutRegisters(config.n, config.l, table.output_width)
  builder = CircuitBuilder(registers.qubit_count)
  builder.SetRole(registers.select_controls, QubitRole.INPUT)
  builder.SetRole(registers.swap_address, QubitRole.SWAP_ADDRESS)
  builder.SetRole(registers.registers[0], QubitRole.OUTPUT)
  for register in registers.registers[1:]:
    builder.SetRole(register, QubitRole.GARBAGE)
  builder.Extend(BuildSelect(table, config.l, registers))
  builder.Extend(BuildSwapNetwork(config.n, config.l, registers))
  metadata = {"target": "qlut", "bits": config.n, "swap_qubits": config.l, "function": config.function}
  if "format" in table.metadata:
    metadata["format"] = table.metadata["format"]
  circuit = builder.Build(metadata=metadata)
  logger.debug("qlut %s n=%d l=%d: %d qubits, %d gates", config.function, config.n, config.l,
               circuit.qubit_count, len(circuit.gates))
  return circuit

def _LookupEntry(value: int, entries) -> int:
  return entries[value]

def QlutOracle(table: LookupTable):
  return functools.partial(_LookupEntry, entries=table.entries)
