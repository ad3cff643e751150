"""OpenQASM 2.0 export, one gate per line on a single register q."""
from .errors import UnloweredMacro
from .gates import Circuit, GateKind, MacroGate, ValidateCircuit

__all__ = [
  "QASM_HEADER",
  "GateToQasm",
  "ExportQasm",
  "SaveQasmFile",
]

QASM_HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'

_QASM_NAMES = {
  GateKind.H: "h",
  GateKind.S: "s",
  GateKind.SDG: "sdg",
  GateKind.T: "t",
  GateKind.TDG: "tdg",
  GateKind.X: "x",
  GateKind.CNOT: "cx",
  GateKind.SWAP: "swap",
  GateKind.TOFFOLI: "ccx",
  GateKind.CSWAP: "cswap",
  GateKind.BARRIER: "barrier",
}

def _Operands(qubits) -> str:
  return ",".join("q[{}]".format(q) for q in qubits)

def GateToQasm(gate: MacroGate) -> str:
  if gate.kind == GateKind.MCX:
    # one or two controls map onto cx / ccx; wider controls need lowering
    names = {2: "cx", 3: "ccx"}
    if len(gate.operands) not in names:
      raise UnloweredMacro("{} has no qasm mapping; lower the circuit first".format(gate))
    return "{} {};".format(names[len(gate.operands)], _Operands(gate.operands))
  if gate.kind not in _QASM_NAMES:
    raise UnloweredMacro("{} has no qasm mapping; lower the circuit first".format(gate))
  return "{} {};".format(_QASM_NAMES[gate.kind], _Operands(gate.operands))

def ExportQasm(circuit: Circuit) -> str:
  ValidateCircuit(circuit)
  lines = [GateToQasm(g) for g in circuit.gates]
  text = QASM_HEADER
  if circuit.qubit_count > 0:
    text += "qreg q[{}];\n".format(circuit.qubit_count)
  for line in lines:
    text += line + "\n"
  return text

def SaveQasmFile(circuit: Circuit, file_path) -> None:
  text = ExportQasm(circuit)
  with open(file_path, "w", encoding="utf-8", newline="\n") as f:
    f.write(text)
