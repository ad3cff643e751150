from .errors import *
from .gates import *
from .schedule import LayeredCircuit, Metrics, ScheduleLayers, ComputeMetrics, AnalyzeCircuit
from .qasm import ExportQasm, SaveQasmFile
