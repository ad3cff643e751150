from .layout import GridLayout, LayoutReluGrid, ValidateConnectivity
from .routing import RouteLongCnot
from .grid_fanout import BuildGridFanout, GridFanoutTree
from .grid_relu import BuildReluGrid
