from .fixed_point import FixedPointValue
from .relu import BuildRelu, ReluReference, ReluOracle
from .leaky_relu import LeakyEncoding, LeakySpec, BuildLeakyRelu, LeakyReference, LeakyOracle
