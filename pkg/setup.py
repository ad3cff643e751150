from setuptools import setup, find_packages

setup(
  name="activation_circuit_lib",
  version="0.1.0",
  author="mike_scarlet",
  author_email="mike_scarlet@126.com",
  description="Clifford+T circuits for neural-network activation functions: ReLU, Leaky ReLU and lookup tables",
  install_requires=[
    "numpy",
    "mpmath",
    "tqdm",
  ],
  extras_require={
    "test": ["pytest"],
    "qasm": ["qiskit"],
  },
  entry_points={
    "console_scripts": [
      "activation-circuit=activation_circuit_lib.cli:Main",
    ],
  },
  packages=find_packages(exclude=["test", "test.*", "examples", "examples.*"]),
  python_requires='>=3.8'
)
