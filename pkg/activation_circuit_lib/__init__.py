"""Synthesis, analysis and verification of Clifford+T activation-function circuits."""
__version__ = "0.1.0"
