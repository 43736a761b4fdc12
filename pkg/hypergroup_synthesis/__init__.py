"""
Hypergroup Synthesis Package

Exact computer algebra for polynomial hypergroups: convolution, the
Fourier-Laplace transform, moment functions and their varieties.
"""

__version__ = "0.1.0"
