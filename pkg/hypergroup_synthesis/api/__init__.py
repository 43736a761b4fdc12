"""
Commands of the hypergroup synthesis toolkit.
"""

# Import all commands so they register with the registry
from .verification import check_eq, degree, verify
from .algebra import conv, fourier_command
from .synthesis import synth
