"""
Centralized logging configuration for the hypergroup synthesis toolkit.
"""

import logging
import os

DEBUG_SWEEPS = os.getenv("HYPERGROUP_DEBUG", "").strip().lower() in ("1", "true", "yes", "on")

logging.basicConfig(
    level=logging.DEBUG if DEBUG_SWEEPS else logging.INFO,
    format="%(levelname)s %(name)s: %(message)s",
)
logger = logging.getLogger("hypergroup_synthesis")
