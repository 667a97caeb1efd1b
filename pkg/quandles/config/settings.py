"""
Quandle Toolkit Configuration Module

This module loads environment overrides for the search procedures.
Every value has a default, so a missing .env file is fine.
"""

import logging
import os

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

# Load environment variables from .env file
load_dotenv()

# ============================================================
# SEARCH LIMITS
# ============================================================

# Worker threads for homomorphism enumeration (partitioned by first generator)
DEFAULT_THREADS = int(os.getenv("QUANDLE_THREADS", "1"))

# Rewrite expansions allowed to `present decide` when --budget is omitted
DEFAULT_BUDGET = int(os.getenv("QUANDLE_DECIDE_BUDGET", "2048"))

# Rewrite expansions per interleaving turn of the word-problem procedures
REWRITE_SLICE = int(os.getenv("QUANDLE_REWRITE_SLICE", "64"))

# Finite quandles tried by `present decide` when --library is omitted
DEFAULT_LIBRARY = os.getenv("QUANDLE_DEFAULT_LIBRARY", "dihedral:3,dihedral:5,dihedral:7")

# Census growth is explosive past this order; not overridable
CENSUS_MAX_ORDER = 6

# ============================================================
# CONSISTENCY CHECKS
# ============================================================

# Cross-check free-quandle equality through both models and re-verify witnesses
CROSS_CHECK = os.getenv("QUANDLE_CROSS_CHECK", "1").lower() not in {"0", "false", "no"}

logger.debug(
    "Quandle toolkit configuration: threads=%s budget=%s slice=%s cross_check=%s",
    DEFAULT_THREADS, DEFAULT_BUDGET, REWRITE_SLICE, CROSS_CHECK,
)
