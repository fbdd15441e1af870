import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

BASE_DIR = Path(__file__).parent

# Largest n for which SP([n]) is materialised.  2^(n-1) orders, so the
# default 24 already means ~8.4M LinearOrder objects.
SP_MAX_N: int = int(os.getenv("SP_MAX_N", "24"))

# Largest n for which the full L([n]) is materialised (n! orders).
ALL_ORDERS_MAX_N: int = int(os.getenv("ALL_ORDERS_MAX_N", "9"))

# Profile budget for the brute-force Condorcet sweep: |D|^m profiles are
# checked one by one, and exceeding the budget is an error, never a silent
# partial verdict.
MAX_PROFILES: int = int(os.getenv("MAX_PROFILES", "10000000"))

# Processes for the profile sweep.  1 keeps it in-process; partitions are by
# first voter, so more workers than |D| buys nothing.
SWEEP_WORKERS: int = int(os.getenv("SWEEP_WORKERS", "1"))

# CLI logging goes to stderr; stdout is reserved for results.
LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")

# SVG scale: pixels per unit of generator length.
SVG_UNIT_PX: float = float(os.getenv("SVG_UNIT_PX", "80"))
