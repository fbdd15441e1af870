"""
Pin the unit-test environment before any application module is imported.

config.py reads .env at import time via load_dotenv(), so a developer's
local .env (say one raising MAX_PROFILES or turning on SWEEP_WORKERS)
would otherwise change what the suite exercises.  load_dotenv never
overrides variables that are already set, so these assignments win.
"""

import os

os.environ["SP_MAX_N"] = "24"
os.environ["ALL_ORDERS_MAX_N"] = "9"
os.environ["MAX_PROFILES"] = "10000000"

# In-process sweeps keep witnesses and log capture simple; the pool path is
# exercised explicitly with workers=2.
os.environ["SWEEP_WORKERS"] = "1"
os.environ["LOG_LEVEL"] = "WARNING"
os.environ["SVG_UNIT_PX"] = "80"
