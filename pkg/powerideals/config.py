import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

LOG_LEVEL = os.getenv("PIL_LOG_LEVEL", "WARNING")
REDRAW_BUDGET = int(os.getenv("PIL_REDRAW_BUDGET", "64"))  # pencil post-check retries
MAX_GROUND = int(os.getenv("PIL_MAX_GROUND", "16"))  # Tutte memo is keyed by bitmask
ISOMORPHISM_MAX_GROUND = int(os.getenv("PIL_ISOMORPHISM_MAX_GROUND", "9"))
MEMBERSHIP_SAMPLES = int(os.getenv("PIL_MEMBERSHIP_SAMPLES", "100"))
DEGREE_WORKERS = int(os.getenv("PIL_DEGREE_WORKERS", "1"))
REPORT_TIMINGS = os.getenv("PIL_REPORT_TIMINGS", "0").lower() in ("1", "true", "yes")
DEFAULT_M = int(os.getenv("PIL_DEFAULT_M", "3"))
DEFAULT_SEED = int(os.getenv("PIL_DEFAULT_SEED", "1"))
