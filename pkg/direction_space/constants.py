SEED = 0


# ==================================================
#               Truncation Profile
# ==================================================

# NOTE: every limit in the theory is replaced by a finite window,
# these are the defaults of that window
HORIZON = 8
POWER_BOUND = 40
EXPONENT_BOUND = 64
END_THRESHOLD = 5

MIN_POWER_BOUND = 4


# ==================================================
#               Reports
# ==================================================

DISPLAY_DIGITS = 12

# JSON numbers lose precision beyond this
MAX_SAFE_INTEGER = 2**53


# ==================================================
#               Oracles
# ==================================================

# NOTE: largest convex hull the tree orbit oracle will count over
ORACLE_HULL_LIMIT = 4096

# the ball automorphism enumeration stops beyond this many automorphisms
BALL_AUTOMORPHISM_LIMIT = 200_000

# coordinate window of the brute-force checks on the example group
EXAMPLE_WINDOW = (-6, 6)

# NOTE: a tree letter is one character, so the degree is capped by the alphabet
TREE_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"


# ==================================================
#               Directions
# ==================================================

MAX_EXPONENT_PAIRS = 16

# NOTE: samples up to this size get the exhaustive four-point scan
FOURPOINT_EXHAUSTIVE_LIMIT = 64

# number of quadruples drawn when a four-point scan is subsampled
FOURPOINT_SAMPLES = 100_000
SLIM_TRIANGLE_SAMPLES = 200


# ==================================================
#               Parallel Grid
# ==================================================

THREADS_ENV = "DIRECTION_SPACE_THREADS"

# NOTE: the minimum number of worker threads that execute grid jobs
GRID_MIN_WORKERS = 1
GRID_MAX_WORKERS = 32
