import multiprocessing
import os

# configuration csv columns
LEVEL_KEY = "level"
INDEX_KEY = "index"
POSITION_KEY = "position"
WEIGHT_KEY = "weight"
CONFIGURATION_COLUMNS = [LEVEL_KEY, INDEX_KEY, POSITION_KEY, WEIGHT_KEY]

# verblunsky csv columns
RE_KEY = "re"
IM_KEY = "im"
VERBLUNSKY_COLUMNS = [INDEX_KEY, RE_KEY, IM_KEY]

# histogram csv columns
BIN_LEFT_KEY = "bin_left"
BIN_RIGHT_KEY = "bin_right"
MASS_KEY = "mass"
HISTOGRAM_COLUMNS = [BIN_LEFT_KEY, BIN_RIGHT_KEY, MASS_KEY]

# metadata keys
KIND_KEY = "kind"
N_KEY = "n"
BETA_KEY = "beta"
SEED_KEY = "seed"
RNG_KEY = "rng"
RUN_CONFIG_KEY = "run_config"
LEVELS_KEY = "levels"
TRUSTED_REGION_KEY = "trusted_region"
RESIDUAL_KEY = "residual"
DEGENERATE_GAPS_KEY = "degenerate_gaps"
ITERATIONS_KEY = "iterations"
LEVEL_SET_STEPS_KEY = "steps"


# command names
SAMPLE_UPPER_COMMAND_NAME = "sample"
SAMPLE_CBE_COMMAND_NAME = "cbe"
SAMPLE_GBE_COMMAND_NAME = "gbe"
SAMPLE_SINE_WINDOW_COMMAND_NAME = "sine-window"

CHAIN_UPPER_COMMAND_NAME = "chain"
CHAIN_PERIODIC_COMMAND_NAME = "periodic"
CHAIN_BEAD_COMMAND_NAME = "bead"
CHAIN_CORNERS_COMMAND_NAME = "corners"

VERIFY_COMMAND_NAME = "verify"


# output file names
CONFIGURATION_FILE_NAME = "configuration.csv"
VERBLUNSKY_FILE_NAME = "verblunsky.csv"
TRAJECTORY_FILE_NAME = "trajectory.csv"
METADATA_FILE_NAME = "metadata.json"
LEVEL_SET_FILE_NAME = "level_set.json"
REPORT_FILE_NAME = "report.json"


# randomness
RNG_ALGORITHM_ID = "philox"


# numeric tolerances
DUPLICATE_TOLERANCE = 1e-12
POLE_TOLERANCE = 1e-14
NORMALIZATION_TOLERANCE = 1e-9
PROBABILITY_TOLERANCE = 1e-12
UNIT_MODULUS_TOLERANCE = 1e-12

BRACKET_OFFSET = 1e-13
MIN_BRACKET_OFFSET = 1e-300
ROOT_WIDTH_TOLERANCE = 1e-13
ROOT_RESIDUAL_TOLERANCE = 1e-10
DEGENERATE_GAP_TOLERANCE = 1e-12
WINDOW_ASYMMETRY_GAPS = 1.0
INITIAL_BISECTIONS = 8
MAX_NEWTON_ITERATIONS = 20
MAX_BISECTIONS = 200
MAX_BRACKET_DOUBLINGS = 60

MAX_VERBLUNSKY_ORACLE_SIZE = 64


# sampling defaults
MIN_SINE_APPROX_N = 256
SINE_APPROX_N_PER_HALFWIDTH = 8
SPACING_BINS = 64
SPACING_RANGE = 8 * 3.141592653589793
MIN_VARIANCE_REPLICAS = 100

# verification
DEFAULT_SIGNIFICANCE = 0.01
ORACLE_TOLERANCE = 1e-8


# environment
JOBS_ENV_VAR = "BEAD_PY_JOBS"
DEFAULT_N_PROCESSES = int(os.environ.get(JOBS_ENV_VAR, multiprocessing.cpu_count()))


# verification suites
SUITE_INVARIANCE_PERIODIC = "invariance-periodic"
SUITE_INVARIANCE_SINE = "invariance-sine"
SUITE_ORACLE_OPUC = "oracle-opuc"
SUITE_VARIANCE_LOG = "variance-log"
SUITE_CORNERS_MARGINAL = "corners-marginal"
SUITE_CORNERS_DENSITY = "corners-density"
SUITE_BEAD_LIMIT = "bead-limit"
SUITE_INTERLACING = "interlacing"
SUITE_STIELTJES = "stieltjes"
SUITE_PARAMETER_MAPS = "parameter-maps"
