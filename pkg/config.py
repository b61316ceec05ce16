"""
Ideal Invariants Configuration
==============================
Centralized configuration for arithmetic defaults and analysis parameters.
"""

# =============================================================================
# ARITHMETIC SETTINGS
# =============================================================================
DEFAULT_CHARACTERISTIC = 0      # 0 means exact rationals
DEFAULT_TERM_ORDER = 'revlex'   # revlex | lex | deglex
DEFAULT_VARIABLE_PREFIX = 'x'   # x1, x2, ... when no names are given

# =============================================================================
# GROEBNER BASIS SETTINGS
# =============================================================================
PAIR_QUEUE_CAP = 200_000  # S-pairs processed before giving up

# =============================================================================
# GENERIC INITIAL IDEAL SAMPLING
# =============================================================================
GIN_COEFFICIENT_RANGE = (-10_000, 10_000)  # inclusive bounds for matrix entries
GIN_DEFAULT_TRIALS = 5
GIN_DEFAULT_SEED = 1

# =============================================================================
# BETTI NUMBER SETTINGS
# =============================================================================
ORACLE_MULTIDEGREE_CAP = 250_000  # multidegrees below lcm(gens) the oracle will visit
BETTI_COLUMN_WIDTH = 5

# =============================================================================
# ANNIHILATOR NUMBER SETTINGS
# =============================================================================
ANNIHILATOR_EXTRA_DEGREES = 4  # degrees shown past the cutoff for infinite rows

# =============================================================================
# REDUCTION NUMBER SETTINGS
# =============================================================================
REDUCTION_SEARCH_GRID = (-1, 0, 1)
REDUCTION_SEARCH_BUDGET = 100
REDUCTION_SEARCH_SEED = 1

# =============================================================================
# POMMARET BASIS SETTINGS
# =============================================================================
POMMARET_PARTITION_SLACK = 0  # extra degrees added to 2*maxdeg + n for partition checks

# =============================================================================
# CLASSIFICATION SETTINGS
# =============================================================================
# Evaluate the associated-prime characterization alongside the colon test
# whenever assertions are enabled.
CROSS_CHECK_CLASSIFICATION = True

# =============================================================================
# LOGGING SETTINGS
# =============================================================================
LOG_LEVEL = 'WARNING'
LOG_FORMAT = '[%(asctime)s] %(name)s %(levelname)s: %(message)s'
LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

# =============================================================================
# REPORT OUTPUT SETTINGS
# =============================================================================
REPORTS_DIR = 'reports'
DATE_FORMAT = '%Y%m%d_%H%M'  # Format for timestamped files
REPORT_SCHEMA_VERSION = '1.0'

# Report file prefixes
BETTI_TABLE_PREFIX = 'Betti_Table'
ANNIHILATOR_TABLE_PREFIX = 'Annihilator_Table'
FULL_REPORT_PREFIX = 'Ideal_Report'

# =============================================================================
# EXIT CODES
# =============================================================================
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_HYPOTHESIS = 2

# =============================================================================
# VISUALIZATION SETTINGS
# =============================================================================
CHART_STYLE = 'seaborn-v0_8-whitegrid'
FIGURE_DPI = 100
HEATMAP_CMAP = 'Blues'
COLOR_PALETTE = {
    'primary': '#3498db',      # Blue
    'extremal': '#e74c3c',     # Red
    'secondary': '#95a5a6'     # Gray
}
