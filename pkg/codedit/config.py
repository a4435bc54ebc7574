"""Default limits for the exhaustive searches and the report format."""

# Largest pool of admissible words a closed-code search will branch over.
MAX_ADMISSIBLE_WORDS = 60

# Node budget of a single backtracking search.
MAX_SEARCH_NODES = 2 ** 20

# Orbits larger than this are only ever reported symbolically.
ORBIT_EXPAND_LIMIT = 4096

REPORT_SCHEMA = 1
