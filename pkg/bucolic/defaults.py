DISTANCE_MATRIX_CAP = 4096
FIBER_CHECK_BOUND = 16
SEPARATOR_SEARCH_BOUND = 24
GATED_SUBSET_ENUMERATION_CAP = 12
COVER_VERTEX_BUDGET = 100000
CELL_ENUMERATION_BUDGET = 20000
AUTOMORPHISM_CAP = 100000
GROUP_CLOSURE_CAP = 100000
PRISM_ENUMERATION_BUDGET = 4096
HYPERCUBE_KMAX = 3
VERIFY_COVER_LEVELS = True
BRUTE_FORCE_CROSS_CHECK_LIMIT = 12

# settings replaced by the BUCOLIC_BUDGET environment variable
BUDGET_SETTINGS = (
    "COVER_VERTEX_BUDGET",
    "CELL_ENUMERATION_BUDGET",
    "AUTOMORPHISM_CAP",
    "GROUP_CLOSURE_CAP",
    "PRISM_ENUMERATION_BUDGET",
)
