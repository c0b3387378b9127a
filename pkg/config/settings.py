# Solver parameters
SOLVER_CONFIG = {
    'variables': ('z1', 'z2'),
    'format': 'plain',
    'reduce': True,
    'variable_1d': 'z'
}

# Oracle parameters
ORACLE_PARAMS = {
    'verify_size': 8,
    'table_size': 6
}

# Random problem bounds (gen-random)
RANDOM_BOUNDS = {
    'max_m': 3,
    'max_order': 3,
    'max_value': 9,
    'hole_probability': 0.5
}

# Logging
LOG_CONFIG = {
    'format': '%(levelname)s: %(message)s',
    'level': 'WARNING'
}

# Process exit codes
EXIT_CODES = {
    'ok': 0,
    'error': 1,
    'invalid_input': 2,
    'initial_data': 3,
    'mismatch': 4
}
