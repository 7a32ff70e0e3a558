"""Default numerical thresholds shared across the engine.

Every boolean verdict produced by the package traces back to one of these
constants; the CLI can override ROOT_TOL and CHECK_TOL per run.
"""

# Roots closer than this (relative to the root scale) are one point of the
# character space / fiber space.
ROOT_TOL = 1e-8

# Generic tolerance for sampled identity checks (multiplicativity, norm
# comparisons, commuting diagrams).
CHECK_TOL = 1e-9

# Residual bound for "eta is a root of theta(alpha)" preconditions and for
# emitted complex roots.
RESIDUAL_TOL = 1e-8

# Multiplication operator with 2-norm condition number above this is treated
# as singular, i.e. the element is not invertible.
INVERT_COND_MAX = 1e12

# Singular values below RANK_RTOL * s_max do not count towards numerical rank.
RANK_RTOL = 1e-9

# Slack allowed when validating the norm-parameter inequality t^n >= sum |a_k| t^k.
NORM_PARAM_SLACK = -1e-12

# Absolute bisection tolerance for the default norm parameter.
NORM_PARAM_BISECT_TOL = 1e-12

# Iteration cap for the simultaneous root iteration before falling back to
# companion-matrix eigenvalues.
ROOT_MAX_ITER = 200
