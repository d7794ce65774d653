"""Shared reference values used by the regression and acceptance tests."""

from fractions import Fraction

# Nearest real zero q_z of P(B_n,q) to tau+1 = 2.6180339887..., n = 6..20,
# with the offset q_z - (tau+1). Signs alternate: below for even n, above
# for odd n.
B_NEAREST_ZERO_TABLE = {
    6: (2.546602, -0.07143),
    7: (2.677815, 0.05978),
    8: (2.594829, -0.02321),
    9: (2.636118, 0.01808),
    10: (2.609130, -0.8904e-2),
    11: (2.624356, 0.6322e-2),
    12: (2.614541, -3.493e-3),
    13: (2.620356, 2.322e-3),
    14: (2.616673, -1.361e-3),
    15: (2.618905, 0.8713e-3),
    16: (2.617509, -0.5254e-3),
    17: (2.618364, 3.301e-4),
    18: (2.617832, -2.017e-4),
    19: (2.618160, 1.256e-4),
    20: (2.617957, -0.7725e-4),
}

# Asymptotic ratio-growth constants per family.
ASYMPTOTIC_CONSTANTS = {
    "R": 0.61803,
    "TC": 0.91415,
    "I": 0.80552,
    "B": 1.0,
    "H": 1.0,
}

# 4cos^2(pi/7), evaluated at high precision.
BERAHA_7 = 3.2469796037174670

# Real zeros of the degree-8 cofactor of f_I closest to tau+1 and to q_7.
ICOSA_ZERO_NEAR_GOLDEN = 2.6181973
ICOSA_ZERO_NEAR_Q7 = 3.222458

# The complex-conjugate pair of q(q-1)(q-2)f_CM(q) closest to tau+1.
CM_PAIR_RE = 2.641998
CM_PAIR_IM = 0.014795
CM_PAIR_DISTANCE = 0.028163

# Extra real zeros of the 12-vertex Woodall counterexample polynomial.
CE12_ZERO_LOW = 2.61461437
CE12_ZERO_WOODALL = 2.81889716

# Unique real roots of q^3-9q^2+29q-32 and q^3-9q^2+30q-35.
RHO_TC_VALUE = 2.546602
Q_M_VALUE = 2.6778146

WOODALL_INTERVAL_HI = Fraction(3)
