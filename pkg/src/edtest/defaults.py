"""Shared numerical defaults.

The bisection tolerance certifies efficiency indices to within 2**-10 of
their true values; the two grid steps control the coarse discount-factor
scan used for the EEI and the fine scan used for identified-set bounds.
"""

DEFAULT_EFFICIENCY_TOL = 2.0**-10
DEFAULT_DELTA_STEP = 0.01
DEFAULT_BOUNDS_STEP = 0.001
