"""Coset bookkeeping and unit-argument hypergeometric numerics.

The package tracks the 56 cosets of a rank-7 reflection group acting on the
parameter space of a two-term family of very-well-poised series, the 32+12
cosets of the limiting rank-6 group, the distance geometry connecting them,
and the numerical evaluation of the three series families (M, J, L) together
with their three-term relations and confluent limits.
"""

__version__ = "0.1.0"
