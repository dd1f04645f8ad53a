"""Published mismatch values ``delta_n^(N)`` (``c_n = b_n (1 - delta_n)``), N = 3..10.

Transcribed cell by cell, 4 significant digits as printed; ``delta_0 = 0`` for
every N.  Three cells disagree with recomputation and look like misprints:
(N=3, n=2) printed as 0.981e-4 against 1.037e-3, (N=6, n=3) printed as
2.442e-1 against 2.442e-2, and (N=9, n=6) printed as 4.052e-2 against
5.052e-2.  They are kept as printed.
"""

TABLE_I: dict[int, tuple[float, ...]] = {
    3: (0.0, 1.391e-2, 0.981e-4, 3.167e-3),
    4: (0.0, 1.325e-2, 1.041e-2, 1.525e-3, 6.720e-2),
    5: (0.0, 1.533e-2, 1.846e-2, 1.183e-2, 1.434e-2, 1.100e-1),
    6: (0.0, 1.816e-2, 2.618e-2, 2.442e-1, 1.812e-2, 2.963e-2, 1.424e-1),
    7: (0.0, 2.107e-2, 3.334e-2, 3.658e-2, 3.213e-2, 2.684e-2, 4.490e-2, 1.686e-1),
    8: (0.0, 2.384e-2, 3.984e-2, 4.761e-2, 4.731e-2, 4.101e-2, 3.664e-2, 5.950e-2, 1.908e-1),
    9: (0.0, 2.640e-2, 4.578e-2, 5.753e-2, 6.156e-2, 5.835e-2, 4.052e-2, 4.678e-2, 7.320e-2, 2.100e-1),
    10: (
        0.0, 2.874e-2, 5.101e-2, 6.633e-2, 7.446e-2, 7.528e-2,
        6.956e-2, 6.034e-2, 5.692e-2, 8.608e-2, 2.268e-1,
    ),
}

# Scalars quoted alongside the table.
GT3 = 11.784
C2_2 = -(1 - 3.114e-3)
F3_HALF_INFIDELITY = 3.9e-5
P2_COEFF = 6.22e-3
PROBABILITY_RANGE = (0.92, 0.98)


def p2_quoted(p: float) -> float:
    return 1.0 - P2_COEFF * p**2


def p3_quoted(p: float) -> float:
    return 1.0 - 8e-2 * p * (1 - p) ** 2 / (1 - 6e-3 * p**2)


def table_tolerance(published: float) -> float:
    """Allowed deviation for a published cell: max(2% relative, 2e-4 absolute)."""
    return max(0.02 * abs(published), 2e-4)
