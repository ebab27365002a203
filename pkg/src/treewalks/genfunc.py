"""Closed-form generating functions for weighted Dyck paths and tree walks.

Write U for an up-step and D for a down-step of a lattice path that never
dips below the x-axis.  A path's weight is c1^#U * c2^#D; its poids replaces
c2 by c3 for every D that lands on the axis.  With A(i, n) the poids-sum
over length-n paths ending at height i (the table of
:func:`treewalks.recurrence.build_table`), the series built here expand the
algebraic solution of that counting system:

* ``dyck_gf``            a(t), the weight enumerator of paths ending on the
                         axis: the power-series root of
                         (c1*c2*t^2) * a^2 - a + 1 = 0,
                         a(t) = (1 - sqrt(1 - 4*c1*c2*t^2)) / (2*c1*c2*t^2).
* ``irreducible_gf``     the pair (b, c) enumerating irreducible paths
                         (on the axis only at their endpoints) by weight and
                         by poids: b = c1*c2*t^2 * a, c = (c3/c2) * b.
* ``poids_gf``           d_i(t) = d(t) * (c1*t*a(t))^i, whose t^n
                         coefficient is A(i, n); d = 1/(1 - c) is the i = 0
                         case, because a path ending on the axis is a free
                         sequence of irreducible components.  A path ending
                         at height i splits uniquely as W0 U W1 U ... U Wi
                         with each Wk ending on the axis, which is where the
                         (c1*t*a)^i factor comes from.
* ``tree_gf``            the tree specialization (c1, c2, c3) = (1, m-1, m),
                         evaluated from its own radical closed form
                         2(m-1) / (m-2 + m*sqrt(1 - 4(m-1)t^2))
                         times ((1 - sqrt(1 - 4(m-1)t^2)) / (2(m-1)t))^i,
                         a deliberately different arithmetic route from
                         ``poids_gf`` so the two can cross-check.

The removable t^2 (or t) factors in these formulas are handled by exact
shift division with a hard zero check on the low coefficients, never by
symbolic limit-taking: a nonzero low coefficient means an algebra bug and
raises immediately.  All arithmetic is exact, so agreement with the
recurrence table is coefficient for coefficient.
"""

from __future__ import annotations

from fractions import Fraction

from .recurrence import WeightConfig, tree_weights
from .series import PowerSeries

__all__ = ["dyck_gf", "irreducible_gf", "poids_gf", "tree_gf"]


def _check_order(order: int) -> None:
    if order < 0:
        raise ValueError("truncation order must be >= 0")


def _sqrt_radical(product: Fraction, order: int) -> PowerSeries:
    """sqrt(1 - 4*product*t^2), truncated at ``order``."""
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    if order >= 2:
        coeffs[2] = Fraction(-4) * product
    return PowerSeries(coeffs).sqrt()


def dyck_gf(weights: WeightConfig, order: int) -> PowerSeries:
    """Weight enumerator a(t) of all paths ending on the axis.

    Degenerate c1*c2 = 0 admits only the empty path (no up-step can ever be
    matched), so the formula's 0/0 is resolved combinatorially to the
    constant series 1.
    """
    _check_order(order)
    q = weights.c1 * weights.c2
    if q == 0:
        return PowerSeries.one(order)
    s = _sqrt_radical(q, order + 2)
    return (PowerSeries.one(order + 2) - s).shift_div(2) / (2 * q)


def irreducible_gf(weights: WeightConfig, order: int) -> tuple[PowerSeries, PowerSeries]:
    """Enumerators (b, c) of irreducible paths by weight and by poids.

    An irreducible path's single axis-landing D contributes c3 instead of
    c2, hence c = (c3/c2) * b; c2 = 0 makes that ratio meaningless and is
    rejected.
    """
    _check_order(order)
    if weights.c2 == 0:
        raise ValueError("degenerate weights: c2 = 0 leaves the poids ratio c3/c2 undefined")
    s = _sqrt_radical(weights.c1 * weights.c2, order)
    b = (PowerSeries.one(order) - s) * Fraction(1, 2)
    return b, b * (weights.c3 / weights.c2)


def poids_gf(weights: WeightConfig, i: int, order: int) -> PowerSeries:
    """Poids enumerator d_i(t) of paths ending at height i.

    The t^n coefficient equals the recurrence table entry A(i, n).  The t^i
    prefactor of d(t) * (c1*t*a(t))^i is applied as a final shift so every
    intermediate value is a genuine power series.
    """
    _check_order(order)
    if i < 0:
        raise ValueError("end height must be >= 0")
    if weights.c2 == 0:
        raise ValueError("degenerate weights: c2 = 0 leaves the poids ratio c3/c2 undefined")
    if i == 0:
        _, c = irreducible_gf(weights, order)
        return (PowerSeries.one(order) - c).inverse()
    if i > order:
        return PowerSeries.zero(order)
    inner = order - i
    d = poids_gf(weights, 0, inner)
    lift = (dyck_gf(weights, inner) * weights.c1) ** i
    return (d * lift).shift_mul(i)


def tree_gf(m: int, i: int, order: int) -> PowerSeries:
    """Enumerator of m-regular-tree walks ending at distance i, closed form.

    Rejects m <= 1: at m = 1 the closed form's constant denominator
    m - 2 + m = 2(m - 1) vanishes, so there is no power-series inverse
    (the recurrence route in :mod:`treewalks.recurrence` still works there).
    """
    if not isinstance(m, int) or m < 2:
        raise ValueError(
            f"tree degree m={m!r} rejected: the closed form divides by the constant "
            "2(m-1), which vanishes at m=1; use the recurrence table instead"
        )
    _check_order(order)
    if i < 0:
        raise ValueError("end distance must be >= 0")
    if i > order:
        return PowerSeries.zero(order)
    inner = order - i
    s = _sqrt_radical(Fraction(m - 1), inner)
    base = (PowerSeries.constant(m - 2, inner) + s * m).inverse() * (2 * (m - 1))
    if i == 0:
        return base
    lift = dyck_gf(tree_weights(m), inner) ** i
    return (base * lift).shift_mul(i)
