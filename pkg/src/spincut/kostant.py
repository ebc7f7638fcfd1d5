"""Multiplicity engines for quantized circle actions.

Two independent routes compute the same thing.  The counting route evaluates
one weight at a time: each isolated point contributes a signed count of
positive half-integer partitions, and each codimension-2 component
contributes a signed surface integral when its unique expansion step lands on
the queried weight.  The rational route assembles every component's closed
form over a common denominator, divides exactly, and reads off the whole
character at once.  A truncated geometric series gives a third, deliberately
brute-force oracle.

Conventions.  Characters live in the doubled-exponent variable of the laurent
module, so the weight beta sits at q-exponent 2*beta and a determinant weight
mu contributes the monomial q^mu.  All half-integer bookkeeping (partition
targets, expansion steps k, surface integrand values) is carried doubled and
integrality is asserted only on final multiplicities.  The default sign
convention makes a dim-0 codimension-2 component contribute exactly like the
isolated point with the same data; paper_signs=True switches every
codimension-2 contribution to the opposite overall sign, the variant in which
the surface integrand carries one extra orientation factor per component.
"""

from __future__ import annotations

from typing import Sequence

from .fixed_points import (
    Codim2Component,
    FixedPointData,
    InvalidDataError,
    IsolatedFixedPoint,
    is_polarized,
    require_valid,
)
from .laurent import (
    LaurentPoly,
    RationalChar,
    VirtualCharacter,
    exact_divide,
    rational_combine,
    to_character,
)


class NotPolarizedError(ValueError):
    """The operation needs strictly positive weights; polarize the data first."""


class NonIntegerMultiplicityError(ArithmeticError):
    """Half contributions failed to cancel; the input data is inconsistent."""


def _require_polarized(data: FixedPointData) -> None:
    if not is_polarized(data):
        raise NotPolarizedError("data has nonpositive weights; polarize it first")


def partition_count(alphas: Sequence[int], target_doubled: int) -> int:
    """Count tuples of positive half-integers k_j with target + sum k_j*alpha_j = 0.

    The target is passed doubled.  Writing each k_j as d_j/2 with d_j an odd
    positive integer, the count is the number of solutions of
    sum d_j*alpha_j = -target_doubled, found by bounded nested enumeration.
    """
    if not alphas:
        raise ValueError("at least one weight is required")
    if any(a <= 0 for a in alphas):
        raise ValueError("partition weights must be strictly positive")
    return _count_odd(tuple(alphas), -target_doubled)


def _count_odd(alphas: tuple[int, ...], remaining: int) -> int:
    first = alphas[0]
    if len(alphas) == 1:
        if remaining <= 0:
            return 0
        d, leftover = divmod(remaining, first)
        return 1 if leftover == 0 and d % 2 == 1 else 0
    rest_floor = sum(alphas[1:])  # every remaining d_j is at least 1
    total = 0
    d = 1
    while d * first + rest_floor <= remaining:
        total += _count_odd(alphas[1:], remaining - d * first)
        d += 2
    return total


def multiplicity_isolated(data: FixedPointData, beta: int) -> int:
    """Weight multiplicity from isolated fixed points alone.

    The multiplicity of beta is the signed sum over points of the partition
    count at target beta - mu/2 (doubled: 2*beta - mu).
    """
    require_valid(data)
    if data.codim2:
        raise InvalidDataError("isolated-only formula, but codim2 components are present")
    _require_polarized(data)
    total = 0
    for point in data.isolated:
        total += point.sign * partition_count(point.weights, 2 * beta - point.det_weight)
    return total


def pbar(comp: Codim2Component, k_doubled: int, paper_signs: bool = False) -> int:
    """Doubled surface integrand of a codimension-2 component at expansion step k.

    For a point component the integrand is the constant 1 (doubled: 2).  For a
    surface it is (chern_l - chern_n)/2 - k*chern_n, the degree-2 part of the
    expansion of the determinant-twisted normal contribution; doubled this is
    (chern_l - chern_n) - k_doubled*chern_n, always an integer.
    """
    if comp.normal_weight <= 0:
        raise NotPolarizedError("component must be polarized (normal weight > 0)")
    if k_doubled <= 0 or k_doubled % 2 == 0:
        raise ValueError("k must be a positive half-integer, passed doubled (odd)")
    if comp.dim == 0:
        value = 2
    else:
        value = (comp.chern_l - comp.chern_n) - k_doubled * comp.chern_n
    return -value if paper_signs else value


def multiplicity(data: FixedPointData, beta: int, paper_signs: bool = False) -> int:
    """Weight multiplicity by counting, one weight at a time.

    Isolated points contribute signed partition counts.  A codimension-2
    component contributes sign * pbar at k = (mu/2 - beta)/alpha when that k
    is a positive half-integer, and nothing otherwise.  All contributions are
    accumulated doubled; an odd total means the halves failed to cancel and
    the data is not consistent.
    """
    require_valid(data)
    _require_polarized(data)
    doubled = 0
    for point in data.isolated:
        doubled += 2 * point.sign * partition_count(
            point.weights, 2 * beta - point.det_weight
        )
    for comp in data.codim2:
        k_doubled, leftover = divmod(comp.det_weight - 2 * beta, comp.normal_weight)
        if leftover == 0 and k_doubled > 0 and k_doubled % 2 == 1:
            doubled += comp.sign * pbar(comp, k_doubled, paper_signs)
    if doubled % 2:
        raise NonIntegerMultiplicityError(
            f"half multiplicity at weight {beta}: doubled total {doubled} is odd"
        )
    return doubled // 2


def component_term(
    comp: IsolatedFixedPoint | Codim2Component, paper_signs: bool = False
) -> RationalChar:
    """Closed-form rational contribution of a single component.

    Isolated point: sign * q^mu / prod_j (q^alpha_j - q^-alpha_j).  Point
    component: sign * q^(mu-alpha) / (1 - q^-2alpha).  Surface component,
    with x = q^-2alpha: sign * q^(mu-alpha) * ((chern_l - 2*chern_n)
    - chern_l*x) / (2*(1-x)^2), which is the geometric-series closed form of
    the doubled pbar expansion.  Polarization is not required; flipped
    components produce the identical rational function.
    """
    if isinstance(comp, IsolatedFixedPoint):
        numerator = LaurentPoly.monomial(comp.det_weight, comp.sign)
        denominator = LaurentPoly.one()
        for alpha in comp.weights:
            denominator = denominator * (
                LaurentPoly.monomial(alpha) - LaurentPoly.monomial(-alpha)
            )
        return RationalChar(numerator, denominator)
    alpha = comp.normal_weight
    base = LaurentPoly.monomial(comp.det_weight - alpha, comp.sign)
    one_minus_x = LaurentPoly.one() - LaurentPoly.monomial(-2 * alpha)
    if comp.dim == 0:
        numerator = base
        denominator = one_minus_x
    else:
        series_num = LaurentPoly(
            {
                0: comp.chern_l - 2 * comp.chern_n,
                -2 * alpha: -comp.chern_l,
            }
        )
        numerator = base * series_num
        denominator = (one_minus_x * one_minus_x) * LaurentPoly.monomial(0, 2)
    if paper_signs:
        numerator = -numerator
    return RationalChar(numerator, denominator)


def character_rational(data: FixedPointData, paper_signs: bool = False) -> VirtualCharacter:
    """Full character by exact rational algebra.

    Every component's closed form is combined over a common denominator; the
    sum of fixed-point contributions of a genuine closed manifold is a Laurent
    polynomial, so exact division must succeed.  NotDivisible therefore means
    the data is not realizable; OddExponent means a half weight leaked
    through.  Polarization is not required.
    """
    require_valid(data)
    terms = [component_term(comp, paper_signs) for comp in data.components()]
    if not terms:
        return VirtualCharacter.zero()
    combined = rational_combine(terms)
    quotient = exact_divide(combined.numerator, combined.denominator)
    return to_character(quotient)


def character_series(
    data: FixedPointData, window: tuple[int, int], paper_signs: bool = False
) -> dict[int, int]:
    """Brute-force oracle: truncated geometric expansion over a finite window.

    Expands every component term as a descending power series, truncated as
    soon as weights drop below the window, and returns the nonzero
    multiplicities inside [window[0], window[1]].  Kept deliberately
    independent of the rational route: no division happens here.
    """
    require_valid(data)
    _require_polarized(data)
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty window {window}")
    doubled: dict[int, int] = {}
    for point in data.isolated:
        top = (point.det_weight - sum(point.weights)) // 2
        _expand_point(point.weights, 0, top, 2 * point.sign, lo, hi, doubled)
    for comp in data.codim2:
        weight = (comp.det_weight - comp.normal_weight) // 2
        k_doubled = 1
        while weight >= lo:
            if weight <= hi:
                value = comp.sign * pbar(comp, k_doubled, paper_signs)
                doubled[weight] = doubled.get(weight, 0) + value
            weight -= comp.normal_weight
            k_doubled += 2
    result: dict[int, int] = {}
    for weight in sorted(doubled):
        value = doubled[weight]
        if value % 2:
            raise NonIntegerMultiplicityError(
                f"half multiplicity at weight {weight}: doubled total {value} is odd"
            )
        if value:
            result[weight] = value // 2
    return result


def _expand_point(
    weights: tuple[int, ...],
    j: int,
    weight: int,
    value: int,
    lo: int,
    hi: int,
    doubled: dict[int, int],
) -> None:
    # Each tangent line contributes the series q^-alpha + q^-3alpha + ...;
    # in weight terms a drop of alpha*l for every l >= 0 beyond the top term.
    if j == len(weights):
        if lo <= weight <= hi:
            doubled[weight] = doubled.get(weight, 0) + value
        return
    alpha = weights[j]
    while weight >= lo:
        _expand_point(weights, j + 1, weight, value, lo, hi, doubled)
        weight -= alpha
