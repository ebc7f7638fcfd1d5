from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spincut.fixed_points import (
    Codim2Component,
    FixedPointData,
    InvalidDataError,
    IsolatedFixedPoint,
    polarize,
)
from spincut.kostant import (
    NonIntegerMultiplicityError,
    NotPolarizedError,
    character_rational,
    character_series,
    component_term,
    multiplicity,
    multiplicity_isolated,
    partition_count,
    pbar,
)
from spincut.laurent import (
    LaurentPoly,
    NotDivisibleError,
    RationalChar,
    VirtualCharacter,
)
from spincut.sphere import sphere_data

from .generators import (
    mixed_sign_variant,
    random_polarized_dataset,
    realizable_dataset,
)


def test_partition_count_examples():
    assert partition_count((1, 1), -6) == 3
    assert partition_count((1, 2), -5) == 1
    assert partition_count((1,), 1) == 0


def test_partition_count_rejects_bad_weights():
    with pytest.raises(ValueError):
        partition_count((), -4)
    with pytest.raises(ValueError):
        partition_count((1, -2), -4)


def _partition_count_naive(alphas, target_doubled):
    total = -target_doubled
    if total <= 0:
        return 0
    ranges = [range(1, total // a + 1, 2) for a in alphas]
    return sum(
        1
        for combo in itertools.product(*ranges)
        if sum(d * a for d, a in zip(combo, alphas)) == total
    )


@given(
    st.lists(st.integers(1, 4), min_size=1, max_size=3),
    st.integers(-30, 5),
)
def test_partition_count_matches_naive_enumeration(alphas, target_doubled):
    assert partition_count(alphas, target_doubled) == _partition_count_naive(
        alphas, target_doubled
    )


def test_multiplicity_isolated_examples():
    assert multiplicity_isolated(sphere_data(0, 2), 1) == 1
    assert multiplicity_isolated(sphere_data(0, 2), 0) == 0
    assert multiplicity_isolated(sphere_data(2, -3), 1) == -1


def test_multiplicity_isolated_rejects_codim2():
    data = FixedPointData(
        half_dimension=1,
        codim2=(Codim2Component(dim=0, normal_weight=1, det_weight=1, sign=1),),
    )
    with pytest.raises(InvalidDataError):
        multiplicity_isolated(data, 0)


def test_multiplicity_isolated_requires_polarization():
    data = FixedPointData(
        half_dimension=1,
        isolated=(IsolatedFixedPoint(weights=(-1,), det_weight=1, sign=1),),
    )
    with pytest.raises(NotPolarizedError):
        multiplicity_isolated(data, 0)


def test_pbar_examples():
    point = Codim2Component(dim=0, normal_weight=1, det_weight=1, sign=1)
    assert pbar(point, 1) == 2
    assert pbar(point, 7) == 2
    flat = Codim2Component(dim=2, normal_weight=1, det_weight=1, sign=1, chern_l=2, chern_n=0)
    assert pbar(flat, 1) == 2
    steep = Codim2Component(dim=2, normal_weight=1, det_weight=1, sign=1, chern_l=0, chern_n=2)
    assert pbar(steep, 3) == -8


def test_pbar_paper_signs_negates():
    comp = Codim2Component(dim=2, normal_weight=1, det_weight=1, sign=1, chern_l=0, chern_n=2)
    assert pbar(comp, 3, paper_signs=True) == 8


def test_pbar_rejects_bad_step_and_unpolarized_component():
    comp = Codim2Component(dim=0, normal_weight=1, det_weight=1, sign=1)
    with pytest.raises(ValueError):
        pbar(comp, 2)
    with pytest.raises(ValueError):
        pbar(comp, -1)
    with pytest.raises(NotPolarizedError):
        pbar(Codim2Component(dim=0, normal_weight=-1, det_weight=1, sign=1), 1)


def test_multiplicity_sphere_example():
    assert multiplicity(sphere_data(1, 2), 2) == 1


def test_multiplicity_dim0_component_example():
    data = FixedPointData(
        half_dimension=1,
        codim2=(Codim2Component(dim=0, normal_weight=1, det_weight=1, sign=1),),
    )
    assert multiplicity(data, 0) == 1
    assert multiplicity(data, 1) == 0


def test_dim0_component_matches_isolated_point():
    rng = random.Random(5)
    for _ in range(30):
        a = rng.randint(1, 4)
        mu = rng.choice([v for v in range(-9, 10) if (v - a) % 2 == 0])
        sign = rng.choice([1, -1])
        as_comp = FixedPointData(
            half_dimension=1,
            codim2=(Codim2Component(dim=0, normal_weight=a, det_weight=mu, sign=sign),),
        )
        as_point = FixedPointData(
            half_dimension=1,
            isolated=(IsolatedFixedPoint(weights=(a,), det_weight=mu, sign=sign),),
        )
        for beta in range(-12, 13):
            assert multiplicity(as_comp, beta) == multiplicity_isolated(as_point, beta)
        assert component_term(as_comp.codim2[0]) == component_term(as_point.isolated[0])


def test_character_rational_examples():
    assert character_rational(sphere_data(0, 1)) == VirtualCharacter({1: 1})
    assert character_rational(sphere_data(0, 0)) == VirtualCharacter.zero()
    assert character_rational(FixedPointData(half_dimension=1)) == VirtualCharacter.zero()


def test_character_rational_rejects_unrealizable_data():
    data = FixedPointData(
        half_dimension=1,
        isolated=(IsolatedFixedPoint(weights=(1,), det_weight=1, sign=1),),
    )
    with pytest.raises(NotDivisibleError):
        character_rational(data)


def test_character_series_examples():
    assert character_series(sphere_data(1, 2), (-5, 5)) == {2: 1, 3: 1}
    assert character_series(sphere_data(1, -1), (-5, 5)) == {1: -1}
    assert character_series(FixedPointData(half_dimension=1), (-5, 5)) == {}


def test_character_series_requires_polarization_and_sane_window():
    data = FixedPointData(
        half_dimension=1,
        isolated=(IsolatedFixedPoint(weights=(-1,), det_weight=1, sign=1),),
    )
    with pytest.raises(NotPolarizedError):
        character_series(data, (-5, 5))
    with pytest.raises(ValueError):
        character_series(sphere_data(0, 1), (5, -5))


def test_geometric_simplification_identity():
    # (q^-a - q^a) / ((1 - q^2a)(1 - q^-2a)) equals 1 / (q^a - q^-a)
    for a in range(1, 9):
        lhs = RationalChar(
            LaurentPoly.monomial(-a) - LaurentPoly.monomial(a),
            (LaurentPoly.one() - LaurentPoly.monomial(2 * a))
            * (LaurentPoly.one() - LaurentPoly.monomial(-2 * a)),
        )
        rhs = RationalChar(
            LaurentPoly.one(),
            LaurentPoly.monomial(a) - LaurentPoly.monomial(-a),
        )
        assert lhs == rhs


def test_counting_matches_series_oracle():
    rng = random.Random(7)
    for _ in range(30):
        data = random_polarized_dataset(rng)
        mus = [p.det_weight for p in data.isolated] + [c.det_weight for c in data.codim2]
        half = max(abs(mu) for mu in mus) // 2 + 20
        window = (-half, half)
        try:
            series = character_series(data, window)
        except NonIntegerMultiplicityError:
            # odd surface data can leak halves; counting must agree it does
            with pytest.raises(NonIntegerMultiplicityError):
                for beta in range(window[0], window[1] + 1):
                    multiplicity(data, beta)
            continue
        for beta in range(window[0], window[1] + 1):
            assert multiplicity(data, beta) == series.get(beta, 0)


def test_rational_matches_counting_on_realizable_data():
    rng = random.Random(9)
    for _ in range(30):
        data = realizable_dataset(rng)
        char = character_rational(data)
        support = char.support()
        lo = (support[0] if support else 0) - 10
        hi = (support[-1] if support else 0) + 10
        for beta in range(lo, hi + 1):
            assert multiplicity(data, beta) == char.multiplicity(beta)


def test_rational_character_is_polarization_invariant():
    rng = random.Random(13)
    for _ in range(30):
        data = realizable_dataset(rng)
        variant = mixed_sign_variant(rng, data)
        assert character_rational(variant) == character_rational(data)
        assert character_rational(polarize(variant)) == character_rational(data)


def test_half_multiplicity_is_flagged_everywhere():
    # an odd chern_l makes the lone surface contribute genuine halves
    data = FixedPointData(
        half_dimension=2,
        codim2=(
            Codim2Component(dim=2, normal_weight=1, det_weight=1, sign=1, chern_l=1, chern_n=0),
        ),
    )
    with pytest.raises(NonIntegerMultiplicityError):
        multiplicity(data, 0)
    with pytest.raises(NonIntegerMultiplicityError):
        character_series(data, (-5, 5))
    with pytest.raises(NotDivisibleError):
        character_rational(data)


def test_paper_signs_negates_pure_codim2_character():
    data = FixedPointData(
        half_dimension=1,
        codim2=(
            Codim2Component(dim=0, normal_weight=1, det_weight=5, sign=1),
            Codim2Component(dim=0, normal_weight=1, det_weight=1, sign=-1),
        ),
    )
    assert character_rational(data) == VirtualCharacter({1: 1, 2: 1})
    assert character_rational(data, paper_signs=True) == VirtualCharacter({1: -1, 2: -1})
    for beta in range(-5, 6):
        assert multiplicity(data, beta, paper_signs=True) == -multiplicity(data, beta)
    assert character_series(data, (-5, 5), paper_signs=True) == {1: -1, 2: -1}


def test_paper_signs_consistent_across_paths():
    rng = random.Random(17)
    for _ in range(15):
        data = realizable_dataset(rng, m=2)
        if not data.codim2:
            continue
        char = character_rational(data, paper_signs=True)
        series = character_series(data, (-30, 30), paper_signs=True)
        for beta in range(-30, 31):
            expected = series.get(beta, 0)
            assert multiplicity(data, beta, paper_signs=True) == expected
            assert char.multiplicity(beta) == expected
