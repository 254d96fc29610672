import random
from fractions import Fraction as F

import pytest

from conftest import random_reducible_map
from fibercomm.comparator import (
    COMBINED,
    FULL,
    INCOMMENSURABLE,
    NOT_OBSTRUCTED,
    TOPOLOGICAL,
    InvariantReport,
    compare,
    match_flip_scale,
)
from fibercomm.decomposition import negate_twists, power
from fibercomm.families import d_type_family, twist_composition


def test_power_scaling_feasible_set():
    phi = d_type_family(2, 2)
    x = InvariantReport.of(phi)
    y = InvariantReport.of(power(phi, 2))
    assert match_flip_scale(x, y) == {F(1, 2)}


def test_flip_branch():
    phi = d_type_family(3, 2)
    x = InvariantReport.of(phi)
    y = InvariantReport.of(negate_twists(phi))
    assert F(1) in match_flip_scale(x, y)


def test_pi_obstruction_with_equal_a():
    # both maps have A = (1, 1) but incompatible Pi sets
    from fibercomm.decomposition import Piece, ReducibleMap, ReducingCurve
    from fibercomm.surfaces import Surface

    def graph(middle, free):
        return ReducibleMap(
            (
                Piece("p1", Surface(1, 1), ("a1",)),
                Piece("p2", middle, ("b1", "b2"), free),
                Piece("p3", Surface(1, 1), ("c1",)),
            ),
            (
                ReducingCurve("u", ("p1", "a1"), ("p2", "b1"), F(1)),
                ReducingCurve("v", ("p2", "b2"), ("p3", "c1"), F(-1)),
            ),
        )

    phi1 = graph(Surface(1, 2), 0)
    phi2 = graph(Surface(1, 4), 2)
    x, y = InvariantReport.of(phi1), InvariantReport.of(phi2)
    assert x.a == y.a == (F(1), F(1))
    assert match_flip_scale(x, y) == set()
    assert compare(phi1, phi2, FULL).kind == INCOMMENSURABLE


def test_compare_never_obstructs_powers():
    rng = random.Random(23)
    for _ in range(100):
        phi = random_reducible_map(rng)
        for k in (2, 3, 5):
            assert compare(phi, power(phi, k), FULL).kind == NOT_OBSTRUCTED


def test_compare_d_family():
    for n in range(1, 5):
        for m in range(1, 5):
            assert compare(d_type_family(n, 2), d_type_family(m, 2), FULL).kind == NOT_OBSTRUCTED
            assert compare(d_type_family(n, 2), d_type_family(m, 3), FULL).kind == INCOMMENSURABLE


def test_topological_mode():
    phi = d_type_family(2, 2)
    assert compare(phi, d_type_family(5, 2), TOPOLOGICAL).kind == NOT_OBSTRUCTED
    assert compare(phi, negate_twists(phi), TOPOLOGICAL).kind == NOT_OBSTRUCTED
    # powers change the normalized invariants, so the covers-only test obstructs
    assert compare(phi, power(phi, 2), TOPOLOGICAL).kind == INCOMMENSURABLE


def test_combined_mode_twist_composition():
    for k1 in range(1, 7):
        for k2 in range(1, 7):
            v = compare(twist_composition(k1), twist_composition(k2), COMBINED)
            if k1 == k2:
                assert v.kind == NOT_OBSTRUCTED and v.feasible == {F(1)}
            else:
                assert v.kind == INCOMMENSURABLE


def test_combined_mode_symbol_mismatch():
    a = twist_composition(2, name="lam")
    b = twist_composition(2, name="mu")
    assert compare(a, b, COMBINED).kind == INCOMMENSURABLE


def test_unknown_mode():
    phi = d_type_family(1, 2)
    with pytest.raises(ValueError):
        compare(phi, phi, "bogus")


def test_compare_is_symmetric_on_verdicts():
    rng = random.Random(29)
    for _ in range(50):
        phi = random_reducible_map(rng)
        psi = random_reducible_map(rng)
        v1 = compare(phi, psi, FULL)
        v2 = compare(psi, phi, FULL)
        assert v1.incommensurable == v2.incommensurable
        if not v1.incommensurable:
            assert {1 / s for s in v1.feasible} == set(v2.feasible)
