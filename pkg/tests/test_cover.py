import random
from fractions import Fraction as F

import pytest

from conftest import random_reducible_map
from fibercomm.comparator import FULL, InvariantReport, compare, match_flip_scale
from fibercomm.cover import (
    ComponentCover,
    CoveringData,
    lift_cover,
    normalize_unit_twists,
    verify_cover_laws,
)
from fibercomm.decomposition import (
    Piece,
    ReducibleMap,
    ReducingCurve,
    a_total,
    pi_invariant,
    validate,
)
from fibercomm.families import d_type_family
from fibercomm.surfaces import Surface


def two_piece_map(twist):
    return ReducibleMap(
        (Piece("a", Surface(1, 1), ("s",)), Piece("b", Surface(1, 1), ("t",))),
        (ReducingCurve("c", ("a", "s"), ("b", "t"), twist),),
    )


def connected_double_cover(phi):
    """Degree-2 cover, connected over each piece, or None when the
    boundary parity admits no such cover with single-circle slots."""
    comps = []
    for p in phi.pieces:
        frees = [(1, 1)] * p.free_boundary
        if len(p.slots) % 2 == 1:
            if p.free_boundary == 0:
                return None
            frees[0] = (2,)
        comps.append(
            (p.id, (ComponentCover(2, tuple((s, (2,)) for s in p.slots), tuple(frees)),))
        )
    return CoveringData(tuple(comps))


def test_single_preimage_halves_twist():
    phi = ReducibleMap(
        (
            Piece("a", Surface(1, 2), ("s1", "s2")),
            Piece("b", Surface(1, 2), ("t1", "t2")),
        ),
        (
            ReducingCurve("c1", ("a", "s1"), ("b", "t1"), F(2)),
            ReducingCurve("c2", ("a", "s2"), ("b", "t2"), F(2)),
        ),
    )
    lifted = lift_cover(phi, connected_double_cover(phi))
    assert [c.twist for c in lifted.curves] == [F(1), F(1)]
    assert validate(lifted) == []
    # chi multiplies on each piece
    for p in phi.pieces:
        assert lifted.piece(p.id + "~0").surface.chi == 2 * p.surface.chi


def test_trivial_local_degrees_copy_curves():
    phi = two_piece_map(F(1))
    c = CoveringData(
        tuple((p.id, (ComponentCover(3, tuple((s, (1, 1, 1)) for s in p.slots)),)) for p in phi.pieces)
    )
    lifted = lift_cover(phi, c)
    assert len(lifted.curves) == 3
    assert all(curve.twist == F(1) for curve in lifted.curves)


def test_cyclic_cover_of_star_base_gives_star_family():
    """Degree-n cover of the one-leaf star reproduces the n-leaf star."""
    for n in (2, 3, 4):
        for k in (2, 3):
            base = d_type_family(1, k)
            c = CoveringData(
                (
                    ("hub", (ComponentCover(n, (("h0", (1,) * n),)),)),
                    ("leaf0", tuple(ComponentCover(1, (("s", (1,)),)) for _ in range(n))),
                )
            )
            lifted = lift_cover(base, c)
            target = d_type_family(n, k)
            assert sorted(p.surface for p in lifted.pieces) == sorted(
                p.surface for p in target.pieces
            )
            assert a_total(lifted) == a_total(target)
            assert pi_invariant(lifted) == pi_invariant(target)


def test_verify_cover_laws_pass():
    rng = random.Random(31)
    tested = 0
    while tested < 50:
        phi = random_reducible_map(rng, max_part=6)
        c = connected_double_cover(phi)
        if c is None:
            continue
        checks = verify_cover_laws(phi, c)
        assert checks and all(ch.ok for ch in checks)
        tested += 1


def test_identity_cover_is_trivial():
    phi = d_type_family(2, 2)
    c = CoveringData(
        tuple((p.id, (ComponentCover(1, tuple((s, (1,)) for s in p.slots)),)) for p in phi.pieces)
    )
    lifted = lift_cover(phi, c)
    assert a_total(lifted) == a_total(phi)
    assert pi_invariant(lifted) == pi_invariant(phi)
    assert all(ch.ok for ch in verify_cover_laws(phi, c))


def test_corrupted_partition_rejected():
    phi = two_piece_map(F(2))
    bad = CoveringData(
        (
            ("a", (ComponentCover(2, (("s", (2,)),)),)),
            ("b", (ComponentCover(2, (("t", (1, 2)),)),)),  # sums to 3, not 2
        )
    )
    with pytest.raises(ValueError, match="not a partition"):
        lift_cover(phi, bad)
    mismatched = CoveringData(
        (
            ("a", (ComponentCover(2, (("s", (2,)),)),)),
            ("b", (ComponentCover(2, (("t", (1, 1)),)),)),
        )
    )
    with pytest.raises(ValueError, match="local degrees"):
        lift_cover(phi, mismatched)


def test_inadmissible_genus_reported():
    # connected double cover of Sigma_{1,1} with a single boundary
    # circle wants chi = -2 and b = 1, i.e. 2g = 3: no surface
    phi = two_piece_map(F(1))
    impossible = CoveringData(
        (
            ("a", (ComponentCover(2, (("s", (2,)),)),)),
            ("b", (ComponentCover(2, (("t", (2,)),)),)),
        )
    )
    with pytest.raises(ValueError, match="no surface"):
        lift_cover(phi, impossible)


def test_normalize_examples():
    # twists 2 and -3: no power needed, cover degrees 2 and 3
    phi = ReducibleMap(
        (
            Piece("a", Surface(1, 2), ("s1", "s2")),
            Piece("b", Surface(1, 2), ("t1", "t2")),
        ),
        (
            ReducingCurve("c1", ("a", "s1"), ("b", "t1"), F(2)),
            ReducingCurve("c2", ("a", "s2"), ("b", "t2"), F(-3)),
        ),
    )
    out, cert = normalize_unit_twists(phi)
    assert cert.power == 1
    # lcm of the integer twists is 6; the genus parity check doubles
    # the cover degree to 12, so the curve over twist 2 has six unit
    # preimages and the one over twist -3 has four
    assert sorted(c.twist for c in out.curves) == [F(-1)] * 4 + [F(1)] * 6
    assert compare(phi, out, FULL).kind == "not_obstructed"

    # twist 3/2: power 2 then degree 3
    phi = two_piece_map(F(3, 2))
    out, cert = normalize_unit_twists(phi)
    assert cert.power == 2
    assert all(c.twist == F(1) for c in out.curves)

    # already unit twists: identity certificate
    phi = two_piece_map(F(-1))
    out, cert = normalize_unit_twists(phi)
    assert cert.power == 1
    assert [c.twist for c in out.curves] == [F(-1)]


def test_normalize_rejects_pseudo_anosov_pieces():
    from fibercomm.decomposition import DilatationLabel

    phi = ReducibleMap(
        (
            Piece("a", Surface(1, 1), ("s",), dilatation=DilatationLabel(name="lam")),
            Piece("b", Surface(1, 1), ("t",)),
        ),
        (ReducingCurve("c", ("a", "s"), ("b", "t"), F(1)),),
    )
    with pytest.raises(ValueError, match="periodic"):
        normalize_unit_twists(phi)


def test_normalize_random_property():
    rng = random.Random(37)
    for _ in range(100):
        phi = random_reducible_map(rng, max_part=6)
        out, cert = normalize_unit_twists(phi)
        assert all(abs(c.twist) == 1 for c in out.curves)
        assert validate(out) == []
        verdict = compare(phi, out, FULL)
        assert verdict.kind == "not_obstructed"
        assert F(1, cert.power) in verdict.feasible


def test_cover_feasibility_includes_one():
    rng = random.Random(41)
    tested = 0
    while tested < 50:
        phi = random_reducible_map(rng, max_part=6)
        c = connected_double_cover(phi)
        if c is None:
            continue
        lifted = lift_cover(phi, c)
        x, y = InvariantReport.of(phi), InvariantReport.of(lifted)
        assert F(1) in match_flip_scale(x, y)
        assert pi_invariant(lifted) == pi_invariant(phi)
        tested += 1
