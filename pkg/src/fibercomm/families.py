"""Builders for the recurring example families.

These construct the decomposition graphs and graph manifolds used by
the corpus and the test suites:

* ``d_type_family(n, k)`` -- the star-shaped D-type maps: a central
  genus-1 piece with n junction circles, each joined by a +1 twist to
  its own genus-k one-holed piece;
* ``twist_composition(k, r)`` -- a pseudo-Anosov piece with symbolic
  stretch factor and boundary rotation r, composed with k boundary
  twists (fractional twist k - r at the junction);
* the two refibration testbeds: a bounded three-piece chain and a
  closed three-piece chain with doubled junction tori, together with
  their plan families;
* ``solve_staircase_base`` -- the reconstruction helper inverting the
  staircase genus/boundary formulas, used to pin down piece topologies
  from published cover data.
"""

from __future__ import annotations

from fractions import Fraction

from .decomposition import DilatationLabel, Piece, ReducibleMap, ReducingCurve
from .staircase import BundlePiece, FiberedGraphManifold, Gluing, PiecePlan, RefiberPlan
from .surfaces import Surface


def d_type_family(n, k):
    """Central Sigma_{1,n} joined to n copies of Sigma_{k,1}, all twists +1.

    Normalized piece invariants (1, 0) and (1/(2k-1), 0), independent
    of n.
    """
    if n < 1 or k < 1:
        raise ValueError("need n, k >= 1")
    pieces = [Piece("hub", Surface(1, n), tuple("h%d" % i for i in range(n)))]
    curves = []
    for i in range(n):
        pieces.append(Piece("leaf%d" % i, Surface(k, 1), ("s",)))
        curves.append(ReducingCurve("c%d" % i, ("hub", "h%d" % i), ("leaf%d" % i, "s"), Fraction(1)))
    return ReducibleMap(tuple(pieces), tuple(curves))


def twist_composition(k, r=Fraction(1, 3), name="lam"):
    """A pseudo-Anosov one-holed piece with boundary rotation r, glued
    to a periodic one-holed piece across a circle twisted k times.

    The fractional twist at the junction is k - r (the integer twists
    composed with the rotation of the pseudo-Anosov side); the single
    normalized invariant is (1/(k - r), 0).
    """
    r = Fraction(r)
    if k - r <= 0:
        raise ValueError("k - r must be positive")
    label = DilatationLabel(name=name, rotation=r)
    pieces = (
        Piece("pa", Surface(1, 1), ("s",), dilatation=label),
        Piece("cap", Surface(1, 1), ("s",)),
    )
    curves = (ReducingCurve("c", ("pa", "s"), ("cap", "s"), k - r),)
    return ReducibleMap(pieces, curves)


# ---------------------------------------------------------------------------
# refibration testbeds

def _shear_gluing(gid, side_a, side_b, sigma):
    return Gluing(gid, side_a, side_b, ((-1, sigma), (0, 1)))


def bounded_chain_manifold():
    """Three circle-bundle pieces in a chain, one junction torus each.

    Sigma_{1,1} -- Sigma_{1,3} -- Sigma_{1,2}, both gluings of shear
    -1, so the all-n=1 fibration has junction twists +1 and the fiber
    keeps two boundary circles (one free torus on each of the last two
    pieces).
    """
    pieces = (
        BundlePiece("S1", Surface(1, 1), ("f",)),
        BundlePiece("S2", Surface(1, 3), ("f", "g", "e2")),
        BundlePiece("S3", Surface(1, 2), ("g", "e3")),
    )
    gluings = (
        _shear_gluing("f", ("S1", "f"), ("S2", "f"), -1),
        _shear_gluing("g", ("S2", "g"), ("S3", "g"), -1),
    )
    return FiberedGraphManifold(pieces, gluings)


def bounded_chain_plan(n):
    """The staircase plan family of the bounded chain.

    The middle piece runs an arc from its free boundary to the g
    junction with n sheets, the last piece continues the arc from g to
    its free boundary with n + 1 sheets, and the first piece lifts to n
    horizontal copies.
    """
    if n < 1:
        raise ValueError("n >= 1")
    return RefiberPlan(
        (
            ("S1", PiecePlan(n)),
            ("S2", PiecePlan(n, (("e2", "g"),))),
            ("S3", PiecePlan(n + 1, (("g", "e3"),))),
        )
    )


def closed_chain_manifold():
    """Three pieces chained by doubled junction tori, closed fiber.

    Sigma_{3,2} -- Sigma_{1,4} -- Sigma_{1,2} with gluing shears
    (2, -2) across the first junction pair and (-1, 1) across the
    second, so the twists of any refibration come in opposite-sign
    pairs and every piece invariant is flip-symmetric.
    """
    pieces = (
        BundlePiece("S1", Surface(3, 2), ("f1", "f2")),
        BundlePiece("S2", Surface(1, 4), ("f1", "f2", "g1", "g2")),
        BundlePiece("S3", Surface(1, 2), ("g1", "g2")),
    )
    gluings = (
        _shear_gluing("f1", ("S1", "f1"), ("S2", "f1"), 2),
        _shear_gluing("f2", ("S1", "f2"), ("S2", "f2"), -2),
        _shear_gluing("g1", ("S2", "g1"), ("S3", "g1"), -1),
        _shear_gluing("g2", ("S2", "g2"), ("S3", "g2"), 1),
    )
    return FiberedGraphManifold(pieces, gluings)


def closed_chain_plan(n):
    """The n-indexed plan family of the closed chain.

    Arcs cross every piece: the outer pieces each carry one arc between
    their two junction circles, the middle piece carries two arcs using
    all four; sheet counts (n+2, n, n+1).
    """
    if n < 1:
        raise ValueError("n >= 1")
    return RefiberPlan(
        (
            ("S1", PiecePlan(n + 2, (("f2", "f1"),))),
            ("S2", PiecePlan(n, (("f1", "g1"), ("g2", "f2")))),
            ("S3", PiecePlan(n + 1, (("g1", "g2"),))),
        )
    )


def closed_chain_alternate_plan():
    """A second fibration of the closed chain with sheet counts (3, 3, 4).

    The first piece lifts to three horizontal copies, the middle piece
    runs a single arc between its second-junction circles only, so the
    first-junction boundaries stay horizontal.
    """
    return RefiberPlan(
        (
            ("S1", PiecePlan(3)),
            ("S2", PiecePlan(3, (("g2", "g1"),))),
            ("S3", PiecePlan(4, (("g1", "g2"),))),
        )
    )


# ---------------------------------------------------------------------------
# reconstruction tooling

def solve_staircase_base(genus, boundary, n, max_genus=10, max_boundary=10):
    """All (base surface, arc count) whose n-sheet staircase has the
    given genus and boundary count.

    Inverts genus' = 1 - k + n(k - 1 + g), boundary' = n(b - 2k) + 2k
    over small (g, b, k); used to reconstruct piece topologies from
    published cover genera.
    """
    solutions = []
    for g in range(max_genus + 1):
        for b in range(max_boundary + 1):
            for k in range(b // 2 + 1):
                if 2 - 2 * g - b >= 0:
                    continue
                if 1 - k + n * (k - 1 + g) == genus and n * (b - 2 * k) + 2 * k == boundary:
                    solutions.append((Surface(g, b), k))
    return solutions
