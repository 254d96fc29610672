r"""Decomposition graphs of reducible surface automorphisms.

A reducible automorphism in standard form is recorded combinatorially:

* pieces -- the components S of the surface cut along the reducing
  system, each with its topological type, an ordered list of *slots*
  (the boundary circles facing a reducing curve), a count of free
  boundary circles (those on the boundary of the ambient surface), and
  a kind: periodic, or pseudo-Anosov with a stretch-factor label;

* curves -- the reducing curves, each joining two slots (possibly of
  the same piece) and carrying its fractional twist I, the Dehn-twist
  power of a boundary-fixing power of the map divided by that power.

From this data the twist invariants are computed exactly:

* ``a_piece(phi, S)`` -- the pair of reciprocal-twist sums over the
  slots of S, split by twist sign;
* ``a_total(phi)``    -- half the sum over pieces (each curve meets two
  slots), equal to the direct sum over curves;
* ``pi_invariant``    -- the set of per-piece pairs normalized by
  -chi(S);
* ``p_polynomial``    -- the chi-weighted generating polynomial that
  packages both.

Twist zero is rejected: a curve with trivial fractional twist between
periodic sides is not part of a minimal reducing system.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .quadratic import QuadraticUnit
from .surfaces import Surface


# ---------------------------------------------------------------------------
# dilatation labels

@dataclass(frozen=True)
class DilatationLabel:
    """Stretch factor of a pseudo-Anosov piece.

    Either exact (a QuadraticUnit) or symbolic (a name with a rational
    exponent, so powers of the map stay expressible; symbolic labels
    with equal names denote equal dilatations).  ``rotation`` is the
    fractional boundary rotation of the piece map, when known.
    """

    unit: QuadraticUnit = None
    name: str = None
    exponent: Fraction = Fraction(1)
    rotation: Fraction = None

    def __post_init__(self):
        if (self.unit is None) == (self.name is None):
            raise ValueError("label must be exactly one of exact / symbolic")
        object.__setattr__(self, "exponent", Fraction(self.exponent))

    @property
    def exact(self):
        return self.unit is not None

    def power(self, k):
        if self.exact:
            return replace(self, unit=self.unit ** k)
        return replace(self, exponent=self.exponent * k)


# ---------------------------------------------------------------------------
# graph data

@dataclass(frozen=True)
class Piece:
    id: str
    surface: Surface
    slots: tuple
    free_boundary: int = 0
    dilatation: DilatationLabel = None  # None = periodic piece

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(self.slots))

    @property
    def periodic(self):
        return self.dilatation is None


@dataclass(frozen=True)
class ReducingCurve:
    id: str
    end_a: tuple  # (piece id, slot)
    end_b: tuple
    twist: Fraction

    def __post_init__(self):
        object.__setattr__(self, "end_a", tuple(self.end_a))
        object.__setattr__(self, "end_b", tuple(self.end_b))
        object.__setattr__(self, "twist", Fraction(self.twist))

    @property
    def ends(self):
        return (self.end_a, self.end_b)


@dataclass(frozen=True)
class ReducibleMap:
    """A reducible automorphism as a decorated decomposition graph."""

    pieces: tuple
    curves: tuple
    piece_orbits: tuple = ()  # optional partition metadata
    curve_orbits: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "piece_orbits", tuple(tuple(o) for o in self.piece_orbits))
        object.__setattr__(self, "curve_orbits", tuple(tuple(o) for o in self.curve_orbits))

    def _index(self):
        # lazy lookup tables; large lifted graphs make linear scans
        # quadratic in practice
        cached = getattr(self, "_cached_index", None)
        if cached is None:
            by_id = {p.id: p for p in self.pieces}
            by_end = {}
            for c in self.curves:
                for end in c.ends:
                    by_end.setdefault(end, c)
            cached = (by_id, by_end)
            object.__setattr__(self, "_cached_index", cached)
        return cached

    def piece(self, pid):
        return self._index()[0][pid]

    def curve_at(self, pid, slot):
        return self._index()[1][(pid, slot)]

    @property
    def chi(self):
        """Euler characteristic of the full surface (curves contribute 0)."""
        return sum(p.surface.chi for p in self.pieces)

    @property
    def dilatation_set(self):
        """Set of stretch-factor labels of the pseudo-Anosov pieces."""
        return frozenset(p.dilatation for p in self.pieces if not p.periodic)


def validate(phi):
    """Structural checks; returns a list of error strings (empty = ok)."""
    errors = []
    ids = [p.id for p in phi.pieces]
    if len(set(ids)) != len(ids):
        errors.append("duplicate piece ids")
    if not phi.curves:
        errors.append("reducing system is empty")

    slot_use = {}
    for p in phi.pieces:
        if p.surface.chi >= 0:
            errors.append("piece %s has chi = %d >= 0" % (p.id, p.surface.chi))
        if p.surface.boundary_components != len(p.slots) + p.free_boundary:
            errors.append(
                "piece %s: boundary count %d != slots %d + free %d"
                % (p.id, p.surface.boundary_components, len(p.slots), p.free_boundary)
            )
        for s in p.slots:
            slot_use[(p.id, s)] = 0

    by_id = {p.id: p for p in phi.pieces}
    for c in phi.curves:
        if c.twist == 0:
            errors.append("curve %s has zero twist" % c.id)
        for pid, slot in c.ends:
            if pid not in by_id:
                errors.append("curve %s references missing piece %s" % (c.id, pid))
            elif (pid, slot) not in slot_use:
                errors.append("curve %s references missing slot %s.%s" % (c.id, pid, slot))
            else:
                slot_use[(pid, slot)] += 1
    for (pid, slot), n in slot_use.items():
        if n != 1:
            errors.append("slot %s.%s used by %d curve ends (expected 1)" % (pid, slot, n))

    for orbit in phi.curve_orbits:
        twists = set()
        for cid in orbit:
            match = [c for c in phi.curves if c.id == cid]
            if not match:
                errors.append("curve orbit references missing curve %s" % cid)
            else:
                twists.add(match[0].twist)
        if len(twists) > 1:
            errors.append("curve orbit %r mixes twists %r" % (orbit, sorted(twists)))
    for orbit in phi.piece_orbits:
        kinds = set()
        surfaces = set()
        for pid in orbit:
            if pid not in by_id:
                errors.append("piece orbit references missing piece %s" % pid)
            else:
                kinds.add(by_id[pid].periodic)
                surfaces.add(by_id[pid].surface)
        if len(kinds) > 1 or len(surfaces) > 1:
            errors.append("piece orbit %r mixes piece types" % (orbit,))
    return errors


def validate_or_raise(phi):
    errors = validate(phi)
    if errors:
        raise ValueError("invalid decomposition graph: " + "; ".join(errors))


# ---------------------------------------------------------------------------
# invariants

def a_piece(phi, pid):
    """Reciprocal-twist pair of one piece.

    Sums 1/k over the slots whose incident twist k is positive into the
    first coordinate and 1/(-k) over negative twists into the second.  A
    curve with both ends on the piece contributes through both slots.
    """
    p = phi.piece(pid)
    pos = Fraction(0)
    neg = Fraction(0)
    for slot in p.slots:
        k = phi.curve_at(pid, slot).twist
        if k > 0:
            pos += 1 / k
        elif k < 0:
            neg += -1 / k
    return (pos, neg)


def a_total(phi):
    """Global pair invariant: half the sum of the per-piece pairs."""
    pos = Fraction(0)
    neg = Fraction(0)
    for p in phi.pieces:
        ap, an = a_piece(phi, p.id)
        pos += ap
        neg += an
    return (pos / 2, neg / 2)


def a_total_by_curves(phi):
    """Same invariant summed curve by curve (consistency oracle)."""
    pos = Fraction(0)
    neg = Fraction(0)
    for c in phi.curves:
        if c.twist > 0:
            pos += 1 / c.twist
        else:
            neg += -1 / c.twist
    return (pos, neg)


def normalized_a_piece(phi, pid):
    chi = phi.piece(pid).surface.chi
    ap, an = a_piece(phi, pid)
    return (ap / (-chi), an / (-chi))


def pi_invariant(phi):
    """The set of chi-normalized per-piece pairs."""
    return frozenset(normalized_a_piece(phi, p.id) for p in phi.pieces)


def p_polynomial(phi):
    """Chi-weighted polynomial encoding of the piece invariants.

    Maps each normalized pair (p, q) to the fraction of chi(F) carried
    by the pieces realizing it; the coefficients sum to 1, evaluation at
    (1, 1) recovers 2 A(phi) / -chi(F), and the support is Pi(phi).
    """
    chi_f = phi.chi
    coeffs = {}
    for p in phi.pieces:
        key = normalized_a_piece(phi, p.id)
        coeffs[key] = coeffs.get(key, Fraction(0)) + Fraction(p.surface.chi, chi_f)
    return {k: v for k, v in coeffs.items() if v != 0}


def p_polynomial_eval(coeffs, x, y):
    """Evaluate the polynomial pair at rational (x, y).

    Exponents are rational, so only evaluation points where x**p, y**q
    stay rational are supported; (1, 1) is the case of interest.
    """
    if (x, y) != (1, 1):
        raise NotImplementedError("rational-exponent evaluation only at (1, 1)")
    total = (Fraction(0), Fraction(0))
    for (p, q), lam in coeffs.items():
        total = (total[0] + p * lam, total[1] + q * lam)
    return total


def power(phi, k):
    """The decomposition graph of phi**k: twists and dilatations scale."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    pieces = tuple(
        p if p.periodic else replace(p, dilatation=p.dilatation.power(k))
        for p in phi.pieces
    )
    curves = tuple(replace(c, twist=c.twist * k) for c in phi.curves)
    return replace(phi, pieces=pieces, curves=curves)


def negate_twists(phi):
    """Orientation reversal at the invariant level: all twists flip sign."""
    return replace(phi, curves=tuple(replace(c, twist=-c.twist) for c in phi.curves))
