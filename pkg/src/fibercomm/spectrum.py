r"""Pseudo-Anosov invariants: singularity data and the length spectrum.

Two exact obstructions for pseudo-Anosov maps are computed here.

* The singularity vector Delta records how many n-pronged singular
  points the invariant foliations have (n >= 3; regular 2-pronged
  points are not singular).  Commensurable maps have log-proportional
  stretch factors and proportional singularity vectors, which
  ``pa_obstruction`` tests with two independent rational scalars.

* For branched-cover models over a linear Anosov torus map, the
  spectrum of stable-times-unstable measures of arcs between marked
  points is enumerable in exact arithmetic: a straight arc in the
  homotopy class of the translate v has measure product
  |mu_u(v) * mu_s(v)|, a rational multiple of 1/sqrt(disc) once the
  product measure is normalized to unit mass on the torus.  Values are
  reported as a certified subset of the spectrum (classes winding
  around branch points are not enumerated), so the minimum is an upper
  bound for the true spectral minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .decomposition import DilatationLabel
from .quadratic import QuadraticNumber, squarefree_part, unit_log_ratio
from .surfaces import Surface


@dataclass(frozen=True)
class SingularityVector:
    """Counts of n-pronged singularities, n >= 3."""

    counts: tuple  # ((prongs, count), ...)

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(sorted((int(n), int(c)) for n, c in self.counts)))
        for n, c in self.counts:
            if n < 3 or c < 1:
                raise ValueError("bad singularity entry (%d prongs, count %d)" % (n, c))

    @property
    def as_dict(self):
        return dict(self.counts)

    def euler_poincare_total(self):
        """Sum of (2 - n) * count; equals 2 chi(F) on a closed surface
        whose foliations have exactly these singularities."""
        return sum((2 - n) * c for n, c in self.counts)


@dataclass(frozen=True)
class BranchData:
    """A branched cover of the torus: degree and local-degree partitions."""

    degree: int
    branch_points: tuple  # one partition of the degree per branch point
    matrix: tuple = None  # optional Anosov matrix of the base

    def __post_init__(self):
        object.__setattr__(self, "branch_points", tuple(tuple(p) for p in self.branch_points))
        for p in self.branch_points:
            if sum(p) != self.degree or any(m < 1 for m in p):
                raise ValueError("%r is not a partition of %d" % (p, self.degree))


def delta_from_branch_data(b):
    """Covering surface and singularity vector of a torus branched cover.

    chi drops by (m - 1) for each local degree m; a point of local
    degree m >= 2 becomes a 2m-pronged singularity of the lifted
    foliations.  The result always satisfies the Euler identity
    sum (2 - n) delta_n = 2 chi.
    """
    chi = -sum(m - 1 for p in b.branch_points for m in p)
    if chi % 2 != 0:
        raise ValueError("branch data gives odd chi %d" % chi)
    surface = Surface((2 - chi) // 2, 0)
    counts = {}
    for p in b.branch_points:
        for m in p:
            if m >= 2:
                counts[2 * m] = counts.get(2 * m, 0) + 1
    delta = SingularityVector(tuple(counts.items()))
    assert delta.euler_poincare_total() == 2 * chi
    return surface, delta


@dataclass(frozen=True)
class PAVerdict:
    ok: bool
    s: Fraction = None        # log-stretch-factor ratio
    s_prime: Fraction = None  # singularity-vector ratio
    witness: str = None


def pa_obstruction(lam1, delta1, lam2, delta2):
    """Scaling test on stretch factors and singularity vectors.

    Passes iff log(lam1) = s log(lam2) for rational s > 0 and
    delta1 = s' delta2 componentwise for rational s' > 0 (equal prong
    supports).  Either failure is a definitive obstruction.
    """
    if lam1 is None or lam2 is None:
        if (lam1 is None) != (lam2 is None):
            return PAVerdict(False, witness="one map has no stretch factor")
        s = None
    elif lam1.exact != lam2.exact:
        return PAVerdict(False, witness="exact vs symbolic stretch factors")
    elif lam1.exact:
        s = unit_log_ratio(lam1.unit, lam2.unit)
        if s is None:
            return PAVerdict(False, witness="log stretch factors are incommensurable")
    else:
        if lam1.name != lam2.name:
            return PAVerdict(False, witness="distinct symbolic stretch factors")
        s = lam1.exponent / lam2.exponent

    d1, d2 = delta1.as_dict, delta2.as_dict
    if set(d1) != set(d2):
        return PAVerdict(False, witness="prong supports differ: %r vs %r" % (sorted(d1), sorted(d2)))
    s_prime = None
    for n in sorted(d1):
        r = Fraction(d1[n], d2[n])
        if s_prime is None:
            s_prime = r
        elif r != s_prime:
            return PAVerdict(
                False, witness="no single ratio: delta_%d gives %s, expected %s" % (n, r, s_prime)
            )
    return PAVerdict(True, s=s, s_prime=s_prime)


# ---------------------------------------------------------------------------
# spectrum of an Anosov torus model

@dataclass(frozen=True)
class SpectrumQuery:
    matrix: tuple
    origin: tuple   # marked point O, rational coordinates
    point: tuple    # marked point P
    radius: int

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "origin", tuple(Fraction(x) for x in self.origin))
        object.__setattr__(self, "point", tuple(Fraction(x) for x in self.point))
        if self.radius < 1:
            raise ValueError("radius must be >= 1")
        a, b = m[0]
        c, d = m[1]
        det = a * d - b * c
        if det not in (1, -1):
            raise ValueError("matrix determinant must be +-1")
        t = a + d
        if (det == 1 and abs(t) <= 2) or (det == -1 and t == 0):
            raise ValueError("matrix is not Anosov")


def _measure_form(matrix):
    """(f, D, m, |c|) with mu_u(v) mu_s(v) = |f(v)| / (m |c| sqrt(D)).

    f is the rational quadratic form obtained by multiplying the two
    left-eigenvector pairings; the denominator normalizes the product
    measure to unit mass on the torus (its raw mass is |c| sqrt(disc)).
    """
    a, b = matrix[0]
    c, d = matrix[1]
    det = a * d - b * c
    t = a + d
    disc = t * t - 4 * det
    D = squarefree_part(disc)
    m = 1
    while m * m * D < disc:
        m += 1

    def f(v):
        return c * c * v[0] * v[0] + c * (t - 2 * a) * v[0] * v[1] + (a * a - a * t + det) * v[1] * v[1]

    return f, D, m, abs(c)


def _translates(q):
    """All candidate straight-arc classes within the radius box."""
    offset = (q.point[0] - q.origin[0], q.point[1] - q.origin[1])
    R = q.radius
    for base in ((Fraction(0), Fraction(0)), offset):
        for i in range(-R, R + 1):
            for j in range(-R, R + 1):
                v = (base[0] + i, base[1] + j)
                if v != (0, 0):
                    yield v


def spectrum_values(q):
    """Sorted exact values of the enumerated spectrum subset.

    Enumerates straight arcs between the marked points (self-pairings
    and O-to-P translates) with coordinates in the radius box; values
    are exact quadratic numbers, deduplicated and strictly positive
    unless a translate lies on an eigenline (impossible for rational
    translates of an Anosov matrix, so zero never occurs).
    """
    f, D, m, abs_c = _measure_form(q.matrix)
    values = set()
    for v in _translates(q):
        val = abs(f(v))
        values.add(QuadraticNumber(D, 0, Fraction(val) / (m * abs_c * D)))
    return sorted(values)


@dataclass(frozen=True)
class SpectrumMin:
    value: QuadraticNumber
    translate: tuple


def spectrum_min(q):
    """Minimum enumerated value with an achieving translate.

    An upper bound for the true spectral minimum; monotone
    non-increasing in the radius.
    """
    f, D, m, abs_c = _measure_form(q.matrix)
    best = None
    for v in _translates(q):
        val = abs(f(v))
        if best is None or val < best[0]:
            best = (val, v)
    if best is None:
        raise ValueError("no nonzero translate in the radius box")
    return SpectrumMin(QuadraticNumber(D, 0, Fraction(best[0]) / (m * abs_c * D)), best[1])
