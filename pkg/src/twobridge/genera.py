"""Equivariant genera of marked strongly invertible 2-bridge knots.

A strong inversion h of a knot K is an involution of the 3-sphere that
preserves K and fixes an unknotted circle meeting K in two points; the
circle is cut by K into a short arc and a long arc, and a *marked* knot
(K, h, delta) remembers one of the two arcs.  The equivariant genus
g(K, h, delta) is the least genus of an h-invariant Seifert surface
meeting the fixed circle exactly in delta.

For the 2-bridge knot of canonical slope q/p with expansion
[2a_1, 2b_1, ..., 2a_n, 2b_n] the marked knots and their genera are
completely determined by the slope:

* torus slope (q = +-(p-1)): one inversion, two marked knots, both of
  equivariant genus n = g(K);
* generic slope (q^2 != 1 mod p): two inversions, one seen directly on
  the slope and one pulled back from the dual slope q'/p, four marked
  knots with genera

      short arc of h        : sum |a_i|
      long  arc of h        : n + #{i : |b_i| > 1}
      short arc of dual h   : sum |b_i|
      long  arc of dual h   : n + #{i : |a_i| > 1}

* palindromic slope (q^2 = 1 mod p, not torus): the dual inversion
  coincides with h, but an exceptional inversion appears whose two
  marked knots both have equivariant genus n; the h entries are as in
  the generic case.

Everything below is closed-form integer arithmetic on the expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .slopes import (
    EvenCF,
    Slope,
    canonicalize_slope,
    evaluate_cf,
    expand_even_cf,
    slope_predicates,
)


class MarkedClassError(ValueError):
    """A marked class that does not exist for the given slope."""


class InvariantError(RuntimeError):
    """A constructed witness failed its re-verification (a bug)."""

    def __init__(self, s, wanted, got):
        super().__init__(f"witness {s} verifies to {got}, wanted {wanted}")


class Inversion(Enum):
    """Which strong inversion of the knot a marked class refers to."""

    H_Q = "h"            # the inversion visible on the slope q/p itself
    H_QPRIME = "h_dual"  # the inversion pulled back from the dual slope q'/p
    H_PRIME = "h_exc"    # the exceptional inversion of palindromic slopes


class Arc(Enum):
    SHORT = "short"
    LONG = "long"


class SymmetryType(Enum):
    TORUS = "torus"
    GENERIC = "generic"
    PALINDROMIC = "palindromic"


@dataclass(frozen=True)
class MarkedClass:
    """An (inversion, fixed-circle arc) pair labelling a marked knot."""

    inversion: Inversion
    arc: Arc

    @property
    def label(self) -> str:
        return f"{self.inversion.value}:{self.arc.value}"

    def __str__(self) -> str:
        return self.label


# Display order fixed by convention: the h pair (short, long) first, then
# the second inversion's pair.  Nothing canonical forces this order; it is
# simply the order used everywhere in this package, including the catalog.
_ORDER = {
    SymmetryType.TORUS: (
        MarkedClass(Inversion.H_Q, Arc.SHORT),
        MarkedClass(Inversion.H_Q, Arc.LONG),
    ),
    SymmetryType.GENERIC: (
        MarkedClass(Inversion.H_Q, Arc.SHORT),
        MarkedClass(Inversion.H_Q, Arc.LONG),
        MarkedClass(Inversion.H_QPRIME, Arc.SHORT),
        MarkedClass(Inversion.H_QPRIME, Arc.LONG),
    ),
    SymmetryType.PALINDROMIC: (
        MarkedClass(Inversion.H_Q, Arc.SHORT),
        MarkedClass(Inversion.H_Q, Arc.LONG),
        MarkedClass(Inversion.H_PRIME, Arc.SHORT),
        MarkedClass(Inversion.H_PRIME, Arc.LONG),
    ),
}


@dataclass(frozen=True)
class GenusProfile:
    """The genus and all equivariant genera of one 2-bridge knot.

    ``entries`` lists (marked class, equivariant genus) pairs in display
    order: two pairs for a torus slope, four otherwise.
    ``strong_equivalence_class_count`` is the number of marked classes
    (2 or 4); for palindromic slopes it also equals the number of strong
    inversions up to strong equivalence.
    """

    slope: Slope
    genus: int
    symmetry_type: SymmetryType
    strong_equivalence_class_count: int
    entries: tuple[tuple[MarkedClass, int], ...]

    @property
    def genera(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.entries)

    def genus_of(self, mc: MarkedClass) -> int:
        for c, v in self.entries:
            if c == mc:
                return v
        raise MarkedClassError(f"{mc} is not a marked class of slope {self.slope}")


def symmetry_type(s: Slope) -> SymmetryType:
    pred = slope_predicates(s)
    if pred.is_torus:
        return SymmetryType.TORUS
    if pred.is_palindromic:
        return SymmetryType.PALINDROMIC
    return SymmetryType.GENERIC


def classify_marked_classes(s: Slope) -> tuple[SymmetryType, tuple[MarkedClass, ...]]:
    """All marked classes of the knot, with its symmetry type.

    Torus slopes carry a single inversion and two classes; generic
    slopes the four h/h_dual classes; palindromic slopes the four
    h/h_exc classes (h_dual coincides with h there).
    """
    sym = symmetry_type(s)
    return sym, _ORDER[sym]


def seifert_genus(s: Slope) -> int:
    """Half the expansion length."""
    return expand_even_cf(s).n


def _genus_from_cf(cf: EvenCF, mc: MarkedClass) -> int:
    n = cf.n
    a, b = cf.a_halves, cf.b_halves
    if mc.inversion is Inversion.H_Q:
        if mc.arc is Arc.SHORT:
            return sum(abs(x) for x in a)
        return n + sum(1 for x in b if abs(x) > 1)
    if mc.inversion is Inversion.H_QPRIME:
        if mc.arc is Arc.SHORT:
            return sum(abs(x) for x in b)
        return n + sum(1 for x in a if abs(x) > 1)
    return n  # exceptional inversion: both arcs realize the genus


def equivariant_genus(s: Slope, mc: MarkedClass) -> int:
    """Equivariant genus of the marked class ``mc`` of slope ``s``.

    Raises :class:`MarkedClassError` when ``mc`` is not among the
    classes of this slope's symmetry type.
    """
    sym, classes = classify_marked_classes(s)
    if mc not in classes:
        raise MarkedClassError(f"{mc} is not a marked class of {sym.value} slope {s}")
    return _genus_from_cf(expand_even_cf(s), mc)


def genus_profile(s: Slope) -> GenusProfile:
    cf = expand_even_cf(s)
    sym, classes = classify_marked_classes(s)
    entries = tuple((mc, _genus_from_cf(cf, mc)) for mc in classes)
    return GenusProfile(
        slope=s,
        genus=cf.n,
        symmetry_type=sym,
        strong_equivalence_class_count=len(classes),
        entries=entries,
    )


def _slope_of_entries(entries) -> Slope:
    f = evaluate_cf(entries)
    return canonicalize_slope(f.denominator, f.numerator)


def find_gap_example(g: int, ghat: int) -> tuple[Slope, MarkedClass]:
    """A slope and marked class with (genus, equivariant genus) = (g, ghat).

    Construction: expansion with a_1 = ghat - g + 1 and every other
    half-entry 1, of half-length g, marked by the short arc of h.  The
    pair is re-verified before returning.
    """
    if not 1 <= g <= ghat:
        raise ValueError(f"need 1 <= g <= ghat, got ({g}, {ghat})")
    entries = [2] * (2 * g)
    entries[0] = 2 * (ghat - g + 1)
    s = _slope_of_entries(entries)
    mc = MarkedClass(Inversion.H_Q, Arc.SHORT)
    if seifert_genus(s) != g or equivariant_genus(s, mc) != ghat:
        raise InvariantError(s, g, ghat)
    return s, mc


def find_arc_gap_example(d: int) -> tuple[Slope, tuple[MarkedClass, MarkedClass]]:
    """A slope whose short/long-arc genera for one inversion differ by d.

    Returns the slope together with the (short, long) marked class pair
    of the inversion h.  d > 0 uses [2(d+1), -2]; d < 0 uses
    [2, 4, 2, 4, ...] with |d| blocks; d = 0 uses the trefoil.  The
    difference is re-verified before returning.
    """
    if d == 0:
        entries = [2, 2]
    elif d > 0:
        entries = [2 * (d + 1), -2]
    else:
        entries = [2, 4] * (-d)
    s = _slope_of_entries(entries)
    short = MarkedClass(Inversion.H_Q, Arc.SHORT)
    long_ = MarkedClass(Inversion.H_Q, Arc.LONG)
    got = equivariant_genus(s, short) - equivariant_genus(s, long_)
    if got != d:
        raise InvariantError(s, d, got)
    return s, (short, long_)
