"""Exact arithmetic on 2-bridge knot slopes.

A 2-bridge (rational) knot is determined by a fraction q/p with p odd.
Adding or subtracting p from q does not change the knot, so every slope
has a unique canonical representative with q even and 0 < |q| < p.  Each
canonical slope admits a unique continued fraction expansion

    q/p = 1/(c_1 - 1/(c_2 - ... - 1/c_{2n}))

in which every entry c_j is a nonzero even integer and the length 2n is
even.  Writing c_{2i-1} = 2*a_i and c_{2i} = 2*b_i, the half-length n is
the Seifert genus of the knot, and all the invariants computed elsewhere
in this package are read off the a_i and b_i.

Everything here is exact: plain Python integers and fractions.Fraction,
no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class SlopeError(ValueError):
    """Base class for slope validation failures."""


class EvenDenominatorError(SlopeError):
    """p must be odd (even p describes a 2-component link, not a knot)."""


class SmallDenominatorError(SlopeError):
    """p must be at least 3 (p = 1 gives the unknot, out of scope)."""


class NotCoprimeError(SlopeError):
    """q and p must be coprime."""


class ZeroNumeratorError(SlopeError):
    """q must not be divisible by p."""


class MalformedExpansionError(SlopeError):
    """A continued fraction list with a zero/odd entry, or one whose
    evaluation hits a zero denominator."""


class InvariantViolationError(RuntimeError):
    """An internal guarantee failed (expansion did not terminate with an
    even all-even list, etc.).  Indicates a bug, not bad input."""


@dataclass(frozen=True)
class Slope:
    """Canonical slope q/p: p odd >= 3, q even, 0 < |q| < p, gcd(p,q) = 1.

    Construct non-canonical input through :func:`canonicalize_slope`;
    building a Slope directly with a non-canonical pair raises.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if not isinstance(p, int) or not isinstance(q, int):
            raise SlopeError(f"p and q must be integers, got {p!r}, {q!r}")
        if p % 2 == 0:
            raise EvenDenominatorError(f"p must be odd, got {p}")
        if p < 3:
            raise SmallDenominatorError(f"p must be >= 3, got {p}")
        if q % p == 0:
            raise ZeroNumeratorError(f"q = {q} is divisible by p = {p}")
        if gcd(p, q) != 1:
            raise NotCoprimeError(f"gcd({p}, {q}) = {gcd(p, q)} != 1")
        if q % 2 != 0:
            raise SlopeError(f"canonical q must be even, got {q} (use canonicalize_slope)")
        if not -p < q < p:
            raise SlopeError(f"canonical q must satisfy |q| < p, got {q}/{p}")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.q, self.p)

    def mirror(self) -> "Slope":
        """The mirror-image knot's slope -q/p."""
        return Slope(self.p, -self.q)

    def __str__(self) -> str:
        return f"{self.q}/{self.p}"


@dataclass(frozen=True)
class EvenCF:
    """The all-even, even-length continued fraction expansion of a slope."""

    entries: tuple[int, ...]

    def __post_init__(self):
        _validate_entries(self.entries)
        if len(self.entries) % 2 != 0:
            raise MalformedExpansionError(f"expansion length must be even, got {len(self.entries)}")

    @property
    def n(self) -> int:
        """Half-length; equals the Seifert genus of the knot."""
        return len(self.entries) // 2

    @property
    def a_halves(self) -> tuple[int, ...]:
        """a_i = c_{2i-1} / 2 (odd-position half-entries)."""
        return tuple(c // 2 for c in self.entries[0::2])

    @property
    def b_halves(self) -> tuple[int, ...]:
        """b_i = c_{2i} / 2 (even-position half-entries)."""
        return tuple(c // 2 for c in self.entries[1::2])

    def reversed(self) -> "EvenCF":
        return EvenCF(tuple(reversed(self.entries)))

    def negated(self) -> "EvenCF":
        return EvenCF(tuple(-c for c in self.entries))

    def is_palindrome(self) -> bool:
        return self.entries == tuple(reversed(self.entries))

    def __str__(self) -> str:
        return format_cf(self.entries)


@dataclass(frozen=True)
class SlopePredicates:
    is_torus: bool
    is_palindromic: bool
    is_fibered: bool


def _validate_entries(entries) -> None:
    if len(entries) == 0:
        raise MalformedExpansionError("expansion must be non-empty")
    for c in entries:
        if not isinstance(c, int):
            raise MalformedExpansionError(f"expansion entries must be integers, got {c!r}")
        if c == 0:
            raise MalformedExpansionError("expansion entries must be nonzero")
        if c % 2 != 0:
            raise MalformedExpansionError(f"expansion entries must be even, got {c}")


def format_cf(entries) -> str:
    """Bracketed comma list, e.g. ``[2,-4,-2,-2,-2,-2]``."""
    return "[" + ",".join(str(c) for c in entries) + "]"


def parse_cf(text: str) -> tuple[int, ...]:
    """Inverse of :func:`format_cf`; accepts optional whitespace."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        return tuple(int(tok) for tok in body.split(","))
    except ValueError as exc:
        raise MalformedExpansionError(f"cannot parse expansion {text!r}") from exc


def canonicalize_slope(p: int, q: int) -> Slope:
    """Reduce q modulo p to the unique even representative in (-p, p).

    For odd p, exactly one of the residues q0 and q0 - p (with
    q0 = q mod p in (0, p)) is even, so the canonical representative
    exists and is unique.
    """
    if not isinstance(p, int) or not isinstance(q, int):
        raise SlopeError(f"p and q must be integers, got {p!r}, {q!r}")
    if p % 2 == 0:
        raise EvenDenominatorError(f"p must be odd, got {p}")
    if p < 3:
        raise SmallDenominatorError(f"p must be >= 3, got {p}")
    q0 = q % p
    if q0 == 0:
        raise ZeroNumeratorError(f"q = {q} is divisible by p = {p}")
    if gcd(p, q0) != 1:
        raise NotCoprimeError(f"gcd({p}, {q}) = {gcd(p, q0)} != 1")
    if q0 % 2 != 0:
        q0 -= p
    return Slope(p, q0)


def _nearest_even(num: int, den: int) -> int:
    """Nearest even integer to num/den; unique whenever num/den is not an
    odd integer, which holds throughout the expansion loop because the
    numerator and denominator always have opposite parity."""
    if den < 0:
        num, den = -num, -den
    return 2 * ((num + den) // (2 * den))


def expand_even_cf(s: Slope) -> EvenCF:
    """The unique all-even, even-length expansion of a canonical slope.

    Iterates nearest-even-integer steps on the ratio p/q: with x_k =
    p_k/q_k, take c_k = nearest even integer to x_k and pass to
    (p_{k+1}, q_{k+1}) = (q_k, c_k*q_k - p_k), stopping when the new
    numerator vanishes.  Opposite parity of p_k and q_k makes the choice
    of c_k unique and nonzero, and |q_k| strictly decreases, so the loop
    terminates; parity bookkeeping forces even length.
    """
    entries = []
    num, den = s.p, s.q
    while den != 0:
        c = _nearest_even(num, den)
        nxt = c * den - num
        if not abs(nxt) < abs(den):
            raise InvariantViolationError(
                f"expansion step did not contract at {num}/{den} (slope {s})")
        entries.append(c)
        num, den = den, nxt
    if len(entries) % 2 != 0:
        raise InvariantViolationError(f"expansion of {s} has odd length {len(entries)}")
    return EvenCF(tuple(entries))


def evaluate_cf(entries) -> Fraction:
    """Exact value of 1/(c_1 - 1/(c_2 - ... - 1/c_m)), reduced.

    Accepts any non-empty list of nonzero even integers (odd length is
    allowed here; it evaluates to a fraction with even denominator,
    which :func:`canonicalize_slope` will then reject as a knot slope).
    """
    _validate_entries(entries)
    num, den = 0, 1  # running tail value num/den, innermost first
    for c in reversed(entries):
        num, den = den, c * den - num
        if den == 0:
            raise MalformedExpansionError(
                f"zero denominator while evaluating {format_cf(entries)}")
    return Fraction(num, den)


def inverse_slope(s: Slope) -> Slope:
    """The dual slope q'/p with q*q' = 1 (mod p), in canonical form.

    Its expansion is the reversal of the expansion of q/p.
    """
    return canonicalize_slope(s.p, pow(s.q % s.p, -1, s.p))


def slope_predicates(s: Slope) -> SlopePredicates:
    """Torus / palindromic / fibered tests for a canonical slope.

    * torus: q = +-(p-1); the knot is the (2, p) torus knot.
    * palindromic: q^2 = 1 (mod p); equivalently the expansion equals
      its own reversal, and an exceptional strong inversion exists.
    * fibered: every expansion entry is +-2.
    """
    is_torus = abs(s.q) == s.p - 1
    is_palindromic = (s.q * s.q) % s.p == 1
    is_fibered = all(abs(c) == 2 for c in expand_even_cf(s).entries)
    return SlopePredicates(is_torus, is_palindromic, is_fibered)


def canonical_slopes(p_max: int, p_min: int = 3):
    """Yield every canonical slope with odd denominator 3 <= p <= p_max.

    For each odd p there are exactly phi(p) of them (one per residue
    class mod p), enumerated here as the even coprime q in (-p, p).
    """
    for p in range(p_min | 1, p_max + 1, 2):
        for absq in range(2, p, 2):
            if gcd(p, absq) == 1:
                yield Slope(p, absq)
                yield Slope(p, -absq)
