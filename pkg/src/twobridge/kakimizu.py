"""The Kakimizu complex of a 2-bridge knot and its involution actions.

The Kakimizu complex MS(K) of a knot K is the flag simplicial complex
whose vertices are the isotopy classes of minimal genus Seifert surfaces
and whose edges join classes realized disjointly.  For the 2-bridge knot
with expansion [2a_1, 2a_2, ..., 2a_{2n}] (single-list indexing used
throughout this module) every minimal genus Seifert surface arises from
plumbing 2n twisted annuli along a path tree T with vertices
v_1, ..., v_2n, one plumbing choice per edge, so the surfaces are
labelled by orientations of T, i.e. by sign vectors in {-1,+1}^{2n-1}:
coordinate j is +1 when the orientation agrees on edge j with the
alternating orientation rho_plus whose sinks are the odd vertices.

Combinatorics of the full complex K(n) (all |a_i| >= 2):

* vertices: the 2^{2n-1} corners of the cube [-1,1]^{2n-1};
* a *sink move* at a sink vertex v_i of an orientation reverses the
  edges incident on v_i, i.e. flips sign coordinates i-1 and i; the
  displacement is a fixed lattice vector per i once a sink, so the 2n
  move vectors sum to zero, the unique linear relation among them;
* top (2n-1)-simplices: vertex sets of *cycles*, closed length-2n
  sequences of sink moves using each tree vertex exactly once;
* the top simplices triangulate the cube.

When some |a_i| = 1 (the annulus is a Hopf band) the complex collapses:
with H = {i : |a_i| = 1} and W the span of the corresponding move
vectors, MS(K) is the image of K(n) in R^{2n-1}/W, written K(n; H).
Its dimension is 2n-1-#H unless H is everything (K fibered), when it is
a single point.

This module builds K(n; H) two ways.  The cube route enumerates corners
and cycles and then projects; it is exact but exponential in n.  The
track route works directly with cosets: the maximal runs of Hopf
indices between consecutive non-Hopf indices i_k < i_{k+1} collapse to
a single integer coordinate (the alternating sign sum over the spanned
edge window) ranging over {-g, -g+2, ..., g} with g = i_{k+1} - i_k,
and the surviving move at i_k raises the window on its right by 2 and
lowers the window on its left by 2.  Cycles in this reduced system are
exactly the images of cycles of K(n), so the route scales with the size
of the quotient, not of the ambient cube.  The two routes are
cross-checked against each other in the test suite.

Induced involution actions on K(n; H):

* every 2-bridge knot's two standard strong inversions act by the same
  automorphism, global negation of sign vectors; its fixed data is
  either a unique fixed vertex (iff H contains all odd or all even
  indices) or a unique inverted edge joining the classes of the two
  alternating orientations;
* for palindromic slopes the exceptional strong inversion acts by
  coordinate reversal; its fixed point set is a ball of dimension
  n - (#H)/2, verified here by exact rank arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial, prod

from .slopes import EvenCF, Slope, expand_even_cf, slope_predicates

DEFAULT_MAX_N = 5          # cube routes refuse beyond 2^(2n-1) = 512 corners
DEFAULT_MAX_STATES = 20000  # track route refuses beyond this many cosets
DEFAULT_MAX_MOVES = 16

SignVector = tuple[int, ...]


class EnumerationBoundError(ValueError):
    """The requested construction exceeds the configured size bound."""


class NotPalindromicError(ValueError):
    """The exceptional involution only exists when q^2 = 1 (mod p)."""


class InvariantViolationError(RuntimeError):
    """A structural guarantee of the complex failed (a bug, not bad input)."""


# ---------------------------------------------------------------------------
# Orientations of the path tree as sign vectors


def rho_plus(n: int) -> SignVector:
    """The alternating orientation with sinks at odd vertices: all +1."""
    return (1,) * (2 * n - 1)


def rho_minus(n: int) -> SignVector:
    return (-1,) * (2 * n - 1)


def _check_sign_vector(eps) -> int:
    """Validate and return the tree size 2n."""
    if len(eps) % 2 != 1:
        raise ValueError(f"sign vector length must be odd (= 2n-1), got {len(eps)}")
    if any(x not in (-1, 1) for x in eps):
        raise ValueError(f"sign vector entries must be +-1, got {eps}")
    return len(eps) + 1


def _edge_toward_larger(j: int, eps_j: int) -> bool:
    """Does edge j (joining v_j and v_{j+1}) point toward v_{j+1}?

    rho_plus points every edge toward its odd endpoint, and eps_j = -1
    reverses the edge.
    """
    toward_larger_in_plus = j % 2 == 0  # even j: odd endpoint is v_{j+1}
    return toward_larger_in_plus if eps_j == 1 else not toward_larger_in_plus


def sinks(eps: SignVector) -> set[int]:
    """Tree vertices all of whose incident edges point toward them."""
    two_n = _check_sign_vector(eps)
    result = set()
    for i in range(1, two_n + 1):
        ok = True
        if i - 1 >= 1:  # edge i-1 joins v_{i-1} and v_i
            ok = ok and _edge_toward_larger(i - 1, eps[i - 2])
        if i <= two_n - 1:  # edge i joins v_i and v_{i+1}
            ok = ok and not _edge_toward_larger(i, eps[i - 1])
        if ok:
            result.add(i)
    return result


def apply_sink_move(eps: SignVector, i: int) -> SignVector:
    """Reverse the edges incident on the sink v_i (flip coords i-1 and i)."""
    two_n = _check_sign_vector(eps)
    if i not in sinks(eps):
        raise ValueError(f"vertex {i} is not a sink of {eps}")
    out = list(eps)
    for j in (i - 1, i):
        if 1 <= j <= two_n - 1:
            out[j - 1] = -out[j - 1]
    return tuple(out)


def move_vectors(n: int) -> tuple[tuple[int, ...], ...]:
    """The 2n sink-move displacement vectors, derived operationally.

    Vector i is the coordinate difference apply_sink_move produces at
    any orientation with v_i a sink (the difference is independent of
    the orientation because a sink pins the incident coordinates).
    The vectors sum to zero.
    """
    dim = 2 * n - 1
    vecs = []
    for i in range(1, 2 * n + 1):
        eps = [1] * dim
        want = 1 if i % 2 == 1 else -1  # incident coords pinned at a sink
        for j in (i - 1, i):
            if 1 <= j <= dim:
                eps[j - 1] = want
        eps = tuple(eps)
        moved = apply_sink_move(eps, i)
        vecs.append(tuple(m - e for m, e in zip(moved, eps)))
    if tuple(map(sum, zip(*vecs))) != (0,) * dim:
        raise InvariantViolationError(f"move vectors of n={n} do not sum to zero")
    return tuple(vecs)


# ---------------------------------------------------------------------------
# Exact linear algebra over the rationals (tiny dimensions only)


def _rref(rows):
    """Reduced row echelon form over Fraction; returns (rows, pivot cols)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(mat)) if mat[k][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][c] != 0:
                f = mat[k][c]
                mat[k] = [x - f * y for x, y in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def _rank(rows) -> int:
    if not rows:
        return 0
    return len(_rref(rows)[0])


def _reduce_vector(rref_rows, pivots, vec):
    """Residual of vec modulo the row space; zero iff vec is in the span."""
    out = [Fraction(x) for x in vec]
    for row, c in zip(rref_rows, pivots):
        if out[c] != 0:
            f = out[c]
            out = [x - f * y for x, y in zip(out, row)]
    return tuple(out)


# ---------------------------------------------------------------------------
# The Hopf sublattice


@dataclass(frozen=True)
class HopfSublattice:
    """Indices of Hopf-band entries and the lattice directions they span.

    ``h_set`` collects the positions i (1-based, in the single-list
    indexing c_1 ... c_{2n}) with |c_i| = 2.  ``W`` is the rational span
    of the corresponding move vectors; the quotient complex collapses
    along it.
    """

    two_n: int
    h_set: frozenset[int]

    def __post_init__(self):
        if self.two_n < 2 or self.two_n % 2 != 0:
            raise ValueError(f"tree size must be a positive even integer, got {self.two_n}")
        if not self.h_set <= set(range(1, self.two_n + 1)):
            raise ValueError(f"Hopf indices must lie in 1..{self.two_n}")

    @property
    def n(self) -> int:
        return self.two_n // 2

    @property
    def is_full(self) -> bool:
        return len(self.h_set) == self.two_n

    @cached_property
    def spanning_vectors(self) -> tuple[tuple[int, ...], ...]:
        all_vecs = move_vectors(self.n)
        return tuple(all_vecs[i - 1] for i in sorted(self.h_set))

    @cached_property
    def basis(self) -> tuple[tuple[Fraction, ...], ...]:
        """Reduced row echelon basis of W."""
        if not self.h_set:
            return ()
        rows, _ = _rref(self.spanning_vectors)
        return tuple(rows)

    @cached_property
    def rank(self) -> int:
        r = len(self.basis)
        expected = min(len(self.h_set), self.two_n - 1)
        if r != expected:
            raise InvariantViolationError(
                f"Hopf span rank {r} != {expected} for H={sorted(self.h_set)}")
        return r

    def is_symmetric(self) -> bool:
        """Invariance of H under i <-> 2n+1-i (holds for palindromic slopes)."""
        return self.h_set == {self.two_n + 1 - i for i in self.h_set}


def hopf_set(cf: EvenCF) -> HopfSublattice:
    """Hopf indices of an expansion: positions with entry +-2."""
    h = frozenset(i for i, c in enumerate(cf.entries, start=1) if abs(c) == 2)
    lat = HopfSublattice(len(cf.entries), h)
    lat.rank  # materialize the rank assertion
    return lat


# ---------------------------------------------------------------------------
# Cycles of sink moves (the top simplices of the full complex)


@dataclass(frozen=True)
class Cycle:
    """A closed sequence of 2n sink moves using each tree vertex once.

    ``orientations[k]`` is the orientation before ``moves[k]``; reported
    up to rotation, starting at the lexicographically smallest
    orientation.
    """

    orientations: tuple[SignVector, ...]
    moves: tuple[int, ...]


def enumerate_cycles(n: int, max_n: int = DEFAULT_MAX_N) -> list[Cycle]:
    """All cycles of the tree with 2n vertices, up to rotation."""
    if n > max_n:
        raise EnumerationBoundError(f"n = {n} exceeds the cycle enumeration bound {max_n}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return list(_cycles_cached(n))


@lru_cache(maxsize=8)
def _cycles_cached(n: int) -> tuple[Cycle, ...]:
    two_n = 2 * n
    cycles: list[Cycle] = []
    corners = itertools.product((-1, 1), repeat=two_n - 1)

    def extend(start, path, used):
        current = path[-1]
        if len(used) == two_n:
            if current != start:
                raise InvariantViolationError("cycle did not close up")
            cycles.append(Cycle(tuple(path[:-1]), tuple(used)))
            return
        for i in sorted(sinks(current)):
            if i in used:
                continue
            nxt = apply_sink_move(current, i)
            # keep only the rotation starting at the lex-least orientation
            if nxt < start:
                continue
            used.append(i)
            path.append(nxt)
            extend(start, path, used)
            path.pop()
            used.pop()

    for start in corners:
        extend(start, [start], [])
    return tuple(cycles)


def _downward_closure(tops) -> frozenset[frozenset]:
    simplices = set()
    for top in tops:
        elems = tuple(top)
        for r in range(1, len(elems) + 1):
            for combo in itertools.combinations(elems, r):
                simplices.add(frozenset(combo))
    return frozenset(simplices)


# ---------------------------------------------------------------------------
# Complexes


class QuotientComplex:
    """A finite simplicial complex with labelled sign-vector vertices.

    Vertices carry canonical coset representatives (the lexicographically
    smallest sign vector of the coset; for the full complex, the corner
    itself).  ``simplices`` holds every nonempty simplex as a frozenset
    of vertex indices; ``top_simplices`` the maximal ones coming from
    cycles.  ``cosetize`` maps an arbitrary corner sign vector to the
    canonical representative of its coset, which is how the involution
    actions are transported to the quotient.
    """

    def __init__(self, *, n, hopf, vertices, tops, cosetize, slope=None, builder=""):
        self.n = n
        self.two_n = 2 * n
        self.hopf = hopf
        self.slope = slope
        self.builder = builder
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self.top_simplices = tuple(sorted(tops, key=sorted))
        self.simplices = _downward_closure(self.top_simplices)
        self._cosetize = cosetize
        if len({v for t in self.top_simplices for v in t}) != len(self.vertices):
            raise InvariantViolationError("some vertex lies in no top simplex")

    @property
    def dim(self) -> int:
        return max(len(s) for s in self.simplices) - 1

    @cached_property
    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.simplices)

    def vertex_index(self, rep: SignVector) -> int:
        return self._index[rep]

    def canonical_rep(self, eps: SignVector) -> SignVector:
        """Canonical representative of the coset of an arbitrary corner."""
        return self._cosetize(tuple(eps))

    def has_simplex(self, vertex_indices) -> bool:
        return frozenset(vertex_indices) in self.simplices

    def edges(self) -> list[frozenset]:
        return [s for s in self.simplices if len(s) == 2]

    def vertex_map(self, corner_map) -> dict[int, int]:
        """Transport a map on corners to a map on quotient vertices."""
        out = {}
        for idx, rep in enumerate(self.vertices):
            out[idx] = self._index[self._cosetize(corner_map(rep))]
        return out

    def is_simplicial_map(self, vmap: dict[int, int]) -> bool:
        return all(frozenset(vmap[v] for v in s) in self.simplices for s in self.simplices)


def build_full_complex(n: int, max_n: int = DEFAULT_MAX_N) -> QuotientComplex:
    """The full complex K(n): all corners, top simplices from cycles.

    Complexes are immutable; repeated calls share a cached instance.
    """
    if n > max_n:
        raise EnumerationBoundError(f"n = {n} exceeds the cycle enumeration bound {max_n}")
    return _full_complex_cached(n)


@lru_cache(maxsize=8)
def _full_complex_cached(n: int) -> QuotientComplex:
    cycles = enumerate_cycles(n, max_n=n)
    corners = sorted(itertools.product((-1, 1), repeat=2 * n - 1))
    index = {c: k for k, c in enumerate(corners)}
    tops = {frozenset(index[o] for o in cyc.orientations) for cyc in cycles}
    kc = QuotientComplex(
        n=n,
        hopf=HopfSublattice(2 * n, frozenset()),
        vertices=corners,
        tops=tops,
        cosetize=lambda eps: eps,
        builder="cube",
    )
    if len(kc.vertices) != 2 ** (2 * n - 1):
        raise InvariantViolationError("full complex is missing corners")
    return kc


# -- track route: the quotient built directly at coset level ---------------


def _track_windows(two_n: int, h_set) -> tuple[list[int], list[tuple[int, int]], list[int]]:
    """Non-Hopf move indices, the coordinate windows between consecutive
    ones, and the window gaps."""
    moves = [i for i in range(1, two_n + 1) if i not in h_set]
    windows = [(moves[k], moves[k + 1] - 1) for k in range(len(moves) - 1)]
    gaps = [hi - lo + 1 for lo, hi in windows]
    return moves, windows, gaps


def _window_sum(eps: SignVector, lo: int, hi: int) -> int:
    """Alternating sum over the coordinate window: sum of (-1)^j eps_j."""
    return sum((eps[j - 1] if j % 2 == 0 else -eps[j - 1]) for j in range(lo, hi + 1))


def _state_of_corner(windows, eps: SignVector) -> tuple[int, ...]:
    return tuple(_window_sum(eps, lo, hi) for lo, hi in windows)


def _rep_of_state(two_n: int, windows, state) -> SignVector:
    """Lexicographically smallest corner whose coset has these window sums.

    Coordinates outside every window belong to collapsed boundary runs,
    where every sign pattern is in the coset, so they take -1.  Inside a
    window the greedy left-to-right choice of -1 subject to feasibility
    of the remaining alternating sum is lexicographically least.
    """
    eps = [-1] * (two_n - 1)
    for (lo, hi), target in zip(windows, state):
        rem = target
        for j in range(lo, hi + 1):
            w = 1 if j % 2 == 0 else -1
            left = hi - j  # coordinates after j in this window
            if abs(rem + w) <= left:  # feasible with eps_j = -1
                eps[j - 1] = -1
                rem += w
            else:
                eps[j - 1] = 1
                rem -= w
        if rem != 0:
            raise InvariantViolationError(f"window sum {target} infeasible on [{lo},{hi}]")
    return tuple(eps)


def _track_tops(gaps) -> set[frozenset]:
    """Vertex sets of cycles in the reduced move system.

    The m surviving moves act on the m-1 window coordinates: move k
    raises window k by 2 and lowers window k-1 by 2 (windows that
    exist).  A cycle uses each move once through states that stay within
    the window ranges; it closes up automatically and visits m distinct
    states, giving an (m-1)-simplex.
    """
    m = len(gaps) + 1
    ranges = [range(-g, g + 1, 2) for g in gaps]
    if m == 1:
        return {frozenset({()})}

    def bump(state, k):
        out = list(state)
        if k >= 1:
            out[k - 1] -= 2
            if out[k - 1] < -gaps[k - 1]:
                return None
        if k <= m - 2:
            out[k] += 2
            if out[k] > gaps[k]:
                return None
        return tuple(out)

    tops: set[frozenset] = set()

    def extend(start, path, used):
        if len(path) == m + 1:
            if path[-1] != start:  # closes by the zero-sum of the moves
                raise InvariantViolationError("track cycle did not close up")
            tops.add(frozenset(path[:-1]))
            return
        current = path[-1]
        for k in range(m):
            if used[k]:
                continue
            nxt = bump(current, k)
            if nxt is None or nxt < start:
                continue
            used[k] = True
            path.append(nxt)
            extend(start, path, used)
            path.pop()
            used[k] = False

    for state in itertools.product(*ranges):
        extend(state, [state], [False] * m)
    return tops


def build_quotient_complex(
    s: Slope,
    *,
    max_states: int = DEFAULT_MAX_STATES,
    max_moves: int = DEFAULT_MAX_MOVES,
    max_n: int | None = None,
) -> QuotientComplex:
    """The Kakimizu complex K(n; H) of a canonical slope, via tracks.

    Cosets and simplices are produced directly from the reduced move
    system, so the cost scales with the quotient (number of cosets =
    product of window sizes), never with the 2^(2n-1) ambient corners.
    The construction refuses when the coset count exceeds ``max_states``
    or the number of surviving moves exceeds ``max_moves`` (and, if
    ``max_n`` is given, when n exceeds it), rather than truncating.
    """
    cf = expand_even_cf(s)
    two_n = len(cf.entries)
    n = cf.n
    if max_n is not None and n > max_n:
        raise EnumerationBoundError(f"n = {n} exceeds the requested bound {max_n}")
    hopf = HopfSublattice(two_n, frozenset(
        i for i, c in enumerate(cf.entries, start=1) if abs(c) == 2))

    if hopf.is_full:  # fibered: everything collapses to one vertex
        rep = (-1,) * (two_n - 1)
        return QuotientComplex(
            n=n, hopf=hopf, vertices=[rep], tops={frozenset({0})},
            cosetize=lambda eps: rep, slope=s, builder="tracks",
        )

    moves, windows, gaps = _track_windows(two_n, hopf.h_set)
    if len(moves) > max_moves:
        raise EnumerationBoundError(
            f"{len(moves)} surviving moves exceed the bound {max_moves}")
    n_states = prod(g + 1 for g in gaps)
    if n_states > max_states:
        raise EnumerationBoundError(
            f"{n_states} cosets exceed the bound {max_states}")

    reps = {state: _rep_of_state(two_n, windows, state)
            for state in itertools.product(*[range(-g, g + 1, 2) for g in gaps])}
    vertices = sorted(reps.values())
    index = {v: k for k, v in enumerate(vertices)}
    tops = {frozenset(index[reps[state]] for state in top) for top in _track_tops(gaps)}

    def cosetize(eps):
        return reps[_state_of_corner(windows, eps)]

    kc = QuotientComplex(
        n=n, hopf=hopf, vertices=vertices, tops=tops,
        cosetize=cosetize, slope=s, builder="tracks",
    )
    expected_dim = two_n - 1 - len(hopf.h_set)
    if kc.dim != expected_dim:
        raise InvariantViolationError(
            f"quotient dimension {kc.dim} != {expected_dim} for slope {s}")
    return kc


def build_quotient_complex_via_cube(s: Slope, max_n: int = DEFAULT_MAX_N) -> QuotientComplex:
    """Oracle route: project the full complex K(n) by exact linear algebra.

    Enumerates the ambient cube, so only small n; used to cross-check
    :func:`build_quotient_complex`.
    """
    cf = expand_even_cf(s)
    n = cf.n
    hopf = hopf_set(cf)
    full = build_full_complex(n, max_n=max_n)
    if hopf.h_set:
        rref_rows, pivots = _rref(hopf.spanning_vectors)
    else:
        rref_rows, pivots = [], []

    members: dict[tuple, list[SignVector]] = {}
    for corner in full.vertices:
        key = _reduce_vector(rref_rows, pivots, corner)
        members.setdefault(key, []).append(corner)
    rep_of = {}
    for key, group in members.items():
        rep = min(group)
        for corner in group:
            rep_of[corner] = rep
    vertices = sorted(set(rep_of.values()))
    index = {v: k for k, v in enumerate(vertices)}
    tops = set()
    for top in full.top_simplices:
        tops.add(frozenset(index[rep_of[full.vertices[v]]] for v in top))
    # drop faces: a collapsed image may be contained in a larger one
    maximal = {t for t in tops if not any(t < u for u in tops)}
    return QuotientComplex(
        n=n, hopf=hopf, vertices=vertices, tops=maximal,
        cosetize=lambda eps: rep_of[eps], slope=s, builder="cube",
    )


def triangulation_volume(kc: QuotientComplex) -> Fraction:
    """Total volume of the top simplices of a full complex K(n).

    Each top simplex on 2n corner vertices has volume |det| / (2n-1)!
    of the edge matrix from one of its vertices; for K(n) the volumes
    must add up to the cube volume 2^(2n-1).
    """
    dim = 2 * kc.n - 1
    total = Fraction(0)
    for top in kc.top_simplices:
        pts = [kc.vertices[v] for v in top]
        base = pts[0]
        rows = [[x - b for x, b in zip(p, base)] for p in pts[1:]]
        total += Fraction(abs(_det(rows)), factorial(dim))
    return total


def _det(rows) -> int:
    """Integer determinant by fraction-free Gaussian elimination (Bareiss)."""
    mat = [list(map(int, r)) for r in rows]
    size = len(mat)
    if any(len(r) != size for r in mat):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(size - 1):
        if mat[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if mat[r][k] != 0), None)
            if swap is None:
                return 0
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[-1][-1]


# ---------------------------------------------------------------------------
# Involution actions


@dataclass(frozen=True)
class HInvolutionReport:
    """Fixed data of the negation involution on K(n; H).

    Exactly one of ``fixed_vertex`` / ``inverted_edge`` is set: the
    involution either fixes a unique vertex (iff H contains all odd or
    all even indices) or inverts a unique edge, the one joining the two
    alternating orientations.  ``higher_invariant_simplices`` lists any
    invariant simplices of dimension >= 2; none are expected, and a
    non-empty list is surfaced for inspection rather than hidden.
    """

    slope: Slope
    fixed_vertex: SignVector | None
    inverted_edge: tuple[SignVector, SignVector] | None
    parity_criterion: bool
    f_plus: SignVector
    f_minus: SignVector
    higher_invariant_simplices: tuple[frozenset, ...]

    @property
    def kind(self) -> str:
        return "fixed_vertex" if self.fixed_vertex is not None else "inverted_edge"


def _parity_criterion(hopf: HopfSublattice) -> bool:
    odds = set(range(1, hopf.two_n + 1, 2))
    evens = set(range(2, hopf.two_n + 1, 2))
    return odds <= hopf.h_set or evens <= hopf.h_set


def involution_h_report(
    s: Slope, kc: QuotientComplex | None = None, **bounds
) -> HInvolutionReport:
    """Fixed data of the standard strong inversions' action on MS(K).

    Both standard inversions induce the same automorphism, global
    negation of sign vectors.  Verifies the dichotomy: unique fixed
    vertex exactly when H contains all odd or all even indices, unique
    inverted edge otherwise; violations raise
    :class:`InvariantViolationError`.
    """
    if kc is None:
        kc = build_quotient_complex(s, **bounds)
    vmap = kc.vertex_map(lambda rep: tuple(-x for x in rep))
    if not kc.is_simplicial_map(vmap):
        raise InvariantViolationError(f"negation is not simplicial on K(n;H) of {s}")

    f_plus = kc.canonical_rep((1,) * (kc.two_n - 1))
    f_minus = kc.canonical_rep((-1,) * (kc.two_n - 1))
    fixed = [v for v, w in vmap.items() if v == w]
    inverted = [e for e in kc.edges()
                if (lambda u, w: vmap[u] == w and vmap[w] == u)(*sorted(e))]
    higher = tuple(sorted(
        (sx for sx in kc.simplices
         if len(sx) >= 3 and frozenset(vmap[v] for v in sx) == sx),
        key=sorted))
    parity = _parity_criterion(kc.hopf)

    if f_plus == f_minus:
        ok = (parity
              and fixed == [kc.vertex_index(f_plus)]
              and not inverted)
        kind_data = dict(fixed_vertex=f_plus, inverted_edge=None)
    else:
        edge = frozenset({kc.vertex_index(f_plus), kc.vertex_index(f_minus)})
        ok = (not parity
              and not fixed
              and edge in kc.simplices
              and inverted == [edge])
        kind_data = dict(fixed_vertex=None, inverted_edge=(f_plus, f_minus))
    if not ok:
        raise InvariantViolationError(
            f"involution dichotomy failed for {s}: parity={parity}, "
            f"fixed={fixed}, inverted={inverted}, F+={f_plus}, F-={f_minus}")
    return HInvolutionReport(
        slope=s, parity_criterion=parity, f_plus=f_plus, f_minus=f_minus,
        higher_invariant_simplices=higher, **kind_data)


@dataclass(frozen=True)
class HPrimeInvolutionReport:
    """Fixed data of the exceptional involution on K(n; H).

    ``fixed_subspace_dimension`` is dim((W + Fix) / W) where Fix is the
    fixed subspace of coordinate reversal on R^(2n-1); it always equals
    n - (#H)/2, asserted by exact rank arithmetic.
    """

    slope: Slope
    fixed_vertices: tuple[SignVector, ...]
    fixed_subspace_dimension: int
    expected_dimension: int


def involution_hprime_report(
    s: Slope, kc: QuotientComplex | None = None, **bounds
) -> HPrimeInvolutionReport:
    """Action of the exceptional strong inversion (palindromic slopes only).

    The action on sign vectors is coordinate reversal; it descends to
    the quotient because H is symmetric under i <-> 2n+1-i for
    palindromic slopes, which is asserted.
    """
    if (s.q * s.q) % s.p != 1:
        raise NotPalindromicError(f"slope {s} has q^2 != 1 (mod p)")
    if kc is None:
        kc = build_quotient_complex(s, **bounds)
    hopf = kc.hopf
    if not hopf.is_symmetric():
        raise InvariantViolationError(f"Hopf set of palindromic {s} is not symmetric")
    vmap = kc.vertex_map(lambda rep: tuple(reversed(rep)))
    if not kc.is_simplicial_map(vmap):
        raise InvariantViolationError(f"reversal is not simplicial on K(n;H) of {s}")
    fixed = tuple(kc.vertices[v] for v, w in sorted(vmap.items()) if v == w)

    n, two_n = kc.n, kc.two_n
    fix_basis = []
    for j in range(1, n + 1):
        vec = [0] * (two_n - 1)
        vec[j - 1] += 1
        vec[two_n - j - 1] += 1  # coordinate 2n-j
        fix_basis.append(tuple(vec))
    w_rows = list(hopf.spanning_vectors)
    dimension = _rank(w_rows + fix_basis) - _rank(w_rows)
    expected = n - len(hopf.h_set) // 2
    if dimension != expected:
        raise InvariantViolationError(
            f"fixed subspace dimension {dimension} != n - #H/2 = {expected} for {s}")
    return HPrimeInvolutionReport(
        slope=s, fixed_vertices=fixed,
        fixed_subspace_dimension=dimension, expected_dimension=expected)


# ---------------------------------------------------------------------------
# Cross-check of the two constructions of K(n)


@dataclass(frozen=True)
class OracleReport:
    n: int
    match: bool
    cycle_top_count: int
    vector_top_count: int
    first_difference: frozenset | None


def oracle_cross_check(n: int, max_n: int = DEFAULT_MAX_N) -> OracleReport:
    """Build K(n) twice and compare top simplex sets.

    Route one walks the sink-move dynamics on tree orientations; route
    two forgets trees entirely and adds the derived move vectors, only
    requiring every partial sum to be a corner.  Agreement means the
    sink condition and the stay-in-the-cube condition cut out the same
    cycles.
    """
    cycle_tops = {frozenset(c.orientations) for c in enumerate_cycles(n, max_n=max_n)}

    vecs = _move_vectors_exhaustive(n, max_n=max_n)
    two_n = 2 * n
    vector_tops: set[frozenset] = set()

    def extend(start, path, used):
        current = path[-1]
        if len(used) == two_n:
            if current != start:
                raise InvariantViolationError("vector cycle did not close up")
            vector_tops.add(frozenset(path[:-1]))
            return
        for i in range(1, two_n + 1):
            if i in used:
                continue
            nxt = tuple(x + d for x, d in zip(current, vecs[i - 1]))
            if any(x not in (-1, 1) for x in nxt) or nxt < start:
                continue
            used.add(i)
            path.append(nxt)
            extend(start, path, used)
            path.pop()
            used.remove(i)

    for start in itertools.product((-1, 1), repeat=two_n - 1):
        extend(start, [start], set())

    diff = cycle_tops ^ vector_tops
    return OracleReport(
        n=n,
        match=not diff,
        cycle_top_count=len(cycle_tops),
        vector_top_count=len(vector_tops),
        first_difference=min(diff, key=sorted) if diff else None,
    )


def _move_vectors_exhaustive(n: int, max_n: int = DEFAULT_MAX_N):
    """Move vectors recomputed at every orientation where i is a sink,
    asserting the displacement never depends on the orientation."""
    if n > max_n:
        raise EnumerationBoundError(f"n = {n} exceeds the bound {max_n}")
    seen: dict[int, set] = {}
    for eps in itertools.product((-1, 1), repeat=2 * n - 1):
        for i in sinks(eps):
            moved = apply_sink_move(eps, i)
            seen.setdefault(i, set()).add(tuple(m - e for m, e in zip(moved, eps)))
    vecs = []
    for i in range(1, 2 * n + 1):
        if len(seen.get(i, ())) != 1:
            raise InvariantViolationError(
                f"sink move at {i} has inconsistent displacements: {seen.get(i)}")
        vecs.append(next(iter(seen[i])))
    return tuple(vecs)


# ---------------------------------------------------------------------------
# Exports


def complex_to_dict(kc: QuotientComplex, include_involutions: bool = True) -> dict:
    """JSON-ready description of the complex and its involution data."""
    out = {
        "n": kc.n,
        "hopf_indices": sorted(kc.hopf.h_set),
        "dim": kc.dim,
        "euler_characteristic": kc.euler_characteristic,
        "vertices": [list(v) for v in kc.vertices],
        "simplices": sorted(sorted(sx) for sx in kc.simplices),
    }
    if kc.slope is not None:
        out["slope"] = str(kc.slope)
        if include_involutions:
            rep = involution_h_report(kc.slope, kc)
            out["involution_h"] = {
                "kind": rep.kind,
                "fixed_vertex": list(rep.fixed_vertex) if rep.fixed_vertex else None,
                "inverted_edge": ([list(v) for v in rep.inverted_edge]
                                  if rep.inverted_edge else None),
                "parity_criterion": rep.parity_criterion,
            }
            if (kc.slope.q ** 2) % kc.slope.p == 1:
                hp = involution_hprime_report(kc.slope, kc)
                out["involution_h_prime"] = {
                    "fixed_vertices": [list(v) for v in hp.fixed_vertices],
                    "fixed_subspace_dimension": hp.fixed_subspace_dimension,
                }
    return out


def complex_to_graph_dict(kc: QuotientComplex) -> dict:
    """Vertices-and-edges export for external graph tools."""
    return {
        "vertices": [list(v) for v in kc.vertices],
        "edges": sorted(sorted(e) for e in kc.edges()),
    }
