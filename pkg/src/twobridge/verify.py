"""The self-contained property suite behind ``twobridge verify``.

Each check prints one ``ok``/``FAIL`` line; the suite returns False as
soon as every check has run if any failed.  The same sweeps back the
acceptance tests, so a green ``verify`` run is the package vouching for
itself end to end: golden catalog, expansion laws, constructive gap
witnesses, and the complex constructions with their involution actions.
"""

from __future__ import annotations

import sys
from fractions import Fraction

from . import catalog, genera, kakimizu
from .slopes import (
    canonical_slopes,
    evaluate_cf,
    expand_even_cf,
    inverse_slope,
)


def _check(out, name, fn):
    try:
        detail = fn()
    except Exception as exc:  # a failed invariant assertion is a failure, not a crash
        print(f"FAIL {name}: {type(exc).__name__}: {exc}", file=out)
        return False
    print(f"ok   {name}" + (f" ({detail})" if detail else ""), file=out)
    return True


def check_catalog():
    report = catalog.verify_catalog()
    if not report.ok:
        bad = report.failures[0]
        raise AssertionError(f"{report.summary()}; first failure {bad.name}: "
                             f"{bad.got_genera} != {bad.expected_genera}")
    return report.summary()


def check_roundtrip(p_max):
    count = 0
    for s in canonical_slopes(p_max):
        cf = expand_even_cf(s)
        if len(cf.entries) % 2 != 0 or any(c == 0 or c % 2 for c in cf.entries):
            raise AssertionError(f"bad expansion shape for {s}: {cf}")
        if evaluate_cf(cf.entries) != Fraction(s.q, s.p):
            raise AssertionError(f"roundtrip failed for {s}")
        count += 1
    return f"{count} slopes, p <= {p_max}"


def check_reversal_duality(p_max):
    count = 0
    for s in canonical_slopes(p_max):
        dual = inverse_slope(s)
        if expand_even_cf(dual).entries != tuple(reversed(expand_even_cf(s).entries)):
            raise AssertionError(f"reversal duality failed for {s} (dual {dual})")
        if inverse_slope(dual) != s:
            raise AssertionError(f"inverse is not an involution at {s}")
        count += 1
    return f"{count} slopes, p <= {p_max}"


def check_mirror(p_max):
    for s in canonical_slopes(p_max):
        mirrored = expand_even_cf(s.mirror()).entries
        if mirrored != tuple(-c for c in expand_even_cf(s).entries):
            raise AssertionError(f"mirror negation failed for {s}")
        if genera.genus_profile(s.mirror()).genera != genera.genus_profile(s).genera:
            raise AssertionError(f"profile not mirror invariant for {s}")
    return f"p <= {p_max}"


def check_gap_witnesses(limit=6):
    for g in range(1, limit + 1):
        for ghat in range(g, limit + 1):
            s, mc = genera.find_gap_example(g, ghat)
            if (genera.seifert_genus(s), genera.equivariant_genus(s, mc)) != (g, ghat):
                raise AssertionError(f"gap witness ({g},{ghat}) wrong: {s}")
    for d in range(-limit, limit + 1):
        s, (short, long_) = genera.find_arc_gap_example(d)
        got = genera.equivariant_genus(s, short) - genera.equivariant_genus(s, long_)
        if got != d:
            raise AssertionError(f"arc-gap witness {d} wrong: {s}")
    return f"(g, ghat) and d up to {limit}"


def check_complex_oracles(n_max=3):
    for n in range(1, n_max + 1):
        report = kakimizu.oracle_cross_check(n)
        if not report.match:
            raise AssertionError(f"K({n}) constructions disagree: {report}")
        kc = kakimizu.build_full_complex(n)
        if kakimizu.triangulation_volume(kc) != 2 ** (2 * n - 1):
            raise AssertionError(f"K({n}) top simplices do not fill the cube")
        if kc.euler_characteristic != 1:
            raise AssertionError(f"chi(K({n})) = {kc.euler_characteristic} != 1")
    return f"n <= {n_max}"


def check_quotients(p_max):
    count = 0
    for s in canonical_slopes(p_max):
        kc = kakimizu.build_quotient_complex(s)
        n_h = len(kc.hopf.h_set)
        expected = 0 if n_h == kc.two_n else kc.two_n - 1 - n_h
        if kc.dim != expected:
            raise AssertionError(f"dim K(n;H) = {kc.dim} != {expected} for {s}")
        if kc.euler_characteristic != 1:
            raise AssertionError(f"chi = {kc.euler_characteristic} != 1 for {s}")
        rep = kakimizu.involution_h_report(s, kc)  # raises on dichotomy failure
        if rep.higher_invariant_simplices:
            raise AssertionError(f"invariant simplex of dim >= 2 for {s}")
        count += 1
    return f"{count} slopes, p <= {p_max}"


def check_exceptional_involution(p_max, n_max=5):
    count = 0
    for s in canonical_slopes(p_max):
        if (s.q * s.q) % s.p != 1:
            continue
        if expand_even_cf(s).n > n_max:
            continue
        kakimizu.involution_hprime_report(s)  # raises if dim != n - #H/2
        count += 1
    return f"{count} palindromic slopes, p <= {p_max}, n <= {n_max}"


def run_verify(p_max: int = 1001, out=None) -> bool:
    out = out or sys.stdout
    ok = True
    ok &= _check(out, "catalog golden table", check_catalog)
    ok &= _check(out, "expansion roundtrip and shape", lambda: check_roundtrip(p_max))
    ok &= _check(out, "reversal duality and involution", lambda: check_reversal_duality(p_max))
    ok &= _check(out, "mirror invariance", lambda: check_mirror(min(p_max, 301)))
    ok &= _check(out, "gap witnesses", check_gap_witnesses)
    ok &= _check(out, "full complex oracles", check_complex_oracles)
    ok &= _check(out, "quotient complexes", lambda: check_quotients(min(p_max, 200)))
    ok &= _check(out, "exceptional involution",
                 lambda: check_exceptional_involution(min(p_max, 500)))
    print("PASS" if ok else "FAIL", file=out)
    return bool(ok)
