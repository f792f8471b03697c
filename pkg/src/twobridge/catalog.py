"""Catalog of 2-bridge knots: ingestion, computation, table rendering.

The package embeds a table of the 95 two-bridge knots up to 10
crossings.  Knot names and fractions follow the KnotInfo census (with
odd numerators replaced by an even representative of the same knot);
the continued fraction and genera columns are golden values that
:func:`verify_catalog` recomputes from the fraction alone and diffs,
row by row.

External tables are plain CSV with a header row.  Ingestion needs a
``name`` column and either a ``fraction`` column (``q/p``, odd
numerators allowed) or ``p`` and ``q`` columns, so the CSV produced by
:func:`render_table` loads back losslessly.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .genera import GenusProfile, SymmetryType, genus_profile
from .slopes import (
    EvenCF,
    Slope,
    SlopeError,
    canonicalize_slope,
    expand_even_cf,
    format_cf,
    inverse_slope,
    slope_predicates,
)

_EMBEDDED = "two_bridge_10crossings.csv"
_FRACTION_RE = re.compile(r"^([+-]?\d+)\s*/\s*(\d+)$")
_ATTRIBUTE_ORDER = ("torus", "fib", "sym")


class CatalogError(ValueError):
    """Catalog-level failure (malformed text, no usable rows, bad format)."""


def parse_fraction(text: str) -> Slope:
    """Parse ``q/p`` and canonicalize.

    Odd numerators are normalized by q -> q - p; since every computed
    invariant is mirror invariant, tables normalized the other way
    (q -> p - q) produce identical records.
    """
    m = _FRACTION_RE.match(text.strip())
    if m is None:
        raise CatalogError(f"malformed fraction {text!r} (expected q/p)")
    q, p = int(m.group(1)), int(m.group(2))
    return canonicalize_slope(p, q)


@dataclass(frozen=True)
class KnotRecord:
    """One catalog row: a named knot with everything recomputed."""

    name: str
    slope: Slope
    qprime: int
    cf: EvenCF
    profile: GenusProfile
    attributes: frozenset[str]

    @property
    def attribute_list(self) -> tuple[str, ...]:
        return tuple(a for a in _ATTRIBUTE_ORDER if a in self.attributes)


def compute_record(name: str, slope: Slope) -> KnotRecord:
    """Build the full record of a slope; attributes are never trusted
    from input, always recomputed."""
    pred = slope_predicates(slope)
    attrs = set()
    if pred.is_torus:
        attrs.add("torus")
    else:
        if pred.is_fibered:
            attrs.add("fib")
        if pred.is_palindromic:
            attrs.add("sym")
    return KnotRecord(
        name=name,
        slope=slope,
        qprime=inverse_slope(slope).q,
        cf=expand_even_cf(slope),
        profile=genus_profile(slope),
        attributes=frozenset(attrs),
    )


@dataclass
class CatalogLoad:
    """Parsed rows plus per-row errors (line numbers are 1-based)."""

    rows: list[tuple[str, Slope]]
    errors: list[tuple[int, str]]


def _open_source(source):
    if source is None:
        return resources.files(__package__).joinpath("data", _EMBEDDED).open(
            "r", encoding="utf-8")
    if isinstance(source, (str, Path)):
        return open(source, "r", encoding="utf-8", newline="")
    return source  # already a file-like object


def load_catalog(source=None) -> CatalogLoad:
    """Read ``name,fraction`` (or ``name,p,q``) rows from a CSV source.

    ``source`` may be a path, an open text file, or None for the
    embedded table.  Bad rows are collected, not fatal; an entirely
    unusable table raises :class:`CatalogError`.
    """
    rows: list[tuple[str, Slope]] = []
    errors: list[tuple[int, str]] = []
    fh = _open_source(source)
    try:
        reader = csv.DictReader(fh)
        fields = [f.strip() for f in reader.fieldnames or ()]
        if "name" not in fields or not (
                "fraction" in fields or {"p", "q"} <= set(fields)):
            raise CatalogError(
                f"header must contain 'name' and 'fraction' (or 'p' and 'q'), got {fields}")
        for lineno, row in enumerate(reader, start=2):
            try:
                name = (row.get("name") or "").strip()
                if not name:
                    raise CatalogError("missing name")
                if row.get("fraction"):
                    slope = parse_fraction(row["fraction"])
                else:
                    slope = canonicalize_slope(int(row["p"]), int(row["q"]))
                rows.append((name, slope))
            except (SlopeError, CatalogError, ValueError, TypeError) as exc:
                errors.append((lineno, str(exc)))
    finally:
        if source is None or isinstance(source, (str, Path)):
            fh.close()
    if not rows:
        raise CatalogError(f"no valid rows ({len(errors)} errors)")
    return CatalogLoad(rows=rows, errors=errors)


def compute_catalog(source=None) -> list[KnotRecord]:
    load = load_catalog(source)
    return [compute_record(name, slope) for name, slope in load.rows]


# ---------------------------------------------------------------------------
# Rendering


def genera_braces(rec: KnotRecord) -> str:
    """The braced genera cell in the style of the golden table.

    Torus rows show ``{g,torus}``.  Fibered rows suppress the four
    equal entries: ``{g,fib}``, plus ``sym`` when palindromic.
    Palindromic non-fibered rows suppress the two exceptional entries
    (equal to g) and show ``{g,sym,short,long}`` for the standard
    inversion.  Everything else shows all four genera after g.
    """
    g = rec.profile.genus
    attrs = rec.attributes
    if "torus" in attrs:
        return f"{{{g},torus}}"
    if "fib" in attrs:
        body = f"{g},fib" + (",sym" if "sym" in attrs else "")
        return f"{{{body}}}"
    genera = rec.profile.genera
    if "sym" in attrs:
        return f"{{{g},sym,{genera[0]},{genera[1]}}}"
    return "{" + ",".join(str(x) for x in (g,) + genera) + "}"


def _csv_text(records: list[KnotRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["name", "p", "q", "qprime", "cf", "genus", "genera", "attributes"])
    for r in records:
        w.writerow([
            r.name, r.slope.p, r.slope.q, r.qprime,
            format_cf(r.cf.entries),
            r.profile.genus,
            "[" + ",".join(str(x) for x in r.profile.genera) + "]",
            " ".join(r.attribute_list),
        ])
    return buf.getvalue()


def _json_text(records: list[KnotRecord]) -> str:
    out = []
    for r in records:
        out.append({
            "name": r.name,
            "p": r.slope.p,
            "q": r.slope.q,
            "qprime": r.qprime,
            "cf": list(r.cf.entries),
            "genus": r.profile.genus,
            "symmetry": r.profile.symmetry_type.value,
            "genera": [[mc.label, value] for mc, value in r.profile.entries],
            "attributes": list(r.attribute_list),
        })
    return json.dumps(out, indent=2) + "\n"


def _latex_name(name: str) -> str:
    cross, sub = name.split("_", 1)
    return f"{cross}_{{{sub}}}" if len(sub) > 1 else f"{cross}_{sub}"


def _latex_cf(cf: EvenCF) -> str:
    cells = [f"\\bar{{{-c}}}" if c < 0 else str(c) for c in cf.entries]
    return "\\{" + ",".join(cells) + "\\}"


def _latex_genera(rec: KnotRecord) -> str:
    body = genera_braces(rec)[1:-1]
    cells = [f"\\text{{{tok}}}" if tok.isalpha() else tok for tok in body.split(",")]
    return "\\{" + ",".join(cells) + "\\}"


def _latex_text(records: list[KnotRecord]) -> str:
    lines = [
        "\\begin{array}{|c|c|c|c|}",
        "\\hline",
        "K & q/p & \\text{cont.frac} & \\text{genera}\\\\ \\hline",
    ]
    for r in records:
        lines.append(
            f"{_latex_name(r.name)} & \\text{{{r.slope.q}/{r.slope.p}}} & "
            f"{_latex_cf(r.cf)} & {_latex_genera(r)} \\\\")
    lines += ["\\hline", "\\end{array}"]
    return "\n".join(lines) + "\n"


_RENDERERS = {"csv": _csv_text, "json": _json_text, "latex": _latex_text}


def render_table(records: list[KnotRecord], fmt: str = "csv") -> str:
    try:
        renderer = _RENDERERS[fmt]
    except KeyError:
        raise CatalogError(f"unknown format {fmt!r} (choose from {sorted(_RENDERERS)})")
    return renderer(records)


# ---------------------------------------------------------------------------
# Golden verification


@dataclass(frozen=True)
class RowCheck:
    name: str
    ok: bool
    expected_cf: str
    got_cf: str
    expected_genera: str
    got_genera: str
    expected_attributes: tuple[str, ...]
    got_attributes: tuple[str, ...]


@dataclass(frozen=True)
class CatalogReport:
    rows: tuple[RowCheck, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> tuple[RowCheck, ...]:
        return tuple(r for r in self.rows if not r.ok)

    def summary(self) -> str:
        good = sum(r.ok for r in self.rows)
        return f"{good}/{len(self.rows)} rows match"


def _golden_rows():
    with resources.files(__package__).joinpath("data", _EMBEDDED).open(
            "r", encoding="utf-8") as fh:
        yield from csv.DictReader(fh)


def verify_catalog() -> CatalogReport:
    """Recompute every embedded row from (name, fraction) alone and diff
    expansion, genera cell, and attributes against the golden columns."""
    checks = []
    for row in _golden_rows():
        rec = compute_record(row["name"], parse_fraction(row["fraction"]))
        got_cf = format_cf(rec.cf.entries)
        got_genera = genera_braces(rec)
        expected_attrs = tuple(
            tok for tok in row["genera"][1:-1].split(",") if tok.isalpha())
        check = RowCheck(
            name=rec.name,
            ok=(got_cf == row["cf"].replace(" ", "")
                and got_genera == row["genera"].replace(" ", "")
                and rec.attribute_list == expected_attrs),
            expected_cf=row["cf"],
            got_cf=got_cf,
            expected_genera=row["genera"],
            got_genera=got_genera,
            expected_attributes=expected_attrs,
            got_attributes=rec.attribute_list,
        )
        checks.append(check)
    return CatalogReport(rows=tuple(checks))
