"""JSON wire formats for every value the toolkit exchanges.

Formats are pinned for golden-file stability: fixed field order, terms
sorted by exponent, arbitrary-precision integers as decimal strings.

* FinMap      {"dom": n, "cod": m, "table": [...]}           (1-based)
* GenWord     {"dom": n, "cod": m, "gens": [{"kind": "epsilon|delta|sigma",
              "n": ..., "i": ...}, ...]}
* Poly        {"vars": a, "terms": [{"exp": [e1, ...], "num": "...",
              "den": "..."}, ...]}
* PolyMap     {"dom": a, "cod": b, "components": [Poly, ...]}
* SectorForm  {"n": ..., "m": ..., "k": ..., "body": PolyMap}
* ComplexReport: a flat object of integer rank lists.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cohomology import ComplexReport
from .fincard import FinMap, GenWord, Generator, RelationReport
from .poly import Poly, PolyMap
from .sector import SectorForm


class InputFormatError(ValueError):
    """Structurally wrong payload for the declared wire format."""


class JsonSyntaxError(InputFormatError):
    """The file is not JSON at all."""


def dumps(payload: dict) -> str:
    """Canonical rendering: fixed field order, two-space indent, one trailing
    newline, so identical requests give byte-identical reports."""
    return json.dumps(payload, indent=2) + "\n"


def _expect(payload, key, kind):
    if not isinstance(payload, dict) or key not in payload:
        raise InputFormatError(f"missing field {key!r}")
    value = payload[key]
    if kind is int and isinstance(value, bool) or not isinstance(value, kind):
        raise InputFormatError(f"field {key!r} should be {kind.__name__}")
    return value


# -- FinMap -------------------------------------------------------------

def finmap_to_dict(f: FinMap) -> dict:
    return {"dom": f.dom, "cod": f.cod, "table": list(f.table)}


def finmap_from_dict(payload: dict) -> FinMap:
    dom = _expect(payload, "dom", int)
    cod = _expect(payload, "cod", int)
    table = _expect(payload, "table", list)
    try:
        return FinMap(dom, cod, tuple(table))
    except (TypeError, ValueError) as err:
        raise InputFormatError(str(err)) from None


# -- GenWord ------------------------------------------------------------

def genword_to_dict(w: GenWord) -> dict:
    return {"dom": w.dom, "cod": w.cod,
            "gens": [{"kind": g.kind, "n": g.n, "i": g.i} for g in w.gens]}


def genword_from_dict(payload: dict) -> GenWord:
    dom = _expect(payload, "dom", int)
    cod = _expect(payload, "cod", int)
    gens = []
    for entry in _expect(payload, "gens", list):
        kind = _expect(entry, "kind", str)
        gens.append(Generator(kind, _expect(entry, "n", int), _expect(entry, "i", int)))
    try:
        return GenWord(dom, cod, tuple(gens))
    except ValueError as err:
        raise InputFormatError(str(err)) from None


# -- Poly / PolyMap -------------------------------------------------------

def poly_to_dict(p: Poly) -> dict:
    terms = []
    for exp in sorted(p.terms):
        c = p.terms[exp]
        terms.append({"exp": list(exp), "num": str(c.numerator), "den": str(c.denominator)})
    return {"vars": p.nvars, "terms": terms}


def poly_from_dict(payload: dict) -> Poly:
    nvars = _expect(payload, "vars", int)
    terms = {}
    for entry in _expect(payload, "terms", list):
        exp = tuple(_expect(entry, "exp", list))
        num = _expect(entry, "num", str)
        den = _expect(entry, "den", str)
        try:
            coeff = Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as err:
            raise InputFormatError(f"bad coefficient {num}/{den}") from None
        terms[exp] = terms.get(exp, Fraction(0)) + coeff
    try:
        return Poly(nvars, terms)
    except (TypeError, ValueError) as err:
        raise InputFormatError(str(err)) from None


def polymap_to_dict(f: PolyMap) -> dict:
    return {"dom": f.dom_dim, "cod": f.cod_dim,
            "components": [poly_to_dict(c) for c in f.components]}


def polymap_from_dict(payload: dict) -> PolyMap:
    dom = _expect(payload, "dom", int)
    cod = _expect(payload, "cod", int)
    comps = tuple(poly_from_dict(c) for c in _expect(payload, "components", list))
    try:
        return PolyMap(dom, cod, comps)
    except ValueError as err:
        raise InputFormatError(str(err)) from None


# -- SectorForm -----------------------------------------------------------

def sectorform_to_dict(w: SectorForm) -> dict:
    return {"n": w.n, "m": w.m, "k": w.k, "body": polymap_to_dict(w.body)}


def sectorform_from_dict(payload: dict) -> SectorForm:
    n = _expect(payload, "n", int)
    m = _expect(payload, "m", int)
    k = _expect(payload, "k", int)
    body = polymap_from_dict(_expect(payload, "body", dict))
    try:
        return SectorForm(n, m, k, body)
    except ValueError as err:
        raise InputFormatError(str(err)) from None


# -- reports ---------------------------------------------------------------

def relation_report_to_dict(rep: RelationReport) -> dict:
    return {"family": rep.family, "bound": rep.bound, "checked": rep.checked,
            "failures": [dict(f) for f in rep.failures]}


def complex_report_to_dict(rep: ComplexReport) -> dict:
    return {
        "dim": rep.base_dim,
        "degree_bound": rep.degree_bound,
        "levels": rep.levels,
        "dims": list(rep.dims),
        "kernel_dims": list(rep.kernel_dims),
        "boundary_ranks": list(rep.boundary_ranks),
        "image_ranks_raised": list(rep.image_ranks_raised),
        "H": list(rep.cohomology),
        "singular_dims": list(rep.singular_dims),
        "singular_kernel_dims": list(rep.singular_kernel_dims),
        "singular_boundary_ranks": list(rep.singular_boundary_ranks),
        "singular_image_ranks_raised": list(rep.singular_image_ranks_raised),
        "singular_H": list(rep.singular_cohomology),
        "complex_verified": rep.complex_verified,
    }


def load_json_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as err:
        raise InputFormatError(f"cannot read {path}: {err}") from None
    except json.JSONDecodeError as err:
        raise JsonSyntaxError(f"malformed JSON in {path}: {err}") from None
