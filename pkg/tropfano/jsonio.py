#!/usr/bin/env python

"""Reading and writing the JSON forms of polynomials, systems, Plücker
vectors, matrices, lattice point sets, Cayley structures and complexes.

Rational numbers are written as strings "p/q", infinity as "inf"."""

import json

from .exceptions import MalformedInput, TropFanoError
from .numkernel import format_tvalue, parse_tvalue, tmatrix, to_fraction
from .polyhedra import Orbit, Polyhedron, PolyComplex, fan_stats
from .prevariety import TropPolynomial, TropSystem
from .toriclib import CayleyStructure, LatticePointSet
from .troplin import TropPluecker

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


def load_json(path):
    """Read a JSON file, reporting syntax errors with their position."""
    try:
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise MalformedInput("{}: line {}, column {}: {}.".format(path, e.lineno, e.colno, e.msg))
    except IOError as e:
        raise MalformedInput("Could not read {}: {}.".format(path, e))


def _field(data, key, what):
    if not isinstance(data, dict) or key not in data:
        raise MalformedInput("Missing field {!r} in {}.".format(key, what))
    return data[key]


def polynomial_from_dict(data):
    """Polynomial from {"terms": [{"coeff": "p/q" | "inf", "exp": [ints]}]}."""
    terms = []
    for term in _field(data, "terms", "polynomial"):
        try:
            terms.append((parse_tvalue(_field(term, "coeff", "term")),
                          [int(e) for e in _field(term, "exp", "term")]))
        except (TypeError, ValueError) as e:
            if isinstance(e, TropFanoError):
                raise
            raise MalformedInput("Bad term {!r}: {}.".format(term, e))
    return TropPolynomial(terms)


def polynomial_to_dict(F):
    return {"terms": [{"coeff": format_tvalue(c), "exp": list(exp)} for c, exp in F.terms]}


def system_from_dict(data):
    """System from {"ambient": n, "orbit": [ints], "polys": [...]}."""
    n = int(_field(data, "ambient", "system"))
    orbit = Orbit(data.get("orbit", []))
    polys = [polynomial_from_dict(F) for F in _field(data, "polys", "system")]
    return TropSystem(n, polys, orbit)


def system_to_dict(S):
    return {"ambient": S.n, "orbit": sorted(S.orbit.I), "polys": [polynomial_to_dict(F) for F in S.polys]}


def plucker_from_dict(data):
    """Plücker vector from {"d": d, "n": n, "entries": {"013": "p/q" | "inf", ...}}."""
    entries = _field(data, "entries", "Plücker vector")
    if not isinstance(entries, dict):
        raise MalformedInput("Plücker entries must be an object keyed by index strings.")
    try:
        return TropPluecker(int(_field(data, "d", "Plücker vector")), int(_field(data, "n", "Plücker vector")),
                            dict((str(k), v) for k, v in entries.items()))
    except TropFanoError:
        raise
    except ValueError as e:
        raise MalformedInput("Bad Plücker vector: {}.".format(e))


def plucker_to_dict(p):
    return p.to_dict()


def matrix_from_dict(data):
    """Matrix over Q(t) from {"matrix": [[entries]]}, entries numbers or strings in t."""
    rows = _field(data, "matrix", "matrix input")
    if not isinstance(rows, list) or not rows or any(len(r) != len(rows[0]) for r in rows):
        raise MalformedInput("A matrix must be a nonempty list of rows of equal length.")
    try:
        return tmatrix(rows)
    except Exception as e:
        raise MalformedInput("Could not parse matrix entries: {}.".format(e))


def lattice_from_dict(data):
    """Lattice point set from {"A": [[ints]]}."""
    return LatticePointSet(_field(data, "A", "lattice point set"))


def cayley_from_dict(data):
    """Cayley structure from {"s": s, "labels": [ints]}."""
    return CayleyStructure(_field(data, "s", "Cayley structure"), _field(data, "labels", "Cayley structure"))


def _vectors(vs):
    return [[str(x) for x in v] for v in vs]


def polyhedron_to_dict(P):
    """{"ineq": [[a_0, ..., a_n-1, b, strict]], "eq": [[a_0, ..., a_n-1, b]]}
    for a.x <= b (a.x < b when strict) and a.x = b."""
    ineq = [[str(x) for x in a] + [str(b), False] for a, b in P.ineqs]
    ineq += [[str(x) for x in a] + [str(b), True] for a, b in P.strict]
    return {"ineq": ineq, "eq": [[str(x) for x in a] + [str(b)] for a, b in P.eqs]}


def polyhedron_from_dict(data, n):
    ineqs, strict, eqs = [], [], []
    try:
        for row in data.get("ineq", []):
            if len(row) not in (n + 1, n + 2):
                raise MalformedInput("Inequality {!r} does not have {} or {} entries.".format(row, n + 1, n + 2))
            a, b = [to_fraction(x) for x in row[:n]], to_fraction(row[n])
            (strict if len(row) == n + 2 and row[n + 1] else ineqs).append((a, b))
        for row in data.get("eq", []):
            if len(row) != n + 1:
                raise MalformedInput("Equation {!r} does not have {} entries.".format(row, n + 1))
            eqs.append(([to_fraction(x) for x in row[:n]], to_fraction(row[n])))
    except (TypeError, ValueError, AttributeError) as e:
        if isinstance(e, TropFanoError):
            raise
        raise MalformedInput("Bad polyhedron {!r}: {}.".format(data, e))
    return Polyhedron(n, ineqs, strict, eqs)


def complex_to_dict(K, generators = True):
    """JSON form of a complex: {"ambient", "cells", "fan"} plus the
    coordinates, dimension data and canonical rays. If generators is
    set, each cell also carries its vertices, rays and lines."""
    cells = []
    for c in K.cells:
        cell = polyhedron_to_dict(c)
        if generators:
            V = c.generators()
            cell["vertices"] = _vectors(V.vertices)
            cell["rays"] = _vectors(V.rays)
            cell["lines"] = _vectors(V.lines)
        cells.append(cell)
    stats = fan_stats(K)
    return {"ambient": K.ambient, "coordinates": list(K.coordinates), "fan": K.is_fan,
            "cells": cells,
            "stats": {"dim": stats["dim"], "lineality_dim": stats["lineality_dim"],
                      "max_cells_by_dim": dict((str(k), v) for k, v in sorted(stats["max_cells_by_dim"].items()))},
            "rays": _vectors(K.rays())}


def complex_from_dict(data):
    """Complex from {"ambient": n, "cells": [...], "fan": bool}; extra
    fields such as generators are ignored."""
    try:
        n = int(_field(data, "ambient", "complex"))
    except (TypeError, ValueError) as e:
        raise MalformedInput("Bad ambient dimension: {}.".format(e))
    cells = [polyhedron_from_dict(c, n) for c in _field(data, "cells", "complex")]
    return PolyComplex(n, cells, bool(data.get("fan", False)), data.get("coordinates"))


def dumps(report):
    """Deterministic JSON text of a report."""
    return json.dumps(report, sort_keys = True, indent = 2)
