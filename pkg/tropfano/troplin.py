#!/usr/bin/env python

"""Tropical Plücker vectors and the tropicalized linear spaces they define."""

from fractions import Fraction
import itertools
import logging

from .exceptions import DegenerateInput, NotPluecker, OutOfScope
from .matroids import bergman_fan, matroid_from_plucker
from .numkernel import INF, is_inf, parse_tvalue, format_tvalue, trop_mul, primitive
from .polyhedra import Orbit, PolyComplex, fan_stats, maximal_cells
from .prevariety import TropPolynomial, TropSystem, intersect_system

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


logger = logging.getLogger("tropfano.troplin")


def key_str(S, n):
    """String key of a subset: digits for n <= 9, comma separated otherwise.

    :Example:

    >>> key_str((0, 1, 3), 5)
    '013'
    >>> key_str((0, 10), 11)
    '0,10'
    """
    if n <= 9:
        return "".join(str(i) for i in S)
    return ",".join(str(i) for i in S)


def parse_key(s, n):
    s = s.strip()
    if n <= 9 and "," not in s:
        return tuple(int(c) for c in s)
    return tuple(int(c) for c in s.split(",") if c.strip() != "")


class TropPluecker(object):
    """A tropical Plücker vector: values on the (d+1)-subsets of {0, ..., n}.

    Missing subsets get the value INF. Entries are shifted so that the
    smallest finite entry is 0.

    :Example:

    >>> p = TropPluecker(1, 3, {"01": 1, "23": 2})
    >>> p.get((0, 1)), p.get((2, 3)), p.get((0, 2))
    (Fraction(0, 1), Fraction(1, 1), oo)
    """
    def __init__(self, d, n, entries):
        self._d = int(d)
        self._n = int(n)
        if self._d < 0 or self._d > self._n:
            raise DegenerateInput("Need 0 <= d <= n, got d = {}, n = {}.".format(d, n))
        values = dict((S, INF) for S in itertools.combinations(range(self._n + 1), self._d + 1))
        for key, v in entries.items():
            S = parse_key(key, self._n) if isinstance(key, str) else tuple(sorted(int(i) for i in key))
            if S not in values:
                raise DegenerateInput("{} is not a {}-subset of 0..{}.".format(key, self._d + 1, self._n))
            values[S] = parse_tvalue(v)
        finite = [v for v in values.values() if not is_inf(v)]
        if not finite:
            raise DegenerateInput("Plücker vector has no finite coordinate.")
        m = min(finite)
        self._entries = dict((S, v if is_inf(v) else v - m) for S, v in values.items())


    @property
    def d(self):
        return self._d


    @property
    def n(self):
        return self._n


    @property
    def entries(self):
        """Dictionary from sorted (d+1)-tuples to values."""
        return self._entries


    def get(self, S):
        return self._entries.get(tuple(sorted(S)), INF)


    def support(self):
        return [S for S, v in self._entries.items() if not is_inf(v)]


    def is_trivial(self):
        """True if every finite entry is 0 (trivial valuation)."""
        return all(is_inf(v) or v == 0 for v in self._entries.values())


    def to_dict(self):
        return {"d": self._d, "n": self._n,
                "entries": dict((key_str(S, self._n), format_tvalue(v))
                                for S, v in sorted(self._entries.items()))}


    def __eq__(self, other):
        return isinstance(other, TropPluecker) and self._d == other.d and \
               self._n == other.n and self._entries == other.entries


    def __hash__(self):
        return hash((self._d, self._n, tuple(sorted(self._entries.items()))))


    def __repr__(self):
        return "TropPluecker(d={}, n={}, entries={})".format(self._d, self._n, self.to_dict()["entries"])


def check_3term(p):
    """Three-term tropical Plücker relations.

    For every (d-1)-subset S and four indices i < j < k < l outside S,
    the minimum of p_Sij + p_Skl, p_Sik + p_Sjl and p_Sil + p_Sjk must
    be attained at least twice (or all three be infinite).

    :Example:

    >>> check_3term(TropPluecker(1, 3, {"01": 0, "02": 1, "03": 1, "12": 0, "13": 0, "23": 0}))
    False
    """
    d, n = p.d, p.n
    if d == 0:
        return True
    for S in itertools.combinations(range(n + 1), d - 1):
        rest = [i for i in range(n + 1) if i not in S]
        for i, j, k, l in itertools.combinations(rest, 4):
            def val(a, b, c, e):
                return trop_mul(p.get(S + (a, b)), p.get(S + (c, e)))
            terms = [v for v in (val(i, j, k, l), val(i, k, j, l), val(i, l, j, k)) if not is_inf(v)]
            if terms and terms.count(min(terms)) < 2:
                logger.debug("Relation fails at S={} and {}.".format(S, (i, j, k, l)))
                return False
    return True


def circuit_system(p, orbit = None):
    """System of the circuit polynomials of p: for each (d+2)-subset T,
    the minimum over i in T of x_i + p_(T minus i), kept when at least
    two coefficients are finite.

    :rtype: TropSystem.
    """
    if not check_3term(p):
        raise NotPluecker("Vector violates the three-term Plücker relations.")
    size = p.n + 1
    polys = []
    for T in circuit_sets(p):
        terms = []
        for i in T:
            exp = [0] * size
            exp[i] = 1
            terms.append((p.get([j for j in T if j != i]), tuple(exp)))
        polys.append(TropPolynomial(terms))
    return TropSystem(p.n, polys, orbit)


def circuit_sets(p):
    """The (d+2)-subsets T, in lexicographic order, with at least two
    finite values p_(T minus i)."""
    return [T for T in itertools.combinations(range(p.n + 1), p.d + 2)
            if sum(1 for i in T if not is_inf(p.get([j for j in T if j != i]))) >= 2]


def plucker_system(d, n, orbit = None):
    """The three-term Plücker relations as a system in the variables
    p_S, S running over the (d+1)-subsets in lexicographic order.

    :rtype: TropSystem.
    """
    variables = list(itertools.combinations(range(n + 1), d + 1))
    pos = dict((S, k) for k, S in enumerate(variables))
    N = len(variables)

    def mono(A, B):
        exp = [0] * N
        exp[pos[tuple(sorted(A))]] += 1
        exp[pos[tuple(sorted(B))]] += 1
        return tuple(exp)

    polys = []
    if d >= 1:
        for S in itertools.combinations(range(n + 1), d - 1):
            rest = [i for i in range(n + 1) if i not in S]
            for i, j, k, l in itertools.combinations(rest, 4):
                polys.append(TropPolynomial([
                    (0, mono(S + (i, j), S + (k, l))),
                    (0, mono(S + (i, k), S + (j, l))),
                    (0, mono(S + (i, l), S + (j, k)))]))
    return TropSystem(N - 1, polys, orbit)


def translate(p, v):
    """Torus action on Plücker vectors: p_S + sum of v_i over i in S.
    Moves the linear space of p by v."""
    v = [Fraction(x) for x in v]
    if len(v) != p.n + 1:
        raise DegenerateInput("Translation of length {} for n = {}.".format(len(v), p.n))
    return TropPluecker(p.d, p.n, dict((S, INF if is_inf(x) else x + sum(v[i] for i in S))
                                       for S, x in p.entries.items()))


class TropLinearSpace(object):
    """Tropicalized linear space of a Plücker vector in an orbit, with
    its realized complex (coordinates outside the orbit)."""
    def __init__(self, plucker, complex, orbit):
        self.logger = logging.getLogger("tropfano.troplin")
        self.plucker = plucker
        self.complex = complex
        self.orbit = orbit
        self.logger.info("Realized a tropical linear space with {} maximal cells.".format(len(complex)))


    @property
    def d(self):
        return self.plucker.d


    def is_empty(self):
        return self.complex.is_empty()


    def dim(self):
        """Dimension modulo R*1."""
        return fan_stats(self.complex)["dim"]


    def __repr__(self):
        return "TropLinearSpace(d={}, n={}, orbit={}, cells={})".format(
            self.plucker.d, self.plucker.n, self.orbit, len(self.complex))


def realize_space(p, orbit = None):
    """Realize the tropicalized linear space of p in an orbit.

    Loops of the matroid outside the orbit give the empty complex. With
    trivial valuation in the torus the Bergman fan is returned; otherwise
    the prevariety of the circuit system is computed.

    :rtype: TropLinearSpace.
    """
    orbit = orbit if orbit is not None else Orbit()
    free = orbit.free(p.n + 1)
    M = matroid_from_plucker(p)
    loops = [i for i in M.loops() if i not in orbit]
    if loops:
        logger.info("Loops {} outside the orbit: empty space.".format(loops))
        return TropLinearSpace(p, PolyComplex(len(free), [], True, free), orbit)
    if orbit.is_torus() and p.is_trivial():
        return TropLinearSpace(p, bergman_fan(M), orbit)
    return TropLinearSpace(p, intersect_system(circuit_system(p, orbit)).maximal(), orbit)


def recession_fan(G):
    """Fan of the recession cones of the cells of a tropical linear space.

    :rtype: PolyComplex.
    """
    K = G.complex
    cones = maximal_cells([c.recession_cone() for c in K.cells])
    return PolyComplex(K.ambient, cones, True, K.coordinates)


def _canonical(v):
    """Representative modulo R*1 with minimum coordinate 0."""
    m = min(v)
    return tuple(x - m for x in v)


def _opposite(u1, u2):
    return all(x == 0 for x in _canonical([a + b for a, b in zip(u1, u2)]))


def line_tree(G):
    """Tree of a tropical line: vertices, bounded edges with lattice
    lengths and leaves labelled by the coordinates of their rays.

    Vertices are taken modulo R*1 (minimum coordinate 0); two edges
    meeting in a vertex of valence two on a straight line are merged.
    Returns a dict with "vertices", "edges" (triples u, v, length) and
    "leaves" (triples vertex, primitive ray, label).
    """
    if G.d != 1:
        raise OutOfScope("Tree reporting needs a tropical line, got d = {}.".format(G.d))
    vertices = set()
    edges = {}
    rays = []
    for cell in G.complex.cells:
        V = cell.generators()
        pts = [_canonical(v) for v in V.vertices]
        vertices.update(pts)
        if V.rays:
            for r in V.rays:
                u = primitive(_canonical(r))
                if any(x != 0 for x in u):
                    rays.append((pts[0], u))
        elif len(pts) == 2 and pts[0] != pts[1]:
            edges[frozenset(pts)] = _length(pts[0], pts[1])
    rays = sorted(set(rays))

    def incident(v):
        items = [(e, w) for e in edges for w in e if v in e and w != v]
        items += [(None, r) for u, r in rays if u == v]
        return items

    changed = True
    while changed:
        changed = False
        for v in sorted(vertices):
            items = incident(v)
            if len(items) != 2:
                continue
            dirs = [primitive(_canonical([b - a for a, b in zip(v, w)])) if e is not None else w
                    for e, w in items]
            if not _opposite(dirs[0], dirs[1]):
                continue
            (e1, w1), (e2, w2) = items
            if e1 is None and e2 is None:
                continue
            if e1 is None or e2 is None:
                edge, w, ray = (e2, w2, w1) if e1 is None else (e1, w1, w2)
                del edges[edge]
                rays = sorted(set([(u, r) for u, r in rays if u != v] + [(w, ray)]))
            else:
                length = edges.pop(e1) + edges.pop(e2)
                edges[frozenset((w1, w2))] = length
            vertices.discard(v)
            changed = True
            break
    leaves = [(u, r, frozenset(i for i, x in enumerate(r) if x > 0)) for u, r in rays]
    return {"vertices": sorted(vertices),
            "edges": sorted((tuple(sorted(e)) + (l,) for e, l in edges.items())),
            "leaves": leaves}


def _length(u, v):
    """Lattice length of the segment from u to v modulo R*1."""
    diff = _canonical([b - a for a, b in zip(u, v)])
    prim = primitive(diff)
    k = next(i for i, x in enumerate(prim) if x != 0)
    return diff[k] / prim[k]
