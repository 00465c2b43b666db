#!/usr/bin/env python

"""Min-plus polynomials, their tropical hypersurfaces and tropical
prevarieties (intersections of hypersurfaces)."""

from concurrent.futures import ProcessPoolExecutor
import itertools
import logging

from . import config
from .exceptions import BadDimensions, DegenerateSystem, OrbitMismatch
from .numkernel import INF, is_inf, parse_tvalue, format_tvalue
from .polyhedra import Orbit, Polyhedron, PolyComplex

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


logger = logging.getLogger("tropfano.prevariety")


class TropPolynomial(object):
    """A min-plus polynomial min_k (c_k + a_k.x).

    Terms are pairs (coefficient, exponent vector); a coefficient is a
    rational or INF.

    :Example:

    >>> F = TropPolynomial([(0, (1, 0, 0)), (0, (0, 1, 0)), (1, (0, 0, 1))])
    >>> F.evaluate((0, 0, 0))
    Fraction(0, 1)
    >>> sorted(F.achievers((0, 0, 0)))
    [0, 1]
    """
    def __init__(self, terms):
        parsed = []
        for c, exp in terms:
            exp = tuple(int(e) for e in exp)
            if any(e < 0 for e in exp):
                raise ValueError("Negative exponent in {}.".format(exp))
            parsed.append((parse_tvalue(c), exp))
        sizes = set(len(exp) for _, exp in parsed)
        if len(sizes) > 1:
            raise BadDimensions("Exponent vectors of different lengths: {}.".format(sorted(sizes)))
        self._terms = tuple(parsed)
        self._size = sizes.pop() if sizes else 0


    @property
    def terms(self):
        return self._terms


    @property
    def size(self):
        """Number of variables."""
        return self._size


    def finite_terms(self):
        """Indices of the terms with finite coefficient."""
        return tuple(k for k, (c, _) in enumerate(self._terms) if not is_inf(c))


    def _term_value(self, k, x):
        c, exp = self._terms[k]
        if is_inf(c) or any(e > 0 and is_inf(xi) for e, xi in zip(exp, x)):
            return INF
        return c + sum(e * xi for e, xi in zip(exp, x) if e != 0)


    def evaluate(self, x):
        """Minimum of the terms at x (INF entries of x allowed)."""
        if len(x) != self._size:
            raise BadDimensions("Point of length {} for a polynomial in {} variables.".format(
                len(x), self._size))
        values = [self._term_value(k, x) for k in range(len(self._terms))]
        finite = [v for v in values if not is_inf(v)]
        return min(finite) if finite else INF


    def achievers(self, x):
        """Indices of the finite terms attaining the minimum at x."""
        values = [self._term_value(k, x) for k in range(len(self._terms))]
        finite = [v for v in values if not is_inf(v)]
        if not finite:
            return frozenset()
        m = min(finite)
        return frozenset(k for k, v in enumerate(values) if not is_inf(v) and v == m)


    def restrict(self, I):
        """Polynomial on the coordinates outside I, keeping the finite
        terms that do not involve a coordinate in I.

        Returns the restricted polynomial and the indices of the kept
        terms in this polynomial.
        """
        I = set(I)
        free = [i for i in range(self._size) if i not in I]
        kept = [k for k in self.finite_terms()
                if all(self._terms[k][1][i] == 0 for i in I)]
        poly = TropPolynomial([(self._terms[k][0], tuple(self._terms[k][1][i] for i in free))
                               for k in kept])
        if not kept:
            poly._size = len(free)
        return poly, tuple(kept)


    def pair_cell(self, i, j):
        """Closed cell where terms i and j are equal and minimal."""
        ci, ai = self._terms[i]
        cj, aj = self._terms[j]
        eqs = [([x - y for x, y in zip(ai, aj)], cj - ci)]
        ineqs = [([x - y for x, y in zip(ai, al)], cl - ci)
                 for l, (cl, al) in enumerate(self._terms)
                 if l not in (i, j) and not is_inf(cl)]
        return Polyhedron(self._size, ineqs, (), eqs)


    def type_cell(self, T):
        """Closed cell where every term of T attains the minimum."""
        T = sorted(T)
        c0, a0 = self._terms[T[0]]
        eqs = []
        for k in T[1:]:
            ck, ak = self._terms[k]
            eqs.append(([x - y for x, y in zip(a0, ak)], ck - c0))
        ineqs = [([x - y for x, y in zip(a0, al)], cl - c0)
                 for l, (cl, al) in enumerate(self._terms)
                 if l not in T and not is_inf(cl)]
        return Polyhedron(self._size, ineqs, (), eqs)


    def is_homogeneous_coeffs(self):
        """True if all finite coefficients agree (the hypersurface is a fan)."""
        return len(set(self._terms[k][0] for k in self.finite_terms())) <= 1


    def __str__(self):
        return " + ".join("{}*x^{}".format(format_tvalue(c), list(exp)) for c, exp in self._terms)


    def __repr__(self):
        return "TropPolynomial({})".format(self.__str__())


class TropSystem(object):
    """A list of tropical polynomials in n + 1 variables, with the
    orbit on which their prevariety is taken."""
    def __init__(self, n, polys, orbit = None):
        self.logger = logging.getLogger("tropfano.prevariety")
        self._n = int(n)
        self._polys = tuple(polys)
        self._orbit = orbit if orbit is not None else Orbit()
        for F in self._polys:
            if F.size != self._n + 1:
                raise BadDimensions("Polynomial in {} variables in a system of {}.".format(
                    F.size, self._n + 1))
            if len(F.finite_terms()) < 2:
                raise DegenerateSystem("Polynomial {} has fewer than two finite terms.".format(F))
        self._orbit.free(self._n + 1)
        self.logger.info("Created a system of {} polynomials in {} variables.".format(
            len(self._polys), self._n + 1))


    @property
    def n(self):
        return self._n


    @property
    def size(self):
        return self._n + 1


    @property
    def polys(self):
        return self._polys


    @property
    def orbit(self):
        return self._orbit


    def free(self):
        return self._orbit.free(self._n + 1)


    def restricted(self):
        """Orbit restriction of the polynomials.

        Returns (polys, index, empty): the restricted polynomials with at
        least two terms, for each the pair (original polynomial index,
        kept term indices), and whether some polynomial was left with a
        single term (which makes the prevariety empty).
        """
        polys, index, empty = [], [], False
        for m, F in enumerate(self._polys):
            G, kept = F.restrict(self._orbit.I)
            if len(kept) == 1:
                empty = True
            elif len(kept) >= 2:
                polys.append(G)
                index.append((m, kept))
        return polys, index, empty


    def __len__(self):
        return len(self._polys)


    def __repr__(self):
        return "TropSystem(n={}, polys={}, orbit={})".format(self._n, len(self._polys), self._orbit)


def trop_hypersurface(F):
    """Tropical hypersurface of F: one closed cell per pair of finite
    terms (both minimal), empty cells dropped.

    :Example:

    >>> F = TropPolynomial([(0, (1, 0, 0)), (0, (0, 1, 0)), (0, (0, 0, 1))])
    >>> len(trop_hypersurface(F).cells)
    3

    :rtype: PolyComplex.
    """
    finite = F.finite_terms()
    if len(finite) < 2:
        raise DegenerateSystem("Polynomial {} has fewer than two finite terms.".format(F))
    cells = [F.pair_cell(i, j) for i, j in itertools.combinations(finite, 2)]
    cells = [c for c in cells if c.feasible()[0]]
    return PolyComplex(F.size, cells, is_fan = F.is_homogeneous_coeffs())


def _type_cell(polys, typ, size):
    P = Polyhedron(size)
    for F, T in zip(polys, typ):
        P = P.intersect(F.type_cell(T))
    return P


def _split_cell(polys, k, typ, P):
    """Cells of the prevariety of polys[:k + 1] inside the cell P of type typ."""
    F = polys[k]
    found = {}
    for i, j in itertools.combinations(F.finite_terms(), 2):
        Q = P.intersect(F.pair_cell(i, j))
        x = Q.relint_point()
        if x is None:
            continue
        canonical = tuple(G.achievers(x) for G in polys[:k + 1])
        if canonical not in found:
            found[canonical] = x
    return [(T, x) for T, x in found.items()]


def _minimal_types(types):
    """Types that are pointwise minimal, i.e. whose cells are maximal."""
    def below(s, t):
        return s != t and all(a <= b for a, b in zip(s, t))
    return [t for t in types if not any(below(s, t) for s in types)]


def prevariety_cells(S):
    """Maximal cells of the prevariety of S restricted to its orbit.

    Each cell is reported as (polyhedron, type, point): the polyhedron
    lives on the finite coordinates of the orbit, the type maps each
    polynomial index to the indices of its terms attaining the minimum
    on the relative interior (None for polynomials vanishing on the
    orbit), and the point is in the relative interior.

    Polynomials are folded in by increasing number of terms; at each
    step every maximal cell is cut by the cells of the next
    hypersurface and only maximal cells are kept.
    """
    polys, index, empty = S.restricted()
    size = len(S.free())
    if empty:
        logger.info("A polynomial has a single term on the orbit: empty prevariety.")
        return []
    order = sorted(range(len(polys)), key = lambda m: len(polys[m].finite_terms()))
    polys = [polys[m] for m in order]
    index = [index[m] for m in order]
    workers = config.threads()
    cells = {(): tuple([0] * size)}
    for k in range(len(polys)):
        types = list(cells)
        parents = [_type_cell(polys, T, size) for T in types]
        if workers > 1 and len(types) > 1:
            with ProcessPoolExecutor(max_workers = workers) as executor:
                parts = list(executor.map(_split_cell, itertools.repeat(polys), itertools.repeat(k),
                                          types, parents))
        else:
            parts = [_split_cell(polys, k, T, P) for T, P in zip(types, parents)]
        found = {}
        for part in parts:
            for T, x in part:
                found.setdefault(T, x)
        cells = dict((T, found[T]) for T in _minimal_types(list(found)))
        logger.info("Step {}/{}: {} maximal cells.".format(k + 1, len(polys), len(cells)))
        if not cells:
            return []
    result = []
    for T in sorted(cells, key = lambda T: [sorted(A) for A in T]):
        typ = [None] * len(S.polys)
        for (m, kept), A in zip(index, T):
            typ[m] = frozenset(kept[a] for a in A)
        result.append((_type_cell(polys, T, size), tuple(typ), cells[T]))
    return result


def intersect_system(S):
    """Tropical prevariety of S on its orbit, as the complex of its
    maximal cells in the coordinates outside the orbit.

    :Example:

    >>> F = TropPolynomial([(0, (1, 0, 0)), (0, (0, 1, 0)), (0, (0, 0, 1))])
    >>> len(intersect_system(TropSystem(2, [F])).cells)
    3

    :rtype: PolyComplex.
    """
    free = S.free()
    cells = [P for P, _, _ in prevariety_cells(S)]
    polys, _, _ = S.restricted()
    is_fan = all(F.is_homogeneous_coeffs() for F in polys)
    return PolyComplex(len(free), cells, is_fan = is_fan, coordinates = free)


def member(x, S):
    """Test whether the point x (entries rational or INF) lies in the
    prevariety of S.

    The infinite coordinates of x must be exactly those of the orbit of S.
    """
    x = tuple(parse_tvalue(v) for v in x)
    if len(x) != S.size:
        raise BadDimensions("Point of length {} for a system in {} variables.".format(len(x), S.size))
    infinite = frozenset(i for i, v in enumerate(x) if is_inf(v))
    if infinite != S.orbit.I:
        raise OrbitMismatch("Point has infinite coordinates {} but the orbit is {}.".format(
            sorted(infinite), sorted(S.orbit.I)))
    for F in S.polys:
        finite = [k for k in F.finite_terms() if not is_inf(F._term_value(k, x))]
        if not finite:
            continue
        if len(F.achievers(x)) < 2:
            return False
    return True
