#!/usr/bin/env python

"""Tropical Fano schemes: lines and planes in tropicalized linear spaces
and in general tropical varieties, and the classical Fano schemes of
planes they are compared with."""

from fractions import Fraction
import itertools
import logging
import sympy as sp

from .exceptions import BadDimensions, DegenerateInput, NotPluecker, OrbitMismatch, OutOfScope
from .numkernel import INF, exact_rank, is_inf, is_zero, kminors_val, tmatrix, wedge2_matrix
from .polyhedra import (Orbit, Polyhedron, PolyComplex, complement_pieces, contained_in_complex,
                        fan_stats, fm_project, maximal_cells)
from .prevariety import TropPolynomial, TropSystem, intersect_system, prevariety_cells
from .troplin import (TropPluecker, check_3term, circuit_sets, circuit_system, plucker_system,
                      realize_space, recession_fan, parse_key)

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


logger = logging.getLogger("tropfano.fano")


def plucker_coordinates(d, n):
    """The (d+1)-subsets of {0, ..., n} in lexicographic order."""
    return list(itertools.combinations(range(n + 1), d + 1))


def plucker_orbit(d, n, subsets):
    """Orbit of the Plücker space where the coordinates of the given
    subsets (tuples or string keys) are infinite.

    :Example:

    >>> plucker_orbit(1, 5, ["01", "23", "45"])
    Orbit([0, 9, 14])
    """
    coords = plucker_coordinates(d, n)
    pos = dict((S, k) for k, S in enumerate(coords))
    I = []
    for S in subsets:
        S = parse_key(S, n) if isinstance(S, str) else tuple(sorted(S))
        if S not in pos:
            raise DegenerateInput("{} is not a {}-subset of 0..{}.".format(S, d + 1, n))
        I.append(pos[S])
    return Orbit(I)


class FanoResult(object):
    """A tropical Fano scheme in an orbit of the Plücker space.

    The complex lives on the finite Plücker coordinates of the orbit;
    provenance is "incidence" or "projection".
    """
    def __init__(self, d, n, orbit, complex, provenance):
        self.logger = logging.getLogger("tropfano.fano")
        self.d = d
        self.n = n
        self.orbit = orbit
        self.complex = complex
        self.provenance = provenance
        self.logger.info("Fano scheme of {}-planes by {}: {} maximal cells.".format(
            d, provenance, len(complex)))


    @property
    def coordinates(self):
        return plucker_coordinates(self.d, self.n)


    def stats(self):
        return fan_stats(self.complex)


    def plucker_at(self, point):
        """Plücker vector with the given finite coordinates."""
        coords = self.coordinates
        free = self.orbit.free(len(coords))
        entries = dict((coords[k], INF) for k in self.orbit.I)
        entries.update((coords[k], Fraction(x)) for k, x in zip(free, point))
        return TropPluecker(self.d, self.n, entries)


    def contains(self, p):
        """True if the Plücker vector p is a point of the complex."""
        free = self.orbit.free(len(self.coordinates))
        coords = self.coordinates
        if set(k for k, S in enumerate(coords) if is_inf(p.get(S))) != set(self.orbit.I):
            return False
        return self.complex.contains_point([p.get(coords[k]) for k in free])


    def __repr__(self):
        return "FanoResult(d={}, n={}, orbit={}, cells={}, provenance={})".format(
            self.d, self.n, self.orbit, len(self.complex), self.provenance)


def incidence_system(w, d, orbit = None):
    """Incidence relations of d-planes in the tropical linear space of w.

    The variables are the Plücker coordinates p_S of d-planes. The system
    holds the three-term Plücker relations and, for S contained in T with
    |S| = d and |T| = e + 2, the polynomial min over i in T minus S of
    p_(S+i) + w_(T-i).

    :rtype: TropSystem.
    """
    e, n = w.d, w.n
    if d < 0 or d >= e:
        raise BadDimensions("Need 0 <= d < e, got d = {}, e = {}.".format(d, e))
    if not check_3term(w):
        raise NotPluecker("Vector violates the three-term Plücker relations.")
    coords = plucker_coordinates(d, n)
    pos = dict((S, k) for k, S in enumerate(coords))
    polys = list(plucker_system(d, n).polys)
    count = len(polys)
    for T in itertools.combinations(range(n + 1), e + 2):
        for S in itertools.combinations(T, d):
            terms = []
            for i in T:
                if i in S:
                    continue
                exp = [0] * len(coords)
                exp[pos[tuple(sorted(S + (i,)))]] = 1
                terms.append((w.get([j for j in T if j != i]), tuple(exp)))
            if sum(1 for c, _ in terms if not is_inf(c)) >= 2:
                polys.append(TropPolynomial(terms))
    logger.info("Incidence system: {} Plücker and {} incidence polynomials.".format(
        count, len(polys) - count))
    return TropSystem(len(coords) - 1, polys, orbit)


def fano_linear(w, d, orbit = None):
    """F_d of the tropical linear space of w as the prevariety of the
    incidence relations.

    :rtype: FanoResult.
    """
    orbit = orbit if orbit is not None else Orbit()
    K = intersect_system(incidence_system(w, d, orbit))
    return FanoResult(d, w.n, orbit, K, "incidence")


def contains_line(p, tropX, orbit = None):
    """Test whether the tropical linear space of p, in the orbit where the
    coordinates in orbit are infinite, lies in the complex tropX.

    Returns (True, None) or (False, witness) with witness a point of the
    linear space outside tropX.
    """
    orbit = orbit if orbit is not None else Orbit()
    free = orbit.free(p.n + 1)
    if tuple(tropX.coordinates) != tuple(free) or tropX.ambient != len(free):
        raise OrbitMismatch("Complex on coordinates {} but the orbit leaves {} finite.".format(
            list(tropX.coordinates), list(free)))
    G = realize_space(p, orbit)
    for cell in G.complex.cells:
        ok, witness = contained_in_complex(cell, tropX)
        if not ok:
            return False, witness
    return True, None


def _loops_of_orbit(orbit, n):
    """Coordinates i whose pairs {i, j} are all in the Plücker orbit."""
    coords = plucker_coordinates(1, n)
    return Orbit(i for i in range(n + 1)
                 if all(k in orbit for k, S in enumerate(coords) if i in S))


def _complement(K):
    """Open polyhedra covering the complement of the support of K."""
    pieces = [Polyhedron(K.ambient)]
    for cell in K.cells:
        split = complement_pieces(cell)
        nxt = []
        for Q in pieces:
            if Q.intersect(cell).is_empty():
                nxt.append(Q)
                continue
            for piece in split:
                R = Q.intersect(piece)
                if R.feasible()[0]:
                    nxt.append(R)
        pieces = nxt
    logger.debug("Complement of {} cells in {} pieces.".format(len(K.cells), len(pieces)))
    return pieces


def _subtract(pieces, B):
    """Pieces of the set difference of the union of pieces and B."""
    result = []
    split = None
    for Q in pieces:
        if Q.intersect(B).is_empty():
            result.append(Q)
            continue
        if split is None:
            split = complement_pieces(B)
        for piece in split:
            R = Q.intersect(piece)
            if R.feasible()[0]:
                result.append(R)
    return result


def _lifted_cells(p0, loops, pfree, xfree):
    """Polyhedra {(p, x) : x in the cell of type tau of the linear space of p}
    for the maximal cell types tau of the linear space of p0.

    Every term x_a + p_(T-a) of a circuit polynomial is linear in (p, x),
    so each cell type gives one polyhedron in the joint space.
    """
    coords = plucker_coordinates(1, p0.n)
    ppos = dict((coords[k], i) for i, k in enumerate(pfree))
    xpos = dict((a, len(pfree) + i) for i, a in enumerate(xfree))
    total = len(pfree) + len(xfree)
    Ts = circuit_sets(p0)
    cells = prevariety_cells(circuit_system(p0, loops))

    def form(T, a):
        v = [0] * total
        v[xpos[a]] += 1
        v[ppos[tuple(j for j in T if j != a)]] += 1
        return v

    def live(T, a):
        return a not in loops and tuple(j for j in T if j != a) in ppos

    lifted = []
    for _, typ, _ in cells:
        eqs, ineqs = [], []
        for T, A in zip(Ts, typ):
            if A is None:
                continue
            A = sorted(T[k] for k in A)
            f0 = form(T, A[0])
            for a in A[1:]:
                eqs.append(([x - y for x, y in zip(f0, form(T, a))], 0))
            for b in T:
                if b not in A and live(T, b):
                    ineqs.append(([x - y for x, y in zip(f0, form(T, b))], 0))
        lifted.append(Polyhedron(total, ineqs, (), eqs))
    return lifted


def fano_general(tropX, n, orbit = None, d = 1):
    """F_1(tropX) in an orbit of the Plücker space, by projection.

    For each maximal cell C of the Plücker prevariety, the cells of the
    tropical lines over C are described by polyhedra in (p, x) read off
    from the cell types at an interior point. Intersecting them with the
    open pieces of the complement of tropX and projecting to p gives the
    set of p in C whose line leaves tropX; its complement in C, closed,
    is the part of the Fano scheme over C.

    :rtype: FanoResult.
    """
    if d != 1:
        raise OutOfScope("Projection route supports lines only, got d = {}.".format(d))
    if n > 5:
        raise OutOfScope("Projection route supports n <= 5, got n = {}.".format(n))
    orbit = orbit if orbit is not None else Orbit()
    coords = plucker_coordinates(1, n)
    pfree = orbit.free(len(coords))
    loops = _loops_of_orbit(orbit, n)
    xfree = loops.free(n + 1)
    if tuple(tropX.coordinates) != tuple(xfree) or tropX.ambient != len(xfree):
        raise OrbitMismatch("Complex on coordinates {} but lines live on {}.".format(
            list(tropX.coordinates), list(xfree)))
    outside = _complement(tropX)
    base = prevariety_cells(plucker_system(1, n, orbit))
    total = len(pfree) + len(xfree)
    cells = []
    for step, (C, _, point) in enumerate(base):
        entries = dict((coords[k], INF) for k in orbit.I)
        entries.update((coords[k], x) for k, x in zip(pfree, point))
        p0 = TropPluecker(1, n, entries)
        Cx = C.embed(total, 0)
        good = [C]
        for Q in _lifted_cells(p0, loops, pfree, xfree):
            Q = Q.intersect(Cx)
            for U in outside:
                R = Q.intersect(U.embed(total, len(pfree)))
                if not R.feasible()[0]:
                    continue
                good = _subtract(good, fm_project(R, range(len(pfree))))
                if not good:
                    break
            if not good:
                break
        logger.info("Cell {}/{}: {} good pieces.".format(step + 1, len(base), len(good)))
        cells += [G.closure() for G in good]
    cells = maximal_cells(cells)
    is_fan = tropX.is_fan and all(c.is_cone() for c in cells)
    K = PolyComplex(len(pfree), cells, is_fan, pfree)
    return FanoResult(1, n, orbit, K, "projection")


def classical_plane_fano_trop(L):
    """Tropicalization of the Fano scheme of lines of the plane spanned
    by the rows of L (3 x (n+1) over Q(t)): the tropical linear space of
    the second exterior power of L, in the Plücker coordinates of lines.

    :rtype: PolyComplex.
    """
    L = tmatrix(L.tolist()) if isinstance(L, sp.MatrixBase) else tmatrix(L)
    if L.rows != 3 or exact_rank(L) < 3:
        raise DegenerateInput("Need a 3 x (n+1) matrix of rank 3.")
    return realize_space(kminors_val(wedge2_matrix(L), 3)).complex


def _pair_vectors(L):
    """Cross products c_ij of the columns of L: w_ij is the point c_ij^T L."""
    vectors = {}
    for i, j in itertools.combinations(range(L.cols), 2):
        c = L.col(i).cross(L.col(j)).applyfunc(sp.cancel)
        if all(is_zero(x) for x in c):
            raise DegenerateInput("Columns {} and {} are parallel: w_{}{} is not a point.".format(
                i, j, i, j))
        vectors[(i, j)] = c
    return vectors


def _disjoint_pairings(m):
    pairs = list(itertools.combinations(range(m), 2))
    for P in itertools.combinations(pairs, 3):
        if len(set(i for pair in P for i in pair)) == 6:
            yield P


def genericity_check(L):
    """Genericity conditions of a plane L (3 x (n+1)):

    (I) no three of the lines {x_i = 0} in L meet, i.e. every 3 x 3
    minor of L is nonzero; (II) for three pairwise disjoint pairs, the
    points w_ij = L cap {x_i = x_j = 0} are not collinear.

    :Example:

    >>> L = [[1, 3, 0, 1, 5, 7], [0, 0, 1, 3, -1, -1], [1, 4, -1, -3, 0, 0]]
    >>> genericity_check(L)["witnesses"]["cond_II"][0]
    ((0, 1), (2, 3), (4, 5))
    """
    L = tmatrix(L.tolist()) if isinstance(L, sp.MatrixBase) else tmatrix(L)
    if L.rows != 3 or exact_rank(L) < 3:
        raise DegenerateInput("Need a 3 x (n+1) matrix of rank 3.")
    vectors = _pair_vectors(L)
    bad_I = [T for T in itertools.combinations(range(L.cols), 3)
             if is_zero(L.extract([0, 1, 2], list(T)).det(method = "bareiss"))]
    bad_II = [P for P in _disjoint_pairings(L.cols)
              if is_zero(sp.Matrix.hstack(*[vectors[pair] for pair in P]).det(method = "bareiss"))]
    return {"cond_I": not bad_I, "cond_II": not bad_II,
            "witnesses": {"cond_I": bad_I, "cond_II": bad_II}}


def pairing_line(L, pairing):
    """Line of L through the points w_ij of a pairing, if they are collinear.

    Returns None when the points span the plane; otherwise (B, certified)
    with B a 2 x (n+1) basis of the line and certified telling whether
    the recession fan of its tropicalization has exactly the rays
    e_i + e_j of the pairs.
    """
    pairing = [tuple(sorted(pair)) for pair in pairing]
    if len(pairing) < 3:
        raise DegenerateInput("A pairing needs at least 3 pairs, got {}.".format(len(pairing)))
    used = [i for pair in pairing for i in pair]
    if len(set(used)) != len(used) or any(len(pair) != 2 for pair in pairing):
        raise DegenerateInput("Pairs of {} are not disjoint pairs.".format(pairing))
    L = tmatrix(L.tolist()) if isinstance(L, sp.MatrixBase) else tmatrix(L)
    if L.rows != 3 or exact_rank(L) < 3:
        raise DegenerateInput("Need a 3 x (n+1) matrix of rank 3.")
    if any(i < 0 or i >= L.cols for i in used):
        raise DegenerateInput("Pairing {} uses indices outside 0..{}.".format(pairing, L.cols - 1))
    vectors = _pair_vectors(L)
    cs = [vectors[pair] for pair in pairing]
    if exact_rank(sp.Matrix.hstack(*cs)) != 2:
        return None
    first = cs[0]
    second = next(c for c in cs[1:] if exact_rank(first.row_join(c)) == 2)
    B = sp.Matrix.vstack(first.T * L, second.T * L).applyfunc(sp.cancel)
    G = realize_space(kminors_val(B, 2))
    rays = set(recession_fan(G).rays())
    expected = set(tuple(1 if i in pair else 0 for i in range(L.cols)) for pair in pairing)
    return B, rays == expected


def snowflake_plucker(pairing, n):
    """Plücker vector of the tropical line whose cherries are the pairs:
    value 1 on the pairs and 0 on every other 2-subset.

    :Example:

    >>> p = snowflake_plucker([(0, 1), (2, 3), (4, 5)], 5)
    >>> p.get((0, 1)), p.get((0, 2))
    (Fraction(1, 1), Fraction(0, 1))
    """
    pairing = [tuple(sorted(pair)) for pair in pairing]
    used = [i for pair in pairing for i in pair]
    if len(set(used)) != len(used) or any(i < 0 or i > n for i in used):
        raise DegenerateInput("Pairs of {} are not disjoint pairs in 0..{}.".format(pairing, n))
    return TropPluecker(1, n, dict((S, 1 if S in pairing else 0) for S in plucker_coordinates(1, n)))
