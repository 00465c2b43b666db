#!/usr/bin/env python

"""Toric varieties of lattice point sets: tropicalization, binomials,
Cayley structures and lines realizing tropical lines."""

from fractions import Fraction
import itertools
import logging
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
import sympy as sp
import warnings

from .exceptions import DegenerateInput, Internal, NotContained, NotSurjective, OutOfScope
from .fano import contains_line
from .matroids import flats_minimal_and_chains, matroid_from_plucker
from .numkernel import is_zero, kminors_val, lattice_kernel, nullspace, t
from .polyhedra import Orbit, Polyhedron, PolyComplex
from .prevariety import member
from .troplin import TropPluecker, circuit_system, translate

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


logger = logging.getLogger("tropfano.toriclib")


class LatticePointSet(object):
    """Columns of an integer matrix A whose last row is all ones.

    :Example:

    >>> LatticePointSet([[1, 0, 0, 1], [1, 0, -1, 0], [1, 1, 1, 1]]).n
    3
    """
    def __init__(self, A):
        A = sp.Matrix(A)
        if any(not sp.sympify(x).is_integer for x in A):
            raise DegenerateInput("A lattice point set needs an integer matrix.")
        if A.rows == 0 or any(A[A.rows - 1, j] != 1 for j in range(A.cols)):
            raise DegenerateInput("The last row of A must be all ones.")
        self.A = A


    @property
    def n(self):
        """Index of the last column."""
        return self.A.cols - 1


    def rows(self):
        return [[int(x) for x in self.A.row(i)] for i in range(self.A.rows)]


    def __repr__(self):
        return "LatticePointSet({})".format(self.rows())


def _lattice(A):
    return A if isinstance(A, LatticePointSet) else LatticePointSet(A)


class CayleyStructure(object):
    """A labelling of the columns of A by the vertices 0, ..., s of a simplex."""
    def __init__(self, s, labels):
        self.s = int(s)
        self.labels = tuple(int(x) for x in labels)


    def classes(self):
        """Column indices sent to each vertex."""
        return [frozenset(i for i, x in enumerate(self.labels) if x == k) for k in range(self.s + 1)]


    def to_dict(self):
        return {"s": self.s, "labels": list(self.labels)}


    def __eq__(self, other):
        return isinstance(other, CayleyStructure) and self.s == other.s and self.labels == other.labels


    def __repr__(self):
        return "CayleyStructure(s={}, labels={})".format(self.s, list(self.labels))


def restrict_lattice_set(A, orbit):
    """Lattice point set of the toric variety in a boundary orbit:
    the columns outside the orbit."""
    A = _lattice(A)
    keep = orbit.free(A.A.cols)
    return LatticePointSet(A.A.extract(list(range(A.A.rows)), list(keep)))


def trop_toric(A):
    """Tropicalization of the toric variety of A in the torus: the row
    space of A, as a single linear cell.

    :Example:

    >>> trop_toric([[1, 0, 0, 1], [1, 0, -1, 0], [1, 1, 1, 1]]).cells[0].eqs
    (((Fraction(1, 1), Fraction(-1, 1), Fraction(1, 1), Fraction(-1, 1)), Fraction(0, 1)),)

    :rtype: PolyComplex.
    """
    A = _lattice(A)
    size = A.A.cols
    kernel = nullspace(A.rows(), size)
    return PolyComplex(size, [Polyhedron(size, eqs = [(l, 0) for l in kernel])], is_fan = True)


def toric_binomials(A):
    """Binomials x^(l+) - x^(l-) for a lattice basis l of the kernel of A,
    as pairs of exponent vectors.

    :Example:

    >>> toric_binomials([[1, 0, 0, 1], [1, 0, -1, 0], [1, 1, 1, 1]])
    [((1, 0, 1, 0), (0, 1, 0, 1))]
    """
    A = _lattice(A)
    return [(tuple(max(x, 0) for x in l), tuple(max(-x, 0) for x in l))
            for l in lattice_kernel(A.A)]


def verify_cayley(A, pi):
    """Check that pi is a Cayley structure on the columns of A.

    The labels must be onto {0, ..., s} and, for each vector l of a
    lattice basis of the kernel of A, the entries of l must sum to zero
    over every class of columns with the same label.
    """
    A = _lattice(A)
    if len(pi.labels) != A.A.cols:
        raise DegenerateInput("Need one label per column: {} labels for {} columns.".format(
            len(pi.labels), A.A.cols))
    missing = [k for k in range(pi.s + 1) if k not in pi.labels]
    if missing or any(x < 0 or x > pi.s for x in pi.labels):
        raise NotSurjective("Labels {} do not map onto 0..{}.".format(list(pi.labels), pi.s))
    kernel = lattice_kernel(A.A)
    if any(any(x == 0 for x in l) for l in kernel):
        warnings.warn("Kernel basis vectors without full support: checking the Cayley "
                      "condition on the whole basis.")
    for l in kernel:
        for C in pi.classes():
            if sum(l[i] for i in C) != 0:
                logger.debug("Kernel vector {} fails on class {}.".format(l, sorted(C)))
                return False
    return True


def cayley_from_line(A, p):
    """Cayley structure of a tropical line in the tropical toric variety
    of A: column i is labelled by the minimal flat of the matroid of p
    containing it, flats ordered by their smallest element.

    :rtype: CayleyStructure.
    """
    A = _lattice(A)
    if p.n != A.n:
        raise DegenerateInput("Line in P^{} but the toric variety is in P^{}.".format(p.n, A.n))
    ok, witness = contains_line(p, trop_toric(A))
    if not ok:
        raise NotContained("The line leaves the tropical toric variety at {}.".format(
            [str(x) for x in witness] if witness is not None else None))
    flats = flats_minimal_and_chains(matroid_from_plucker(p))["minimal_flats"]
    labels = [0] * (A.n + 1)
    for k, F in enumerate(sorted(flats, key = min)):
        for i in F:
            labels[i] = k
    pi = CayleyStructure(len(flats) - 1, labels)
    if not verify_cayley(A, pi):
        raise Internal("Minimal flats of the line do not give a Cayley structure.")
    return pi


class ToricLine(object):
    """A line over Q(t) in a toric variety, given by a 2 x (n+1) basis
    and linear equations in the symbols x0, ..., xn."""
    def __init__(self, basis, equations, cayley, certificates):
        self.logger = logging.getLogger("tropfano.toriclib")
        self.basis = basis
        self.equations = equations
        self.cayley = cayley
        self.certificates = certificates
        self.logger.info("Realized a line with {} equations.".format(len(equations)))


    def to_dict(self):
        return {"basis": [[str(x) for x in self.basis.row(i)] for i in range(self.basis.rows)],
                "equations": [str(e) for e in self.equations],
                "cayley": self.cayley.to_dict(),
                "certificates": dict(self.certificates)}


    def __repr__(self):
        return "ToricLine(equations={})".format([str(e) for e in self.equations])


def _integer(x, what):
    x = Fraction(x)
    if x.denominator != 1:
        raise OutOfScope("{} {} is not an integer: no line over Q(t).".format(what, x))
    return int(x)


def _ultrametric(delta, items, base):
    """Elements a_i of Q(t) with val(a_i - a_j) = delta[i][j]: clusters
    at the smallest distance h get distinct multiples of t^h."""
    if len(items) == 1:
        return {items[0]: base}
    h = min(delta[i][j] for i, j in itertools.combinations(items, 2))
    power = t ** _integer(h, "Valuation")
    adjacency = np.zeros((len(items), len(items)), dtype = int)
    for a, b in itertools.combinations(range(len(items)), 2):
        if delta[items[a]][items[b]] > h:
            adjacency[a, b] = adjacency[b, a] = 1
    n, labels = connected_components(csr_matrix(adjacency), directed = False)
    if n < 2:
        raise Internal("Distances {} are not ultrametric.".format(delta))
    points = {}
    for c in range(n):
        cluster = [items[k] for k in range(len(items)) if labels[k] == c]
        points.update(_ultrametric(delta, cluster, base + (c + 1) * power))
    return points


def _realize_tree(q, size):
    """2 x size matrix whose 2 x 2 minors have valuations q (a Plücker
    vector of a line with no parallel elements), up to a common shift.

    Column 0 is the point at infinity (0, 1); rooting the tree there turns
    the remaining distances into an ultrametric, realized by points a_j of
    Q(t), and column j is t^(q_0j) (1, a_j).
    """
    def val(i, j):
        return q.get((i, j))

    delta = dict((i, {}) for i in range(1, size))
    for i, j in itertools.combinations(range(1, size), 2):
        delta[i][j] = delta[j][i] = val(i, j) - val(0, i) - val(0, j)
    a = _ultrametric(delta, list(range(1, size)), sp.Integer(0)) if size > 1 else {}
    b = [sp.Integer(0)] + [t ** _integer(val(0, j), "Plücker coordinate") for j in range(1, size)]
    c = [sp.Integer(1)] + [sp.expand(a[j] * b[j]) for j in range(1, size)]
    return sp.Matrix([b, c])


def _restrict_plucker(p, keep):
    pos = dict((i, k) for k, i in enumerate(keep))
    return TropPluecker(p.d, len(keep) - 1, dict((tuple(pos[i] for i in S), v)
                                                 for S, v in p.entries.items()
                                                 if all(i in pos for i in S)))


def realize_in_toric(A, p, translation = None):
    """Line over Q(t) in the toric variety of A tropicalizing to the
    tropical line of p.

    The columns are grouped by the Cayley structure of the line; the
    line is a line of the projection to one column per class, pulled
    back to the linear space constant on the classes and scaled by a
    torus element. If translation (a point of the tropical line) is
    given, the line through the origin is realized first and moved by
    t^translation. Loops of p put the line in the boundary orbit where
    their coordinates vanish.

    Certificates: "binomials" (the toric binomials vanish on the line)
    and "plucker" (the valuated minors of the basis equal p).

    :rtype: ToricLine.
    """
    A = _lattice(A)
    if p.d != 1:
        raise DegenerateInput("Need the Plücker vector of a line, got d = {}.".format(p.d))
    if p.n != A.n:
        raise DegenerateInput("Line in P^{} but the toric variety is in P^{}.".format(p.n, A.n))
    loops = matroid_from_plucker(p).loops()
    orbit = Orbit(loops)
    keep = orbit.free(p.n + 1)
    A1 = restrict_lattice_set(A, orbit)
    p1 = _restrict_plucker(p, keep)
    pi = cayley_from_line(A1, p1)
    v = [0] * len(keep)
    if translation is not None:
        if len(translation) != p.n + 1:
            raise DegenerateInput("Translation of length {} for n = {}.".format(len(translation), p.n))
        v = [_integer(translation[i], "Translation coordinate") for i in keep]
        if not member(v, circuit_system(p1)):
            raise DegenerateInput("Translation {} is not a point of the line.".format(v))
        p1 = translate(p1, [-x for x in v])

    classes = sorted(pi.classes(), key = min)
    reps = [min(C) for C in classes]
    cls = dict((i, k) for k, C in enumerate(classes) for i in C)
    q = dict(((j, k), p1.get((reps[j], reps[k]))) for j, k in itertools.combinations(range(len(reps)), 2))
    R = _realize_tree(q, len(reps))
    # parallel columns differ by a fixed power of t
    scale = []
    for i in range(len(keep)):
        other = next(C for C in classes if i not in C)
        j = min(other)
        w = 0 if i == reps[cls[i]] else _integer(p1.get((i, j)) - p1.get((reps[cls[i]], j)), "Ratio")
        scale.append(w + v[i])
    B1 = sp.Matrix(2, len(keep), lambda r, i: sp.expand(t ** scale[i] * R[r, cls[i]]))

    x = sp.symbols("x0:{}".format(p.n + 1))
    equations = [x[i] for i in loops]
    for C in classes:
        members = sorted(C)
        for i, j in zip(members, members[1:]):
            equations.append(t ** (-scale[i]) * x[keep[i]] - t ** (-scale[j]) * x[keep[j]])
    for eta in R.nullspace():
        equations.append(sp.expand(sum(sp.cancel(eta[k]) * t ** (-scale[reps[k]]) * x[keep[reps[k]]]
                                       for k in range(len(reps)))))

    B = sp.zeros(2, p.n + 1)
    for k, i in enumerate(keep):
        B[:, i] = B1[:, k]
    s0, s1 = sp.symbols("s0 s1")
    point = [s0 * B1[0, i] + s1 * B1[1, i] for i in range(len(keep))]
    binomials_ok = all(is_zero(sp.Mul(*[point[i] ** e for i, e in enumerate(plus)]) -
                               sp.Mul(*[point[i] ** e for i, e in enumerate(minus)]))
                       for plus, minus in toric_binomials(A1))
    plucker_ok = kminors_val(B, 2) == p
    if not (binomials_ok and plucker_ok):
        raise Internal("Realized line fails its certificate (binomials {}, Plücker {}).".format(
            binomials_ok, plucker_ok))
    return ToricLine(B, equations, pi, {"binomials": binomials_ok, "plucker": plucker_ok})
