#!/usr/bin/env python

"""Exact polyhedra with weak and strict inequalities, their complexes,
projection, complements and containment tests.

All linear programs and double description conversions are solved
by cddlib in exact rational arithmetic."""

from fractions import Fraction
import itertools
import logging

from .exceptions import Internal
from .numkernel import nullspace, primitive, rational_rank

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


logger = logging.getLogger("tropfano.polyhedra")


def _vector(v, n):
    v = tuple(Fraction(x) for x in v)
    if len(v) != n:
        raise ValueError("Expected a vector of length {}, got {}.".format(n, len(v)))
    return v


def _normalize(a, b, equation = False):
    """Scale a constraint so that its first nonzero coefficient is +-1
    (+1 for equations)."""
    lead = next((x for x in a if x != 0), None)
    if lead is None:
        return a, b
    s = abs(lead) if not equation else lead
    return tuple(x / s for x in a), b / s


def _solve_lp(ineqs, eqs, nvars, objective):
    """Maximize objective.x subject to a.x <= b for (a, b) in ineqs
    and a.x = b for (a, b) in eqs.

    Returns (status, value, point), status one of "optimal",
    "unbounded", "infeasible".
    """
    import cdd

    rows = [[Fraction(1)] + [Fraction(0)] * nvars]
    rows += [[b] + [-x for x in a] for a, b in ineqs]
    mat = cdd.Matrix(rows, number_type = "fraction")
    if eqs:
        mat.extend([[b] + [-x for x in a] for a, b in eqs], linear = True)
    mat.rep_type = cdd.RepType.INEQUALITY
    mat.obj_type = cdd.LPObjType.MAX
    mat.obj_func = tuple([Fraction(0)] + [Fraction(x) for x in objective])
    lp = cdd.LinProg(mat)
    lp.solve()
    if lp.status == cdd.LPStatusType.OPTIMAL:
        return "optimal", Fraction(lp.obj_value), tuple(Fraction(x) for x in lp.primal_solution)
    if lp.status in (cdd.LPStatusType.DUAL_INCONSISTENT, cdd.LPStatusType.STRUC_DUAL_INCONSISTENT):
        return "unbounded", None, None
    return "infeasible", None, None


def _canonical_sets(ineqs, eqs, nvars):
    """Implicit equations and redundant rows of the system a.x <= b for
    (a, b) in ineqs, a.x = b for (a, b) in eqs, as index sets into ineqs.

    The system must be feasible.
    """
    import cdd

    if not ineqs:
        return frozenset(), frozenset()
    mat = cdd.Matrix([[b] + [-x for x in a] for a, b in ineqs], number_type = "fraction")
    if eqs:
        mat.extend([[b] + [-x for x in a] for a, b in eqs], linear = True)
    mat.rep_type = cdd.RepType.INEQUALITY
    linset, redset = mat.canonicalize()
    m = len(ineqs)
    logger.debug("Canonical form of {} rows in {} variables: {} implicit, {} redundant.".format(
        m, nvars, len(linset), len(redset)))
    return frozenset(i for i in linset if i < m), frozenset(i for i in redset if i < m)


class Orbit(object):
    """Orbit of tropical projective space: the coordinates in I are infinite,
    all the others finite.

    :Example:

    >>> O = Orbit([1, 3])
    >>> O.free(5)
    (0, 2, 4)
    """
    def __init__(self, I = ()):
        self._I = frozenset(int(i) for i in I)


    @property
    def I(self):
        return self._I


    def free(self, size):
        """Finite coordinates of a space with size coordinates."""
        if len(self._I) and max(self._I) >= size:
            raise ValueError("Orbit {} does not fit {} coordinates.".format(sorted(self._I), size))
        if len(self._I) == size:
            raise ValueError("Orbit cannot set every coordinate to infinity.")
        return tuple(i for i in range(size) if i not in self._I)


    def is_torus(self):
        return len(self._I) == 0


    def __contains__(self, i):
        return i in self._I


    def __eq__(self, other):
        return isinstance(other, Orbit) and self._I == other._I


    def __hash__(self):
        return hash(self._I)


    def __repr__(self):
        return "Orbit({})".format(sorted(self._I))


class Polyhedron(object):
    """Polyhedron {x in Q^n : a.x <= b (weak), a.x < b (strict), a.x = b}.

    Constraints are given as pairs (a, b) with rational entries.

    :Example:

    >>> P = Polyhedron(1, ineqs = [([-1], 0), ([1], 1)])
    >>> P.feasible()
    (True, (Fraction(0, 1),))
    >>> Polyhedron(1, strict = [([1], 0), ([-1], 0)]).feasible()[0]
    False
    """
    def __init__(self, ambient, ineqs = (), strict = (), eqs = ()):
        self._n = int(ambient)
        self._ineqs = self._clean(ineqs, "weak")
        self._strict = self._clean(strict, "strict")
        self._eqs = self._clean(eqs, "eq")
        self._relint = None
        self._hull = None


    def _clean(self, rows, kind):
        seen = []
        for a, b in rows:
            a, b = _normalize(_vector(a, self._n), Fraction(b), kind == "eq")
            if all(x == 0 for x in a):
                # constant rows: keep only the false ones
                if (kind == "eq" and b == 0) or (kind == "weak" and b >= 0) or \
                   (kind == "strict" and b > 0):
                    continue
            if (a, b) not in seen:
                seen.append((a, b))
        return tuple(seen)


    @classmethod
    def universe(cls, ambient):
        return cls(ambient)


    @property
    def ambient(self):
        return self._n


    @property
    def ineqs(self):
        """Weak inequalities (a, b): a.x <= b."""
        return self._ineqs


    @property
    def strict(self):
        """Strict inequalities (a, b): a.x < b."""
        return self._strict


    @property
    def eqs(self):
        """Equations (a, b): a.x = b."""
        return self._eqs


    @property
    def is_closed(self):
        return len(self._strict) == 0


    def closure(self):
        """Weak relaxation of the strict inequalities (the closure, if nonempty)."""
        if self.is_closed:
            return self
        return Polyhedron(self._n, self._ineqs + self._strict, (), self._eqs)


    def intersect(self, other):
        if other.ambient != self._n:
            raise ValueError("Ambient dimensions differ: {} and {}.".format(self._n, other.ambient))
        return Polyhedron(self._n, self._ineqs + other.ineqs, self._strict + other.strict,
                          self._eqs + other.eqs)


    def add(self, ineqs = (), strict = (), eqs = ()):
        return Polyhedron(self._n, self._ineqs + tuple(ineqs), self._strict + tuple(strict),
                          self._eqs + tuple(eqs))


    def embed(self, ambient, offset):
        """The same constraints on coordinates offset, ..., offset + n - 1
        of a space of dimension ambient (a cylinder over P)."""
        if offset < 0 or offset + self._n > ambient:
            raise ValueError("Cannot embed {} coordinates at {} in {}.".format(self._n, offset, ambient))

        def pad(rows):
            zl, zr = (0,) * offset, (0,) * (ambient - offset - self._n)
            return [(zl + a + zr, b) for a, b in rows]
        return Polyhedron(ambient, pad(self._ineqs), pad(self._strict), pad(self._eqs))


    def contains_point(self, x):
        x = _vector(x, self._n)

        def dot(a):
            return sum(ai * xi for ai, xi in zip(a, x))
        return all(dot(a) <= b for a, b in self._ineqs) and \
               all(dot(a) < b for a, b in self._strict) and \
               all(dot(a) == b for a, b in self._eqs)


    def feasible(self):
        """Return (True, witness) if nonempty, (False, None) otherwise.
        The witness satisfies the strict inequalities strictly."""
        n = self._n
        zero = (Fraction(0),)
        ineqs = [(a + zero, b) for a, b in self._ineqs]
        ineqs += [(a + (Fraction(1),), b) for a, b in self._strict]
        ineqs.append(((Fraction(0),) * n + (Fraction(1),), Fraction(1)))
        eqs = [(a + zero, b) for a, b in self._eqs]
        status, value, point = _solve_lp(ineqs, eqs, n + 1, (0,) * n + (1,))
        if status != "optimal":
            return False, None
        if self._strict and value <= 0:
            return False, None
        return True, point[:n]


    def is_empty(self):
        return not self.feasible()[0]


    def maximize(self, c):
        """Supremum of c.x over the closure: (status, value, point)."""
        return _solve_lp(self._ineqs + self._strict, self._eqs, self._n, _vector(c, self._n))


    def implies(self, a, b, strict = False):
        """True if every point of the closure satisfies a.x <= b
        (a.x < b if strict)."""
        status, value, _ = self.maximize(a)
        if status == "infeasible":
            return True
        if status == "unbounded":
            return False
        return value < b if strict else value <= b


    def contained_in(self, other):
        """Containment of the closure of self in other."""
        return all(self.implies(a, b) for a, b in other.ineqs) and \
               all(self.implies(a, b, strict = True) for a, b in other.strict) and \
               all(self.implies(a, b) and self.implies(tuple(-x for x in a), -b)
                   for a, b in other.eqs)


    def same_set(self, other):
        return self.contained_in(other) and other.contained_in(self)


    def _compute_relint(self):
        """Relative interior point of the closure and the indices of the
        inequalities that hold with equality on it.

        The implicit equations come from cddlib's canonical form; one LP
        then pushes every other inequality to positive slack.
        """
        rows = self._ineqs + self._strict
        n = self._n
        if not self.closure().feasible()[0]:
            return None, ()
        implicit = sorted(_canonical_sets(rows, self._eqs, n)[0])
        loose = [(a + (Fraction(1),), b) for j, (a, b) in enumerate(rows) if j not in implicit]
        loose.append(((Fraction(0),) * n + (Fraction(1),), Fraction(1)))
        eqs = [(a + (Fraction(0),), b) for a, b in self._eqs + tuple(rows[j] for j in implicit)]
        status, value, point = _solve_lp(loose, eqs, n + 1, (0,) * n + (1,))
        if status != "optimal" or value <= 0:
            raise Internal("No relative interior point found for {!r}.".format(self))
        return point[:n], tuple(implicit)


    def relint_point(self):
        """A point of the relative interior of the closure, or None if empty."""
        if self._relint is None:
            self._relint = self._compute_relint()
        return self._relint[0]


    def implicit_equations(self):
        """Equations (explicit and implied) of the affine hull."""
        if self._relint is None:
            self._relint = self._compute_relint()
        rows = self._ineqs + self._strict
        return self._eqs + tuple(rows[j] for j in self._relint[1])


    def hull_directions(self):
        """Basis of the linear space parallel to the affine hull."""
        if self._hull is None:
            self._hull = nullspace([a for a, _ in self.implicit_equations()], self._n)
        return self._hull


    def dim(self):
        """Dimension of the closure (-1 if empty)."""
        if self.relint_point() is None:
            return -1
        return len(self.hull_directions())


    def lineality_dim(self):
        rows = [a for a, _ in self._ineqs + self._strict + self._eqs]
        return self._n - rational_rank(rows, self._n)


    def contains_ones(self):
        """True if the line R*1 is in the lineality space."""
        rows = self._ineqs + self._strict + self._eqs
        return all(sum(a) == 0 for a, _ in rows)


    def recession_cone(self):
        zero = Fraction(0)
        return Polyhedron(self._n, [(a, zero) for a, _ in self._ineqs + self._strict], (),
                          [(a, zero) for a, _ in self._eqs])


    def is_cone(self):
        """True if the closure is a nonempty cone with apex at the origin."""
        if not self.closure().contains_point((0,) * self._n):
            return False
        return self.recession_cone().contained_in(self.closure())


    def generators(self):
        """Double description of the closure, see hv_convert."""
        return hv_convert(self)


    def __repr__(self):
        return "Polyhedron({}, ineqs={}, strict={}, eqs={})".format(
            self._n, len(self._ineqs), len(self._strict), len(self._eqs))


class VPolyhedron(object):
    """Polyhedron conv(vertices) + pos(rays) + span(lines)."""
    def __init__(self, ambient, vertices = (), rays = (), lines = ()):
        self._n = int(ambient)
        self._vertices = tuple(_vector(v, self._n) for v in vertices)
        self._rays = tuple(_vector(v, self._n) for v in rays)
        self._lines = tuple(_vector(v, self._n) for v in lines)


    @property
    def ambient(self):
        return self._n


    @property
    def vertices(self):
        return self._vertices


    @property
    def rays(self):
        return self._rays


    @property
    def lines(self):
        return self._lines


    def __repr__(self):
        return "VPolyhedron({}, vertices={}, rays={}, lines={})".format(
            self._n, len(self._vertices), len(self._rays), len(self._lines))


def cone(ambient, rays = (), lines = ()):
    """H-representation of pos(rays) + span(lines)."""
    return vh_convert(VPolyhedron(ambient, [(0,) * ambient], rays, lines))


def feasible(P):
    """Nonemptiness of P, with a witness point (strict inequalities honored)."""
    return P.feasible()


def hv_convert(P):
    """Vertices, rays and lineality of the closure of P.

    :Example:

    >>> V = hv_convert(Polyhedron(2, ineqs = [([-1, 0], 0)]))
    >>> V.vertices, V.rays, V.lines
    (((Fraction(0, 1), Fraction(0, 1)),), ((Fraction(1, 1), Fraction(0, 1)),), ((Fraction(0, 1), Fraction(1, 1)),))

    :rtype: VPolyhedron.
    """
    import cdd

    P = P.closure()
    n = P.ambient
    rows = [[Fraction(1)] + [Fraction(0)] * n]
    rows += [[b] + [-x for x in a] for a, b in P.ineqs]
    mat = cdd.Matrix(rows, number_type = "fraction")
    if P.eqs:
        mat.extend([[b] + [-x for x in a] for a, b in P.eqs], linear = True)
    mat.rep_type = cdd.RepType.INEQUALITY
    gens = cdd.Polyhedron(mat).get_generators()
    vertices, rays, lines = [], [], []
    for i in range(gens.row_size):
        row = [Fraction(x) for x in gens[i]]
        if i in gens.lin_set:
            lines.append(row[1:])
        elif row[0] != 0:
            vertices.append([x / row[0] for x in row[1:]])
        else:
            rays.append(row[1:])
    return VPolyhedron(n, vertices, rays, lines)


def vh_convert(V):
    """H-representation of a VPolyhedron (empty if there are no vertices)."""
    import cdd

    n = V.ambient
    if not V.vertices:
        return Polyhedron(n, ineqs = [((0,) * n, -1)])
    rows = [[Fraction(1)] + list(v) for v in V.vertices]
    rows += [[Fraction(0)] + list(r) for r in V.rays]
    mat = cdd.Matrix(rows, number_type = "fraction")
    if V.lines:
        mat.extend([[Fraction(0)] + list(l) for l in V.lines], linear = True)
    mat.rep_type = cdd.RepType.GENERATOR
    H = cdd.Polyhedron(mat).get_inequalities()
    ineqs, eqs = [], []
    for i in range(H.row_size):
        row = [Fraction(x) for x in H[i]]
        a, b = tuple(-x for x in row[1:]), row[0]
        if i in H.lin_set:
            eqs.append((a, b))
        else:
            ineqs.append((a, b))
    return Polyhedron(n, ineqs, (), eqs)


def _combine(p, q, k):
    """Eliminate coordinate k from rows p (positive coefficient) and
    q (negative coefficient); strict if either is strict."""
    (ap, bp, sp_), (aq, bq, sq) = p, q
    cp, cq = -aq[k], ap[k]
    a = tuple(cp * x + cq * y for x, y in zip(ap, aq))
    return (a, cp * bp + cq * bq, sp_ or sq)


def _prune(rows, n):
    """Remove duplicate, trivial and redundant rows (a, b, strict).

    Redundancy is read off cddlib's canonical form of the closure; a
    strict row marked redundant is dropped only if the remaining rows
    imply it strictly.
    """
    best = {}
    for a, b, s in rows:
        a, b = _normalize(a, b)
        if all(x == 0 for x in a):
            if b < 0 or (s and b == 0):
                return [(a, b, s)]
            continue
        if (a, b) in best:
            best[(a, b)] = best[(a, b)] or s
        else:
            best[(a, b)] = s
    # among parallel rows only the tightest bound matters
    tight = {}
    for (a, b), s in best.items():
        if a not in tight or b < tight[a][0] or (b == tight[a][0] and s):
            tight[a] = (b, s)
    kept = [(a, b, s) for a, (b, s) in tight.items()]
    if not kept:
        return kept
    if Polyhedron(n, [(a, b) for a, b, s in kept if not s], [(a, b) for a, b, s in kept if s]).is_empty():
        return [((Fraction(0),) * n, Fraction(-1), False)]
    linset, redset = _canonical_sets([(a, b) for a, b, _ in kept], (), n)
    result = [r for i, r in enumerate(kept) if i in linset or i not in redset]
    rest = Polyhedron(n, [(a, b) for a, b, _ in result])
    for i, (a, b, s) in enumerate(kept):
        if s and i in redset and i not in linset and not rest.implies(a, b, strict = True):
            result.append((a, b, s))
    return result


def fm_project(P, keep):
    """Coordinate projection of P onto the coordinates in keep, by
    Fourier-Motzkin elimination.

    Equations are used for substitution first; combining a strict with
    a weak inequality gives a strict one. Redundant rows are pruned
    with the canonical form after every elimination step.

    :Example:

    >>> P = Polyhedron(3, strict = [([1, -1, 0], 0), ([0, 1, -1], 0)])
    >>> fm_project(P, [0, 2]).strict
    (((Fraction(1, 1), Fraction(-1, 1)), Fraction(0, 1)),)

    :rtype: Polyhedron in len(keep) coordinates.
    """
    n = P.ambient
    keep = sorted(set(keep))
    rows = [(a, b, False) for a, b in P.ineqs] + [(a, b, True) for a, b in P.strict]
    eqs = list(P.eqs)
    for k in range(n):
        if k in keep:
            continue
        pivot = next((e for e in eqs if e[0][k] != 0), None)
        if pivot is not None:
            pa, pb = pivot
            eqs.remove(pivot)

            def subst(a, b):
                f = a[k] / pa[k]
                return tuple(x - f * y for x, y in zip(a, pa)), b - f * pb
            eqs = [subst(a, b) for a, b in eqs]
            rows = [subst(a, b) + (s,) for a, b, s in rows]
        else:
            pos = [r for r in rows if r[0][k] > 0]
            neg = [r for r in rows if r[0][k] < 0]
            rows = [r for r in rows if r[0][k] == 0] + [_combine(p, q, k) for p in pos for q in neg]
        eqs = [e for e in eqs if any(x != 0 for x in e[0]) or e[1] != 0]
        if any(all(x == 0 for x in a) and b != 0 for a, b in eqs):
            return Polyhedron(len(keep), ineqs = [((0,) * len(keep), -1)])
        rows = _prune(rows, n)
        logger.debug("Eliminated coordinate {}: {} rows left.".format(k, len(rows)))

    def restrict(a):
        return tuple(a[i] for i in keep)
    return Polyhedron(len(keep), [(restrict(a), b) for a, b, s in rows if not s],
                      [(restrict(a), b) for a, b, s in rows if s],
                      [(restrict(a), b) for a, b in eqs])


def _constraint_list(P):
    """Constraints of P in a fixed order as (a, b, strict), with
    equations split into two weak inequalities."""
    rows = [(a, b, False) for a, b in P.ineqs] + [(a, b, True) for a, b in P.strict]
    for a, b in P.eqs:
        rows.append((a, b, False))
        rows.append((tuple(-x for x in a), -b, False))
    return rows


def complement_pieces(P):
    """Pairwise disjoint pieces covering the complement of P.

    Piece i violates constraint i and satisfies all constraints before
    it. The negation of a weak inequality is strict and vice versa.
    Empty pieces are dropped.

    :Example:

    >>> len(complement_pieces(Polyhedron(1, eqs = [([1], 0)])))
    2
    """
    n = P.ambient
    rows = _constraint_list(P)
    pieces = []
    for i, (a, b, s) in enumerate(rows):
        neg = (tuple(-x for x in a), -b)
        earlier = rows[:i]
        piece = Polyhedron(n, [(c, d) for c, d, t in earlier if not t] + ([neg] if s else []),
                           [(c, d) for c, d, t in earlier if t] + ([] if s else [neg]))
        if piece.feasible()[0]:
            pieces.append(piece)
    return pieces


class PolyComplex(object):
    """A finite collection of closed polyhedra in a common ambient space.

    Only the generating (usually maximal) cells are stored; their faces
    belong to the complex implicitly. The optional coordinates record
    which coordinates of a larger space the ambient space stands for
    (the finite coordinates of an orbit).
    """
    def __init__(self, ambient, cells = (), is_fan = False, coordinates = None):
        self.logger = logging.getLogger("tropfano.polyhedra")
        self._n = int(ambient)
        cells = tuple(cells)
        for c in cells:
            if c.ambient != self._n:
                raise ValueError("Cell of ambient dimension {} in a complex of dimension {}.".format(
                    c.ambient, self._n))
        self._cells = cells
        self._is_fan = bool(is_fan)
        self._coordinates = tuple(coordinates) if coordinates is not None else tuple(range(self._n))
        if len(self._coordinates) != self._n:
            raise ValueError("Need one coordinate label per ambient coordinate.")


    @property
    def ambient(self):
        return self._n


    @property
    def cells(self):
        return self._cells


    @property
    def is_fan(self):
        return self._is_fan


    @property
    def coordinates(self):
        return self._coordinates


    def is_empty(self):
        return len(self._cells) == 0


    def maximal(self):
        """Complex of the cells not contained in other cells (duplicates merged)."""
        return PolyComplex(self._n, maximal_cells(self._cells), self._is_fan, self._coordinates)


    def contains_point(self, x):
        return any(c.contains_point(x) for c in self._cells)


    def quotient_ones(self):
        """True if every cell contains the line R*1."""
        return len(self._cells) > 0 and all(c.contains_ones() for c in self._cells)


    def rays(self):
        """Canonical rays of the cells: modulo R*1 when every cell
        contains it (minimum coordinate 0), primitive integer vectors."""
        quotient = self.quotient_ones()
        found = set()
        for c in self._cells:
            for r in c.generators().rays:
                if quotient:
                    m = min(r)
                    r = tuple(x - m for x in r)
                if any(x != 0 for x in r):
                    found.add(primitive(r))
        return sorted(found)


    def check_complex(self):
        """True if every pairwise intersection of cells is a face of both."""
        for c1, c2 in itertools.combinations(self._cells, 2):
            inter = c1.intersect(c2)
            if inter.is_empty():
                continue
            if not (_is_face(inter, c1) and _is_face(inter, c2)):
                return False
        return True


    def __len__(self):
        return len(self._cells)


    def __repr__(self):
        return "PolyComplex({}, cells={}, fan={})".format(self._n, len(self._cells), self._is_fan)


def _is_face(F, P):
    """True if the nonempty polyhedron F contained in P is a face of P:
    F equals P cut by the inequalities of P tight on the relative interior of F."""
    x = F.relint_point()
    tight = [(a, b) for a, b in P.ineqs if sum(ai * xi for ai, xi in zip(a, x)) == b]
    face = P.add(eqs = tight)
    return face.contained_in(F)


def maximal_cells(cells):
    """Cells not contained in another cell; of equal cells the first is kept."""
    cells = [c for c in cells if not c.is_empty()]
    kept = []
    for i, c in enumerate(cells):
        dominated = False
        for j, d in enumerate(cells):
            if i == j:
                continue
            if c.contained_in(d) and (not d.contained_in(c) or j < i):
                dominated = True
                break
        if not dominated:
            kept.append(c)
    return kept


def _avoiding_point(Q, K):
    """A point of Q lying in no cell of K, assuming every cell meets Q
    in lower dimension: points c + lam*u on moment-curve directions u
    through the relative interior point c.

    Once c + lam*u lies in Q so does every point closer to c. A line
    meets the affine hull of the intersection of Q with a cell at most
    once unless it lies inside it, so len(K) + 1 further halvings of lam
    suffice for each direction.
    """
    c = Q.relint_point()
    dirs = Q.hull_directions()
    if not K.contains_point(c):
        return c
    k = len(dirs)
    for m in range(1, k * (len(K.cells) + 1) + 2):
        u = [sum(Fraction(m) ** i * d[j] for i, d in enumerate(dirs)) for j in range(Q.ambient)]
        lam = Fraction(1)
        while not Q.contains_point(tuple(ci + lam * ui for ci, ui in zip(c, u))):
            lam /= 2
        for _ in range(len(K.cells) + 1):
            x = tuple(ci + lam * ui for ci, ui in zip(c, u))
            if not K.contains_point(x):
                return x
            lam /= 2
    raise Internal("No point of {!r} avoids the complex.".format(Q))


def contained_in_complex(P, K):
    """Decide whether every point of P lies in some cell of K.

    Worklist algorithm: a piece contained in a cell is discarded;
    otherwise it is split along the cell meeting it in the largest
    dimension, recursing on the closures of the pieces outside that
    cell. When no cell meets a piece in full dimension the answer is
    False, with a witness point of the piece outside every cell.

    :rtype: (bool, witness point or None); the witness is None exactly when P is contained.
    """
    if P.ambient != K.ambient:
        raise ValueError("Ambient dimensions differ: {} and {}.".format(P.ambient, K.ambient))
    work = [P.closure()]
    steps = 0
    while work:
        Q = work.pop()
        steps += 1
        if Q.is_empty():
            continue
        if any(Q.contained_in(s) for s in K.cells):
            continue
        dq = Q.dim()
        best, bestdim = None, -1
        for s in K.cells:
            d = Q.intersect(s).dim()
            if d > bestdim:
                best, bestdim = s, d
        if bestdim < dq:
            logger.info("Piece of dimension {} not covered after {} steps.".format(dq, steps))
            return False, _avoiding_point(Q, K)
        for piece in complement_pieces(best):
            R = Q.intersect(piece)
            if R.feasible()[0]:
                work.append(R.closure())
    return True, None


def refine(K1, K2):
    """Meet of two complexes: the nonempty pairwise intersections of
    cells, keeping the maximal ones."""
    if K1.ambient != K2.ambient:
        raise ValueError("Ambient dimensions differ: {} and {}.".format(K1.ambient, K2.ambient))
    cells = [c1.intersect(c2) for c1 in K1.cells for c2 in K2.cells]
    cells = [c for c in cells if c.feasible()[0]]
    return PolyComplex(K1.ambient, maximal_cells(cells), K1.is_fan and K2.is_fan, K1.coordinates)


def fan_stats(K):
    """Dimension data of a complex.

    Dimensions are taken modulo R*1 when every cell contains that line.
    Returns a dict with keys "dim", "lineality_dim" and
    "max_cells_by_dim" (maximal cells counted by dimension).
    """
    shift = 1 if K.quotient_ones() else 0
    cells = maximal_cells(K.cells)
    by_dim = {}
    for c in cells:
        d = c.dim() - shift
        by_dim[d] = by_dim.get(d, 0) + 1
    return {"dim": max(by_dim) if by_dim else -1,
            "lineality_dim": min(c.lineality_dim() for c in cells) - shift if cells else -1,
            "max_cells_by_dim": by_dim}
