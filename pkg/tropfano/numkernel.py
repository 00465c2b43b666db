#!/usr/bin/env python

"""Exact scalar arithmetic: rationals, rational functions in t with
their t-adic valuation, tropical values and integer lattice algebra."""

from fractions import Fraction
import itertools
import logging
import sympy as sp
from sympy.core.intfunc import igcdex

from .exceptions import DegenerateInput

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


t = sp.Symbol("t")
"""Uniformizer of the valued field Q(t)."""

INF = sp.oo
"""The tropical zero."""

logger = logging.getLogger("tropfano.numkernel")


def is_inf(v):
    return v is INF or (isinstance(v, sp.Basic) and v == INF)


def to_fraction(x):
    """Convert an integer, Fraction, sympy rational or string "p/q"
    to a Fraction.

    :Example:

    >>> to_fraction("-3/6")
    Fraction(-1, 2)
    >>> to_fraction(sp.Rational(2, 4))
    Fraction(1, 2)
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ValueError("Not a rational number: {!r}.".format(x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            raise ValueError("Could not parse rational {!r}.".format(x))
    if isinstance(x, sp.Basic):
        if not x.is_Rational:
            raise ValueError("Not a rational number: {}.".format(x))
        return Fraction(int(x.p), int(x.q))
    raise ValueError("Not a rational number: {!r}.".format(x))


def parse_tvalue(s):
    """Parse a tropical value: "inf" or a rational."""
    if s is None or (isinstance(s, str) and s.strip().lower() in ("inf", "oo", "infinity")):
        return INF
    if is_inf(s):
        return INF
    return to_fraction(s)


def format_tvalue(v):
    """String form of a tropical value, inverse of parse_tvalue."""
    if is_inf(v):
        return "inf"
    return str(to_fraction(v))


def trop_add(v, w):
    """Tropical sum (minimum)."""
    if is_inf(v):
        return w
    if is_inf(w):
        return v
    return min(v, w)


def trop_mul(v, w):
    """Tropical product (sum, with infinity absorbing)."""
    if is_inf(v) or is_inf(w):
        return INF
    return v + w


def tmatrix(rows):
    """Matrix over Q(t) from nested lists of numbers or strings in t.

    :Example:

    >>> tmatrix([[1, "t+1"], [0, "1/t"]])
    Matrix([
    [1, t + 1],
    [0,   1/t]])
    """
    return sp.Matrix([[sp.sympify(e, locals = {"t": t}) for e in row] for row in rows])


def _order(poly_expr):
    monoms = sp.Poly(poly_expr, t).monoms()
    return min(m[0] for m in monoms)


def tval(f):
    """t-adic valuation of a rational function f in t.

    Returns ord_t of the numerator minus ord_t of the denominator,
    and INF for f = 0.

    :Example:

    >>> tval(t**2 + 3*t)
    Fraction(1, 1)
    >>> tval((t + 1)/t)
    Fraction(-1, 1)
    >>> tval(0)
    oo

    :rtype: Fraction or INF.
    """
    f = sp.cancel(sp.sympify(f, locals = {"t": t}))
    if f == 0:
        return INF
    num, den = sp.fraction(f)
    return Fraction(_order(num) - _order(den))


def exact_rank(M):
    """Rank over the fraction field, by fraction-free elimination."""
    M = sp.Matrix(M)
    ncols = M.cols
    rows = [[sp.cancel(sp.sympify(M[i, j])) for j in range(ncols)] for i in range(M.rows)]
    rank = 0
    prev = sp.Integer(1)
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][c]
        for r in range(rank + 1, len(rows)):
            rows[r] = [sp.cancel((p * rows[r][j] - rows[r][c] * rows[rank][j]) / prev)
                       for j in range(ncols)]
        prev = p
        rank += 1
    return rank


def is_zero(f):
    return sp.cancel(sp.sympify(f)) == 0


def kminors_val(M, k):
    """Valuations of the k x k minors of M, as a tropical Plücker vector.

    Column subsets are taken in lexicographic order and determinants
    are computed by Bareiss elimination.

    :Example:

    >>> kminors_val(sp.eye(3), 3).entries
    {(0, 1, 2): Fraction(0, 1)}

    :rtype: TropPluecker.
    """
    from .troplin import TropPluecker

    M = sp.Matrix(M)
    if M.rows != k:
        raise DegenerateInput("Expected a matrix with {} rows, got {}.".format(k, M.rows))
    if M.cols < k:
        raise DegenerateInput("Need at least {} columns, got {}.".format(k, M.cols))
    if exact_rank(M) < k:
        raise DegenerateInput("Matrix has rank less than {}.".format(k))
    entries = {}
    for S in itertools.combinations(range(M.cols), k):
        entries[S] = tval(M.extract(list(range(k)), list(S)).det(method = "bareiss"))
    logger.debug("Computed {} minors of a {}x{} matrix.".format(len(entries), M.rows, M.cols))
    return TropPluecker(k - 1, M.cols - 1, entries)


def wedge2_matrix(L):
    """Second exterior power of a 3 x (n+1) matrix.

    The column for the pair {i, j} (lexicographic order) is the vector
    of signed 2 x 2 minors of columns i and j, i.e. their cross product.
    """
    L = sp.Matrix(L)
    if L.rows != 3:
        raise DegenerateInput("Expected a matrix with 3 rows, got {}.".format(L.rows))
    cols = [L.col(i).cross(L.col(j)).applyfunc(sp.cancel)
            for i, j in itertools.combinations(range(L.cols), 2)]
    return sp.Matrix.hstack(*cols)


def _normalize_sign(v):
    first = next((x for x in v if x != 0), 0)
    return tuple(-x for x in v) if first < 0 else tuple(v)


def lattice_kernel(A):
    """Basis of the saturated lattice ker(A) in Z^cols.

    The block matrix [A; I] is brought to column echelon form by
    unimodular column operations built from sympy.igcdex; below the
    zero columns of the A block sits a lattice basis of the kernel.
    Each vector has its first nonzero entry positive.

    :Example:

    >>> lattice_kernel([[1, 0, 0, 1], [1, 0, -1, 0], [1, 1, 1, 1]])
    [(1, -1, 1, -1)]

    :rtype: list of tuples of ints.
    """
    A = sp.Matrix(A)
    m, n = A.shape
    if any(not x.is_integer for x in A):
        raise ValueError("Lattice kernel needs an integer matrix.")
    M = A.col_join(sp.eye(n))
    piv = 0
    for i in range(m):
        if piv >= n:
            break
        for j in range(piv + 1, n):
            a, b = M[i, piv], M[i, j]
            if b == 0:
                continue
            x, y, g = igcdex(a, b)
            u, w = M[:, piv], M[:, j]
            # determinant x*a/g + y*b/g = 1
            M[:, piv] = x * u + y * w
            M[:, j] = (-b // g) * u + (a // g) * w
        if M[i, piv] != 0:
            piv += 1
    return [_normalize_sign([int(x) for x in M[m:, c]]) for c in range(piv, n)]


def _rational(x):
    x = to_fraction(x)
    return sp.Rational(x.numerator, x.denominator)


def _qmatrix(rows, ncols):
    rows = [[_rational(x) for x in r] for r in rows]
    return sp.Matrix(rows) if rows else sp.zeros(0, ncols)


def rref(rows, ncols):
    """Reduced row echelon form of a list of rational rows.

    Returns the nonzero rows, as lists of Fractions, and their pivot columns.
    """
    R, pivots = _qmatrix(rows, ncols).rref()
    return [[to_fraction(x) for x in R.row(i)] for i in range(len(pivots))], list(pivots)


def rational_rank(rows, ncols):
    return _qmatrix(rows, ncols).rank()


def nullspace(rows, ncols):
    """Basis of {v : r.v = 0 for every row r}, as tuples of Fractions."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    return [tuple(to_fraction(x) for x in v) for v in _qmatrix(rows, ncols).nullspace()]


def primitive(v):
    """Positive multiple of a rational vector with coprime integer entries."""
    v = [to_fraction(x) for x in v]
    den = int(sp.lcm_list([x.denominator for x in v])) if v else 1
    ints = [int(x * den) for x in v]
    g = abs(int(sp.gcd_list(ints))) if ints else 0
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)
