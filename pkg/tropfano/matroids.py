#!/usr/bin/env python

"""Matroids of matrices and of tropical Plücker vectors, their flats
and Bergman fans."""

import itertools
import logging
from math import comb
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
import sympy as sp

from .exceptions import DegenerateInput, LoopsPresent
from .numkernel import exact_rank, is_inf
from .polyhedra import Polyhedron, PolyComplex

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


class Matroid(object):
    """A matroid on the ground set {0, ..., size - 1}, given by its bases.

    :Example:

    >>> M = Matroid(3, [(0, 1), (0, 2), (1, 2)])
    >>> M.rank, M.is_uniform()
    (2, True)
    """
    def __init__(self, size, bases):
        self.logger = logging.getLogger("tropfano.matroids")
        self._size = int(size)
        self._bases = frozenset(tuple(sorted(B)) for B in bases)
        if len(self._bases) == 0:
            raise DegenerateInput("A matroid needs at least one basis.")
        ranks = set(len(B) for B in self._bases)
        if len(ranks) != 1:
            raise DegenerateInput("Bases of different sizes: {}.".format(sorted(ranks)))
        self._rank = ranks.pop()
        if any(i < 0 or i >= self._size for B in self._bases for i in B):
            raise DegenerateInput("Basis element outside the ground set of size {}.".format(self._size))
        self._rank_cache = {}
        self.logger.info("Created matroid of rank {} on {} elements with {} bases.".format(
            self._rank, self._size, len(self._bases)))


    @property
    def size(self):
        """Number of elements of the ground set."""
        return self._size


    @property
    def ground_set(self):
        return frozenset(range(self._size))


    @property
    def rank(self):
        return self._rank


    @property
    def bases(self):
        return self._bases


    def rank_of(self, S):
        """Rank of a subset: the largest intersection with a basis."""
        S = frozenset(S)
        if S not in self._rank_cache:
            self._rank_cache[S] = max(len(S.intersection(B)) for B in self._bases)
        return self._rank_cache[S]


    def is_independent(self, S):
        return self.rank_of(S) == len(set(S))


    def closure(self, S):
        S = frozenset(S)
        r = self.rank_of(S)
        return frozenset(i for i in range(self._size) if i in S or self.rank_of(S | {i}) == r)


    def is_flat(self, S):
        return self.closure(S) == frozenset(S)


    def loops(self):
        """Elements contained in no basis."""
        used = set(i for B in self._bases for i in B)
        return tuple(i for i in range(self._size) if i not in used)


    def is_loopless(self):
        return len(self.loops()) == 0


    def circuits(self):
        """Minimal dependent sets."""
        result = []
        for k in range(1, self._rank + 2):
            for C in itertools.combinations(range(self._size), k):
                if self.is_independent(C):
                    continue
                if all(self.is_independent(C[:i] + C[i + 1:]) for i in range(k)):
                    result.append(frozenset(C))
        return result


    def parallel_classes(self):
        """Classes of the relation "{i, j} has rank 1" on the non-loops,
        sorted by their smallest element."""
        loops = set(self.loops())
        elems = [i for i in range(self._size) if i not in loops]
        adjacency = np.zeros((len(elems), len(elems)), dtype = int)
        for a, b in itertools.combinations(range(len(elems)), 2):
            if self.rank_of((elems[a], elems[b])) == 1:
                adjacency[a, b] = adjacency[b, a] = 1
        if not elems:
            return []
        n, labels = connected_components(csr_matrix(adjacency), directed = False)
        classes = [frozenset(elems[k] for k in range(len(elems)) if labels[k] == c) for c in range(n)]
        return sorted(classes, key = min)


    def delete(self, I):
        """Restriction to the complement of I, relabelled to 0, 1, ...
        in increasing order of the remaining elements.

        :rtype: Matroid.
        """
        I = set(I)
        keep = [i for i in range(self._size) if i not in I]
        if not keep:
            raise DegenerateInput("Cannot delete every element of the ground set.")
        r = self.rank_of(keep)
        if r == 0:
            return Matroid(len(keep), [()])
        bases = set()
        for S in itertools.combinations(range(len(keep)), r):
            if self.rank_of([keep[k] for k in S]) == r:
                bases.add(S)
        return Matroid(len(keep), bases)


    def is_uniform(self):
        return len(self._bases) == comb(self._size, self._rank)


    def satisfies_exchange(self):
        """Check the basis exchange axiom for every pair of bases."""
        for B1, B2 in itertools.permutations(self._bases, 2):
            for x in set(B1) - set(B2):
                if not any(tuple(sorted((set(B1) - {x}) | {y})) in self._bases
                           for y in set(B2) - set(B1)):
                    return False
        return True


    def __eq__(self, other):
        return isinstance(other, Matroid) and self._size == other.size and self._bases == other.bases


    def __hash__(self):
        return hash((self._size, self._bases))


    def __repr__(self):
        return "Matroid(size={}, rank={}, bases={})".format(self._size, self._rank, len(self._bases))


def matroid_from_columns(M):
    """Matroid of the linear dependencies among the columns of M
    (entries rational or rational functions in t).

    :Example:

    >>> matroid_from_columns([[1, 0, 1], [0, 0, 1]]).loops()
    (1,)

    :rtype: Matroid.
    """
    M = sp.Matrix(M)
    r = exact_rank(M)
    if r == 0:
        return Matroid(M.cols, [()])
    bases = [S for S in itertools.combinations(range(M.cols), r)
             if exact_rank(M.extract(list(range(M.rows)), list(S))) == r]
    return Matroid(M.cols, bases)


def matroid_from_plucker(p):
    """Matroid whose bases are the finite coordinates of a tropical
    Plücker vector.

    :rtype: Matroid.
    """
    bases = [S for S, v in p.entries.items() if not is_inf(v)]
    if not bases:
        raise DegenerateInput("Plücker vector has no finite coordinate.")
    return Matroid(p.n + 1, bases)


def _covers(M, F):
    """Flats of rank rank(F) + 1 containing F."""
    found = []
    for e in range(M.size):
        if e in F:
            continue
        G = M.closure(F | {e})
        if G not in found:
            found.append(G)
    return found


def flats_minimal_and_chains(M):
    """Lattice data of a loopless matroid.

    Returns a dict with "flats" (all flats, by rank then lexicographically),
    "minimal_flats" (flats of rank 1, partitioning the ground set) and
    "maximal_chains" (tuples F_1 < ... < F_r = E of nonempty flats).

    :Example:

    >>> data = flats_minimal_and_chains(Matroid(3, [(0, 1), (0, 2), (1, 2)]))
    >>> len(data["minimal_flats"]), len(data["maximal_chains"])
    (3, 3)
    """
    if not M.is_loopless():
        raise LoopsPresent("Matroid has loops {}.".format(list(M.loops())))
    bottom = frozenset()
    levels = [[bottom]]
    for _ in range(M.rank):
        nxt = []
        for F in levels[-1]:
            for G in _covers(M, F):
                if G not in nxt:
                    nxt.append(G)
        levels.append(nxt)

    def key(F):
        return (len(F), sorted(F))

    flats = [F for level in levels for F in sorted(level, key = key)]
    chains = []

    def extend(chain):
        F = chain[-1] if chain else bottom
        if len(F) == M.size:
            chains.append(tuple(chain))
            return
        for G in sorted(_covers(M, F), key = key):
            extend(chain + [G])
    extend([])
    minimal = sorted(levels[1], key = min) if M.rank > 0 else []
    M.logger.debug("Found {} flats and {} maximal chains.".format(len(flats), len(chains)))
    return {"flats": flats, "minimal_flats": minimal, "maximal_chains": chains}


def chain_cone(chain, size):
    """Cone pos(e_F : F in chain) + R*1 as a polyhedron.

    The chain F_1 < ... < F_r = E splits the ground set into the blocks
    F_k minus F_(k-1); a point lies in the cone iff it is constant on
    each block and its block values decrease weakly along the chain.
    """
    def unit(i, j, sign = 1):
        a = [0] * size
        a[i] += sign
        a[j] -= sign
        return a

    eqs, ineqs = [], []
    prev, reps = frozenset(), []
    for F in chain:
        block = sorted(F - prev)
        for i, j in zip(block, block[1:]):
            eqs.append((unit(i, j), 0))
        reps.append(block[0])
        prev = F
    for i, j in zip(reps, reps[1:]):
        # value on the later block is at most the value on the earlier one
        ineqs.append((unit(j, i), 0))
    return Polyhedron(size, ineqs, (), eqs)


def bergman_fan(M):
    """Bergman fan of a loopless matroid: one cone per maximal chain
    of flats, lineality R*1.

    :Example:

    >>> U = Matroid(3, [(0, 1), (0, 2), (1, 2)])
    >>> len(bergman_fan(U).cells)
    3

    :rtype: PolyComplex.
    """
    chains = flats_minimal_and_chains(M)["maximal_chains"]
    cells = [chain_cone(chain, M.size) for chain in chains]
    M.logger.info("Bergman fan with {} maximal cones.".format(len(cells)))
    return PolyComplex(M.size, cells, is_fan = True)
