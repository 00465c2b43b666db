#!/usr/bin/env python

"""Tests for tropical polynomials, systems and prevarieties."""

from fractions import Fraction
import os
import random
import unittest
from unittest import mock

from tropfano.exceptions import BadDimensions, DegenerateSystem, OrbitMismatch
from tropfano.numkernel import INF, is_inf
from tropfano.polyhedra import Orbit, contained_in_complex, fan_stats
from tropfano.prevariety import (TropPolynomial, TropSystem, intersect_system, member, prevariety_cells,
                                 trop_hypersurface)

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


def linear(coeffs):
    """min_i (c_i + x_i)."""
    n = len(coeffs)
    return TropPolynomial([(c, tuple(1 if j == i else 0 for j in range(n))) for i, c in enumerate(coeffs)])


class TestTropPolynomial(unittest.TestCase):
    def test_evaluate(self):
        F = TropPolynomial([(0, (1, 0, 0)), (0, (0, 1, 0)), (1, (0, 0, 1))])
        self.assertEqual(Fraction(0), F.evaluate((0, 0, 0)))
        self.assertEqual(frozenset([0, 1]), F.achievers((0, 0, 0)))
        self.assertEqual(frozenset([2]), F.achievers((5, 5, 0)))
        self.assertEqual(Fraction(3), F.evaluate((INF, 3, INF)))
        self.assertTrue(is_inf(F.evaluate((INF, INF, INF))))
        self.assertEqual(3, F.size)
        self.assertRaises(BadDimensions, F.evaluate, (0, 0))
        self.assertRaises(BadDimensions, TropPolynomial, [(0, (1, 0)), (0, (0, 0, 1))])
        self.assertRaises(ValueError, TropPolynomial, [(0, (-1, 0))])


    def test_quadratic(self):
        F = TropPolynomial([(0, (2, 0)), (1, (1, 1)), ("inf", (0, 2))])
        self.assertEqual((0, 1), F.finite_terms())
        self.assertFalse(F.is_homogeneous_coeffs())
        self.assertEqual(Fraction(2), F.evaluate((1, 3)))
        self.assertEqual(frozenset([0, 1]), F.achievers((1, 0)))


    def test_restrict(self):
        F = linear([0, 0, 1])
        G, kept = F.restrict([2])
        self.assertEqual((0, 1), kept)
        self.assertEqual(2, G.size)
        self.assertEqual(frozenset([0, 1]), G.achievers((3, 3)))
        _, kept = linear([0, 0]).restrict([0, 1])
        self.assertEqual((), kept)


    def test_cells(self):
        F = linear([0, 0, 0])
        P = F.pair_cell(0, 1)
        self.assertTrue(P.contains_point((0, 0, 1)))
        self.assertFalse(P.contains_point((0, 0, -1)))
        self.assertTrue(F.type_cell([0, 1, 2]).contains_point((2, 2, 2)))
        self.assertEqual(1, F.type_cell([0, 1, 2]).dim())


    def test_hypersurface(self):
        K = trop_hypersurface(linear([0, 0, 0]))
        self.assertEqual(3, len(K))
        self.assertTrue(K.is_fan)
        self.assertEqual(1, fan_stats(K)["dim"])
        self.assertFalse(trop_hypersurface(linear([0, 1, 2])).is_fan)
        self.assertRaises(DegenerateSystem, trop_hypersurface, TropPolynomial([(0, (1, 0)), (INF, (0, 1))]))


class TestPrevariety(unittest.TestCase):
    def test_system(self):
        S = TropSystem(2, [linear([0, 0, 0])])
        self.assertEqual(3, S.size)
        self.assertEqual((0, 1, 2), S.free())
        self.assertEqual(1, len(S))
        self.assertRaises(DegenerateSystem, TropSystem, 1, [TropPolynomial([(0, (1, 0)), (INF, (0, 1))])])
        self.assertRaises(BadDimensions, TropSystem, 3, [linear([0, 0, 0])])
        self.assertRaises(ValueError, TropSystem, 2, [linear([0, 0, 0])], Orbit([5]))


    def test_two_lines(self):
        S = TropSystem(2, [linear([0, 0, 0]), linear([0, 1, 2])])
        K = intersect_system(S)
        self.assertEqual(1, len(K))
        self.assertFalse(K.is_fan)
        self.assertTrue(K.contains_point((0, -1, -1)))
        self.assertTrue(K.contains_point((5, 4, 4)))
        self.assertFalse(K.contains_point((0, 0, 0)))
        self.assertEqual(0, fan_stats(K)["dim"])
        cells = prevariety_cells(S)
        self.assertEqual(1, len(cells))
        P, typ, point = cells[0]
        self.assertEqual((frozenset([1, 2]), frozenset([0, 1])), typ)
        self.assertTrue(P.contains_point(point))


    def test_plane_in_three_space(self):
        # the tropical plane min(x0, x1, x2, x3) has six maximal cones
        K = intersect_system(TropSystem(3, [linear([0, 0, 0, 0])]))
        self.assertEqual(6, len(K))
        self.assertEqual({2: 6}, fan_stats(K)["max_cells_by_dim"])


    def test_orbit(self):
        S = TropSystem(2, [linear([0, 0, 0])], Orbit([2]))
        K = intersect_system(S)
        self.assertEqual((0, 1), K.coordinates)
        self.assertEqual(1, len(K))
        self.assertTrue(K.contains_point((3, 3)))
        _, typ, _ = prevariety_cells(S)[0]
        self.assertEqual((frozenset([0, 1]),), typ)
        empty = TropSystem(2, [linear([0, 0, 0]), linear([0, 1, 2])], Orbit([2]))
        self.assertEqual([], prevariety_cells(empty))
        single = TropSystem(2, [TropPolynomial([(0, (1, 0, 0)), (0, (0, 0, 1))])], Orbit([2]))
        self.assertTrue(intersect_system(single).is_empty())
        vanishing = TropSystem(2, [TropPolynomial([(0, (0, 0, 1)), (1, (0, 0, 2))]), linear([0, 0, 0])],
                               Orbit([2]))
        self.assertEqual([(None, frozenset([0, 1]))], [typ for _, typ, _ in prevariety_cells(vanishing)])


    def test_member(self):
        S = TropSystem(2, [linear([0, 0, 0])])
        self.assertTrue(member((0, 0, 5), S))
        self.assertFalse(member((0, 1, 2), S))
        self.assertRaises(OrbitMismatch, member, (0, 0, INF), S)
        self.assertRaises(BadDimensions, member, (0, 0), S)
        T = TropSystem(2, [linear([0, 0, 0])], Orbit([2]))
        self.assertTrue(member((1, 1, "inf"), T))
        self.assertFalse(member((1, 2, "inf"), T))


    def test_witnesses_are_members(self):
        rng = random.Random(2)
        for _ in range(10):
            polys = [linear([rng.randint(-3, 3) for _ in range(4)]) for _ in range(2)]
            S = TropSystem(3, polys)
            for P, _, point in prevariety_cells(S):
                self.assertTrue(member(point, S))
                self.assertTrue(P.contains_point(point))


    def test_order_independence(self):
        rng = random.Random(4)
        for _ in range(5):
            polys = [linear([rng.randint(-2, 2) for _ in range(4)]) for _ in range(3)]
            K = intersect_system(TropSystem(3, polys))
            shuffled = list(polys)
            rng.shuffle(shuffled)
            L = intersect_system(TropSystem(3, shuffled))
            for c in K.cells:
                self.assertTrue(contained_in_complex(c, L)[0])
            for c in L.cells:
                self.assertTrue(contained_in_complex(c, K)[0])


    def test_support_matches_member(self):
        rng = random.Random(6)
        S = TropSystem(3, [linear([0, 1, 0, 2]), linear([1, 0, 0, 0])])
        K = intersect_system(S)
        outside = 0
        for _ in range(200):
            x = tuple(rng.randint(-3, 3) for _ in range(4))
            self.assertEqual(K.contains_point(x), member(x, S))
            outside += not member(x, S)
        self.assertTrue(outside > 0)


    def test_processes(self):
        S = TropSystem(3, [linear([0, 1, 0, 2]), linear([1, 0, 0, 0])])
        with mock.patch.dict(os.environ, {"TROPFANO_THREADS": "1"}):
            serial = [typ for _, typ, _ in prevariety_cells(S)]
        with mock.patch.dict(os.environ, {"TROPFANO_THREADS": "2"}):
            parallel = [typ for _, typ, _ in prevariety_cells(S)]
        self.assertEqual(serial, parallel)


if __name__ == "__main__":
    for case in (TestTropPolynomial, TestPrevariety):
        suite = unittest.TestLoader().loadTestsFromTestCase(case)
        unittest.TextTestRunner(verbosity=2).run(suite)
