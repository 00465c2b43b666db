#!/usr/bin/env python

"""Tests for the exact scalar and lattice arithmetic."""

from fractions import Fraction
import itertools
import random
import unittest
import sympy as sp

from tropfano.exceptions import DegenerateInput
from tropfano.numkernel import (INF, exact_rank, format_tvalue, is_inf, kminors_val, lattice_kernel,
                                nullspace, parse_tvalue, primitive, rational_rank, rref, t, tmatrix,
                                to_fraction, trop_add, trop_mul, tval, wedge2_matrix)

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


class TestNumkernel(unittest.TestCase):
    def test_tval(self):
        self.assertEqual(Fraction(1), tval(t**2 + 3*t))
        self.assertEqual(Fraction(-1), tval((t + 1)/t))
        self.assertEqual(Fraction(0), tval(5))
        self.assertEqual(Fraction(3), tval("t**3*(1 + t)"))
        self.assertTrue(is_inf(tval(0)))
        self.assertTrue(is_inf(tval(t - t)))


    def test_tval_multiplicative(self):
        rng = random.Random(7)

        def poly():
            f = sum(rng.randint(-4, 4) * t**k for k in range(rng.randint(0, 3), 5))
            return f if f != 0 else sp.Integer(1)
        for _ in range(200):
            f, g = poly(), poly() / poly()
            self.assertEqual(tval(f * g), tval(f) + tval(g))


    def test_fractions(self):
        self.assertEqual(Fraction(-1, 2), to_fraction("-3/6"))
        self.assertEqual(Fraction(1, 2), to_fraction(sp.Rational(2, 4)))
        self.assertEqual(Fraction(4), to_fraction(4))
        self.assertRaises(ValueError, to_fraction, True)
        self.assertRaises(ValueError, to_fraction, "x/2")
        self.assertRaises(ValueError, to_fraction, t)


    def test_tvalues(self):
        self.assertTrue(is_inf(parse_tvalue("inf")))
        self.assertTrue(is_inf(parse_tvalue(None)))
        self.assertEqual(Fraction(2, 3), parse_tvalue("2/3"))
        self.assertEqual("inf", format_tvalue(INF))
        self.assertEqual("-5/2", format_tvalue(Fraction(-5, 2)))
        self.assertEqual(Fraction(1), trop_add(1, INF))
        self.assertEqual(Fraction(-1), trop_add(Fraction(-1), Fraction(2)))
        self.assertTrue(is_inf(trop_mul(1, INF)))
        self.assertEqual(Fraction(3), trop_mul(Fraction(1), Fraction(2)))


    def test_tmatrix_and_rank(self):
        M = tmatrix([[1, "t+1"], [0, "1/t"]])
        self.assertEqual(t + 1, M[0, 1])
        self.assertEqual(2, exact_rank(M))
        self.assertEqual(1, exact_rank([[1, t], [t, t**2]]))
        self.assertEqual(0, exact_rank(sp.zeros(2, 3)))


    def test_kminors_val(self):
        p = kminors_val(sp.eye(3), 3)
        self.assertEqual({(0, 1, 2): Fraction(0)}, p.entries)
        p = kminors_val([[1, 0, t], [0, 1, 1]], 2)
        self.assertEqual({(0, 1): Fraction(0), (0, 2): Fraction(0), (1, 2): Fraction(1)}, p.entries)
        p = kminors_val([[1, 0, 1], [0, 1, 0]], 2)
        self.assertTrue(is_inf(p.get((0, 2))))
        self.assertRaises(DegenerateInput, kminors_val, [[1, 2, 3], [2, 4, 6]], 2)
        self.assertRaises(DegenerateInput, kminors_val, [[1, 2, 3]], 2)


    def test_wedge2(self):
        L = [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]]
        W = wedge2_matrix(L)
        self.assertEqual((3, 6), W.shape)
        self.assertEqual(sp.Matrix([0, 0, 1]), W.col(0))
        self.assertEqual(sp.Matrix([-1, 1, 0]), W.col(5))
        self.assertRaises(DegenerateInput, wedge2_matrix, [[1, 0], [0, 1]])


    def test_lattice_kernel(self):
        self.assertEqual([(1, -1, 1, -1)], lattice_kernel([[1, 0, 0, 1], [1, 0, -1, 0], [1, 1, 1, 1]]))
        A = [[0, 1, 0, 0, 0], [1, 0, 0, 0, 0], [2, 1, 7, 3, 5], [1, 1, 1, 1, 1]]
        self.assertEqual([(0, 0, 1, 1, -2)], lattice_kernel(A))
        self.assertEqual([], lattice_kernel([[1, 0], [0, 1]]))
        # a saturated basis: 2x = 2y has kernel generated by (1, 1)
        self.assertEqual([(1, 1)], lattice_kernel([[2, -2]]))


    def test_lattice_kernel_random(self):
        rng = random.Random(1)
        for _ in range(30):
            A = sp.Matrix([[rng.randint(-3, 3) for _ in range(5)] for _ in range(2)])
            kernel = lattice_kernel(A)
            self.assertEqual(5 - A.rank(), len(kernel))
            for l in kernel:
                self.assertEqual(sp.zeros(2, 1), A * sp.Matrix(l))
            if kernel:
                # a lattice basis spans a saturated lattice: its maximal minors are coprime
                K = sp.Matrix(kernel)
                minors = [K.extract(list(range(K.rows)), list(c)).det()
                          for c in itertools.combinations(range(5), K.rows)]
                self.assertEqual(1, sp.gcd_list([abs(m) for m in minors]))


    def test_saturated_kernel(self):
        kernel = lattice_kernel([[2, 4, 6]])
        self.assertEqual(2, len(kernel))
        for l in kernel:
            self.assertEqual(0, 2 * l[0] + 4 * l[1] + 6 * l[2])
        # the kernel projects isomorphically onto the last two coordinates
        K = sp.Matrix(kernel)
        self.assertEqual(1, abs(K.extract([0, 1], [1, 2]).det()))
        self.assertRaises(ValueError, lattice_kernel, [[Fraction(1, 2), 1]])


    def test_linear_algebra(self):
        R, pivots = rref([[2, 4], [1, 2]], 2)
        self.assertEqual([0], pivots)
        self.assertEqual([[Fraction(1), Fraction(2)]], R)
        self.assertEqual([(Fraction(-1), Fraction(1))], nullspace([[1, 1]], 2))
        self.assertEqual((2, 3), primitive([Fraction(1, 2), Fraction(3, 4)]))
        self.assertEqual((0, 0), primitive([0, 0]))
        self.assertEqual((-1, 2), primitive([-3, 6]))
        self.assertEqual((-1,), primitive([-3]))
        self.assertEqual(1, rational_rank([[2, 4], [1, 2]], 2))
        self.assertEqual(0, rational_rank([], 3))
        self.assertEqual([(1, 0), (0, 1)], nullspace([], 2))
        self.assertEqual([], nullspace([[1, 0], [Fraction(1, 2), 1]], 2))


if __name__ == "__main__":
    suite = unittest.TestLoader().loadTestsFromTestCase(TestNumkernel)
    unittest.TextTestRunner(verbosity=2).run(suite)
