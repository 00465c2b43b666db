#!/usr/bin/env python

"""Tests for tropical Fano schemes and the genericity of planes."""

from fractions import Fraction
import itertools
import os
import random
import unittest
import sympy as sp

from tropfano.exceptions import BadDimensions, DegenerateInput, NotPluecker, OrbitMismatch, OutOfScope
from tropfano.fano import (classical_plane_fano_trop, contains_line, fano_general, fano_linear,
                           genericity_check, incidence_system, pairing_line, plucker_coordinates, plucker_orbit,
                           snowflake_plucker)
from tropfano.numkernel import exact_rank, kminors_val, tmatrix, wedge2_matrix
from tropfano.polyhedra import Orbit, contained_in_complex, hv_convert
from tropfano.prevariety import intersect_system, member
from tropfano.troplin import TropPluecker, check_3term, circuit_system, plucker_system, realize_space, translate

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


SLOW = os.environ.get("TROPFANO_SLOW_TESTS") == "1"

PLANE_L = [[0, -271, -92, 0, -13, -54], [0, -18, -7, -1, 0, -4], [-1, 12293, 4173, 0, 588, 2450]]
PLANE_COLLINEAR = [[1, 3, 0, 1, 5, 7], [0, 0, 1, 3, -1, -1], [1, 4, -1, -3, 0, 0]]
PLANE_NONFAN = [[1, 1, 0, "t", 1, 1], [1, "t+1", 1, 2, "t", 0], [5, 8, 6, 9, 7, 10]]
SNOWFLAKE = ((0, 1), (2, 3), (4, 5))


def uniform(d, n):
    return TropPluecker(d, n, dict((S, 0) for S in itertools.combinations(range(n + 1), d + 1)))


def pair_vector(pairs, n = 5):
    return tuple(1 if S in pairs else 0 for S in itertools.combinations(range(n + 1), 2))


def sample_point(cell, rng):
    """A random rational point of a cell: its relative interior point moved
    along rays and lineality directions."""
    V = hv_convert(cell)
    x = list(cell.relint_point())
    for r in V.rays:
        c = Fraction(rng.randint(0, 6), rng.randint(1, 3))
        x = [xi + c * ri for xi, ri in zip(x, r)]
    for l in V.lines:
        c = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        x = [xi + c * li for xi, li in zip(x, l)]
    return tuple(x)


class TestIncidence(unittest.TestCase):
    def test_coordinates(self):
        self.assertEqual(15, len(plucker_coordinates(1, 5)))
        self.assertEqual((0, 1, 2), plucker_coordinates(2, 4)[0])
        self.assertEqual(Orbit([0, 9, 14]), plucker_orbit(1, 5, ["01", "23", "45"]))
        self.assertEqual(Orbit([1]), plucker_orbit(1, 3, [(2, 0)]))
        self.assertRaises(DegenerateInput, plucker_orbit, 1, 5, ["012"])


    def test_incidence_system(self):
        S = incidence_system(uniform(2, 5), 1)
        self.assertEqual(15, S.size)
        self.assertEqual(15 + 60, len(S))
        self.assertEqual(1, len(incidence_system(uniform(1, 2), 0)))
        self.assertRaises(BadDimensions, incidence_system, uniform(2, 5), 2)
        self.assertRaises(BadDimensions, incidence_system, uniform(2, 5), -1)
        bad = TropPluecker(1, 3, {"01": 0, "02": 1, "03": 1, "12": 0, "13": 0, "23": 0})
        self.assertRaises(NotPluecker, incidence_system, bad, 0)


    def test_points_of_a_line(self):
        # the points of a tropical line form the line itself
        F = fano_linear(uniform(1, 2), 0)
        self.assertEqual("incidence", F.provenance)
        self.assertEqual({1: 3}, F.stats()["max_cells_by_dim"])
        self.assertTrue(F.contains(TropPluecker(0, 2, {"0": 5, "1": 0, "2": 0})))
        self.assertFalse(F.contains(TropPluecker(0, 2, {"0": 0, "1": 1, "2": 2})))
        self.assertFalse(F.contains(TropPluecker(0, 2, {"0": 0, "1": 0})))
        self.assertEqual(Fraction(3), F.plucker_at((0, 0, 3)).get((2,)))


    @unittest.skipUnless(SLOW, "long computation")
    def test_uniform_plane(self):
        F = fano_linear(uniform(2, 5), 1)
        stats = F.stats()
        self.assertEqual({3: 15, 2: 30}, stats["max_cells_by_dim"])
        self.assertTrue(F.complex.is_fan)
        self.assertTrue(F.contains(snowflake_plucker(SNOWFLAKE, 5)))


    @unittest.skipUnless(SLOW, "long computation")
    def test_boundary_orbit(self):
        orbit = plucker_orbit(1, 5, ["01", "23", "45"])
        F = fano_linear(uniform(2, 5), 1, orbit)
        self.assertEqual(12, len(F.complex.coordinates))
        pairs = [S for S in itertools.combinations(range(6), 2) if S not in [(0, 1), (2, 3), (4, 5)]]
        self.assertTrue(F.contains(TropPluecker(1, 5, dict((S, 0) for S in pairs))))


    def test_soundness(self):
        # lines sampled from the Fano scheme lie in the plane, other points of the Grassmannian do not
        rng = random.Random(11)
        plane = realize_space(uniform(2, 3)).complex
        F = fano_linear(uniform(2, 3), 1)
        inside = [sample_point(F.complex.cells[k % len(F.complex)], rng) for k in range(50)]
        self.assertEqual(50, len(inside))
        for x in inside:
            self.assertTrue(contains_line(F.plucker_at(x), plane)[0])
        G = intersect_system(plucker_system(1, 3))
        outside = [x for x in (sample_point(cell, rng) for cell in G.cells for _ in range(5))
                   if not F.complex.contains_point(x)]
        self.assertTrue(len(outside) > 0)
        for x in outside:
            ok, witness = contains_line(F.plucker_at(x), plane)
            self.assertFalse(ok)
            self.assertFalse(plane.contains_point(witness))


class TestContainment(unittest.TestCase):
    def test_contains_line(self):
        line = realize_space(uniform(1, 2)).complex
        self.assertEqual((True, None), contains_line(uniform(1, 2), line))
        ok, witness = contains_line(translate(uniform(1, 2), (1, 0, 0)), line)
        self.assertFalse(ok)
        self.assertFalse(line.contains_point(witness))
        self.assertRaises(OrbitMismatch, contains_line, uniform(1, 2), line, Orbit([2]))


    def test_snowflakes_in_the_plane(self):
        plane = realize_space(uniform(2, 5)).complex
        p = snowflake_plucker(SNOWFLAKE, 5)
        self.assertTrue(check_3term(p))
        self.assertEqual(Fraction(1), p.get((2, 3)))
        self.assertEqual(Fraction(0), p.get((1, 2)))
        self.assertTrue(contains_line(p, plane)[0])
        self.assertRaises(DegenerateInput, snowflake_plucker, [(0, 1), (1, 2)], 5)
        self.assertRaises(DegenerateInput, snowflake_plucker, [(0, 7)], 5)


    def test_projection_route(self):
        # a tropical line in TP^2 contains no line but itself
        line = realize_space(uniform(1, 2)).complex
        F = fano_general(line, 2)
        self.assertEqual("projection", F.provenance)
        self.assertTrue(F.contains(uniform(1, 2)))
        self.assertFalse(F.contains(translate(uniform(1, 2), (1, 0, 0))))
        self.assertEqual(0, F.stats()["dim"])


    def test_projection_scope(self):
        line = realize_space(uniform(1, 2)).complex
        self.assertRaises(OutOfScope, fano_general, line, 2, None, 2)
        self.assertRaises(OutOfScope, fano_general, line, 6)
        self.assertRaises(OrbitMismatch, fano_general, line, 3)


    @unittest.skipUnless(SLOW, "long computation")
    def test_routes_agree(self):
        plane = realize_space(uniform(2, 3)).complex
        F = fano_general(plane, 3)
        G = fano_linear(uniform(2, 3), 1)
        for c in F.complex.cells:
            self.assertTrue(contained_in_complex(c, G.complex)[0])
        for c in G.complex.cells:
            self.assertTrue(contained_in_complex(c, F.complex)[0])


class TestPlanes(unittest.TestCase):
    def test_genericity(self):
        result = genericity_check(PLANE_COLLINEAR)
        self.assertFalse(result["cond_II"])
        self.assertTrue(SNOWFLAKE in result["witnesses"]["cond_II"])
        result = genericity_check(PLANE_NONFAN)
        self.assertTrue(result["cond_I"])
        self.assertFalse(SNOWFLAKE in result["witnesses"]["cond_II"])
        self.assertEqual([], genericity_check(tmatrix(PLANE_NONFAN))["witnesses"]["cond_I"])


    def test_degenerate_planes(self):
        self.assertRaises(DegenerateInput, genericity_check, [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]])
        self.assertRaises(DegenerateInput, genericity_check, [[1, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        self.assertRaises(DegenerateInput, genericity_check, [[1, 0, 0, 0], [0, 1, 0, 0]])
        self.assertRaises(DegenerateInput, classical_plane_fano_trop, [[1, 0, 0, 0], [0, 1, 0, 0]])


    def test_pairing_line(self):
        B, certified = pairing_line(PLANE_COLLINEAR, SNOWFLAKE)
        self.assertTrue(certified)
        self.assertEqual((2, 6), B.shape)
        line = sp.Matrix([[0, 0, -1, -3, 1, 1], [-1, -4, 0, 0, 1, 1]])
        self.assertEqual(2, exact_rank(B.col_join(line)))
        self.assertRaises(DegenerateInput, pairing_line, PLANE_COLLINEAR, [(0, 1), (2, 3)])
        self.assertRaises(DegenerateInput, pairing_line, PLANE_COLLINEAR, [(0, 1), (1, 2), (4, 5)])
        self.assertRaises(DegenerateInput, pairing_line, PLANE_COLLINEAR, [(0, 1), (2, 3), (4, 7)])


    def test_pairings_follow_collinearity(self):
        witnesses = genericity_check(PLANE_COLLINEAR)["witnesses"]["cond_II"]
        for P in [SNOWFLAKE, ((0, 2), (1, 3), (4, 5)), ((0, 5), (1, 4), (2, 3))]:
            self.assertEqual(P in witnesses, pairing_line(PLANE_COLLINEAR, P) is not None)


    def test_nonfan_witness(self):
        S = circuit_system(kminors_val(wedge2_matrix(tmatrix(PLANE_NONFAN)), 3))
        v = pair_vector(SNOWFLAKE)
        self.assertTrue(member(v, S))
        self.assertFalse(member([2 * x for x in v], S))


    @unittest.skipUnless(SLOW, "long computation")
    def test_classical_rays(self):
        F = fano_linear(uniform(2, 5), 1).complex
        generic = classical_plane_fano_trop(PLANE_L)
        self.assertEqual(set(F.rays()), set(generic.rays()))
        extra = set(classical_plane_fano_trop(PLANE_COLLINEAR).rays()) - set(generic.rays())
        self.assertEqual(set([pair_vector(SNOWFLAKE)]), extra)


if __name__ == "__main__":
    for case in (TestIncidence, TestContainment, TestPlanes):
        suite = unittest.TestLoader().loadTestsFromTestCase(case)
        unittest.TextTestRunner(verbosity=2).run(suite)
