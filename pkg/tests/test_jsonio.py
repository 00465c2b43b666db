#!/usr/bin/env python

"""Tests for the JSON forms of the inputs and outputs."""

from fractions import Fraction
import json
import os
import shutil
import tempfile
import unittest

from tropfano.exceptions import DegenerateInput, MalformedInput
from tropfano.jsonio import (cayley_from_dict, complex_from_dict, complex_to_dict, dumps, lattice_from_dict,
                             load_json, matrix_from_dict, plucker_from_dict, plucker_to_dict,
                             polyhedron_from_dict, polyhedron_to_dict, polynomial_from_dict, system_from_dict,
                             system_to_dict)
from tropfano.numkernel import is_inf, t
from tropfano.polyhedra import Polyhedron, PolyComplex, cone

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


LINE_SYSTEM = {"ambient": 2, "orbit": [],
               "polys": [{"terms": [{"coeff": "0", "exp": [1, 0, 0]},
                                    {"coeff": "1/2", "exp": [0, 1, 0]},
                                    {"coeff": "inf", "exp": [0, 0, 1]}]}]}


class TestInputs(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()


    def tearDown(self):
        shutil.rmtree(self.tmp)


    def write(self, name, text):
        path = os.path.join(self.tmp, name)
        with open(path, "w") as f:
            f.write(text)
        return path


    def test_load_json(self):
        self.assertEqual({"d": 1}, load_json(self.write("ok.json", '{"d": 1}')))
        self.assertRaises(MalformedInput, load_json, self.write("bad.json", '{"d": 1,'))
        self.assertRaises(MalformedInput, load_json, os.path.join(self.tmp, "missing.json"))


    def test_system(self):
        S = system_from_dict(LINE_SYSTEM)
        self.assertEqual(3, S.size)
        F = S.polys[0]
        self.assertEqual((0, 1), F.finite_terms())
        self.assertEqual(frozenset([0, 1]), F.achievers((Fraction(1, 2), 0, 0)))
        self.assertEqual(LINE_SYSTEM, system_to_dict(S))
        self.assertRaises(MalformedInput, system_from_dict, {"ambient": 2})
        self.assertRaises(MalformedInput, polynomial_from_dict, {"terms": [{"coeff": "x", "exp": [1]}]})
        self.assertRaises(MalformedInput, polynomial_from_dict, {"terms": [{"exp": [1]}]})


    def test_plucker(self):
        p = plucker_from_dict({"d": 1, "n": 3, "entries": {"01": "1", "23": "5/2"}})
        self.assertEqual(Fraction(3, 2), p.get((2, 3)))
        self.assertTrue(is_inf(p.get((1, 2))))
        self.assertEqual(p, plucker_from_dict(plucker_to_dict(p)))
        self.assertRaises(MalformedInput, plucker_from_dict, {"d": 1, "n": 3, "entries": [["01", 0]]})
        self.assertRaises(MalformedInput, plucker_from_dict, {"d": 1, "entries": {"01": 0}})
        self.assertRaises(MalformedInput, plucker_from_dict, {"d": 1, "n": 3, "entries": {"01": "a"}})
        self.assertRaises(DegenerateInput, plucker_from_dict, {"d": 1, "n": 3, "entries": {"014": 0}})


    def test_matrix_and_lattice(self):
        M = matrix_from_dict({"matrix": [[1, "t+1"], ["1/t", 0]]})
        self.assertEqual(t + 1, M[0, 1])
        self.assertRaises(MalformedInput, matrix_from_dict, {"matrix": [[1, 2], [3]]})
        self.assertRaises(MalformedInput, matrix_from_dict, {"matrix": []})
        self.assertRaises(MalformedInput, matrix_from_dict, {"rows": [[1]]})
        self.assertEqual(3, lattice_from_dict({"A": [[1, 0, 0, 1], [1, 1, 1, 1]]}).n)
        self.assertRaises(DegenerateInput, lattice_from_dict, {"A": [[1, 0], [1, 2]]})
        pi = cayley_from_dict({"s": 1, "labels": [1, 0, 0, 1]})
        self.assertEqual((1, 0, 0, 1), pi.labels)


class TestComplexes(unittest.TestCase):
    def test_polyhedron(self):
        P = Polyhedron(2, ineqs = [([1, 0], 1)], strict = [([0, -1], 0)], eqs = [([1, -1], 0)])
        data = polyhedron_to_dict(P)
        self.assertEqual([["1", "0", "1", False], ["0", "-1", "0", True]], data["ineq"])
        self.assertEqual([["1", "-1", "0"]], data["eq"])
        Q = polyhedron_from_dict(data, 2)
        self.assertEqual(P.strict, Q.strict)
        self.assertTrue(P.closure().same_set(Q.closure()))
        self.assertTrue(polyhedron_from_dict({"ineq": [["1", "0", "1"]]}, 2).contains_point((1, 5)))
        self.assertRaises(MalformedInput, polyhedron_from_dict, {"ineq": [["1", "1"]]}, 2)
        self.assertRaises(MalformedInput, polyhedron_from_dict, {"eq": [["1", "x", "1"]]}, 2)


    def test_complex(self):
        K = PolyComplex(2, [cone(2, [(1, 1)]), cone(2, [(-1, 0)]), cone(2, [(0, -1)])], True)
        data = complex_to_dict(K)
        self.assertEqual(2, data["ambient"])
        self.assertTrue(data["fan"])
        self.assertEqual([0, 1], data["coordinates"])
        self.assertEqual({"1": 3}, data["stats"]["max_cells_by_dim"])
        self.assertEqual([["-1", "0"], ["0", "-1"], ["1", "1"]], data["rays"])
        self.assertEqual(3, len(data["cells"]))
        self.assertTrue("vertices" in data["cells"][0])
        self.assertFalse("vertices" in complex_to_dict(K, generators = False)["cells"][0])
        L = complex_from_dict(json.loads(dumps(data)))
        self.assertEqual(3, len(L))
        self.assertTrue(L.is_fan)
        for c, d in zip(K.cells, L.cells):
            self.assertTrue(c.same_set(d))
        self.assertRaises(MalformedInput, complex_from_dict, {"ambient": "two", "cells": []})
        self.assertRaises(MalformedInput, complex_from_dict, {"ambient": 2})


    def test_dumps(self):
        self.assertEqual(dumps({"b": 1, "a": [1, 2]}), dumps({"a": [1, 2], "b": 1}))
        self.assertEqual('{\n  "a": 1\n}', dumps({"a": 1}))


if __name__ == "__main__":
    for case in (TestInputs, TestComplexes):
        suite = unittest.TestLoader().loadTestsFromTestCase(case)
        unittest.TextTestRunner(verbosity=2).run(suite)
