########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

from __future__ import absolute_import

import os

from thsolve.tests.common import MayBeTempDirTest, TestCase, unittest
from thsolve import ProblemFile, ProblemFileError, monomial, symbol
from thsolve.problem import dumps, read_json, write_json


def sample_problem(options=None):
    return ProblemFile(monomial(-2), monomial(2), symbol({6: 1, 4: 3}),
                       options)


class problemTest(TestCase):

    def test00a(self):
        """JSON form of a problem."""
        data = sample_problem({"oracle": 16}).to_json()
        self.assertEqual(sorted(data), ["a", "b", "f", "options"])
        self.assertEqual(data["a"], {"num": {"-2": [1.0, 0.0]}})
        self.assertNotIn("options", sample_problem().to_json())

    def test00b(self):
        """Reading back keeps the symbols."""
        data = sample_problem().to_json()
        prob = ProblemFile.from_json(data)
        self.assertEqual(prob.a, monomial(-2))
        self.assertEqual(prob.f, symbol({6: 1, 4: 3}))
        self.assertEqual(prob.options, {})

    def test00c(self):
        """Plain numbers are accepted as coefficients."""
        prob = ProblemFile.from_json({"a": {"num": {"0": 1}},
                                      "b": {"num": {"1": 2, "0": 1},
                                            "den": {"0": 2, "1": 1}},
                                      "f": {"num": {"0": 1}}})
        self.assertEqual(prob.b, symbol([1, 2], [2, 1]))

    def test01a(self):
        """Unknown and missing keys are refused."""
        data = sample_problem().to_json()
        data["g"] = data["f"]
        self.assertRaises(ProblemFileError, ProblemFile.from_json, data)
        del data["g"]
        del data["b"]
        self.assertRaises(ProblemFileError, ProblemFile.from_json, data)
        self.assertRaises(ProblemFileError, ProblemFile.from_json, [1, 2])
        data = sample_problem().to_json()
        data["a"]["denominator"] = {"0": 1}
        self.assertRaises(ProblemFileError, ProblemFile.from_json, data)

    def test01b(self):
        """Malformed coefficients and exponents."""
        for num in ({"x": 1}, {"0": [1, 2, 3]}, {"0": "one"}, [1, 2]):
            data = {"a": {"num": num}, "b": {"num": {"0": 1}},
                    "f": {"num": {"0": 1}}}
            self.assertRaises(ProblemFileError, ProblemFile.from_json, data)

    def test01c(self):
        """Option checks."""
        for options in ({"tolerance": 0}, {"circle_tolerance": 2},
                        {"oracle": 0}, {"oracle": 2.5}, {"oracle": True},
                        {"format": "yaml"}, {"verbose": 1}, [1]):
            self.assertRaises(ProblemFileError, sample_problem, options)

    def test02a(self):
        """Options map onto defaults."""
        prob = sample_problem({"tolerance": 1e-6, "format": "text"})
        self.assertEqual(prob.defaults_overrides(),
                         {"residual_tolerance": 1e-6,
                          "circle_tolerance": None,
                          "out_format": "text"})

    def test02b(self):
        """Serialized text is sorted, ASCII and newline terminated."""
        text = dumps({"b": 1, "a": [1.5, 0.0]})
        self.assertEqual(text, '{"a": [1.5, 0.0], "b": 1}\n')


class problemFileTest(MayBeTempDirTest, TestCase):

    tempdir = True

    def test00a(self):
        """save/load round trip on disk."""
        path = os.path.join(self.rootdir, "p.json")
        sample_problem({"oracle": 8}).save(path)
        prob = ProblemFile.load(path)
        self.assertEqual(prob.b, monomial(2))
        self.assertEqual(prob.options, {"oracle": 8})

    def test00b(self):
        """Unreadable and invalid files."""
        path = os.path.join(self.rootdir, "p.json")
        self.assertRaises(ProblemFileError, read_json, path)
        with open(path, 'w') as wfile:
            wfile.write("{not json")
        self.assertRaises(ProblemFileError, ProblemFile.load, path)
        write_json({"x": 1}, path)
        self.assertEqual(read_json(path), {"x": 1})


if __name__ == '__main__':
    unittest.main(verbosity=2)
