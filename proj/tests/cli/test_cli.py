"""End-to-end checks of the command line tool. Usage: test_cli.py <skewcyc_cli>"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

CLI = None


def run(*args, check=None):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=600)
    if check is not None:
        assert proc.returncode == check, (args, proc.returncode, proc.stdout, proc.stderr)
    return proc


def run_json(*args):
    return json.loads(run("--format", "json", *args, check=0).stdout)


def run_lines(*args, check=0):
    """verify prints one JSON report per line."""
    out = run("--format", "json", *args, check=check).stdout
    return [json.loads(line) for line in out.splitlines() if line.strip()]


class Factor(unittest.TestCase):
    def test_n5(self):
        d = run_json("--n", "5", "factor")
        self.assertEqual((d["over_fq"], d["over_r"]), (4, 64))
        self.assertEqual(sorted(f["multiplicity"] for f in d["factors"]), [1, 1])

    def test_n3_is_a_cube(self):
        d = run_json("--n", "3", "factor")
        self.assertEqual(len(d["factors"]), 1)
        self.assertEqual(d["factors"][0]["multiplicity"], 3)
        self.assertEqual(d["over_r"], 64)

    def test_hypothesis_violated(self):
        p = run("--n", "4", "factor")
        self.assertEqual(p.returncode, 2)
        self.assertIn("HypothesisViolated", p.stderr)

    def test_bad_field(self):
        self.assertEqual(run("--field", "p=3,m=2,mod=2,0,1", "factor").returncode, 2)
        self.assertEqual(run("--field", "p=4,m=1", "field", "check").returncode, 2)


class Code(unittest.TestCase):
    def test_build_size(self):
        d = run_json("--n", "5", "code", "build", "--g1", "x-1", "--g2", "1", "--g3", "1")
        self.assertEqual(d["log_q_size"], 14)
        self.assertEqual(d["size"], str(9**14))

    def test_not_a_divisor(self):
        p = run("--n", "2", "code", "build", "--g1", "x-[1,1]", "--g2", "1", "--g3", "1")
        self.assertEqual(p.returncode, 2)
        self.assertIn("NotRightDivisor", p.stderr)

    def test_dual_of_full_is_zero(self):
        d = run_json("--n", "3", "code", "dual", "--g1", "1", "--g2", "1", "--g3", "1")
        self.assertEqual(d["log_q_size"], 0)
        self.assertEqual(d["size"], "1")

    def test_distance(self):
        d = run_json("--n", "2", "code", "distance", "--g1", "x-[0,1]", "--g2", "x^2-1", "--g3", "x^2-1")
        self.assertEqual(d["lee_distance"], 2)

    def test_idempotent(self):
        p = run("--n", "5", "code", "idempotent", "--g1", "x-1", "--g2", "1", "--g3", "1", check=0)
        self.assertIn("e1", p.stdout)


class Census(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(run_json("--n", "1", "census")["count"], 8)
        d = run_json("--n", "5", "census")
        self.assertEqual(d["count"], 64)
        self.assertEqual(len(d["codes"]), 64)
        self.assertEqual(len({(c["g1"], c["g2"], c["g3"]) for c in d["codes"]}), 64)


class Verify(unittest.TestCase):
    def test_clean_run(self):
        reports = run_lines("--n", "2", "verify")
        self.assertTrue(all(r["pass"] for r in reports))

    def test_injected(self):
        failing = [r for r in run_lines("--n", "2", "verify", "--inject-broken", check=1) if not r["pass"]]
        self.assertTrue(failing)
        self.assertTrue(all(r.get("witness") for r in failing))

    def test_controls(self):
        run("--n", "2", "verify", "--controls", check=0)

    def test_bad_config(self):
        self.assertEqual(run("--field", "p=4,m=1", "verify").returncode, 2)

    def test_matrix_file(self):
        entries = [{"p": 5, "m": 1, "mod": [0, 1], "aut": 1, "n": 2}]
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
            json.dump(entries, fh)
        try:
            reports = run_lines("verify", "--matrix", fh.name)
            self.assertTrue(reports)
            self.assertTrue(all(r["pass"] for r in reports))
        finally:
            os.unlink(fh.name)
        self.assertEqual(run("verify", "--matrix", "/nonexistent.json").returncode, 2)


class RoundTrip(unittest.TestCase):
    def test_json_code_reproduces_membership(self):
        gens = ["--g1", "x-[0,1]", "--g2", "1", "--g3", "x^2-1"]
        built = run("--n", "2", "--format", "json", "code", "build", *gens, check=0).stdout
        words = ["0;0", "1;0", "[0,2]|[0,0]|[0,0];[1,0]|[0,0]|[0,0]", "[1,0]|[1,0]|[1,0];[0,0]|[0,0]|[0,0]"]
        rows = run_json("--n", "2", "code", "matrix", *gens)["rows"]
        words.extend(rows)
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
            fh.write(built)
        try:
            for w in words:
                direct = run_json("--n", "2", "code", "contains", *gens, "--word", w)
                via_file = run_json("--n", "2", "code", "contains", "--code", fh.name, "--word", w)
                self.assertEqual(direct["contains"], via_file["contains"], w)
            for r in rows:
                self.assertTrue(run_json("--n", "2", "code", "contains", "--code", fh.name, "--word", r)["contains"])
        finally:
            os.unlink(fh.name)


if __name__ == "__main__":
    CLI = os.path.abspath(sys.argv.pop(1))
    unittest.main(verbosity=2)
