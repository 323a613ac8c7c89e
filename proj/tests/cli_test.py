#!/usr/bin/env python3
"""End-to-end tests for the semdet command-line tool."""

import itertools
import json
import random
import subprocess
import sys

BIN = sys.argv[1]
failures = []


def run(*args, stdin=None):
    p = subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")


def ok(*args, stdin=None):
    code, out, err = run(*args, stdin=stdin)
    check(" ".join(args), code == 0, f"exit {code}, stderr {err!r}")
    return out


def avoids(w, pattern):
    k = len(pattern)
    for idx in itertools.combinations(range(len(w)), k):
        vals = [w[i] for i in idx]
        order = sorted(vals)
        if [order.index(v) + 1 for v in vals] == pattern:
            return False
    return True


THIRTEEN = [[int(c) for c in p] for p in (
    "51324", "15324", "52413", "25413", "53142", "35142", "31542",
    "143265", "143625", "143652", "146352", "413265", "413625")]


def main():
    # Documented examples.
    check("sem 4132", ok("sem", "--perm", "4 1 3 2").strip() == "e_112 - e_103 - e_022")
    out = ok("classify", "--perm", "3 2 1 5 7 6 8 4")
    check("classify Q", "Q = {3,7,8}" in out, out)
    check("classify u", "u = 87321564" in out, out)
    check("classify v", "v = 34562718" in out, out)
    out = ok("verify", "--n", "6", "--check", "sem-bound")
    check("verify sem-bound", out.startswith("pass sem-bound"), out)

    # Exit codes.
    code, _, err = run("rep", "--perm", "5 1 3 2 4")
    check("pattern violation exit", code == 1, str(code))
    check("pattern violation message", "51324" in err and "positions" in err, err)
    code, _, err = run("schubert", "--perm", "1 1 2")
    check("malformed permutation exit", code == 2 and "--perm" in err, f"{code} {err!r}")
    code, _, err = run("sem", "--perm", "4132", "--n", "1")
    check("domain error exit", code == 1, f"{code} {err!r}")
    code, _, err = run("schubert", "--perm", "21", "--format", "yaml")
    check("bad format exit", code == 2 and "--format" in err, f"{code} {err!r}")
    code, _, err = run("sem", "--perm", "21", "--bogus")
    check("unknown flag exit", code == 2 and "--bogus" in err, f"{code} {err!r}")
    code, _, _ = run()
    check("missing subcommand exit", code == 2, str(code))
    code, _, err = run("verify", "--check", "nonsense")
    check("unknown check exit", code == 2, f"{code} {err!r}")

    # JSON round trips: re-feeding emitted JSON reproduces it.
    poly = ok("schubert", "--perm", "4132", "--format", "json")
    check("schubert json parses", isinstance(json.loads(poly), list))
    sem_from_poly = ok("sem", "--poly", "-", "--n", "3", "--format", "json", stdin=poly)
    check("sem via poly", sem_from_poly == ok("sem", "--perm", "4132", "--format", "json"))
    rep = ok("rep", "--perm", "4132", "--format", "json")
    det = json.loads(ok("det", "--rep", "-", "--format", "json", stdin=rep))
    check("det of 4132 rep", json.dumps(det["determinant"]) == json.dumps(json.loads(poly)))
    check("4132 matrix", det["matrix"][0] == [[1, 1], [2, 2], None], str(det["matrix"]))
    paths = json.loads(ok("paths", "--rep", "-", "--format", "json", stdin=rep))
    check("4132 path systems", paths["count"] == 2, str(paths["count"]))
    exp = ok("expand-schubert", "--poly", "-", "--n", "4", "--format", "json", stdin=poly)
    check("expand-schubert", json.loads(exp) == [{"perm": [4, 1, 3, 2], "coeff": "1"}], exp)
    info = json.loads(ok("classify", "--perm", "32157684", "--format", "json"))
    check("classify json", info["perm"] == [3, 2, 1, 5, 7, 6, 8, 4], str(info))

    # rep | det reproduces schubert for random thirteen-avoiding permutations in S6.
    pool = [list(p) for p in itertools.permutations(range(1, 7))
            if all(avoids(list(p), q) for q in THIRTEEN)]
    random.Random(6).shuffle(pool)
    for w in pool[:200]:
        perm = " ".join(map(str, w))
        rep = ok("rep", "--perm", perm, "--format", "json")
        det = json.loads(ok("det", "--rep", "-", "--format", "json", stdin=rep))
        expected = json.loads(ok("schubert", "--perm", perm, "--format", "json"))
        check(f"rep|det {perm}", det["determinant"] == expected)

    # Remaining formats produce output.
    check("latex rep", ok("rep", "--perm", "4132", "--format", "latex").startswith("\\left|"))
    check("svg rep", ok("rep", "--perm", "4132", "--format", "svg").startswith("<svg"))
    check("quantum sem", ok("quantum", "--perm", "4132", "--sem").strip() == "E_112 - E_103 - E_022")
    check("det text", "det = " in ok("det", "--rep", "-", stdin=rep))

    if failures:
        print(f"{len(failures)} failures")
        for f in failures[:50]:
            print("  " + f)
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
