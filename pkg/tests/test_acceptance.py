"""Exit criteria for the package, one test per criterion.

Each criterion prints a single PASS/FAIL line. Run standalone with
``python tests/test_acceptance.py`` or through pytest.
"""

import json
import math
import random
import subprocess
import sys
import time

import pytest

from inclexcl.charset import CharSet, charset, mask_of
from inclexcl.cli import analyze
from inclexcl.evaluate import (check_identity, eval_charset, eval_expr,
                               i_vector, indicator_sequence, random_sequence,
                               sigma_vector)
from inclexcl.expr import parse, random_expr
from inclexcl.iel import (IsLike, NotLike, binomial_forward, binomial_inverse,
                          coefficients, decide_iel, family_at_least,
                          family_even, family_odd)
from inclexcl.render import parse_report_json, render_json

try:
    from oracles import i_vector_naive
except ImportError:  # standalone run from the repository root
    sys.path.insert(0, "tests")
    from oracles import i_vector_naive

MAJORITY = "(X1&X2)|(X1&X3)|(X2&X3)"


def ac1_example_golden():
    start = time.perf_counter()
    s_e = charset(parse("X1|X2", 3), 3)
    d_e = decide_iel(s_e)
    s_f = charset(parse(MAJORITY, 3), 3)
    d_f = decide_iel(s_f)
    elapsed = time.perf_counter() - start
    ok = (
        s_e == CharSet.from_subsets(3, [[1], [2], [1, 2], [1, 3], [2, 3], [1, 2, 3]])
        and isinstance(d_e, NotLike)
        and d_e.witness_in.bit_count() == d_e.witness_out.bit_count() == 1
        and d_e.witness_in in s_e and d_e.witness_out not in s_e
        and s_f == CharSet.from_subsets(3, [[1, 2], [1, 3], [2, 3], [1, 2, 3]])
        and d_f == IsLike(frozenset({2, 3}), (0, 1, -2))
        and elapsed < 1.0
    )
    return ok, f"S_E/S_F exact, witness {d_e}, coefficients {getattr(d_f, 'coeffs', None)}, {elapsed:.3f}s < 1s"


def ac2_classical_iep():
    bad = []
    for n in range(1, 13):
        e = parse(" | ".join(f"X{i}" for i in range(1, n + 1)), n)
        d = decide_iel(charset(e, n))
        if not (isinstance(d, IsLike)
                and d.coeffs == tuple((-1) ** (k - 1) for k in range(1, n + 1))):
            bad.append(n)
    return not bad, f"n = 1..12, failures at {bad}"


def ac3_closed_forms():
    start = time.perf_counter()
    mismatches = 0
    checks = 0
    for n in range(1, 17):
        for m in range(1, n + 1):
            checks += 1
            mismatches += family_at_least(m, n) != coefficients(range(m, n + 1), n)
        checks += 2
        mismatches += family_even(n) != coefficients(range(2, n + 1, 2), n)
        mismatches += family_odd(n) != coefficients(range(1, n + 1, 2), n)
    elapsed = time.perf_counter() - start
    return mismatches == 0 and elapsed < 5.0, \
        f"{checks} family vectors, {mismatches} mismatches, {elapsed:.3f}s < 5s"


def ac4_oracle_equivalence():
    start = time.perf_counter()
    rng = random.Random(2024)
    failures = 0
    like = not_like = pairs = 0
    for _ in range(1000):
        n = rng.randint(1, 5)
        e = random_expr(rng, n, 8)
        s = charset(e, n)
        d = decide_iel(s)
        if isinstance(d, IsLike):
            like += 1
        else:
            not_like += 1
            a_in = indicator_sequence(d.witness_in, n)
            a_out = indicator_sequence(d.witness_out, n)
            if not (i_vector(a_in) == i_vector(a_out)
                    and len(eval_expr(e, a_in)) == 1 and len(eval_expr(e, a_out)) == 0):
                failures += 1
        for _ in range(50):
            a = random_sequence(rng, n, rng.randint(1, 10))
            pairs += 1
            if eval_expr(e, a) != eval_charset(s, a):
                failures += 1
            elif isinstance(d, IsLike) and not check_identity(s, d.coeffs, a):
                failures += 1
    elapsed = time.perf_counter() - start
    return failures == 0 and elapsed < 60.0, \
        f"{pairs} pairs, {like} IsLike / {not_like} NotLike, {failures} failures, {elapsed:.1f}s < 60s"


def ac5_statistics_laws():
    rng = random.Random(5)
    failures = 0
    for _ in range(500):
        n = rng.randint(1, 6)
        a = random_sequence(rng, n, rng.randint(1, 12))
        iv, sv = i_vector(a), sigma_vector(a)
        for k in range(1, n + 1):
            failures += iv[k - 1] != sum(math.comb(j, k) * sv[j - 1] for j in range(k, n + 1))
            failures += sv[k - 1] != sum((-1) ** (j - k) * math.comb(j, k) * iv[j - 1]
                                         for j in range(k, n + 1))
        failures += sum(sv) != len(a.universe())
        failures += iv != i_vector_naive(a)
    return failures == 0, f"500 sequences, {failures} failures"


def ac6_binomial_inversion():
    rng = random.Random(6)
    failures = 0
    for _ in range(200):
        n = rng.randint(0, 12)
        b = [rng.randint(-10 ** 9, 10 ** 9) for _ in range(n + 1)]
        failures += binomial_inverse(binomial_forward(b)) != b
        failures += binomial_forward(binomial_inverse(b)) != b
    return failures == 0, f"200 sequences both directions, {failures} failures"


def ac7_cli_determinism():
    def cli(*args):
        cmd = [sys.executable, "-m", "inclexcl", *args, "--format", "json"]
        return subprocess.run(cmd, capture_output=True).stdout

    runs = [
        ("analyze", MAJORITY, "--n", "3"),
        ("analyze", "X1|X2", "--n", "3"),
        ("verify", MAJORITY, "--n", "3", "--seed", "17", "--trials", "300"),
        ("verify", "X1|X2", "--n", "3", "--seed", "17"),
    ]
    identical = all(cli(*r) == cli(*r) and cli(*r) for r in runs)
    reports = [analyze(MAJORITY, 3), analyze("X1|X2", 3), analyze("0", 4)]
    lossless = all(parse_report_json(render_json(r)) == r for r in reports)
    lossless &= json.loads(cli(*runs[0]))["coefficients"] == [0, 1, -2]
    return identical and lossless, \
        f"byte-identical across runs: {identical}, JSON round-trip lossless: {lossless}"


CRITERIA = [
    ("AC1 Example 1.2 golden", ac1_example_golden),
    ("AC2 classical IEP n<=12", ac2_classical_iep),
    ("AC3 closed-form families n<=16", ac3_closed_forms),
    ("AC4 oracle equivalence 1000x50", ac4_oracle_equivalence),
    ("AC5 statistics laws", ac5_statistics_laws),
    ("AC6 binomial inversion", ac6_binomial_inversion),
    ("AC7 CLI determinism", ac7_cli_determinism),
]


@pytest.mark.parametrize("name, check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    results = []
    for name, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    sys.exit(0 if all(results) else 1)
