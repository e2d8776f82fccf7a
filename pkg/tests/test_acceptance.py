"""Exit criteria. Each test checks one criterion exactly and within its time budget.

Run ``pytest tests/test_acceptance.py`` (a summary line per criterion is
printed at the end) or ``python tests/test_acceptance.py``.
"""
import random
import sys
import time
from fractions import Fraction
from itertools import product
from math import gcd
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from lensforge import (  # noqa: E402
    CoveringData,
    LensSpace,
    NonManifoldInput,
    QuotientGerm,
    chain_identity_check,
    covering_matrix,
    decompose_matrix,
    generic_degree,
    hilbert_basis,
    hj_evaluate,
    hj_expand,
    hj_reverse_dual,
    is_homeomorphic,
    link_of_X,
    normal_model,
    normalize_lens,
    nu_separates_orbits,
    orbit_size_census,
    trace_link_of_X,
)
from lensforge.cli import JobRequest, run  # noqa: E402
from lensforge.quotient import random_exact_point  # noqa: E402
from oracles import brute_hilbert, brute_inverse, coprime_pairs  # noqa: E402

RESULTS = []


def _record(number, title, ok, elapsed, budget):
    status = "PASS" if ok and (budget is None or elapsed < budget) else "FAIL"
    limit = "" if budget is None else f" (budget {budget:g} s)"
    line = f"[{status}] criterion {number}: {title}: {elapsed:.3f} s{limit}"
    RESULTS.append(line)
    return status == "PASS"


def _timed(check):
    start = time.perf_counter()
    ok = check()
    return ok, time.perf_counter() - start


def check_lens_classification():
    for n in range(2, 51):
        units = [q for q in range(1, n) if gcd(n, q) == 1]
        partition = set()
        for q in units:
            cls = frozenset(p for p in units if is_homeomorphic(LensSpace(n, q), LensSpace(n, p)))
            partition.add(cls)
        expected = {frozenset({q, brute_inverse(q, n)}) for q in units}
        if partition != expected:
            return False
    return True


def check_matrix_round_trip():
    for n in range(1, 31):
        qs = [0] if n == 1 else [q for q in range(1, n) if gcd(n, q) == 1]
        for q, a, b in product(qs, range(1, 11), range(1, 11)):
            d = CoveringData(n, q, a, b)
            m = covering_matrix(d)
            if decompose_matrix(m) != d or m.det != a * b * n or generic_degree(d) != a * b * n:
                return False
    return True


def check_elens():
    for n, q in coprime_pairs(40):
        t = trace_link_of_X(n, q)
        if (t.m2_cap_m1, t.m1_cap_l2) != (n, n - q):
            return False
        if link_of_X(n, q) != (LensSpace(n, q), CoveringData(n, q, 1, 1)):
            return False
    return True


def check_matrix_a1():
    for n, q in coprime_pairs(40):
        a1 = [[n, q], [0, 1]]
        cover = covering_matrix(CoveringData(n, q, 1, 1))
        germ, model = normal_model(LensSpace(n, q))
        if cover.as_lists() != a1 or model.as_lists() != a1 or germ != QuotientGerm(n, q):
            return False
    return True


def check_chain_identity():
    rng = random.Random(20240601)
    for n, q in coprime_pairs(10):
        g = QuotientGerm(n, q)
        for _ in range(100):
            if not chain_identity_check(g, random_exact_point(rng)):
                return False
    return True


def check_orbits():
    for n, q in coprime_pairs(8):
        g = QuotientGerm(n, q)
        if orbit_size_census(g) != {n: n} or not nu_separates_orbits(g):
            return False
    return True


def check_hilbert_basis():
    golden = {(2, 1): 3, (3, 2): 3, (4, 1): 5}
    for n, q in coprime_pairs(12):
        basis = hilbert_basis(QuotientGerm(n, q), 2 * n)
        if [tuple(x.as_list()) for x in basis.generators] != brute_hilbert(n, q, 4 * n):
            return False
        if (n, q) in golden and len(basis) != golden[(n, q)]:
            return False
    return True


def check_hj_duality():
    for n, q in coprime_pairs(200):
        rev = tuple(reversed(hj_expand(n, q).coefficients))
        if hj_evaluate(rev) != Fraction(n, brute_inverse(q, n)):
            return False
        if hj_reverse_dual(hj_expand(n, q)).coefficients != rev:
            return False
    return all(list(hj_expand(n, n - 1).coefficients) == [2] * (n - 1) for n in range(2, 51))


def check_error_paths():
    code = NonManifoldInput.exit_code
    for n in range(2, 31):
        for q in range(-n, 2 * n + 1):
            if gcd(n, q) == 1:
                continue
            try:
                normalize_lens(n, q)
                return False
            except NonManifoldInput:
                pass
            if 0 <= q <= n:
                try:
                    link_of_X(n, q)
                    return False
                except NonManifoldInput:
                    pass
                for cmd in ("classify", "link-x"):
                    status, _ = run(JobRequest(cmd, {"n": n, "q": q}))
                    if status != code:
                        return False
    return True


CRITERIA = [
    (1, "lens classification vs pairwise mod-inverse oracle, n <= 50", check_lens_classification, 1.0),
    (2, "covering matrix round trip and det = abn, n <= 30, a,b <= 10", check_matrix_round_trip, 1.0),
    (3, "link of X_{n,q} is L(n,q) with trace (n, n-q), n <= 40", check_elens, 1.0),
    (4, "matrix A1 from cover and normal model agree, n <= 40", check_matrix_a1, None),
    (5, "pi.nu.gamma = (z1^n, z2^n) on 100 exact points per germ, n <= 10", check_chain_identity, 5.0),
    (6, "free orbits and nu separates orbits, n <= 8", check_orbits, 5.0),
    (7, "Hilbert basis at 2n equals exhaustive enumeration at 4n, n <= 12", check_hilbert_basis, 10.0),
    (8, "HJ reversal duality n <= 200 and A-type chains n <= 50", check_hj_duality, 2.0),
    (9, "non-coprime inputs rejected as NonManifoldInput (exit 4), n <= 30", check_error_paths, None),
]


def _run_criterion(index):
    number, title, check, budget = CRITERIA[index]
    ok, elapsed = _timed(check)
    return _record(number, title, ok, elapsed, budget)


def test_criterion_1_lens_classification():
    assert _run_criterion(0)


def test_criterion_2_covering_matrix_round_trip():
    assert _run_criterion(1)


def test_criterion_3_link_of_x():
    assert _run_criterion(2)


def test_criterion_4_matrix_a1():
    assert _run_criterion(3)


def test_criterion_5_chain_identity():
    assert _run_criterion(4)


def test_criterion_6_orbits():
    assert _run_criterion(5)


def test_criterion_7_hilbert_basis():
    assert _run_criterion(6)


def test_criterion_8_hj_duality():
    assert _run_criterion(7)


def test_criterion_9_error_paths():
    assert _run_criterion(8)


if __name__ == "__main__":
    results = [_run_criterion(i) for i in range(len(CRITERIA))]
    print("\n".join(RESULTS))
    sys.exit(0 if all(results) else 1)
