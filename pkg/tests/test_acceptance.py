"""Acceptance suite: twelve criteria, each exact, each with a runtime budget.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion, or directly with ``python tests/test_acceptance.py``.
"""

import json
import re
import subprocess
import sys
import time
from itertools import product
from math import gcd

import pytest

from pirideals import category as cat
from pirideals import ordered_semigroup as osg
from pirideals.ideals import RingIso, ordered_regularity_witness, unit_ideal, verify_induced_iso
from pirideals.instances import (
    build_ideal_semigroup_zn,
    sampled_law_suite,
    verify_poly_classes,
    verify_z_naturals_iso,
    verify_zn_divisor_iso,
    zn_universe,
)
from pirideals.ideals import check_inverse_transversal
from pirideals.rings import (
    IntegerRing,
    ModularRing,
    PolyRing,
    TriangularRing,
    set_ideal_product,
    two_sided_ideal_closure,
)
from pirideals.suites import check_von_neumann

N_MAX = 60
MODULI = range(2, N_MAX + 1)


def tau(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def fail_first(items, pred):
    return next((x for x in items if not pred(x)), None)


# -- criteria: each returns None on success or a description of the first failure ----------

def c01_regular_ordered_semigroup():
    for n in MODULI:
        S = build_ideal_semigroup_zn(n)
        if not osg.validate(S).passed:
            return f"validate failed for n={n}"
        one = unit_ideal(ModularRing(n))
        bad = fail_first(zn_universe(n), lambda A: ordered_regularity_witness(A) == one)
        if bad is not None:
            return f"witness for {bad} in Z_{n} is not <1>"
    return None


def c02_divisor_iso():
    for n in MODULI:
        rep = verify_zn_divisor_iso(n)
        table = next(d for d in rep.details if d.check == "table_identity")
        if not (rep.passed and table.passed):
            return f"n={n}: {rep.counterexample}"
        # the literal identity, recomputed from raw integers
        S = build_ideal_semigroup_zn(n)
        for i, j in product(range(S.size), repeat=2):
            d1, d2 = int(S.labels[i]), int(S.labels[j])
            if int(S.labels[S.mul[i][j]]) != gcd(d1 * d2, n):
                return f"n={n}: {d1} * {d2}"
    return None


def c03_greens_universal():
    for n in MODULI:
        S = build_ideal_semigroup_zn(n)
        g = osg.greens_relations(S)
        for rel in ("L", "R", "J", "H", "D"):
            classes = g.partition(rel)
            if len(classes) != 1 or len(classes[0]) != tau(n):
                return f"n={n}: {rel} has classes {classes}"
    if len(osg.greens_relations(build_ideal_semigroup_zn(12)).partition("L")[0]) != 6:
        return "n=12 class size is not 6"
    return None


def c04_six_properties():
    for n in MODULI:
        c = osg.classify(build_ideal_semigroup_zn(n))
        if not c.all_true():
            return f"n={n}: {[p for p in c.PROPERTIES if not getattr(c, p)]}"
    return None


def c05_inverse_transversal():
    for n in MODULI:
        rep = check_inverse_transversal(zn_universe(n))
        if not rep.passed:
            return f"n={n}: {rep.counterexample}"
    return None


def c06_von_neumann():
    for n in MODULI:
        rep = check_von_neumann(n)
        if not rep.passed:
            return f"n={n}: {rep.counterexample}"
    return None


def c07_matrix_counterexample():
    for p in (2, 3):
        R = TriangularRing(p)
        e11, e22, e12 = R.element((1, 0, 0)), R.element((0, 0, 1)), R.element((0, 1, 0))
        prod_ = set_ideal_product(two_sided_ideal_closure(e11), two_sided_ideal_closure(e22))
        closure_e12 = two_sided_ideal_closure(e12)
        generated = two_sided_ideal_closure(e11 * e22)
        if prod_ != closure_e12:
            return f"p={p}: product is not <E12>"
        if generated != {R.zero()} or prod_ == generated:
            return f"p={p}: <E11 E22> is {generated}"
        if len(closure_e12) != p:
            return f"p={p}: |<E12>| = {len(closure_e12)}"
    return None


def c08_induced_iso():
    for alpha, beta in ((1, 1), (2, 0)):
        rep = verify_induced_iso(RingIso.poly_affine(3, alpha, beta), 1000, seed=42)
        if rep.witness != {"pairs_checked": 1000}:
            return f"sample size {rep.witness}"
        for d in rep.details:
            if d.check in ("multiplicative", "order_preserving") and not d.passed:
                return f"{rep.instance}: {d.check} {d.counterexample}"
        if not rep.passed:
            return f"{rep.instance}: {rep.counterexample}"
    return None


def c09_subobjects_and_homs():
    for n in (2, 6, 12, 24):
        rep = cat.check_subobject_axioms(zn_universe(n))
        if not rep.passed:
            return f"n={n}: {rep.counterexample}"
    for n in range(2, 25):
        rep = cat.check_hom_enumeration(n)
        if not rep.passed:
            return f"hom-sets n={n}: {rep.counterexample}"
    return None


def c10_functor():
    for n in (2, 6, 12, 24, 60):
        rep = cat.verify_functor_laws(zn_universe(n))
        if not rep.passed:
            return f"n={n}: {rep.counterexample}"
    return None


def c11_sampled_infinite():
    reports = [sampled_law_suite(IntegerRing(), 1000, 42), verify_z_naturals_iso(1000, 42)]
    for p in (2, 3, 5):
        reports.append(sampled_law_suite(PolyRing(p), 1000, 42))
        reports.append(verify_poly_classes(p, 1000, 42))
    for rep in reports:
        if not rep.passed:
            return f"{rep.check} ({rep.instance}): {rep.counterexample}"
        count = rep.witness.get("tuples_per_law", rep.witness.get("pairs_checked"))
        if count < 1000:
            return f"{rep.check}: only {count} samples"
    return None


TIMING = re.compile(rb'^\s*"elapsed_seconds": .*\n', re.MULTILINE)


def c12_determinism():
    cmd = [sys.executable, "-m", "pirideals", "certify", "--n-max", "60", "--seed", "42", "--format", "json"]
    runs = []
    for _ in range(2):
        proc = subprocess.run(cmd, capture_output=True)
        if proc.returncode != 0:
            return f"exit code {proc.returncode}: {proc.stderr[-300:]!r}"
        runs.append(proc.stdout)
    stripped = [TIMING.sub(b"", r) for r in runs]
    if any(len(TIMING.findall(r)) != 1 for r in runs):
        return "timing field missing"
    if stripped[0] != stripped[1]:
        return "outputs differ"
    payload = json.loads(runs[0])
    if not payload["passed"] or payload["seed"] != 42:
        return "certify did not pass"
    return None


CRITERIA = [
    (1, "ordered semigroup axioms and witness <1> for n <= 60", c01_regular_ordered_semigroup, 5),
    (2, "I(Z_n) ~ D(n) with d1*d2 = gcd(d1 d2, n) for n <= 60", c02_divisor_iso, 2),
    (3, "Green's relations universal with class size tau(n)", c03_greens_universal, 5),
    (4, "six regularity properties hold for n <= 60", c04_six_properties, 10),
    (5, "inverse transversal {<1>} for n <= 60", c05_inverse_transversal, 2),
    (6, "von Neumann correspondence for n <= 60", c06_von_neumann, 10),
    (7, "triangular-matrix counterexample, p in {2, 3}", c07_matrix_counterexample, 1),
    (8, "induced isomorphisms on F_3[x], 1000 pairs", c08_induced_iso, 2),
    (9, "subobject axioms and hom-set oracle", c09_subobjects_and_homs, 30),
    (10, "contravariant functor laws", c10_functor, 5),
    (11, "sampled Z and F_p[x] suites, 1000 samples", c11_sampled_infinite, 10),
    (12, "certify JSON is byte-identical across runs", c12_determinism, None),
]


def evaluate(number, title, fn, budget):
    start = time.perf_counter()
    problem = fn()
    elapsed = time.perf_counter() - start
    if problem is None and budget is not None and elapsed >= budget:
        problem = f"took {elapsed:.2f}s, budget {budget}s"
    status = "PASS" if problem is None else "FAIL"
    limit = f" (budget {budget}s)" if budget is not None else ""
    line = f"[{status}] criterion {number:2d}: {title} [{elapsed:.2f}s{limit}]"
    if problem is not None:
        line += f" -- {problem}"
    return problem, line


@pytest.mark.parametrize("number,title,fn,budget", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, fn, budget):
    problem, line = evaluate(number, title, fn, budget)
    print(line)
    assert problem is None, line


if __name__ == "__main__":
    failures = 0
    for criterion in CRITERIA:
        problem, line = evaluate(*criterion)
        print(line, flush=True)
        failures += problem is not None
    sys.exit(1 if failures else 0)
