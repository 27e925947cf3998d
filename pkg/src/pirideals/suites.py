"""Batteries of checks that reproduce every structural claim on concrete instances.

:func:`certify_zn` runs the exhaustive battery for one modulus; :func:`certify`
adds the sampled infinite-ring suites and the matrix counterexample and
aggregates everything into a single report, ordered by ``n``.
"""

from __future__ import annotations

from pirideals import category as cat
from pirideals import ordered_semigroup as osg
from pirideals.ideals import (
    Ideal,
    RingIso,
    ordered_regularity_witness,
    semigroup_regular_exact,
    unit_ideal,
    verify_induced_iso,
)
from pirideals.instances import (
    build_divisor_semigroup,
    build_ideal_semigroup_zn,
    check_divisor_structure,
    run_counterexample,
    sampled_law_suite,
    verify_poly_classes,
    verify_z_naturals_iso,
    verify_zn_divisor_iso,
    zn_universe,
)
from pirideals.ideals import check_inverse_transversal
from pirideals.report import CheckReport
from pirideals.rings import IntegerRing, ModularRing, PolyRing
from pirideals.sampling import DEFAULT_DEGREE_CAP, DEFAULT_SEED

HOM_ORACLE_MAX_N = 24
CERTIFY_MAX_N = 200
POLY_PRIMES = (2, 3, 5)


def check_ordered_regularity(n: int) -> CheckReport:
    """Every ``A`` in ``I(Z_n)`` satisfies ``A <= A<1>A``, and the table agrees."""
    universe = zn_universe(n)
    S = build_ideal_semigroup_zn(n)
    name = S.name
    one = universe.index(unit_ideal(ModularRing(n)))
    bad = None
    for i, A in enumerate(universe):
        X = ordered_regularity_witness(A)
        if X != universe[one] or not S.leq[i][S.mul[S.mul[i][one]][i]]:
            bad = {"labels": [A.label]}
            break
    reg = osg.ordered_regular_set(S)
    if bad is None and len(reg) != S.size:
        bad = {"labels": S.label_of(sorted(set(range(S.size)) - reg))}
    return CheckReport("ordered_regularity", name, bad is None, bad, {"witness": "1"})


def check_greens_universal(S: osg.FiniteOrderedSemigroup) -> CheckReport:
    """All five Green's relations have a single class; cross-checks included."""
    g = osg.greens_relations(S)
    name = S.name
    details = []
    for rel in g.NAMES:
        classes = g.partition(rel)
        ok = len(classes) == 1 and len(classes[0]) == S.size
        details.append(CheckReport(f"{rel}_universal", name, ok,
                                   None if ok else {"classes": [S.label_of(c) for c in classes]}))
    refinements = [("H", "L"), ("H", "R"), ("L", "D"), ("R", "D"), ("D", "J")]
    bad = next((f"{a}<={b}" for a, b in refinements
                if not osg.refines(g.partition(a), g.partition(b))), None)
    details.append(CheckReport("refinements", name, bad is None,
                               None if bad is None else {"fails": bad}))
    r = range(S.size)
    alt_bad = next(((a, b) for a in r for b in r
                    if osg.greens_L_alt(S, a, b) != g.related("L", a, b)
                    or osg.greens_R_alt(S, a, b) != g.related("R", a, b)), None)
    details.append(CheckReport("witness_characterization", name, alt_bad is None,
                               None if alt_bad is None else {"labels": S.label_of(alt_bad)}))
    simple_L, simple_R = osg.simplified_greens(S)
    simple_ok = simple_L == g.L and simple_R == g.R
    details.append(CheckReport("simplified_form", name, simple_ok,
                               None if simple_ok else {"L": simple_L, "R": simple_R}))
    return CheckReport.aggregate("greens_universal", name, details, {"class_size": S.size})


def check_von_neumann(n: int) -> CheckReport:
    """``<a>`` is regular in ``I(Z_n)`` iff ``a = axa`` is solvable, for every residue ``a``."""
    ring = ModularRing(n)
    universe = zn_universe(n)
    bad = None
    regular = 0
    for a in range(n):
        brute = any(a * x * a % n == a for x in range(n))
        exact = semigroup_regular_exact(Ideal.of(ring.element(a)), universe) is not None
        regular += brute
        if brute != exact:
            bad = {"a": a, "ring_regular": brute, "ideal_regular": exact}
            break
    return CheckReport("von_neumann_correspondence", f"Z_{n}", bad is None, bad,
                       {"regular_residues": regular})


def guarded(check: str, instance: str, thunk) -> CheckReport:
    """Run ``thunk``; an exception becomes a failing report instead of aborting the battery."""
    try:
        return thunk()
    except Exception as exc:  # noqa: BLE001 - any crash is a finding
        return CheckReport(check, instance, False,
                           {"error": type(exc).__name__, "message": str(exc)})


def certify_zn(n: int) -> CheckReport:
    instance = f"n={n}"
    universe = zn_universe(n)

    def table():
        return build_ideal_semigroup_zn(n)

    battery = [
        ("ordered_semigroup_axioms", lambda: osg.validate(table())),
        ("ordered_regularity", lambda: check_ordered_regularity(n)),
        ("greens_universal", lambda: check_greens_universal(table())),
        ("classify", lambda: osg.classify(table()).to_report()),
        ("inverse_transversal", lambda: check_inverse_transversal(universe, f"I(Z_{n})")),
        ("von_neumann_correspondence", lambda: check_von_neumann(n)),
        ("zn_divisor_isomorphism", lambda: verify_zn_divisor_iso(n)),
        ("divisor_structure", lambda: check_divisor_structure(build_divisor_semigroup(n))),
        ("subobject_axioms", lambda: cat.check_subobject_axioms(universe)),
        ("functor_laws", lambda: cat.verify_functor_laws(universe)),
    ]
    if n <= HOM_ORACLE_MAX_N:
        battery.append(("hom_set_enumeration", lambda: cat.check_hom_enumeration(n)))
    details = [guarded(check, instance, thunk) for check, thunk in battery]
    return CheckReport.aggregate("certify_zn", instance, details, {"divisors": len(universe)})


def sampled_suites(samples: int = 1000, seed: int = DEFAULT_SEED,
                   degree_cap: int = DEFAULT_DEGREE_CAP, primes=POLY_PRIMES) -> CheckReport:
    details = [
        sampled_law_suite(IntegerRing(), samples, seed),
        verify_z_naturals_iso(samples, seed),
    ]
    for p in primes:
        details.append(sampled_law_suite(PolyRing(p), samples, seed, degree_cap))
        details.append(verify_poly_classes(p, samples, seed, degree_cap))
    for alpha, beta in ((1, 1), (2, 0)):
        details.append(verify_induced_iso(RingIso.poly_affine(3, alpha, beta), samples, seed))
    return CheckReport.aggregate("sampled_suites", f"{samples} samples, seed {seed}", details)


def certify(n_max: int = 60, samples: int = 1000, seed: int = DEFAULT_SEED,
            degree_cap: int = DEFAULT_DEGREE_CAP) -> CheckReport:
    if not 2 <= n_max <= CERTIFY_MAX_N:
        raise ValueError(f"n_max must lie in [2, {CERTIFY_MAX_N}]")
    per_n = [certify_zn(n) for n in range(2, n_max + 1)]
    finite = CheckReport.aggregate("finite_instances", f"2 <= n <= {n_max}", per_n)
    counter = CheckReport.aggregate("counterexamples", "p in {2, 3}",
                                    [run_counterexample(p) for p in (2, 3)])
    return CheckReport.aggregate(
        "certify", f"n_max={n_max}, samples={samples}, seed={seed}",
        [finite, sampled_suites(samples, seed, degree_cap), counter])
