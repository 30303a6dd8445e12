"""Acceptance criteria 1-12, each an exact check.

Run with pytest (one summary line per criterion is printed at the end) or
directly with ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from relhopf import catalog  # noqa: E402
from relhopf.hopfcore import (antipode_inverse, check_hopf, check_quasitriangular,  # noqa: E402
                              replace_map, trivial_r, trivial_sigma)
from relhopf.monoidal import (MonoidalInputDatum, check_theorem_2_1,  # noqa: E402
                              check_trivial_action_doi_hopf, datum_mutations,
                              long_dimodule_suite, mutate_entry, yd_identification_suite)
from relhopf.morphdsl import (braided_environment, hopf_environment,  # noqa: E402
                              load_identities, paper_identities_path, run_identities)
from relhopf.native import compare_with_native  # noqa: E402
from relhopf.reptheory import trivial_coaction  # noqa: E402
from relhopf.serialize import map_to_array  # noqa: E402
from relhopf.tensorlin import GF, compose, identity  # noqa: E402
from relhopf.transmute import (enveloping_braided_group, function_braided_group,  # noqa: E402
                               trivially_braided)

F5, F7 = GF(5), GF(7)
RESULTS = {}


def kz2():
    return catalog.build_group_algebra(catalog.cyclic_table(2), F5)


def dual_z3():
    return catalog.build_dual_group_algebra(catalog.cyclic_table(3), F7)


def sweedler_datum(alpha):
    H, R = catalog.build_sweedler(5, alpha)
    return MonoidalInputDatum(H, enveloping_braided_group(H, R).algebra)


def c1_agreement_forward():
    data = {f"H4 alpha={a}": sweedler_datum(a) for a in (0, 1)}
    K = kz2()
    data["kZ2, R=1x1"] = MonoidalInputDatum(K, enveloping_braided_group(K, trivial_r(K)).algebra)
    data["k, kZ2"] = MonoidalInputDatum(catalog.trivial_hopf(F5), trivially_braided(
        catalog.trivial_hopf(F5), K))
    bad = []
    for name, d in data.items():
        res = check_theorem_2_1(d)
        if not (res.braided.passed and res.monoidal.passed and res.agree):
            bad.append(name)
    return not bad, f"{len(data) - len(bad)}/{len(data)} data give (pass, pass, agree)"


def c2_agreement_mutations():
    muts = datum_mutations(sweedler_datum(0), 60, seed=1)
    if len(muts) < 50:
        muts = datum_mutations(sweedler_datum(0), 200, seed=1)
    agree = braided_fail = 0
    for _, d in muts:
        res = check_theorem_2_1(d, fail_fast=True)
        agree += res.agree
        braided_fail += not res.braided.passed
    ok = len(muts) >= 50 and agree == len(muts)
    return ok, (f"{agree}/{len(muts)} mutations agree, "
                f"{braided_fail} fail the braided conditions")


def c3_transmuted_comult():
    H, R = catalog.build_sweedler(5, 0)
    got = map_to_array(enveloping_braided_group(H, R).algebra.comult).tolist()
    oracle = oracles.transmuted_comult(H, R)
    x = [[0] * 4 for _ in range(4)]
    x[2][0] = x[0][2] = 1                 # x (x) 1 + 1 (x) x
    g = [[0] * 4 for _ in range(4)]
    g[1][1] = 1                           # g (x) g
    ok = got == oracle and got[2] == x and got[1] == g
    return ok, "Delta(x) = x(x)1 + 1(x)x, Delta(g) = g(x)g, oracle agrees on all of Delta"


def c4_cocommutative_collapse():
    K = kz2()
    ok = enveloping_braided_group(K, trivial_r(K)).algebra.comult == K.comult
    return ok, "transmuted comultiplication equals the original"


def c5_commutative_collapse():
    D = dual_z3()
    ok = function_braided_group(D, trivial_sigma(D)).algebra.mult == D.mult
    return ok, "transmuted multiplication equals the original"


def c6_long_dimodules():
    rep = long_dimodule_suite(kz2(), samples=100, seed=0, max_dim=3)
    s = rep.stats
    return rep.passed and s["agree"] == 100, \
        f"{s.get('agree')}/{s.get('samples')} agree, {s.get('valid')} valid"


def c7_yd_identification():
    rep = yd_identification_suite(dual_z3(), samples=100, seed=0, max_dim=3)
    s = rep.stats
    return rep.passed and s["agree"] == 100, \
        f"{s.get('agree')}/{s.get('samples')} agree, {s.get('valid')} valid"


def c8_trivial_action():
    D = dual_z3()
    cases = [("self", D, D.comult), ("trivial", D, trivial_coaction(D, 3))]
    rng = random.Random(0)
    positions = [(name, k) for name in ("coaction", "mult", "comult")
                 for k in range((D.comult if name == "coaction" else getattr(D, name)).entries.size)]
    for name, k in rng.sample(positions, 24):
        if name == "coaction":
            cases.append((f"coaction[{k}]", D, mutate_entry(D.comult, k)))
        else:
            A = replace_map(D, name, mutate_entry(getattr(D, name), k))
            cases.append((f"{name}[{k}]", A, D.comult))
    bad = [n for n, A, co in cases if not check_trivial_action_doi_hopf(D, A, co).agree]
    return not bad, f"{len(cases) - len(bad)}/{len(cases)} cases agree (24 mutations)"


def c9_quasitriangular():
    pairs = [catalog.build_cyclic_qt(3, 7, 2), catalog.build_sweedler(5, 0),
             catalog.build_sweedler(5, 1)]
    ok = all(check_quasitriangular(H, R).passed for H, R in pairs)
    H = pairs[1][0]
    failed = check_quasitriangular(H, trivial_r(H)).failed_names
    return ok and failed == ["intertwining"], f"R = 1(x)1 on H4 fails {failed}"


def c10_antipode_order():
    H = catalog.build_sweedler(5, 0)[0]
    S = H.antipode
    sinv = antipode_inverse(H)
    K = kz2()
    ok = (sinv == compose(S, compose(S, S)) and compose(sinv, S) == identity(F5, 4)
          and antipode_inverse(K) == K.antipode)
    return ok, "S^-1 = S^3 on H4, S^-1 = S on kZ2"


def c11_dsl_native():
    ids = load_identities(paper_identities_path())
    diffs, runs = [], 0
    for name, H in catalog.catalog_hopf().items():
        rep = run_identities(ids, hopf_environment(H))
        diffs += [f"{name}: {d}" for d in compare_with_native(rep, H)]
        runs += 1
    base = sweedler_datum(0)
    cases = [("H4bar", base.B, base.A)]
    cases += [(desc, d.B, d.A) for desc, d in datum_mutations(base, 20, seed=11)]
    for desc, B, A in cases:
        rep = run_identities(ids, braided_environment(B, A))
        diffs += [f"{desc}: {d}" for d in compare_with_native(rep, B, A)]
        runs += 1
    mutated = len(cases) - 1
    return not diffs and mutated == 20, f"{runs} runs ({mutated} mutations), {len(diffs)} differences"


def c12_mutation_sensitivity():
    total = failing = 0
    for H in (kz2(), catalog.build_sweedler(5, 0)[0]):
        for name in ("mult", "unit", "comult", "counit", "antipode"):
            f = getattr(H, name)
            for k in range(f.entries.size):
                total += 1
                failing += not check_hopf(replace_map(H, name, mutate_entry(f, k))).passed
    share = failing / total
    return share >= 0.9, f"{failing}/{total} mutations detected ({share:.1%})"


CRITERIA = [
    (1, "agreement on the forward data", c1_agreement_forward),
    (2, "agreement on seeded mutations", c2_agreement_mutations),
    (3, "transmuted comultiplication on H4", c3_transmuted_comult),
    (4, "cocommutative collapse", c4_cocommutative_collapse),
    (5, "commutative collapse", c5_commutative_collapse),
    (6, "Long dimodule identification", c6_long_dimodules),
    (7, "Yetter-Drinfeld identification", c7_yd_identification),
    (8, "trivial action versus Doi-Hopf conditions", c8_trivial_action),
    (9, "quasitriangular axioms", c9_quasitriangular),
    (10, "antipode order", c10_antipode_order),
    (11, "identity file versus native checkers", c11_dsl_native),
    (12, "mutation sensitivity", c12_mutation_sensitivity),
]


def run_criterion(number, title, fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail} [{elapsed:.1f}s]"
    RESULTS[number] = line
    return ok, elapsed, line


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    ok, elapsed, line = run_criterion(number, title, fn)
    print(line)
    assert ok, line
    assert elapsed < 60, line


if __name__ == "__main__":
    failures = 0
    for number, title, fn in CRITERIA:
        ok, _, line = run_criterion(number, title, fn)
        print(line, flush=True)
        failures += not ok
    sys.exit(1 if failures else 0)
