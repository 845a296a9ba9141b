"""Acceptance suite: one test per criterion, each printing a pass line and
holding to its runtime budget.  Run with -s to see the lines.
"""

import random
import time
from functools import lru_cache

from khconc import (
    build_ck,
    build_complex,
    build_staircase,
    connected_sum_pd,
    dual,
    field_normal_form,
    graded_rank,
    inverse_witness,
    knotlike_check,
    mirror_pd,
    parse_braid,
    parse_pd,
    rasmussen_s,
    reduce,
    schuetz_sz,
    shift,
    split_summands,
    stair_normal_form,
    tensor,
    unit_complex,
    validate,
    z_equivalent,
)
from khconc.complexes import GElem, Generator, GradedComplex

import support

RIGHT_TREFOIL = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"
FIGURE_EIGHT = "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]"

CORPUS = [
    ("trefoil-pd", RIGHT_TREFOIL),
    ("figure-eight-pd", FIGURE_EIGHT),
    ("trefoil-braid", "BR[2; 1,1,1]"),
    ("left-trefoil", "BR[2; -1,-1,-1]"),
    ("t25", "BR[2; 1,1,1,1,1]"),
    ("t25-mirror", "BR[2; -1,-1,-1,-1,-1]"),
    ("t27", "BR[2; 1,1,1,1,1,1,1]"),
    ("figure-eight-braid", "BR[3; 1,-2,1,-2]"),
    ("figure-eight-reversed", "BR[3; -1,2,-1,2]"),
    ("trefoil-stabilized", "BR[3; 1,1,1,-2]"),
    ("trefoil-poked", "BR[2; 1,1,1,-1,1]"),
    ("six-crossing", "BR[3; 1,1,1,-2,1,-2]"),
    ("t34", "BR[3; 1,2,1,2,1,2,1,2]"),
]


def parse_any(code):
    return parse_pd(code) if code.startswith("PD") else parse_braid(code)


@lru_cache(maxsize=None)
def built(code):
    return build_complex(parse_any(code))


@lru_cache(maxsize=None)
def reduced(code):
    return reduce(built(code))


def report(num, start, budget, description):
    elapsed = time.perf_counter() - start
    line = f"[acceptance {num:2d}] PASS in {elapsed:6.2f}s (budget {budget}s): {description}"
    print(line)
    assert elapsed < budget, f"criterion {num} exceeded its {budget}s budget ({elapsed:.1f}s)"


def test_acceptance_01_unknot_exact():
    start = time.perf_counter()
    c = build_complex(parse_pd("PD[]"))
    assert c.total_rank == 1
    g = c.generators[0]
    assert (g.tdeg, g.qdeg) == (0, 0)
    assert list(c.iter_entries()) == []
    report(1, start, 1, "crossingless diagram builds exactly t^0 q^0 Z[G]")


def test_acceptance_02_right_trefoil():
    start = time.perf_counter()
    c = reduce(build_complex(parse_pd(RIGHT_TREFOIL)))
    for char in (0, 2, 3, 5):
        assert rasmussen_s(c, char) == 2
    assert z_equivalent(c, shift(unit_complex(), 0, 2))
    report(2, start, 5, "right trefoil: s_c = 2 for c in {0,2,3,5}, class t^0 q^2 Z[G]")


def test_acceptance_03_figure_eight():
    start = time.perf_counter()
    c = reduce(build_complex(parse_pd(FIGURE_EIGHT)))
    for char in (0, 2, 3):
        assert rasmussen_s(c, char) == 0
    assert z_equivalent(c, unit_complex())
    report(3, start, 10, "figure-eight: s_c = 0 for c in {0,2,3}, trivial class")


def test_acceptance_04_staircase_calculus():
    start = time.perf_counter()
    rng = random.Random(2024)
    pool = [0, 2, 3, 4, 5, 7, 8, 9]
    checked_complex_level = 0
    for trial in range(20):
        chain = random_chain(rng, pool)
        # factorization identity: Sigma_A against the product of its steps
        product = {}
        for a in chain:
            product[(a,)] = product.get((a,), 0) + 1
        nf_chain = stair_normal_form({chain: 1})
        nf_prod = stair_normal_form(product)
        assert nf_chain == nf_prod, chain
        # inverse cancellation, accumulating exponents on key collisions
        combined = dict(neg(product))
        combined[chain] = combined.get(chain, 0) + 1
        assert stair_normal_form(combined).is_trivial(), chain
        if len(chain) == 2 and 0 not in chain:
            t = reduce(tensor(build_staircase((chain[0],)), build_staircase((chain[1],))))
            if t.total_rank + 0 <= 12:
                assert z_equivalent(build_staircase(chain), t), chain
                checked_complex_level += 1
        # coprime merging
        a, b = rng.choice([(2, 3), (2, 5), (3, 4), (4, 5), (2, 9), (5, 8), (7, 9)])
        assert stair_normal_form({(a * b,): 1, (a,): -1, (b,): -1}).is_trivial()
        if trial < 4:
            t = reduce(tensor(build_staircase((a,)), build_staircase((b,))))
            assert t.total_rank <= 12
            assert z_equivalent(build_staircase((a * b,)), t), (a, b)
            checked_complex_level += 1
    assert checked_complex_level >= 4
    report(4, start, 60, f"staircase calculus on 20 random inputs, {checked_complex_level} zeq-confirmed")


def neg(product):
    return {spec: -e for spec, e in product.items()}


def random_chain(rng, pool):
    n = rng.randint(1, 3)
    chain = []
    val = None
    candidates = [x for x in pool if x != 0]
    for _ in range(n):
        if val is None:
            val = rng.choice(candidates)
        else:
            mult = [x for x in candidates if x % val == 0 and x >= val]
            if not mult:
                break
            val = rng.choice(mult)
        chain.append(val)
    if rng.random() < 0.25:
        chain.append(0)
    return tuple(chain)


def test_acceptance_05_independence():
    start = time.perf_counter()
    s2, s3, s4 = build_staircase((2,)), build_staircase((3,)), build_staircase((4,))
    assert not z_equivalent(s2, s3)
    assert not z_equivalent(s2, s4)
    t = reduce(tensor(s2, s4))
    assert z_equivalent(build_staircase((2, 4)), t)
    report(5, start, 30, "independence: (2) vs (3) and (2) vs (4) distinct, (2,4) = (2)x(4)")


def test_acceptance_06_ck_suite():
    start = time.perf_counter()
    for k in (1, 2, 3):
        ck = build_ck(k)
        for char in (0, 2, 3, 5):
            assert rasmussen_s(ck, char) == 0
        assert schuetz_sz(ck).as_tuple() == (0, 2)
        assert schuetz_sz(dual(ck)).as_tuple() == (0,)
    assert not z_equivalent(build_ck(1), build_ck(2))
    # the product splits into the five-generator complex and a four-generator
    # square; the square carries a q^2 shift relative to its printed form
    t = tensor(build_staircase((2,)), dual(build_staircase((4,))))
    parts = split_summands(reduce(t))
    assert len(parts) == 2
    bysize = {p.total_rank: p for p in parts}
    assert set(bysize) == {4, 5}
    ck = build_ck(1)
    assert graded_rank(bysize[5]) == graded_rank(ck)
    assert support.entry_multiset(bysize[5]) == support.entry_multiset(ck)
    square = GradedComplex(
        [
            Generator("s3", -1, -2),
            Generator("s1", 0, 0),
            Generator("s4", 0, -2),
            Generator("s2", 1, 0),
        ],
        {
            ("s3", "s1"): GElem(-1, 1),
            ("s3", "s4"): GElem(2, 0),
            ("s1", "s2"): GElem(2, 0),
            ("s4", "s2"): GElem(1, 1),
        },
    )
    assert graded_rank(bysize[4]) == graded_rank(shift(square, 0, 2))
    assert support.entry_multiset(bysize[4]) == support.entry_multiset(square)
    report(6, start, 60, "C^k family: s_c = 0, sz = (0,2) and (0), C^1 != C^2, product splits")


def test_acceptance_07_sz_staircase_remark():
    start = time.perf_counter()
    assert schuetz_sz(dual(build_staircase((2, 4)))).as_tuple() == (0, 4, 2)
    assert schuetz_sz(dual(build_staircase((2, 2, 2)))).as_tuple() == (0, 2, 2, 2)
    report(7, start, 10, "sz of dual staircases reads the steps in reverse")


def test_acceptance_08_inverse_lemma():
    start = time.perf_counter()
    cases = [build_staircase((2,)), build_staircase((2, 4)), build_ck(1)]
    for c in cases:
        w = inverse_witness(c)  # verifies chain maps and g(f(1)) = 1 internally
        assert w.product.total_rank == c.total_rank**2
        assert z_equivalent(reduce(w.product), unit_complex())
    report(8, start, 30, "inverse witness verified and C (x) dual(C) is trivial")


def test_acceptance_09_axiom_suite():
    start = time.perf_counter()
    assert len(CORPUS) >= 10
    for name, code in CORPUS:
        pd = parse_any(code)
        assert len(pd.crossings) <= 8, name
        c = built(code)
        assert validate(c) == [], name
        assert knotlike_check(c), name
        r = reduced(code)
        assert support.g1_field_homology_dims(r, 0) == {0: 1}, name
        assert support.g1_field_homology_dims(r, 2) == {0: 1}, name
    # mirror diagram against the dual complex
    for name, code in CORPUS:
        pd = parse_any(code)
        m = reduce(build_complex(mirror_pd(pd)))
        assert z_equivalent(m, reduce(dual(reduced(code)))), name
    # connected sums against tensor products
    sums = [
        ("trefoil-braid", "left-trefoil"),
        ("trefoil-braid", "figure-eight-braid"),
        ("figure-eight-braid", "figure-eight-braid"),
    ]
    names = dict(CORPUS)
    for n1, n2 in sums:
        pd = connected_sum_pd(parse_any(names[n1]), parse_any(names[n2]))
        assert len(pd.crossings) <= 8
        c = reduce(build_complex(pd))
        t = reduce(tensor(reduced(names[n1]), reduced(names[n2])))
        assert z_equivalent(c, t), (n1, n2)
    report(9, start, 600, f"axiom suite over {len(CORPUS)} diagrams plus mirrors and sums")


def test_acceptance_10_oracle_equivalence():
    start = time.perf_counter()
    rng = random.Random(777)
    sz_checked = 0
    for i in range(50):
        base = support.random_knotlike(rng)
        c = support.scramble(base, rng)
        assert c.total_rank <= 8
        for char in (0, 2, 3):
            _, nf = field_normal_form(c, char)
            # G = 1: only the free summand survives
            assert support.g1_field_homology_dims(c, char) == {0: 1}
            cmax = max([ce for _, _, ce in nf.pieces], default=0)
            for m in range(1, cmax + 3):
                assert support.truncated_homology_dims(c, char, m) == support.expected_truncated_dims(nf, m), (i, char, m)
        gentle = support.scramble(base, rng, moves=3, coeffs=(1, -1))
        if len([g for g in gentle.generators if g.tdeg == 0]) <= 4:
            oracle = support.bruteforce_sz(gentle, coeff_bound=3)
            if oracle is not None:
                assert schuetz_sz(gentle).as_tuple() == oracle, i
                sz_checked += 1
    assert sz_checked >= 20
    report(10, start, 300, f"50 random complexes against brute-force homology, {sz_checked} sz-checked")
