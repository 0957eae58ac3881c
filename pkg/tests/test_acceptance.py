"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v``; the summary lines
appear at the end of the pytest report.
"""

import os
from collections import Counter

from conftest import record

from kronext.monoid import product
from kronext.oracle.extensions import (
    BudgetExceeded,
    SubmoduleTable,
    enumerate_class,
    ext_middle_terms,
)
from kronext.oracle.hall import frame_quadruples, green_frame_check, hall_membership, hall_triples
from kronext.oracle.points import points_of_degree
from kronext.oracle.reps import build_indec, ext_dim_repr, hom_dim_repr
from kronext.oracle.verify import compare_fields, verify_sweep
from kronext.partitions import (
    dominance_eqsum,
    elementary_chain_witness,
    gen_maj,
    gen_maj_via_x,
    pad,
    partitions_of,
)
from kronext.preinjective import (
    chain_product,
    chain_product_dominance,
    cokernels,
    embedding_exists_genmaj,
    embedding_exists_wdom,
    membership_symbolic,
    minimal_cokernel,
    to_multiplicities,
)
from kronext.symbols import (
    PlacedIndecomposable,
    Symbol,
    class_size,
    ext_dim,
    hom_dim,
    inj_sym,
    parse_symbol,
    proj_sym,
    reg_sym,
    regular_full_set,
    symbols_up_to,
)

JOBS = os.cpu_count() or 1
GLUING_BUDGET = {2: 2**10, 3: 3**6}


def index_lists(max_weight, max_len):
    """Weakly decreasing lists of indices >= 0 with bounded weight and length."""
    out = [()]

    def rec(prefix, top, left):
        for v in range(min(top, left), -1, -1):
            p = prefix + (v,)
            out.append(p)
            if len(p) < max_len:
                rec(p, v, left - v)

    if max_len > 0:
        rec((), max_weight, max_weight)
    return out


def gm_triples(max_weight, max_len):
    for c in index_lists(max_weight, max_len):
        for b in index_lists(sum(c), len(c)):
            n = len(c) - len(b)
            if n < 1:
                continue
            for p in partitions_of(sum(c) - sum(b), n):
                yield c, b, pad(p, n)


# ---------------------------------------------------------------------------


def test_criterion_1_field_independence():
    reports = {q: verify_sweep(q, (4, 4), JOBS) for q in (2, 3)}
    failures = []
    for q, rs in reports.items():
        for r in rs:
            if r.status == "mismatch":
                failures.append(f"q={q} {r.alpha} * {r.beta}")
            if r.status == "skipped" and class_size(parse_symbol(r.alpha), q) and class_size(parse_symbol(r.beta), q):
                failures.append(f"q={q} skipped nonempty {r.alpha} * {r.beta}")
    failures += compare_fields(reports[2], reports[3])
    # second oracle route: glue along Ext wherever the group is small
    glued = 0
    for q, rs in reports.items():
        for r in rs:
            if r.status != "match":
                continue
            try:
                got = ext_middle_terms(parse_symbol(r.alpha), parse_symbol(r.beta), q, GLUING_BUDGET[q])
            except BudgetExceeded:
                continue
            glued += 1
            if sorted(str(s) for s in got) != sorted(r.observed):
                failures.append(f"q={q} routes disagree on {r.alpha} * {r.beta}")
    counts = {q: Counter(r.status for r in rs) for q, rs in reports.items()}
    detail = ", ".join(f"q={q}: {c['match']} match/{c['skipped']} empty" for q, c in counts.items())
    ok = record(1, "products equal oracle sets over F_2 and F_3 up to (4,4)", not failures,
                f"{detail}; {glued} pairs also glued")
    assert ok, failures[:10]


def test_criterion_2_hom_ext_table():
    checked, failures = 0, []
    for q in (2, 3):
        items = [(PlacedIndecomposable.P(n), ("P", n)) for n in range(3)]
        items += [(PlacedIndecomposable.I(n), ("I", n)) for n in range(3)]
        for d in (1, 2, 3):
            for pt in points_of_degree(q, d):
                for t in range(1, 3 // d + 1):
                    items.append((PlacedIndecomposable.R(pt, d, t), ("R", pt, t)))
        reps = [(x, build_indec(spec, q)) for x, spec in items]
        for x, X in reps:
            for y, Y in reps:
                checked += 1
                if hom_dim_repr(X, Y) != hom_dim(x, y) or ext_dim_repr(X, Y) != ext_dim(x, y):
                    failures.append((q, x, y))
    ok = record(2, "Hom/Ext table for indecomposables of dimension <= 6", not failures, f"{checked} pairs")
    assert ok, failures[:10]


def test_criterion_3_inj_pairs():
    failures = []
    for i in range(5):
        for j in range(5):
            got = product(inj_sym(i), inj_sym(j))
            if i - j >= -1:
                formula = {inj_sym(i, j)}
            else:
                formula = {inj_sym(j - s, i + s) for s in range((j - i) // 2 + 1)}
                if len(got) != (j - i) // 2 + 1:
                    failures.append(("cardinality", i, j))
            if got != formula:
                failures.append(("formula", i, j))
            for q in (2, 3):
                if ext_middle_terms(inj_sym(i), inj_sym(j), q) != got:
                    failures.append(("oracle", i, j, q))
    ok = record(3, "{[I_i]}*{[I_j]} for i, j <= 4", not failures, "formula and oracle at q=2,3")
    assert ok, failures


def test_criterion_4_inj_times_proj():
    failures = []
    for n in range(4):
        for m in range(4 - n):
            expected = regular_full_set(n + m + 1) | {Symbol(proj=(m,), inj=(n,))}
            got = product(inj_sym(n), proj_sym(m))
            if got != expected:
                failures.append(("formula", n, m))
            for q in (2, 3):
                nonempty = {g for g in expected if class_size(g, q) > 0}
                if ext_middle_terms(inj_sym(n), proj_sym(m), q) != nonempty:
                    failures.append(("oracle", n, m, q))
    ok = record(4, "{[I_n]}*{[P_m]} = R_{n+m+1} + {[P_m + I_n]} for n+m <= 3", not failures, "q=2,3")
    assert ok, failures


def test_criterion_5_chain_product():
    failures, count = [], 0
    for a in index_lists(6, 4):
        count += 1
        if chain_product(a) != chain_product_dominance(a):
            failures.append(a)
    ok = record(5, "chain product equals the dominance down-set", not failures, f"{count} index lists")
    assert ok, failures[:10]


def test_criterion_6_generalized_majorization():
    failures, count, true_count = [], 0, 0
    for c, b, a in gm_triples(8, 5):
        g = gen_maj(c, b, a)
        vals = [g, elementary_chain_witness(c, b, a) is not None, membership_symbolic(c, b, a)]
        if all(b[i] >= c[i + len(a)] for i in range(len(b))):
            vals.append(gen_maj_via_x(c, b, a))
        if len(set(vals)) > 1:
            failures.append((c, b, a, vals))
        count += 1
        true_count += g
    ok = record(6, "majorization = x-vector = elementary chain = product membership", not failures,
                f"{count} triples, {true_count} true")
    assert ok, failures[:10]


def test_criterion_7_embeddings():
    failures, count = [], 0
    for c in index_lists(10, 6):
        for b in index_lists(sum(c), len(c)):
            count += 1
            g = embedding_exists_genmaj(b, c)
            w = embedding_exists_wdom(to_multiplicities(b), to_multiplicities(c))
            found = cokernels(b, c)
            if not g == w == bool(found):
                failures.append(("criteria", b, c, g, w, bool(found)))
            if sum(c) <= 8:
                a = minimal_cokernel(b, c)
                if g and (a not in found or not all(dominance_eqsum(a, x) for x in found)):
                    failures.append(("minimal", b, c, a))
    ok = record(7, "embedding criteria agree; minimal cokernel is minimal", not failures, f"{count} pairs (b, c)")
    assert ok, failures[:10]


def test_criterion_8_class_sizes():
    failures = []
    for q in (2, 3):
        for s in symbols_up_to((4, 4)):
            if class_size(s, q) != len(enumerate_class(s, q)):
                failures.append(("enumeration", q, str(s)))
    for q in (2, 3, 5, 7):
        if class_size(reg_sym(((1,), 1)), q) != q + 1:
            failures.append(("q+1", q))
    for s in symbols_up_to((5, 5)):
        sizes = [class_size(s, q) for q in (2, 3, 5, 7)]
        if sizes[0] and s.regular and not all(x < y for x, y in zip(sizes, sizes[1:])):
            failures.append(("monotone", str(s), sizes))
    ok = record(8, "class sizes: enumeration, q+1, monotone in q", not failures)
    assert ok, failures[:10]


def test_criterion_9_green_frame():
    q = 2
    table = SubmoduleTable(q)
    tally = Counter()
    failures = []
    for M, N, X, Y in frame_quadruples((3, 3), q):
        cross, frame = green_frame_check(M, N, X, Y, q, table)
        tally[cross] += 1
        if cross != frame:
            failures.append((str(M), str(N), str(X), str(Y), cross, frame))
    ok = record(9, "exact sequence through M+N iff exact frame, Ext(M,N)=0", not failures,
                f"{tally[True]} true, {tally[False]} false quadruples")
    assert ok, failures[:10]


def test_criterion_10_hall_membership():
    q = 2
    table = SubmoduleTable(q)
    tally = Counter()
    failures = []
    for mu, nu1, nu2 in hall_triples((3, 3)):
        if not all(class_size(s, q) for s in (mu, nu1, nu2)):
            continue
        oracle, symbolic = hall_membership(mu, nu1, nu2, q, table)
        tally[oracle] += 1
        if oracle != symbolic:
            failures.append((str(mu), str(nu1), str(nu2), oracle, symbolic))
    ok = record(10, "Hall number > 0 iff product membership up to (3,3)", not failures,
                f"{tally[True]} positive, {tally[False]} zero triples")
    assert ok, failures[:10]
