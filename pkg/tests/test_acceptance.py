"""Acceptance harness: one PASS/FAIL line per criterion.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction as F

import pytest

from syang.exactmath import Polynomial, largest_invariant_subspace, span_basis
from syang.glmn import build_irrep, is_dominant, vector_rep
from syang.superalgebra import GradingContext
from syang.verify import candidate_alphas, gl11_pair_scan, pairing_oracle, suite_hopf, suite_pbw, suite_relations
from syang.weights import (
    FINITE,
    check_finite_dim,
    evaluation_weight,
    factor_into_fundamentals,
    star_all,
    twist,
)
from syang.yangian_modules import (
    InducedData,
    cyclic_span,
    evaluation_rep,
    highest_weight_of,
    induced_until_stable,
    irreducible_quotient,
    maximal_space_dimension,
    maximal_vectors,
    shifted_tensor,
    subquotient_module,
    verify_defining_relations,
)
from syang.yangian_modules.modules import _mode_operators, _weight_of

C11 = GradingContext(1, 1)
C21 = GradingContext(2, 1)
SEED = 20240611
LINES: list[str] = []


def report(n: int, ok: bool, detail: str, seconds: float | None = None, status: str | None = None) -> None:
    tag = status or ("PASS" if ok else "FAIL")
    t = f" [{seconds:.1f}s]" if seconds is not None else ""
    LINES.append(f"criterion {n:>2}: {tag}  {detail}{t}")


def _e0(n: int) -> tuple:
    return tuple(F(int(i == 0)) for i in range(n))


def _unit_basis(n: int) -> list[tuple]:
    return [tuple(F(int(i == j)) for j in range(n)) for i in range(n)]


def _kron(u, v):
    return tuple(a * b for a in u for b in v)


# -- 1 ----------------------------------------------------------------------------


def test_criterion_01_pbw_suite():
    t0 = time.perf_counter()
    failed = []
    for ctx in (C11, C21):
        rep = suite_pbw(ctx, seed=SEED, level_max=3, samples=500)
        failed += [f"{ctx.M}|{ctx.N}:{p.name}" for p in rep.properties if not p.passed]
    dt = time.perf_counter() - t0
    ok = not failed and dt < 60
    report(1, ok, f"PBW suite (1|1),(2|1) levels<=3, 500 samples; failures={failed or 'none'}", dt)
    assert ok, failed


# -- 2 ----------------------------------------------------------------------------


def test_criterion_02_module_relations():
    t0 = time.perf_counter()
    failed, names = [], []
    for ctx in (C11, C21):
        rep = suite_relations(ctx, 4)
        for p in rep.properties:
            names.append(p.name)
            if not p.passed:
                failed.append((ctx.M, ctx.N, p.name, p.detail))
    dt = time.perf_counter() - t0
    ok = not failed and dt < 60
    report(2, ok, f"relations at level_max=4 on {len(names)} evaluation modules; failures={failed or 'none'}", dt)
    assert ok, failed


# -- 3 ----------------------------------------------------------------------------


def _degenerate_alphas():
    return {p.alpha for p in gl11_pair_scan(candidate_alphas(4)) if p.degenerate}


def test_criterion_03_generic_tensor_certificate():
    t0 = time.perf_counter()
    bad = _degenerate_alphas()
    rng = random.Random(SEED)
    E = evaluation_rep(vector_rep(C11))
    results = []
    while len(results) < 10:
        al = F(rng.randint(-60, 60), rng.randint(1, 13))
        if al in bad or al == 0:
            continue
        T = shifted_tensor([E, E], [0, al])
        q = irreducible_quotient(T, _e0(4))
        oracle_q, oracle_m = pairing_oracle(T, _e0(4), _unit_basis(4), 6)
        results.append((al, q.maximal_space_dim, q.module.dim, q.maximal_submodule_dim, oracle_q, oracle_m))
    dt = time.perf_counter() - t0
    ok = all(r[1] == 1 and r[2] == 4 and r[3] == 0 and r[4] == 4 for r in results) and dt < 60
    report(3, ok, f"10 generic alpha: maximal space dim 1, quotient dim 4 (oracle 4) -> {[str(r[0]) for r in results]}", dt)
    assert ok, results


# -- 4 ----------------------------------------------------------------------------


def _factor_pool():
    pool = {
        C11: [
            evaluation_rep(vector_rep(C11)),
            evaluation_rep(build_irrep(C11, 2, [2, 0])),
            evaluation_rep(build_irrep(C11, 1, [F(5, 2), F(-3, 2)], twist=F(3, 2))),
        ],
        C21: [
            evaluation_rep(vector_rep(C21)),
            evaluation_rep(build_irrep(C21, 2, [1, 1, 0])),
            evaluation_rep(build_irrep(C21, 1, [2, 1, -1], twist=1)),
        ],
    }
    return pool


def test_criterion_04_star_product_consistency():
    t0 = time.perf_counter()
    rng = random.Random(SEED + 4)
    pool = _factor_pool()
    cases, failures = 0, []
    while cases < 20:
        ctx = C11 if cases % 2 == 0 else C21
        k = 3 if (ctx is C11 and cases % 4 == 0) else 2
        facs = [rng.choice(pool[ctx]) for _ in range(k)]
        alphas = [F(0)] + [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(k - 1)]
        T = shifted_tensor(facs, alphas)
        tops, weights = None, []
        for W, al in zip(facs, alphas):
            hv = maximal_vectors(W)[0]
            tops = hv.vector if tops is None else _kron(tops, hv.vector)
            weights.append(hv.weight.shifted(al))
        got = highest_weight_of(T, tops)
        want = star_all(ctx, weights)
        if got != want:
            failures.append((ctx.M, ctx.N, [str(a) for a in alphas]))
        cases += 1
    dt = time.perf_counter() - t0
    ok = not failures
    report(4, ok, f"20 seeded tensors over (1|1),(2|1): extracted weight == star product; mismatches={failures or 'none'}", dt)
    assert ok, failures


# -- 5, 6, 7 ------------------------------------------------------------------------


CTXS = (GradingContext(2, 1), GradingContext(1, 2), GradingContext(2, 2), GradingContext(3, 1))


def _sample_mu(rng, want_dominant):
    while True:
        ctx = rng.choice(CTXS)
        mu = [rng.randint(-5, 5) for _ in range(ctx.size)]
        if is_dominant(ctx, mu) == want_dominant:
            return ctx, mu


def _accepted_cases():
    rng = random.Random(SEED + 5)
    return [_sample_mu(rng, True) for _ in range(20)], [_sample_mu(rng, False) for _ in range(20)]


def _string_polynomial(lo: int, hi: int) -> Polynomial:
    """``prod_{j=0}^{hi-lo-1} (x + lo + j)``."""
    return Polynomial.from_roots([lo + j for j in range(hi - lo)])


def test_criterion_05_drinfeld_round_trip():
    t0 = time.perf_counter()
    dominant, other = _accepted_cases()
    problems = []
    for ctx, mu in dominant:
        L = evaluation_weight(ctx, mu)
        v = check_finite_dim(L)
        if v.status != FINITE:
            problems.append(("rejected", ctx.M, ctx.N, mu))
            continue
        for a, P in v.data.P.items():
            s = ctx.sign(ctx.parity(a))
            lam_a, lam_b = L[a], L[a + 1]
            # P(x + s) lambda_{a+1} == P(x) lambda_a, cleared of denominators
            lhs = P.shift(s) * lam_b.num * lam_a.den
            rhs = P * lam_a.num * lam_b.den
            if lhs != rhs:
                problems.append(("division", ctx.M, ctx.N, mu, a))
            if s == 1 and P != _string_polynomial(mu[a], mu[a - 1]):
                problems.append(("string", ctx.M, ctx.N, mu, a))
    for ctx, mu in other:
        if check_finite_dim(evaluation_weight(ctx, mu)).status == FINITE:
            problems.append(("accepted", ctx.M, ctx.N, mu))
    dt = time.perf_counter() - t0
    ok = not problems and dt < 30
    report(5, ok, f"20 dominant accepted with exact P_a division, 20 non-dominant rejected; problems={problems or 'none'}", dt)
    assert ok, problems


def test_criterion_06_factorization_round_trip():
    t0 = time.perf_counter()
    dominant, _ = _accepted_cases()
    problems = []
    for ctx, mu in dominant:
        L = evaluation_weight(ctx, mu)
        v = check_finite_dim(L)
        f, factors = factor_into_fundamentals(L, v.data)
        if twist(f, star_all(ctx, [x.weight for x in factors])) != L:
            problems.append((ctx.M, ctx.N, mu))
    dt = time.perf_counter() - t0
    ok = not problems
    report(6, ok, f"twist(f, star of fundamentals) == weight on all {len(dominant)} accepted cases; problems={problems or 'none'}", dt)
    assert ok, problems


def test_criterion_07_twist_invariance():
    t0 = time.perf_counter()
    rng = random.Random(SEED + 7)
    dominant, other = _accepted_cases()
    weights = [evaluation_weight(c, m) for c, m in dominant[:6] + other[:4]]
    problems = []
    for i in range(10):
        deg = rng.randint(0, 3)
        f = [1] + [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(deg)]
        for L in weights:
            a, b = check_finite_dim(L), check_finite_dim(twist(f, L))
            if a.status != b.status or a.data != b.data:
                problems.append((i, [str(c) for c in f], str(L)))
    dt = time.perf_counter() - t0
    ok = not problems
    report(7, ok, f"verdict and Drinfeld data unchanged under 10 random twists x {len(weights)} weights; problems={len(problems)}", dt)
    assert ok, problems


# -- 8 ----------------------------------------------------------------------------


def test_criterion_08_degeneracy_detection():
    t0 = time.perf_counter()
    ctx = C11
    E = evaluation_rep(vector_rep(ctx))
    points = gl11_pair_scan(candidate_alphas(4))
    degenerate = [p for p in points if p.degenerate]
    full = _unit_basis(4)
    notes, problems = [], []
    for p in degenerate:
        T = shifted_tensor([E, E], [0, p.alpha])
        rad = list(p.radical)
        head = subquotient_module(T, full, rad)
        head_ok = p.head_simple and maximal_space_dimension(head) == 1
        rel_ok = verify_defining_relations(head, 4).passed
        total = head.dim + len(rad)
        # cyclic reading: Yv / M with M from the invariant-subspace fixpoint
        q = irreducible_quotient(T, _e0(4))
        cyc_ok = q.module.dim + q.maximal_submodule_dim == q.cyclic_dim == p.cyclic_dim
        cyc_ok = cyc_ok and q.module.dim == p.quotient_dim and verify_defining_relations(q.module, 4).passed
        if q.cyclic_dim == 4:
            # W is generated by its top vector: the fixpoint M must be the radical
            cyc_ok = cyc_ok and span_basis(rad, 4) == span_basis(_fixpoint_M(T), 4)
        notes.append(
            f"alpha={p.alpha}: W/M {head.dim} + M {len(rad)} = {total}; "
            f"cyclic span {q.cyclic_dim} = L {q.module.dim} + M_cyc {q.maximal_submodule_dim}"
        )
        if not (head_ok and rel_ok and total == 4 and cyc_ok):
            problems.append(str(p.alpha))
    generic_ok = all(p.quotient_dim == 4 for p in points if not p.degenerate)
    dt = time.perf_counter() - t0
    ok = bool(degenerate) and not problems and generic_ok
    report(8, ok, f"{len(points)} alphas scanned, degenerate at {[str(p.alpha) for p in degenerate]}; " + "; ".join(notes), dt)
    assert ok, (problems, notes)


def _fixpoint_M(T):
    span = cyclic_span(T, _e0(4))
    top = _weight_of(T, _e0(4))
    rest = [x for x in span if _weight_of(T, x) != top]
    return largest_invariant_subspace(rest, _mode_operators(T), 4) if rest else []


# -- 9 ----------------------------------------------------------------------------


def test_criterion_09_hopf_suite():
    t0 = time.perf_counter()
    failed = []
    for ctx in (C11, C21):
        rep = suite_hopf(ctx, order=3, antipode_order=2)
        failed += [f"{ctx.M}|{ctx.N}:{p.name}" for p in rep.properties if not p.passed]
    dt = time.perf_counter() - t0
    ok = not failed
    report(9, ok, f"coassociativity k=3 to u^-3, counit laws, antipode to u^-2 on (1|1),(2|1); failures={failed or 'none'}", dt)
    assert ok, failed


# -- 10 ---------------------------------------------------------------------------


def test_criterion_10_induced_cross_construction():
    t0 = time.perf_counter()
    E = evaluation_rep(vector_rep(C11))
    T = shifted_tensor([E, E], [0, F(1, 2)])
    Lam = highest_weight_of(T, _e0(4))
    tensor_q = irreducible_quotient(T, _e0(4))
    res, stable = induced_until_stable(C11, InducedData.one_dimensional(C11, Lam), max_cutoff=6)
    dt = time.perf_counter() - t0
    if not stable:
        report(10, True, f"induced construction did not stabilize by D=6 (last D={res.cutoff})", dt, status="EXPERIMENTAL")
        pytest.skip("induced construction unstabilized; experimental status reported")
    match = res.highest_weight == Lam and res.quotient_dim == tensor_q.module.dim
    rel = verify_defining_relations(res.module, 3).passed
    ok = match and rel
    report(
        10, ok,
        f"stable between D={res.cutoff} and D={res.cutoff + 1}: quotient dim {res.quotient_dim} "
        f"(tensor {tensor_q.module.dim}), highest weight equal: {res.highest_weight == Lam}, relations: {rel}",
        dt,
    )
    assert ok


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for fn in tests:
        try:
            fn()
        except AssertionError:
            pass
        except pytest.skip.Exception:
            pass
    print("\n".join(LINES))
    sys.exit(0 if all(" FAIL " not in ln for ln in LINES) else 1)
