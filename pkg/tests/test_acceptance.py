"""Acceptance gate: twelve criteria, each timed and reported as one PASS/FAIL line."""
import random
import time
from contextlib import contextmanager
from functools import lru_cache

from ybelab.algebra import (
    dual_bimodule,
    is_associative,
    matched_pair_sum,
    regular_bimodule,
    regular_bimodule_algebra,
    validate_matched_pair,
    zero_bimodule,
)
from ybelab.double import DoubleContext, lifted_balanced_check, tilde_pm
from ybelab.field import QQ, Field
from ybelab.fixtures import dual_numbers, nil2, ut2, zero_alg2
from ybelab.frobenius import BilinearForm, phi_inverse, verify_frobenius_equivalence
from ybelab.operators import (
    OperatorContext,
    ProductTable,
    assoc_criterion_check,
    balanced_residual,
    extended_o_residual,
    o_operator_residual,
    rota_baxter_residual,
    shift_equivalence,
)
from ybelab.search import Predicate, SearchSpace, compare_sets, enumerate_space, random_array, search
from ybelab.tensors import (
    aguiar_map,
    aybe_residual,
    coproduct_dual_table,
    dual_product_table,
    eaybe_residual,
    gaybe_residual,
    invariance_tri_check,
    operator_form_residual,
    sym_skew_split,
    tensor_as_map,
)
from ybelab.verify import VerifyOptions, default_algebras, matched_pair_instances, run_verifier

F3, F5 = Field(3), Field(5)
RESULTS: dict[int, str] = {}


@contextmanager
def criterion(n: int, title: str, limit: float | None):
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - t0
        ok = limit is None or elapsed < limit
        status = "PASS" if ok else "FAIL"
        RESULTS[n] = f"{status} criterion {n:>2}: {title} ({elapsed:.2f} s" + (f", limit {limit:g} s)" if limit else ")")
        assert ok, RESULTS[n]
    except BaseException:
        if n not in RESULTS:
            RESULTS[n] = f"FAIL criterion {n:>2}: {title} ({time.perf_counter() - t0:.2f} s)"
        raise


def _dual_ctx(A, kappa=0):
    return OperatorContext(A, dual_bimodule(regular_bimodule(A)), kappa=kappa, check=False)


def test_criterion_01_flagship():
    with criterion(1, "UT2 flagship, three routes", 1.0):
        U = ut2(QQ)
        r = QQ.zeros(3, 3)
        r[0, 1], r[1, 0] = 1, -1
        res = aybe_residual(U, r)
        assert res.shape == (3, 3, 3) and all(x == 0 for x in res.flat)
        assert operator_form_residual(U, r).passed
        assert o_operator_residual(_dual_ctx(U), tensor_as_map(r)).passed


def test_criterion_02_product_criterion():
    with criterion(2, "le:product exhaustive over F3", 5.0):
        total = 0
        for A in (nil2(F3), dual_numbers(F3)):
            for lam in (0, 1):
                for R in (regular_bimodule(A), regular_bimodule_algebra(A)):
                    ctx = OperatorContext(A, R, lam, check=False)
                    for _, alpha in enumerate_space(SearchSpace(F3, (2, 2), kind="map")):
                        a, c = assoc_criterion_check(ctx, alpha)
                        assert a == c, (A.name, lam, alpha)
                        total += 1
        assert total == 2 * 2 * 2 * 81


def test_criterion_03_matched_pairs():
    with criterion(3, "thm:mp, exhaustive F3 (1+1) and 1000 random over Q", 10.0):
        seen = {True: 0, False: 0}
        gens = [(F3, matched_pair_instances(F3)), (QQ, matched_pair_instances(QQ, random.Random(20261019), 1000))]
        count = 0
        for f, gen in gens:
            for mp in gen:
                lhs = is_associative(f, matched_pair_sum(mp, check=False).c)
                assert lhs == validate_matched_pair(mp).passed
                seen[lhs] += 1
                count += 1
        assert count == 3 ** 6 + 1000
        assert seen[True] and seen[False]


def test_criterion_04_shift():
    with criterion(4, "co:mop, 500 random alpha over Q", 5.0):
        rng = random.Random(4)
        algebras = (dual_numbers(QQ), nil2(QQ))
        for _ in range(500):
            alpha = random_array(QQ, (2, 2), rng)
            for A in algebras:
                for lam in (0, 1, -1, 2):
                    for c in shift_equivalence(A, alpha, lam).checks:
                        assert c.detail["lhs"] == c.detail["rhs"], (A.name, lam, alpha)


@lru_cache(maxsize=None)
def _aybea_scan():
    """Exhaustive F5 scan on Nil2 of r with invariant symmetric part; returns (instances, EAYBE solutions)."""
    A = nil2(F5)
    instances, solutions = 0, []
    for _, r in enumerate_space(SearchSpace(F5, (2, 2))):
        alpha, beta = sym_skew_split(F5, r)
        if not all(invariance_tri_check(A, beta)):
            continue
        for kappa in (-1, 0, 1):
            eps = F5.scalar((kappa + 1) * F5.inv(4))
            lhs = F5.is_zero(eaybe_residual(A, r, eps))
            rhs = extended_o_residual(_dual_ctx(A, kappa), tensor_as_map(alpha), tensor_as_map(beta), gate="hom").passed
            assert lhs == rhs, (r, kappa)
            instances += 1
            if lhs:
                solutions.append(r)
    return instances, solutions


def test_criterion_05_extended_equation():
    with criterion(5, "thm:aybea(ii), exhaustive over F5 on Nil2", 30.0):
        instances, solutions = _aybea_scan()
        assert instances > 0 and solutions


def test_criterion_06_lift_sets():
    with criterion(6, "weight-0 O-operators versus skew AYBE in the double, F3", 60.0):
        A = nil2(F3)
        modules = [("zero1", zero_bimodule(A, 1)), ("regular", regular_bimodule(A)),
                   ("dual", dual_bimodule(regular_bimodule(A))), ("zero2", zero_bimodule(A, 2))]
        for _, V in modules:
            ctx = DoubleContext(A, V)
            ops = search(SearchSpace(F3, (2, V.dim), kind="map"), Predicate("o_op", A, {"lam": 0}, module=V))
            lifts = search(SearchSpace(F3, (2 + V.dim,) * 2, "skew"), Predicate("aybe_hom_form", ctx.hat, {"n": 2}))
            rep = compare_sets(ops, lifts, lambda a, ctx=ctx: tilde_pm(ctx, a)[1])
            assert rep.passed, rep.render()
            assert ops.count > 1


def test_criterion_07_dual_product():
    with criterion(7, "pp:bialgebra and lemma:maybe, exhaustive over F3", 10.0):
        for A in (nil2(F3), dual_numbers(F3)):
            both = set()
            for _, r in enumerate_space(SearchSpace(F3, (2, 2))):
                table = dual_product_table(A, r)
                assert F3.equal(coproduct_dual_table(A, r), table)
                assoc = ProductTable(table, "dual_product").is_associative(F3)
                assert assoc == F3.is_zero(gaybe_residual(A, r))
                both.add(assoc)
            assert both == {True, False}


def test_criterion_08_invariance_lemmas():
    with criterion(8, "le:syin over F5 and le:syco over F3", 10.0):
        for A in (zero_alg2(F5), nil2(F5), dual_numbers(F5)):
            for _, s in enumerate_space(SearchSpace(F5, (2, 2), "symmetric")):
                inv, bal, hom = invariance_tri_check(A, s)
                assert inv == bal == hom
        for A in (zero_alg2(F3), nil2(F3), dual_numbers(F3)):
            for V in (zero_bimodule(A, 1), regular_bimodule(A), zero_bimodule(A, 2)):
                ctx = DoubleContext(A, V)
                for _, beta in enumerate_space(SearchSpace(F3, (2, V.dim), kind="map")):
                    lifted, base = lifted_balanced_check(ctx, beta)
                    assert lifted == base


def test_criterion_09_aguiar():
    with criterion(9, "thm:ag, aayb solutions on Nil2 and UT2 over F3", 30.0):
        for A in (nil2(F3), ut2(F3)):
            space, pred = SearchSpace(F3, (A.dim, A.dim)), Predicate("aayb", A)
            found = search(space, pred)
            assert found.count > 1
            for r in found.arrays():
                assert rota_baxter_residual(A, aguiar_map(A, r), 0).passed


def test_criterion_10_frobenius():
    with criterion(10, "Frobenius chain on DualNum with its trace form", 10.0):
        D = dual_numbers(QQ)
        B = BilinearForm(D, QQ.array([[0, 1], [1, 0]]))
        dual = OperatorContext(D, dual_bimodule(regular_bimodule(D)), kappa=1, mu=1, check=False)
        assert balanced_residual(dual, phi_inverse(B), check_hom=True).passed
        Binv = QQ.inverse(B.Bmat)
        rng = random.Random(10)
        evaluated = 0
        for _ in range(500):
            alpha = QQ.reduce(Binv @ random_array(QQ, (2, 2), rng, "skew"))
            beta = QQ.reduce(Binv @ random_array(QQ, (2, 2), rng, "symmetric"))
            kappa = rng.choice((0, -1))
            rep = verify_frobenius_equivalence(alpha, beta, B, kappa)
            assert rep.passed, rep.render()
            evaluated += sum(1 for c in rep.checks if "skipped" not in c.detail)
        assert evaluated >= 500


def test_criterion_11_extended_solutions_solve_gaybe():
    with criterion(11, "co:II-MYBE on the criterion 5 solutions", None):
        _, solutions = _aybea_scan()
        assert solutions
        A = nil2(F5)
        for r in solutions:
            assert F5.is_zero(gaybe_residual(A, r))


def _search_specs():
    """The searches of criteria 6 and 9."""
    A = nil2(F3)
    for V in (zero_bimodule(A, 1), regular_bimodule(A), dual_bimodule(regular_bimodule(A)), zero_bimodule(A, 2)):
        yield SearchSpace(F3, (2, V.dim), kind="map"), Predicate("o_op", A, {"lam": 0}, module=V)
        yield SearchSpace(F3, (2 + V.dim,) * 2, "skew"), Predicate("aybe_hom_form", DoubleContext(A, V).hat, {"n": 2})
    for B in (nil2(F3), ut2(F3)):
        yield SearchSpace(F3, (B.dim, B.dim)), Predicate("aayb", B)


def test_criterion_12_determinism():
    with criterion(12, "SolutionSets identical across workers and runs", None):
        for space, pred in _search_specs():
            ref = search(space, pred, workers=1).dumps()
            for workers in (1, 2, 8):
                assert search(space, pred, workers=workers).dumps() == ref, (pred.id, workers)
        opts = VerifyOptions(QQ, default_algebras(QQ, None), None, False, 50, seed=12)
        assert run_verifier("co:mop", opts).to_json(QQ) == run_verifier("co:mop", opts).to_json(QQ)
