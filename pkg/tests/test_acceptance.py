"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Slow extensions (hook bases at n = 7, 8 and DR_4) run only with HSPECHT_SLOW=1.
"""

import time

import pytest

from conftest import record, slow_enabled
from higher_specht.combinatorics import (enumerate_fillings, enumerate_partitions, mu_cocharge_tableaux,
                                         standard_tableaux, syt_pairs)
from higher_specht.exactlinalg import EchelonBasis
from higher_specht.frobenius import compare_series, formula_series, quotient_frobenius, series_hilbert
from higher_specht.polyring import all_permutations, coefficient_of, diagonal_act, mu_monomial
from higher_specht.quotients import hilbert_table, ideal_spec
from higher_specht.specht import (aty_higher_specht, garnir_apply, garnir_specs, higher_specht,
                                  hook_higher_specht, psi_shift, specht_poly, straighten)
from higher_specht.verify import (apolar_suite, bijection_suite, degrees_suite, dr_suite, hook_basis_suite,
                                  reference_fts_example, worked_examples_suite)


def _failures(report):
    return [c.name for c in report.checks if not c.passed and not c.known_discrepancy]


# ------------------------------------------------------------------ 1
def test_criterion_01_worked_examples():
    rep = worked_examples_suite()
    bad = _failures(rep)
    attained = [c for c in rep.checks if not c.known_discrepancy]
    record(1, not bad, f"{len(attained) - len(bad)}/{len(attained)} worked-example goldens"
                       + (f" failing: {bad}" if bad else ""))
    assert not bad


@pytest.mark.xfail(strict=True, reason="the reference 16-term expansion is the columns-first product; "
                                       "the defining rows-first product gives a different polynomial")
def test_criterion_01_reference_fts_expansion():
    from higher_specht.combinatorics import Tableau
    T, S = Tableau.parse("1 2 / 3 4"), Tableau.parse("1 3 / 2 4")
    F = hook_higher_specht(T, S, 2)
    ok = F == reference_fts_example()
    record(1, ok, "16-term F_T^S expansion (n=4, k=2) term-for-term"
                  + ("" if ok else ": known discrepancy, see the decision ledger"))
    assert ok


# ---------------------------------------------------------------- 2, 3
def test_criterion_02_bijection():
    t0 = time.time()
    bad = {n: _failures(bijection_suite(n)) for n in range(1, 9)}
    bad = {n: b for n, b in bad.items() if b}
    dt = time.time() - t0
    record(2, not bad and dt < 60, f"phi bijection with statistic transport, n <= 8 ({dt:.1f}s)")
    assert not bad and dt < 60


def test_criterion_03_degrees():
    t0 = time.time()
    bad = {n: _failures(degrees_suite(n)) for n in range(1, 9)}
    bad = {n: b for n, b in bad.items() if b}
    dt = time.time() - t0
    record(3, not bad and dt < 60, f"cc_mu / cc'_mu as comaj / maj ranges, n <= 8 ({dt:.1f}s)")
    assert not bad and dt < 60


# ------------------------------------------------------------------ 4
def test_criterion_04_specht_machinery():
    t0 = time.time()
    problems = []
    for n in range(1, 6):
        perms = all_permutations(n)
        for T, S in syt_pairs(n):
            specs = garnir_specs(T.shape)
            for k in range(1, n + 1):
                p = mu_cocharge_tableaux(S, k)
                c, d = p.x_exponents(), p.y_exponents()
                F = higher_specht(T, c, d)
                if any(diagonal_act(pi, F) != higher_specht(T.relabel(pi.images), c, d) for pi in perms):
                    problems.append(("equivariance", T, S, k))
                if any(not garnir_apply(g, T, F).is_zero() for g in specs):
                    problems.append(("garnir", T, S, k))
        for lam in enumerate_partitions(n):
            for U in enumerate_fillings(lam, "general-bijective"):
                if straighten(U).reconstruct() != specht_poly(U):
                    problems.append(("straighten", U))
    for n in range(1, 7):
        for S in standard_tableaux(n):
            tabs = enumerate_fillings(S.shape)
            for k in range(1, n + 1):
                ech = EchelonBasis()
                for T in tabs:
                    F = hook_higher_specht(T, S, k)
                    if coefficient_of(F, mu_monomial(T, S, k)) == 0:
                        problems.append(("leading term", T, S, k))
                    ech.add(dict(F.items()))
                if ech.rank != len(tabs):
                    problems.append(("rank", S, k, ech.rank))
    dt = time.time() - t0
    record(4, not problems and dt < 300,
           f"equivariance, Garnir, straightening (n <= 5); rank f^lambda (n <= 6) ({dt:.1f}s)"
           + (f" problems: {problems[:3]}" if problems else ""))
    assert not problems and dt < 300


# ------------------------------------------------------------------ 5
def _hook_basis(n):
    out = []
    for k in range(1, n + 1):
        rep = hook_basis_suite(n, k)
        out.append((k, rep.passed, rep.data.get("rank")))
    return out


def test_criterion_05_main_theorem():
    t0 = time.time()
    results = {n: _hook_basis(n) for n in range(2, 7)}
    bad = {n: [k for k, ok, _ in r if not ok] for n, r in results.items()}
    bad = {n: ks for n, ks in bad.items() if ks}
    dt = time.time() - t0
    record(5, not bad and dt < 1800,
           f"n! higher Specht polynomials independent modulo hook(n,k), n = 2..6, all k ({dt:.0f}s)"
           + (f" failing: {bad}" if bad else ""))
    assert not bad and dt < 1800


@pytest.mark.skipif(not slow_enabled(), reason="set HSPECHT_SLOW=1")
@pytest.mark.parametrize("n", [7, 8])
def test_criterion_05_main_theorem_large(n):
    results = _hook_basis(n)
    ok = all(r for _, r, _ in results)
    record(5, ok, f"opt-in n = {n}")
    assert ok


# ------------------------------------------------------------------ 6
def test_criterion_06_psi_recovery():
    t0 = time.time()
    bad = []
    count = 0
    for n in range(1, 6):
        for T, S in syt_pairs(n):
            target = aty_higher_specht(T, S)
            for k in range(1, n + 1):
                q = max(v for row in mu_cocharge_tableaux(S, k).cc_tab_prime for v in row)
                count += 1
                if psi_shift(hook_higher_specht(T, S, k), q) != target:
                    bad.append((T.literal(), S.literal(), k))
    dt = time.time() - t0
    record(6, not bad and dt < 120, f"psi recovers the one-variable polynomial for {count} (T,S,k), n <= 5 ({dt:.1f}s)")
    assert not bad and dt < 120


# ------------------------------------------------------------------ 7
def test_criterion_07_frobenius_agreement():
    t0 = time.time()
    bad = []
    orientations = set()
    for n in range(1, 6):
        for k in range(1, n + 1):
            I = ideal_spec("hook", n, k)
            qs = quotient_frobenius(I)
            st = compare_series(qs, formula_series("stembridge", n, k), allow_qt_swap=True)
            cc = compare_series(qs, formula_series("cc_mu", n, k), allow_qt_swap=False)
            if not (st.equal and cc.equal):
                bad.append((n, k))
            if formula_series("stembridge", n, k) != formula_series("cc_mu", n, k):
                orientations.add(st.orientation)
            hs = {key: v for key, v in series_hilbert(qs).items() if v}
            if hs != hilbert_table(I).dims:
                bad.append(("hilbert", n, k))
    for I in (ideal_spec("diagonal", 2), ideal_spec("diagonal", 3), ideal_spec("onevar", 4)):
        hs = {key: v for key, v in series_hilbert(quotient_frobenius(I)).items() if v}
        if hs != hilbert_table(I).dims:
            bad.append(("hilbert", I.label))
    dt = time.time() - t0
    ok = not bad and orientations == {"swapped"} and dt < 1800
    record(7, ok, f"quotient series = cc-series directly and = weighted maj series after q<->t swap, "
                  f"n <= 5; orientation {sorted(orientations)} ({dt:.1f}s)" + (f" failing: {bad}" if bad else ""))
    assert ok


# ------------------------------------------------------------------ 8
def test_criterion_08_diagonal_coinvariants():
    t0 = time.time()
    reps = [dr_suite(2), dr_suite(3)]
    bad = [f for r in reps for f in _failures(r)]
    dt = time.time() - t0
    record(8, not bad and dt < 300, f"DR_2 = 3 with basis, DR_3 = 16, nabla e_3 series, 16 listed polynomials "
                                    f"independent ({dt:.1f}s)" + (f" failing: {bad}" if bad else ""))
    assert not bad and dt < 300


@pytest.mark.skipif(not slow_enabled(), reason="set HSPECHT_SLOW=1")
def test_criterion_08_dr4():
    total = hilbert_table(ideal_spec("diagonal", 4)).total
    record(8, total == 125, f"opt-in dim DR_4 = {total}")
    assert total == 125


# ------------------------------------------------------------------ 9
def test_criterion_09_apolar():
    t0 = time.time()
    bad = {n: _failures(apolar_suite(n, max_total=4)) for n in range(1, 5)}
    bad = {n: b for n, b in bad.items() if b}
    dt = time.time() - t0
    record(9, not bad and dt < 600, f"hook ideal = apolar ideal of Delta_mu up to total degree 4 and "
                                    f"harmonic dim n!, n <= 4 ({dt:.1f}s)" + (f" failing: {bad}" if bad else ""))
    assert not bad and dt < 600


# ----------------------------------------------------------------- 10
def test_criterion_10_classical():
    t0 = time.time()
    bad = []
    for n in range(1, 6):
        I = ideal_spec("onevar", n)
        qfact = [1]
        for m in range(1, n + 1):
            qfact = [sum(qfact[i - j] for j in range(m) if 0 <= i - j < len(qfact))
                     for i in range(len(qfact) + m - 1)]
        if hilbert_table(I).by_x_degree() != qfact:
            bad.append(("hilbert", n))
        if not compare_series(quotient_frobenius(I), formula_series("lusztig_stanley", n)).equal:
            bad.append(("frobenius", n))
    dt = time.time() - t0
    record(10, not bad and dt < 60, f"onevar(n) Hilbert series [n]_q! and Lusztig-Stanley series, n <= 5 ({dt:.1f}s)"
           + (f" failing: {bad}" if bad else ""))
    assert not bad and dt < 60
