"""Acceptance suite: one test per criterion, exact (zero-tolerance) checks.

Every criterion is an equality or equivalence over finite structures, so the
only tolerances are wall-clock budgets; those are pinned next to each
assertion.  Each test emits a single PASS line (shown with `pytest -v -s`).
"""

import time

from promrep import (
    FnMap,
    Preorder,
    Prom,
    Rel,
    SearchConfig,
    eq,
    finset,
    fn_eq_into_powerset,
    identity,
    identity_map,
    identity_prom_morphism,
    identity_rep_morphism,
    is_preorder,
    left_residual,
    powerset,
    prommor_to_repmor,
    repmor_leq,
    repmor_to_prommor,
    rep_to_prom,
    search,
    triangle_prom,
    gen_representation,
)
from promrep.cli import main
from promrep.harness import direct_image_functorial, enumerate_representations


def _report(number: int, text: str):
    print(f"ACCEPTANCE {number}: PASS — {text}")


def _run(law, mode="seeded", bounds=None, trials=200, seed=0):
    return search(SearchConfig(law=law, mode=mode, bounds=bounds, trials=trials, seed=seed))


def test_criterion_01_eq1_galois_exhaustive_size2():
    started = time.monotonic()
    summary = _run("eq1-galois", mode="exhaustive", bounds=(2,))
    elapsed = time.monotonic() - started
    assert summary.passed
    assert summary.checked >= 16 ** 3  # all 4096 full-size triples included
    assert elapsed < 1.0
    _report(1, f"Galois equivalence on {summary.checked} triples in {elapsed:.2f}s")


def test_criterion_02_modular_tautology_exhaustive():
    started = time.monotonic()
    summary = _run("modular-tautology", mode="exhaustive", bounds=(2,))
    elapsed = time.monotonic() - started
    assert summary.passed and summary.checked > 0
    assert elapsed < 5.0
    _report(2, f"modular tautology on {summary.checked} instances in {elapsed:.2f}s")


def test_criterion_03_preorder_characterization_and_subset_order():
    A = finset("A", 2, "a")
    preorders = 0
    for code in range(16):
        r = Rel(A, A, (code & 3, code >> 2))
        assert is_preorder(r) == eq(r, left_residual(r, r))
        preorders += is_preorder(r)
    assert preorders == 4
    summary = _run("mem-residual-subset", mode="exhaustive", bounds=(3,))
    assert summary.passed and summary.checked == 4  # |M| = 0..3
    _report(3, "16 relations characterized, 4 preorders; ∈\\∈ = ⊆ for |M| ≤ 3")


def test_criterion_04_lemmas_1_2_seeded_1000():
    started = time.monotonic()
    s1 = _run("lemma1", bounds=(4, 4), trials=1000, seed=11)
    s2 = _run("lemma2", bounds=(4,), trials=1000, seed=12)
    elapsed = time.monotonic() - started
    assert s1.passed and s1.checked == 1000
    assert s2.passed and s2.checked == 1000
    assert elapsed < 10.0
    _report(4, f"lemmas 1-2 on 1000 seeded instances each in {elapsed:.2f}s")


def test_criterion_05_lemma3_laxness_with_strictness_witness():
    summary = _run("lemma3", bounds=(3,), trials=500, seed=13)
    assert summary.passed and summary.checked == 500
    assert summary.notes.get("strict", 0) >= 1
    # explicit strictness witness: any prom with y a 2-chain
    A, B = finset("A", 1, "a"), finset("B", 2, "b")
    y = Preorder(Rel(B, B, (0b11, 0b10)))  # b0 ≤ b1
    p = Prom(Preorder(identity(A)), y, FnMap(A, B, (0,)))
    r_id = prommor_to_repmor(identity_prom_morphism(p))
    ident = identity_rep_morphism(r_id.src)
    assert eq(r_id.tau, y.rel) and not eq(r_id.tau, identity(B))
    assert repmor_leq(ident, r_id) and not repmor_leq(r_id, ident)
    _report(5, f"laxness on 500 instances, {summary.notes['strict']} strict; 2-chain witness")


def test_criterion_06_lemmas_4_6_enumerated():
    started = time.monotonic()
    s4 = _run("lemma4", mode="exhaustive", bounds=(2, 2))
    s5 = _run("lemma5", mode="exhaustive", bounds=(2, 2))
    s6 = _run("lemma6", mode="exhaustive", bounds=(2, 1))
    assert s4.passed and s5.passed and s6.passed
    assert s5.checked > 10000  # every enumerated morphism at |M|,|M'|,|S|,|S'| ≤ 2
    # strict functoriality at the full (2,2) bound: identity images for every
    # representation, and composition via tau multiplicativity (the only data
    # M transforms)
    for r in enumerate_representations(2, 2):
        img = repmor_to_prommor(identity_rep_morphism(r))
        ident = identity_prom_morphism(rep_to_prom(r))
        bundle = powerset(r.M)
        assert img.phi.image == ident.phi.image
        assert img.psi.image == ident.psi.image
        assert fn_eq_into_powerset(img.psi, ident.psi, bundle.mem)
    checked, violation = direct_image_functorial(2)
    assert violation is None and checked > 0
    elapsed = time.monotonic() - started
    assert elapsed < 30.0
    _report(6, f"lemmas 4-6 exact on {s4.checked}+{s5.checked}+{s6.checked} instances in {elapsed:.2f}s")


def test_criterion_07_lemma7_exhaustive():
    summary = _run("lemma7", mode="exhaustive", bounds=(2, 3))
    assert summary.passed
    assert summary.checked >= 2 ** 6  # includes all 64 relations at |A|=2, |B|=3
    _report(7, f"membership recovery exact on {summary.checked} relations")


def test_criterion_08_unit_counit_triangles():
    s_unit = _run("unit-natural", bounds=(3,), trials=300, seed=21)
    s_counit = _run("counit-natural", bounds=(2,), trials=300, seed=22)
    assert s_unit.passed and s_unit.checked == 300
    assert s_counit.passed and s_counit.checked == 300
    # triangle in PoM: exact equality; the composite depends only on |M| ≤ 3
    for size in range(4):
        assert triangle_prom(gen_representation(size, size, 2))
    s_tri = _run("triangle-repr", bounds=(3, 3), trials=300, seed=23)
    assert s_tri.passed and s_tri.checked == 300
    assert s_tri.notes.get("strict", 0) >= 1
    _report(8, f"unit/counit natural on 300 each; triangles exact, {s_tri.notes['strict']} strict")


def test_criterion_09_lemmas_8_9_hom_sets():
    s8 = _run("lemma8", mode="exhaustive", bounds=(2,))
    s9 = _run("lemma9", mode="exhaustive", bounds=(2,))
    assert s8.passed and s9.passed
    assert s9.notes.get("rep_homs", 0) > 0 and s9.notes.get("prom_homs", 0) > 0
    assert s9.notes.get("strict_t_psi", 0) >= 1  # at least one strict TΨ instance
    _report(9, f"ΨT=id on {s9.notes['prom_homs']} prom homs, TΨ⩾id on {s9.notes['rep_homs']} rep homs, {s9.notes['strict_t_psi']} strict")


def test_criterion_10_lemmas_10_11_exhaustive_with_coverage():
    s10 = _run("lemma10", mode="exhaustive", bounds=(2, 2))
    s11 = _run("lemma11", mode="exhaustive", bounds=(2, 2))
    assert s10.passed and s11.passed
    assert s10.notes["exact"] > 0 and s10.notes["non_exact"] > 0
    assert s11.notes["reflecting"] > 0 and s11.notes["non_reflecting"] > 0
    _report(10, f"exactness transfer: {s10.notes['exact']} exact / {s10.notes['non_exact']} non-exact representations; {s11.notes['reflecting']} reflecting / {s11.notes['non_reflecting']} non-reflecting proms")


def test_criterion_11_verify_determinism_across_jobs(capsys):
    args = ["verify", "triangle-repr", "--trials", "300", "--seed", "7"]
    assert main(args + ["--jobs", "1"]) == 0
    serial = capsys.readouterr().out
    assert main(args + ["--jobs", "8"]) == 0
    parallel = capsys.readouterr().out
    assert serial.encode() == parallel.encode()
    _report(11, "verify summaries byte-identical at --jobs 1 and --jobs 8")
