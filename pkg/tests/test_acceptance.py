"""One test per acceptance criterion; a criterion passes only if all its tests pass."""

import random
import time
from pathlib import Path

import numpy as np

from motwedge import cli
from motwedge.a2model import normalize, phi_named, target_image, verify_witness
from motwedge.chart import enumerate_dots
from motwedge.grading import TriDegree
from motwedge.localized import (
    L_delta_family, coweight_equation_solvable, ext_monomial, image_predicate_set, in_phi_image, mono_degree,
    oracle_image_enumerate, phi_local)
from motwedge.wedge import E0G, PureG, Verdict, family_status, lambda_table

GOLDEN = Path(__file__).parent / "golden" / "wedge_through_70.tsv"
RED_DOTS = [(40, 8), (45, 9), (57, 12), (60, 12), (62, 13), (65, 13)]


def popcount(n):
    return bin(n).count("1")


def _chart_tsv(capsys):
    start = time.perf_counter()
    assert cli.main(["chart", "--stem-max", "70", "--format", "tsv"]) == 0
    elapsed = time.perf_counter() - start
    return capsys.readouterr().out, elapsed


def test_criterion_1_golden_labels_and_red_dots(capsys):
    out, elapsed = _chart_tsv(capsys)
    assert out.encode("utf-8") == GOLDEN.read_bytes()
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    assert sorted((int(r[0]), int(r[1])) for r in rows if r[4] == "Irregular") == RED_DOTS
    assert elapsed < 1.0


def test_criterion_1_sixty_dots(capsys):
    out, _ = _chart_tsv(capsys)
    assert len(out.splitlines()) - 1 == 60


def test_criterion_2_image_enumeration():
    start = time.perf_counter()
    found = oracle_image_enumerate(60)
    expected = {(a, b, c) for a in range(16) for b in range(21) for c in range(16)
                if 4 * a + 3 * b + 4 * c <= 60 and popcount(b + c) <= b}
    assert found == expected == image_predicate_set(60)
    assert time.perf_counter() - start < 10


def test_criterion_3_coweight_equation():
    start = time.perf_counter()
    bad = [(t, k) for t in range(7) for k in range(41)
           if coweight_equation_solvable(t, k) != (popcount(t + k) <= t)]
    assert bad == []
    assert time.perf_counter() - start < 5


def test_criterion_4_phi_degrees():
    for n in range(2, 13):
        assert mono_degree(phi_local(ext_monomial(v={n: 1}))) == TriDegree(2 ** (n + 1) - 2, 1, 2 ** n - 1)


def test_criterion_5_delta_family():
    for t in range(1, 9):
        for k in range(9):
            poly = L_delta_family(t, k)
            first, second = sorted(poly.terms, key=lambda m: m.h1)
            target = TriDegree(20 * k + 17 * t + 25, 4 * k + 4 * t + 5, 12 * k + 10 * t + 13)
            assert mono_degree(first) == mono_degree(second) == target
            assert first.h1 == -2 * k - 5
            assert in_phi_image(first) == (popcount(1 + k + t) <= t)


def _region_cases():
    for i in range(6):
        for j in range(6):
            if j == 0:
                yield f"tau*P^{i}*e0^3", (i, j)
            elif i >= j:
                yield f"tau*d0^{2 * j}*P^{i - j}*e0^3", (i, j)
            elif j <= 3 * i:
                yield f"tau*d0^{3 * i - j}*e0^{2 * (j - i) + 3}", (i, j)


def test_criterion_6_witnesses():
    cases = [("tau*d0^2", ("tau", 1, 1))]
    cases += [(w, ("tau*e0^3", i, j)) for w, (i, j) in _region_cases()]
    assert len(cases) > 20
    for witness, target in cases:
        assert verify_witness(witness, target), (witness, target)
        lhs, rhs = phi_named(witness), target_image(*target)
        reference = normalize(lhs)
        for seed in range(10):
            assert normalize(lhs, rng=random.Random(seed)) == reference
            assert normalize(rhs, rng=random.Random(seed)) == normalize(rhs)


def test_criterion_7_small_cases():
    for t, k in [(1, 0), (1, 1), (1, 3)]:
        st = family_status(E0G(t, k))
        assert st.verdict is Verdict.NONEMPTY and st.evidence_kind == "citation" and st.anchor
    for k in (2, 4):
        st = family_status(E0G(1, k))
        assert st.verdict is Verdict.EMPTY and st.recheck()
    for j in range(1, 21):
        st = family_status(PureG(j))
        assert st.verdict is Verdict.EMPTY and st.recheck()


def test_criterion_8_alpha_properties():
    from motwedge.binary import alpha
    table = np.array([alpha(x) for x in range(2 * 4096 + 1)], dtype=np.int64)
    assert all(table[x] == popcount(x) for x in range(0, len(table), 7))
    t = np.arange(4097)
    assert np.all(table[t] <= t)
    tk = t[:, None] + t[None, :]
    assert tk.size >= 10 ** 5
    assert np.all(table[tk] <= table[t][:, None] + table[t][None, :])
    for s in range(13):
        assert all(alpha((2 ** s) * x) == table[x] for x in range(4097))


def test_criterion_9_distinct_dots_and_lambda():
    dots = enumerate_dots(70)
    assert len({(d.stem, d.filtration) for d in dots}) == len(dots)
    typed = {
        "tau*g^2": (40, 8, 23), "d0*r": (44, 10, 24), "tau*Dh1*g": (45, 9, 24), "d0*m": (49, 11, 28),
        "g*r": (50, 10, 28), "tau*e0^2*g": (54, 12, 31), "g*m": (55, 11, 32), "tau*Dh1*e0^2": (59, 13, 32),
        "tau*Dh1*e0": (42, 9, 22), "d0*l": (46, 11, 26), "e0*r": (47, 10, 26), "tau*e0^3": (51, 12, 29),
        "e0*m": (52, 11, 30), "tau*Dh1*d0*e0": (56, 13, 30), "tau*e0*g^2": (57, 12, 33),
        "d0*e0*r": (61, 14, 34),
    }
    assert {r.name: r.degree.as_tuple() for r in lambda_table()} == typed
