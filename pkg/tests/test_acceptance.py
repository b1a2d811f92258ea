"""Acceptance suite: one test per criterion, exact tolerances, one
printed pass line each.  Run with ``pytest -s tests/test_acceptance.py``
or directly with ``python tests/test_acceptance.py``.
"""

import contextlib
import io
import json
import random
import tempfile
import time
from fractions import Fraction
from pathlib import Path

import jsonschema
import numpy as np

from fourfold.bordism import spin_bordism_class
from fourfold.cli import main as cli_main
from fourfold.errors import InapplicableError
from fourfold.expressions import parse, parse_manifold
from fourfold.lattice import (
    Lattice,
    inertia,
    is_characteristic,
    pairing,
    signature,
    zero_vector,
)
from fourfold.manifolds import connected_sum, descriptor_of, k3, surface_product
from fourfold.obstructions import (
    PiRadical,
    SurfaceCandidate,
    embedding_obstructed,
    example_scan,
    min_genus,
    yamabe_value,
)
from fourfold.report import REPORT_SCHEMA
from fourfold.spinc import (
    canonical_spinc,
    dirac_index,
    index_chern_form,
    moduli_dimension,
    spin_condition,
)

from genforms import (
    random_symmetric,
    random_unimodular,
    random_unimodular_symmetric,
    solve_characteristic_mod2,
    transform,
)

CERTIFIED_POOL = [
    k3,
    lambda: surface_product(1, 1),
    lambda: surface_product(1, 3),
    lambda: surface_product(3, 1),
    lambda: surface_product(3, 3),
    lambda: surface_product(5, 1),
    lambda: surface_product(1, 5),
    lambda: surface_product(5, 3),
]


def _pass(number, name):
    print(f"ACCEPTANCE {number} ({name}): PASS")


def _run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli_main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_criterion_1_k3_pipeline():
    start = time.monotonic()
    m = k3()
    assert signature(m.h2) == -16
    assert m.euler == 24
    assert m.canonical_c1 == zero_vector(m.h2)
    s = canonical_spinc(m)
    assert dirac_index(m, s) == 2
    assert spin_condition(m, s).holds
    elapsed = time.monotonic() - start
    assert elapsed < 1.0, f"K3 pipeline took {elapsed:.3f}s"
    _pass(1, "K3 pipeline")


def test_criterion_2_odd_genus_grid():
    for g in (1, 3, 5, 7):
        for gp in (1, 3, 5, 7):
            m = surface_product(g, gp)
            s = canonical_spinc(m)
            assert all(x % 4 == 0 for x in s.c1)
            assert pairing(m.h2, s.c1, s.c1) % 16 == 0
            assert index_chern_form(m, s).all_even()
            assert dirac_index(m, s) % 2 == 0
            assert spin_condition(m, s).holds
    negative = surface_product(2, 2)
    assert not spin_condition(negative, canonical_spinc(negative)).chern_even
    _pass(2, "odd-genus surface products, 16 grid points + negative control")


def test_criterion_3_connected_sum_stability():
    rng = random.Random(101)
    for _ in range(200):
        parts = [rng.choice(CERTIFIED_POOL)() for _ in range(rng.randint(2, 5))]
        total = parts[0]
        for p in parts[1:]:
            total = connected_sum(total, p)
        s = canonical_spinc(total)
        assert spin_condition(total, s).holds
        expected = sum(dirac_index(p, canonical_spinc(p)) for p in parts)
        assert dirac_index(total, s) == expected
    _pass(3, "condition and index additivity over 200 random sums")


def test_criterion_4_moduli_dimension():
    rng = random.Random(103)
    for l in range(1, 7):
        for _ in range(5):
            m = rng.choice(CERTIFIED_POOL)()
            for _ in range(l - 1):
                m = connected_sum(m, rng.choice(CERTIFIED_POOL)())
            assert moduli_dimension(m, canonical_spinc(m)) == l - 1
    _pass(4, "moduli dimension d = l-1 for l = 1..6")


def test_criterion_5_bordism_verdicts():
    rng = random.Random(107)
    for l in range(2, 7):
        m = rng.choice(CERTIFIED_POOL)()
        for _ in range(l - 1):
            m = connected_sum(m, rng.choice(CERTIFIED_POOL)())
        klass = spin_bordism_class(m, canonical_spinc(m))
        assert klass.dimension == l - 1
        if l in (2, 3):
            assert klass.value == "nontrivial"
            assert klass.group == "Z/2"
        else:
            assert klass.value == "trivial"
    code, _, err = _run_cli("sigma0", "K3 # ~CP2", "--c1", "0," * 22 + "1")
    assert code == 2 and "covered family" in err
    code, _, _ = _run_cli("sigma0", "SP(2,2)")
    assert code == 2
    _pass(5, "bordism verdicts for l = 2..6, uncertified rejected with exit 2")


def test_criterion_6_example_reproduction():
    start = time.monotonic()
    grids = [(1, 1, 1, 1), (1, 1, 3, 3), (3, 3, 3, 3), (5, 3, 3, 3)]
    for genera in grids:
        for s in (0, 1, 2, 3):
            res = example_scan(*genera, s=s, r_max=100)
            big_g = res["G"]
            lb = Fraction(
                res["einstein_lower_bound"]["numerator"],
                res["einstein_lower_bound"]["denominator"],
            )
            assert lb == Fraction(8 * big_g, 3) - 4 * s - 4
            for row in res["rows"]:
                r = row["r"]
                assert row["einstein_obstructed"] == (Fraction(r) >= lb)
                assert row["hitchin_thorpe"] == (r <= 8 * big_g - 4 * s - 4)
    elapsed = time.monotonic() - start
    assert elapsed < 10.0, f"scan grid took {elapsed:.2f}s"
    _pass(6, f"blow-up scan matches closed forms exactly ({elapsed:.2f}s)")


def test_criterion_7_yamabe_values():
    m = connected_sum(k3(), k3())
    v = yamabe_value(m, canonical_spinc(m), parse_manifold("3*~CP2"), True)
    assert v == PiRadical(0, 0)
    m = connected_sum(surface_product(3, 3), surface_product(3, 3))
    v = yamabe_value(m, canonical_spinc(m), parse_manifold("~CP2"), True)
    assert v == PiRadical(-32, 2)
    assert str(v) == "-32*sqrt(2)*pi"
    _pass(7, "exact Yamabe values")


def test_criterion_8_lattice_property_suite():
    rng = random.Random(109)
    vectors = 0
    while vectors < 500:
        n = rng.randint(1, 8)
        lat, sig = random_unimodular_symmetric(n, rng)
        for _ in range(5):
            c = solve_characteristic_mod2(lat.form, rng)
            assert is_characteristic(lat, c)
            assert (pairing(lat, c, c) - signature(lat)) % 8 == 0
            vectors += 1
    for _ in range(100):
        n = rng.randint(1, 6)
        rows = random_symmetric(n, rng)
        p = random_unimodular(n, rng)
        assert signature(Lattice.from_rows(rows)) == signature(
            Lattice.from_rows(transform(rows, p))
        )
    checked = 0
    while checked < 100:
        n = rng.randint(1, 6)
        rows = random_symmetric(n, rng)
        eig = np.linalg.eigvalsh(np.array(rows, dtype=float))
        tol = 1e-9 * max(1.0, float(np.max(np.abs(eig))))
        if np.any(np.abs(eig) <= 1000 * tol):
            continue
        pos = int(np.sum(eig > 0))
        neg = int(np.sum(eig < 0))
        assert inertia(Lattice.from_rows(rows)) == (pos, neg, n - pos - neg)
        checked += 1
    _pass(8, "van der Blij x500, congruence invariance x100, eigenvalue oracle x100")


def test_criterion_9_adjunction_oracle():
    m = connected_sum(k3(), k3())
    s = canonical_spinc(m)
    assert embedding_obstructed(m, s, SurfaceCandidate(0, 1, 0)) is False
    assert embedding_obstructed(m, s, SurfaceCandidate(2, 1, 0)) is True
    assert min_genus(m, s, 0, 0) == 1
    assert min_genus(m, s, 6, 0) == 4
    assert min_genus(m, s, 4, 10) == 1
    rng = random.Random(113)
    for _ in range(1000):
        n = rng.randint(0, 15)
        g = rng.randint(1, 9)
        p = rng.randint(-8, 8)
        verdict = embedding_obstructed(m, s, SurfaceCandidate(n, g, p))
        if verdict:
            assert embedding_obstructed(m, s, SurfaceCandidate(n + 1, g, p))
            if g > 1:
                assert embedding_obstructed(m, s, SurfaceCandidate(n, g - 1, p))
            assert embedding_obstructed(m, s, SurfaceCandidate(n, g, p - 1))
    for bad in (SurfaceCandidate(0, 0, 0), SurfaceCandidate(-1, 2, 0)):
        try:
            embedding_obstructed(m, s, bad)
        except InapplicableError:
            pass
        else:
            raise AssertionError(f"candidate {bad} was not rejected")
    _pass(9, "adjunction worked examples + 1000-case monotonicity fuzz")


def _expression_corpus(tmp_dir):
    descriptor = descriptor_of(surface_product(3, 3), label="corpus")
    path = Path(tmp_dir) / "sp33.json"
    path.write_text(json.dumps(descriptor))
    corpus = [
        "K3",
        "K3 # K3",
        "2*K3",
        "3*K3",
        "K3 # K3 # K3 # K3",
        "SP(1,1)",
        "SP(3,3)",
        "SP(7,7)",
        "SP(1,3) # SP(3,1)",
        "2*SP(3,3)",
        "2*SP(3,3) # 40*~CP2",
        "2*SP(1,1) # 5*~CP2 # 2*S1xS3",
        "K3 # SP(3,3)",
        "K3 # SP(5,1) # K3",
        "S4",
        "S4 # S4",
        "S1xS3",
        "4*S1xS3",
        "CP2",
        "~CP2",
        "CP2 # ~CP2",
        "9*~CP2",
        "K3 # 2*S1xS3",
        "SP(3,3) # S4",
        "SP(5,5) # SP(1,1)",
        "50*~CP2",
        "K3 # ~CP2 # S1xS3",
        "2*SP(2,2)",
        f"@{path}",
        f"K3 # @{path}",
    ]
    assert len(corpus) == 30
    return corpus


def test_criterion_10_cli_contract():
    with tempfile.TemporaryDirectory() as tmp_dir:
        corpus = _expression_corpus(tmp_dir)
        for text in corpus:
            expr = parse(text)
            assert parse(str(expr)) == expr, f"round-trip failed for {text!r}"
            code, out, _ = _run_cli("analyze", text, "--json")
            assert code == 0, f"analyze failed for {text!r}"
            report = json.loads(out)
            jsonschema.validate(report, REPORT_SCHEMA)
    code, _, _ = _run_cli("analyze", "K3 # K3")
    assert code == 0
    code, _, _ = _run_cli("analyze", "K3 #")
    assert code == 1
    code, _, _ = _run_cli("einstein", "2*SP(3,3)", "--n2", "CP2")
    assert code == 2
    _pass(10, "30-expression round-trip, schema validation, exit-code contract")


_CRITERIA = [
    test_criterion_1_k3_pipeline,
    test_criterion_2_odd_genus_grid,
    test_criterion_3_connected_sum_stability,
    test_criterion_4_moduli_dimension,
    test_criterion_5_bordism_verdicts,
    test_criterion_6_example_reproduction,
    test_criterion_7_yamabe_values,
    test_criterion_8_lattice_property_suite,
    test_criterion_9_adjunction_oracle,
    test_criterion_10_cli_contract,
]


if __name__ == "__main__":
    failures = 0
    for idx, criterion in enumerate(_CRITERIA, start=1):
        try:
            criterion()
        except Exception as exc:  # noqa: BLE001 - report and continue
            failures += 1
            print(f"ACCEPTANCE {idx}: FAIL -- {exc}")
    raise SystemExit(1 if failures else 0)
