"""Smoke tests for the python module: end-to-end sanity on the named matrices."""

import math
import os
import subprocess

import numpy as np
import pytest

import hgs


def ex11A():
    return np.array([[2, 1, 1], [-1, 2, 1], [-1, -1, 2]], dtype=np.complex128)


def test_split_reassembles():
    a = ex11A()
    d, lo, up, diag_ok = hgs.split(a)
    assert diag_ok
    assert np.array_equal(d - lo - up, a)


def test_analyze_matches_the_known_radii():
    rep = hgs.analyze(ex11A())
    assert rep["classification"]["h_class"] == "mixed"
    assert rep["classification"]["dominance"] == "diagonally-equipotent"

    fgs = rep["methods"]["fgs"]
    assert fgs["verdict"]["status"] == "diverges"
    assert abs(fgs["rho"] - 1.0) < 1e-8
    assert fgs["agree"]

    bgs = rep["methods"]["bgs"]
    assert bgs["verdict"]["status"] == "converges"
    assert abs(bgs["rho"] - 0.3536) < 5e-4

    sgs = rep["methods"]["sgs"]
    assert abs(sgs["rho"] - 0.5797) < 5e-4


def test_spectral_radius_against_numpy():
    a = hgs.corpus_get("family61", 30)
    h = hgs.iteration_matrix(a, "sgs")
    ours = hgs.eigenvalues(h)["spectral_radius"]
    theirs = max(abs(np.linalg.eigvals(h)))
    assert ours == pytest.approx(theirs, abs=1e-10)


def test_ray_round_trip():
    a = hgs.construct_ray("psi", 6, 2.1, moduli_seed=3, phase_seed=4)
    v = hgs.ray_test(a, "psi")
    assert v["member"]
    assert v["angle"] == pytest.approx(2.1, abs=1e-9)
    assert not hgs.ray_test(a, "zero")["member"]


def test_preconditioner_restores_invertibility():
    a = hgs.corpus_get("ex62")
    rep = hgs.verify_preconditioned(a, strategy="schur-alpha", alpha=[2, 3])
    assert rep["h_class"] == "invertible"
    for m in ("fgs", "bgs", "sgs"):
        assert rep["bounds"][m]["rho"] == pytest.approx(0.6, abs=5e-4)
    assert rep["all_bounds_hold"]


def test_solve_and_market_round_trip(tmp_path):
    a = hgs.corpus_get("ex12A")
    b = np.ones(3, dtype=np.complex128)
    res = hgs.solve(a, list(b), method="sgs")
    assert res["status"] == "converged"
    x = np.array(res["x"])
    assert np.linalg.norm(a @ x - b, np.inf) < 1e-8

    path = str(tmp_path / "m.mtx")
    hgs.write_matrix(a, path)
    assert np.array_equal(hgs.read_matrix(path), a)


def test_classifiers():
    assert hgs.classify(np.eye(3, dtype=np.complex128))["h_class"] == "invertible"
    assert not hgs.is_irreducible(np.diag([1.0 + 0j, 2.0]))
    blocks = hgs.frobenius_blocks(hgs.corpus_get("ex62"))
    assert blocks == [[0, 1, 2], [3, 4, 5]]


def test_random_class_generator():
    a = hgs.random_in_class("gde", 5, seed=11)
    assert hgs.classify(a)["gd_equipotent"]


@pytest.mark.skipif("HGS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_end_to_end(tmp_path):
    cli = os.environ["HGS_CLI"]
    mtx = str(tmp_path / "a.mtx")
    out = subprocess.run([cli, "gen", "ex11A", "--out", mtx], capture_output=True, text=True)
    assert out.returncode == 0
    res = subprocess.run([cli, "analyze", mtx, "--json"], capture_output=True, text=True)
    assert res.returncode == 0
    assert '"agreement": true' in res.stdout
