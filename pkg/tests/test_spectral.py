"""Discriminant, SVD, spectrum prediction, brute-force verification."""

import dataclasses
import json

import numpy as np
import pytest

import hyperwalk as hw
from conftest import battery, random_instances, single_edge, six_by_four, triangle


def pipeline(hg):
    ts = hw.build_transitions(hg)
    ps = hw.build_pair_space(hg)
    iso = hw.build_isometries(hg, ts, ps)
    return ts, ps, iso, hw.build_walk(iso)


def random_isometries(rng, size, n, m):
    """Synthetic isometry pair from QR factors; generically all angles interior."""
    a = np.linalg.qr(rng.standard_normal((size, n)))[0]
    b = np.linalg.qr(rng.standard_normal((size, m)))[0]
    return hw.IsometryPair(a, b, None)


def test_discriminant_single_edge():
    ts, _, _, _ = pipeline(single_edge())
    disc = hw.discriminant(ts)
    np.testing.assert_allclose(disc.matrix, np.full((3, 1), 1 / np.sqrt(3)), atol=1e-15)


def test_discriminant_triangle_is_half_incidence():
    ts, _, _, _ = pipeline(triangle())
    disc = hw.discriminant(ts)
    np.testing.assert_allclose(disc.matrix, triangle().incidence / 2.0, atol=1e-15)


def test_discriminant_regular_uniform_scaling():
    for hg in random_instances(6, seed=41):
        profile = hw.degree_profile(hg)
        ts, _, _, _ = pipeline(hg)
        expected = hg.incidence / np.sqrt(profile.d * profile.k)
        assert np.abs(hw.discriminant(ts).matrix - expected).max() <= 1e-15


def test_discriminant_support_matches_incidence():
    for hg in battery():
        ts, _, _, _ = pipeline(hg)
        np.testing.assert_array_equal(hw.discriminant(ts).matrix > 0, hg.incidence > 0)


def test_triangle_singular_values_against_gram_oracle():
    ts, _, _, _ = pipeline(triangle())
    svd = hw.full_svd(hw.discriminant(ts))
    h = triangle().incidence
    oracle = np.sqrt(np.sort(np.linalg.eigvalsh(h @ h.T))[::-1]) / 2.0
    np.testing.assert_allclose(svd.singular_values, oracle, atol=1e-12)
    np.testing.assert_allclose(svd.singular_values, [1.0, 0.5, 0.5], atol=1e-12)


def test_full_svd_reconstructs_and_is_orthogonal():
    for hg in battery():
        ts, _, _, _ = pipeline(hg)
        disc = hw.discriminant(ts)
        svd = hw.full_svd(disc)
        n, m = disc.matrix.shape
        r = min(n, m)
        rebuilt = (svd.left_vectors[:, :r] * svd.singular_values) @ svd.right_vectors[:, :r].T
        assert np.abs(rebuilt - disc.matrix).max() <= 1e-10
        assert np.abs(svd.left_vectors.T @ svd.left_vectors - np.eye(n)).max() <= 1e-12
        assert np.abs(svd.right_vectors.T @ svd.right_vectors - np.eye(m)).max() <= 1e-12


def test_singular_triples_satisfy_defining_relations():
    for hg in battery():
        ts, _, _, _ = pipeline(hg)
        disc = hw.discriminant(ts)
        svd = hw.full_svd(disc)
        for idx, s in enumerate(svd.singular_values):
            mu = svd.left_vectors[:, idx]
            nu = svd.right_vectors[:, idx]
            assert np.abs(disc.matrix @ nu - s * mu).max() <= 1e-10
            assert np.abs(mu @ disc.matrix - s * nu).max() <= 1e-10


def test_single_edge_svd_shape():
    ts, _, _, _ = pipeline(single_edge())
    svd = hw.full_svd(hw.discriminant(ts))
    assert svd.singular_values.shape == (1,)
    np.testing.assert_allclose(svd.singular_values, [1.0], atol=1e-12)
    np.testing.assert_allclose(np.abs(svd.left_vectors[:, 0]), np.full(3, 1 / np.sqrt(3)), atol=1e-12)
    assert svd.left_vectors.shape == (3, 3)


def test_singular_values_bounded_and_top_is_one():
    for hg in battery():
        ts, _, _, _ = pipeline(hg)
        sigma = hw.full_svd(hw.discriminant(ts)).singular_values
        assert sigma.min() >= -1e-10
        assert sigma.max() <= 1.0 + 1e-10
        profile = hw.degree_profile(hg)
        if profile.is_regular and profile.is_uniform and hw.is_connected(hg):
            assert abs(sigma.max() - 1.0) <= 1e-10


def test_classification_tags():
    tags = hw.classify_singular_values(np.array([1.0, 0.5, 1e-12, 1.0 - 1e-12]), tol=1e-9)
    assert tags == ("unit", "interior", "null", "unit")


def test_classification_rejects_bad_tolerance():
    with pytest.raises(hw.InvalidToleranceError):
        hw.classify_singular_values(np.array([0.5]), tol=0.5)
    with pytest.raises(hw.InvalidToleranceError):
        hw.classify_singular_values(np.array([0.5]), tol=0.0)


def test_predicted_multiset_single_edge():
    _, _, iso, walk = pipeline(single_edge())
    pred = hw.predict_spectrum(hw.full_svd(hw.discriminant(hw.build_transitions(single_edge()))), iso)
    values = sorted(pred.eigenvalues.real.round(12).tolist())
    assert values == [-1.0, -1.0, 1.0]
    actual = hw.brute_force_spectrum(walk)
    assert hw.verify(pred, actual).passed


def test_predicted_multiset_triangle():
    ts, _, iso, walk = pipeline(triangle())
    pred = hw.predict_spectrum(hw.full_svd(hw.discriminant(ts)), iso)
    counts = {}
    for z in pred.eigenvalues:
        key = (round(z.real, 9), round(z.imag, 9))
        counts[key] = counts.get(key, 0) + 1
    third = np.exp(2j * np.pi / 3)
    assert counts[(1.0, 0.0)] == 2
    assert counts[(round(third.real, 9), round(third.imag, 9))] == 2
    assert counts[(round(third.real, 9), -round(third.imag, 9))] == 2
    verdict = hw.verify(pred, hw.brute_force_spectrum(walk))
    assert verdict.passed and verdict.max_pairing_distance < 1e-10


def test_predicted_multiplicities_sum_to_dimension():
    for hg in battery():
        ts, ps, iso, _ = pipeline(hg)
        pred = hw.predict_spectrum(hw.full_svd(hw.discriminant(ts)), iso, with_vectors=False)
        assert pred.eigenvalues.size == ps.size


def test_predicted_vectors_are_unit_norm():
    for hg in [triangle(), six_by_four()] + random_instances(5, seed=42):
        ts, _, iso, _ = pipeline(hg)
        pred = hw.predict_spectrum(hw.full_svd(hw.discriminant(ts)), iso)
        norms = np.linalg.norm(pred.eigenvectors, axis=0)
        assert np.abs(norms - 1.0).max() <= 1e-12


def test_invariant_subspace_relations():
    # W(A mu) = 2 sigma (B nu) - A mu;  W(B nu) = (4 sigma^2 - 1)(B nu) - 2 sigma (A mu)
    for hg in [triangle(), six_by_four()] + random_instances(6, seed=43):
        ts, _, iso, _ = pipeline(hg)
        svd = hw.full_svd(hw.discriminant(ts))
        a_mu = iso.vertex_isometry @ svd.left_vectors
        b_nu = iso.edge_isometry @ svd.right_vectors
        r = svd.singular_values.size
        w_a = hw.walk_action(iso, a_mu[:, :r])
        w_b = hw.walk_action(iso, b_nu[:, :r])
        for idx, s in enumerate(svd.singular_values):
            lhs = w_a[:, idx]
            rhs = 2 * s * b_nu[:, idx] - a_mu[:, idx]
            assert np.abs(lhs - rhs).max() <= 1e-10
            lhs = w_b[:, idx]
            rhs = (4 * s**2 - 1) * b_nu[:, idx] - 2 * s * a_mu[:, idx]
            assert np.abs(lhs - rhs).max() <= 1e-10


def test_principal_angle_relation():
    for hg in [triangle(), six_by_four()] + random_instances(5, seed=44):
        ts, _, iso, _ = pipeline(hg)
        svd = hw.full_svd(hw.discriminant(ts))
        a_mu = iso.vertex_isometry @ svd.left_vectors
        b_nu = iso.edge_isometry @ svd.right_vectors
        for idx, s in enumerate(svd.singular_values):
            overlap = float(a_mu[:, idx] @ b_nu[:, idx])
            assert abs(overlap - s) <= 1e-12


def test_brute_force_spectrum_pins():
    _, _, _, walk = pipeline(single_edge())
    values = np.sort(hw.brute_force_spectrum(walk).eigenvalues.real)
    np.testing.assert_allclose(values, [-1.0, -1.0, 1.0], atol=1e-12)
    _, _, _, walk = pipeline(triangle())
    spectrum = hw.brute_force_spectrum(walk)
    assert np.abs(np.abs(spectrum.eigenvalues) - 1.0).max() <= 1e-9
    ones = np.sum(np.abs(spectrum.eigenvalues - 1.0) < 1e-9)
    assert ones == 2


def test_brute_force_requires_dense():
    ts = hw.build_transitions(triangle())
    ps = hw.build_pair_space(triangle())
    iso = hw.build_isometries(triangle(), ts, ps)
    walk = hw.build_walk(iso, materialize=False)
    with pytest.raises(hw.DimensionTooLargeError):
        hw.brute_force_spectrum(walk)


def test_corrupted_prediction_fails_with_distance_two():
    ts, _, iso, walk = pipeline(single_edge())
    pred = hw.predict_spectrum(hw.full_svd(hw.discriminant(ts)), iso)
    corrupted_values = pred.eigenvalues.copy()
    plus_one = int(np.argmax(corrupted_values.real))
    corrupted_values[plus_one] = -1.0 + 0.0j
    corrupted = dataclasses.replace(pred, eigenvalues=corrupted_values)
    verdict = hw.verify(corrupted, hw.brute_force_spectrum(walk))
    assert not verdict.passed
    assert verdict.max_pairing_distance == pytest.approx(2.0, abs=1e-8)


def test_pairing_count_mismatch():
    with pytest.raises(hw.CountMismatchError):
        hw.pairing_distance(np.ones(3, dtype=complex), np.ones(2, dtype=complex))


def test_generic_counts_with_synthetic_isometries():
    # Random subspaces have no unit or null principal angles, so the generic
    # count rule is exactly: 2m conjugate pairs, n-m at -1, N-(n+m) at +1.
    rng = np.random.default_rng(77)
    size, n, m = 24, 7, 4
    iso = random_isometries(rng, size, n, m)
    disc = hw.Discriminant(iso.vertex_isometry.T @ iso.edge_isometry)
    svd = hw.full_svd(disc)
    pred = hw.predict_spectrum(svd, iso)
    assert set(pred.classification) == {"interior"}
    complex_count = int(np.sum(np.abs(pred.eigenvalues.imag) > 1e-9))
    minus = int(np.sum(np.abs(pred.eigenvalues + 1.0) < 1e-9))
    plus = int(np.sum(np.abs(pred.eigenvalues - 1.0) < 1e-9))
    assert (complex_count, minus, plus) == (2 * m, n - m, size - (n + m))
    eye = np.eye(size)
    reflect_v = 2 * (iso.vertex_isometry @ iso.vertex_isometry.T) - eye
    reflect_e = 2 * (iso.edge_isometry @ iso.edge_isometry.T) - eye
    oracle = np.linalg.eigvals(reflect_e @ reflect_v)
    assert hw.pairing_distance(pred.eigenvalues, oracle) <= 1e-8
    assert pred.max_residual <= 1e-8


def test_generic_counts_synthetic_wide_case():
    # More hyperedges than vertices: the unpaired -1 block sits on the edge side.
    rng = np.random.default_rng(78)
    size, n, m = 20, 4, 6
    iso = random_isometries(rng, size, n, m)
    disc = hw.Discriminant(iso.vertex_isometry.T @ iso.edge_isometry)
    pred = hw.predict_spectrum(hw.full_svd(disc), iso)
    minus = int(np.sum(np.abs(pred.eigenvalues + 1.0) < 1e-9))
    plus = int(np.sum(np.abs(pred.eigenvalues - 1.0) < 1e-9))
    assert (minus, plus) == (m - n, size - (n + m))
    eye = np.eye(size)
    reflect_v = 2 * (iso.vertex_isometry @ iso.vertex_isometry.T) - eye
    reflect_e = 2 * (iso.edge_isometry @ iso.edge_isometry.T) - eye
    oracle = np.linalg.eigvals(reflect_e @ reflect_v)
    assert hw.pairing_distance(pred.eigenvalues, oracle) <= 1e-8
    assert pred.max_residual <= 1e-8


def test_analyze_passes_on_random_instances():
    for hg in random_instances(10, seed=45):
        report = hw.analyze(hg)
        assert report.verdict == "pass"
        assert report.max_pairing_distance <= 1e-8
        assert report.max_residual <= 1e-8


def test_analyze_wide_instance():
    hg = hw.random_regular_uniform(4, 8, 2, 4, seed=46)
    report = hw.analyze(hg)
    assert report.n < report.m
    assert report.verdict == "pass"


def test_analyze_null_singular_value_instance():
    # Two identical hyperedges make the discriminant rank-deficient, so one
    # singular value is null and contributes two -1 eigenvalues.
    hg = hw.from_edge_lists(2, [{0, 1}, {0, 1}])
    report = hw.analyze(hg)
    assert report.verdict == "pass"
    assert "null" in report.classification and "unit" in report.classification
    minus = int(np.sum(np.abs(report.predicted + 1.0) < 1e-9))
    plus = int(np.sum(np.abs(report.predicted - 1.0) < 1e-9))
    assert (plus, minus) == (2, 2) and report.size == 4
    assert any("null" in note for note in report.deviations)


def test_report_json_schema():
    report = hw.analyze(six_by_four())
    doc = json.loads(report.to_json())
    for key in (
        "n", "m", "k", "d", "N", "singular_values", "classification",
        "predicted", "actual", "max_pairing_distance", "max_residual",
        "deviations", "verdict",
    ):
        assert key in doc
    assert doc["verdict"] == "pass"
    assert sum(entry["multiplicity"] for entry in doc["predicted"]) == doc["N"]
    assert len(doc["actual"]) == doc["N"]
    assert doc["N"] == 12 and doc["k"] == 3 and doc["d"] == 2
    assert any("unpaired" in note for note in doc["deviations"])


def test_analyze_unverified_above_cap(monkeypatch):
    monkeypatch.setenv(hw.DENSE_CAP_ENV, "4")
    report = hw.analyze(triangle())
    assert report.verdict == "unverified"
    assert report.actual is None
    assert report.max_pairing_distance is None
    assert report.predicted.size == 6


def test_analyze_rejects_bad_tolerances():
    with pytest.raises(hw.InvalidToleranceError):
        hw.analyze(triangle(), classify_tol=1.0)
    with pytest.raises(hw.InvalidToleranceError):
        hw.analyze(triangle(), verify_tol=0.0)
