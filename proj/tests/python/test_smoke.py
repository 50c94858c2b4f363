"""Smoke tests for the compiled python module."""

import math

import numpy as np
import pytest

import imbcluster as ic


def test_version():
    assert ic.__version__


def test_assign_and_losses():
    points = np.array([[0.0], [1.0], [3.0], [10.0]])
    centers = np.array([[1.0], [10.0]])
    labels = ic.assign(points, centers)
    assert labels.tolist() == [0, 0, 0, 1]
    assert ic.fitting_loss(points, centers) == pytest.approx(0.75)
    assert ic.relaxed_loss(points, centers) == pytest.approx(0.75)
    w = np.ones(4)
    assert ic.weighted_relaxed_loss(points, w, centers) == pytest.approx(0.75)


def test_exhaustive_approx_fixture():
    points = np.array([[0.0], [1.0], [3.0], [10.0]])
    centers, indices, loss = ic.exhaustive_approx(points, 2)
    assert list(indices) == [1, 3]
    assert loss == pytest.approx(0.75)
    assert centers.shape == (2, 1)


def test_kmeanspp_seeding_is_deterministic():
    pts, _ = ic.make_preset("fig2", n=200, seed=3)
    a = ic.dsquared_seed(pts, 2, seed=7)
    b = ic.dsquared_seed(pts, 2, seed=7)
    assert np.array_equal(a, b)
    refined = ic.lloyd_refine(pts, a, iters=5)
    assert refined.shape == (2, 2)


def test_coreset_weight_conservation():
    pts, _ = ic.make_preset("fig2", n=2000, seed=1)
    cpts, weights, center_count = ic.build_coreset(pts, k=2, seed=5)
    assert center_count == 2
    assert cpts.shape[0] == 2 + 128
    assert math.isclose(weights.sum(), pts.shape[0], abs_tol=1e-9)


def test_approx_on_coreset_and_silhouette():
    pts, truth = ic.make_preset("fig1", seed=11)
    centers = ic.approx_on_coreset(pts, 2, objective="fitting", seed=11)
    labels = ic.assign(pts, centers)
    score = ic.silhouette(pts, labels, sample_size=1024, seed=1)
    assert -1.0 <= score <= 1.0
    assert ic.v_measure(truth, truth) == pytest.approx(1.0)


def test_divisive_labels_partition():
    pts, _ = ic.make_preset("appendixG2", n=1, seed=2)
    labels = ic.divisive_labels(pts, depth=3, seed=4)
    assert labels.shape[0] == pts.shape[0]
    assert 2 <= len(set(labels.tolist())) <= 8
    assert ic.variance_loss(pts, labels) > 0.0


def test_quantize_two_color_identity():
    img = np.zeros((16, 16, 3), dtype=np.uint8)
    img[:, 8:, 0] = 200
    img[:, :8, 2] = 150
    out = ic.quantize_image(img, method="flat", k=2, seed=0)
    assert out.shape == img.shape
    assert np.array_equal(out, img)


def test_bicriteria_returns_data_points():
    pts, _ = ic.make_preset("fig2", n=400, seed=9)
    centers = ic.bicriteria(pts, k=2, seed=3)
    rows = {tuple(r) for r in pts.tolist()}
    for c in centers.tolist():
        assert tuple(c) in rows
