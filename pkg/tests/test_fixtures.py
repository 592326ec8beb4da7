from __future__ import annotations

import numpy as np
import pytest

from soundshape.embedstore import Modality, validate_set
from soundshape.fixtures import FixtureSpec, synth_fixture
from soundshape.phonology import ShapeClass


def test_spec_validation():
    with pytest.raises(ValueError):
        FixtureSpec(dim=1)
    with pytest.raises(ValueError):
        FixtureSpec(items_per_class=0)
    with pytest.raises(ValueError):
        FixtureSpec(delta=-0.1)


def test_shapes_and_metadata():
    image_set, audio_set = synth_fixture(FixtureSpec(dim=5, items_per_class=3))
    for es, modality, prefix in (
        (image_set, Modality.IMAGE, "img"),
        (audio_set, Modality.AUDIO, "aud"),
    ):
        assert es.modality is modality
        assert es.dim == 5
        assert es.matrix.shape == (6, 5)
        assert es.matrix.dtype == np.float32
        assert [i.shape_class for i in es.items] == [ShapeClass.ROUND] * 3 + [ShapeClass.SHARP] * 3
        assert all(i.id.startswith(prefix) for i in es.items)
        assert validate_set(es) == []


def test_deterministic_given_seed():
    spec = FixtureSpec(dim=6, items_per_class=4, delta=0.7, sigma=0.3, seed=99)
    a_img, a_aud = synth_fixture(spec)
    b_img, b_aud = synth_fixture(spec)
    assert np.array_equal(a_img.matrix, b_img.matrix)
    assert np.array_equal(a_aud.matrix, b_aud.matrix)
    assert a_img.items == b_img.items

    c_img, _ = synth_fixture(FixtureSpec(dim=6, items_per_class=4, delta=0.7, sigma=0.3, seed=100))
    assert not np.array_equal(a_img.matrix, c_img.matrix)


def test_sigma_zero_plants_exact_axis():
    image_set, audio_set = synth_fixture(FixtureSpec(dim=8, items_per_class=2, delta=2.0))
    # All round rows identical, all sharp rows their exact negation, and
    # both modalities share the same planted axis.
    round_rows = image_set.matrix[:2]
    sharp_rows = image_set.matrix[2:]
    assert np.array_equal(round_rows[0], round_rows[1])
    assert np.array_equal(sharp_rows[0], -round_rows[0])
    assert np.array_equal(audio_set.matrix, image_set.matrix)
    assert np.linalg.norm(round_rows[0].astype(np.float64)) == pytest.approx(2.0, rel=1e-6)
