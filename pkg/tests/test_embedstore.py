from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from soundshape.embedstore import (
    MAGIC,
    EmbeddingItem,
    EmbeddingSet,
    FindingCode,
    Modality,
    filter_set,
    read_csv_set,
    read_set,
    validate_set,
    write_set,
)
from soundshape.errors import EmptyResultError, FormatViolation
from soundshape.phonology import ShapeClass


def small_set(n_round=2, n_sharp=1, dim=4, model_id="toy"):
    rng = np.random.default_rng(42)
    items = [
        EmbeddingItem(f"aud-{i:02d}", ShapeClass.ROUND, {"speaker": "a"})
        for i in range(n_round)
    ] + [
        EmbeddingItem(f"img-{i:02d}", ShapeClass.SHARP) for i in range(n_sharp)
    ]
    matrix = rng.normal(size=(n_round + n_sharp, dim)).astype(np.float32)
    return EmbeddingSet(model_id, Modality.AUDIO, dim, items, matrix)


def test_round_trip_identity(tmp_path):
    es = small_set()
    path = tmp_path / "set.embs"
    write_set(es, path)
    loaded = read_set(path)
    assert loaded.model_id == es.model_id
    assert loaded.modality is es.modality
    assert loaded.dim == es.dim
    assert loaded.items == es.items
    assert np.array_equal(loaded.matrix, es.matrix)


def test_round_trip_bytes(tmp_path):
    es = small_set(3, 2, 4)
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    p1 = tmp_path / "a" / "set.embs"
    p2 = tmp_path / "b" / "set.embs"
    write_set(es, p1)
    write_set(read_set(p1), p2)
    assert p1.read_bytes() == p2.read_bytes()
    assert (tmp_path / "a" / "set.embs.bin").read_bytes() == (
        tmp_path / "b" / "set.embs.bin"
    ).read_bytes()


def test_truncated_matrix_rejected(tmp_path):
    es = small_set()
    path = tmp_path / "set.embs"
    write_set(es, path)
    bin_path = tmp_path / "set.embs.bin"
    bin_path.write_bytes(bin_path.read_bytes()[:-4])
    with pytest.raises(FormatViolation, match="bytes"):
        read_set(path)


def test_bad_magic_rejected(tmp_path):
    es = small_set()
    path = tmp_path / "set.embs"
    write_set(es, path)
    bin_path = tmp_path / "set.embs.bin"
    blob = bin_path.read_bytes()
    bin_path.write_bytes(b"XXXX\x01" + blob[len(MAGIC):])
    with pytest.raises(FormatViolation, match="magic"):
        read_set(path)


def test_count_mismatch_rejected(tmp_path):
    import json

    es = small_set()
    path = tmp_path / "set.embs"
    write_set(es, path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    payload["count"] = 5
    payload["items"].append(payload["items"][0] | {"id": "extra"})
    path.write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(FormatViolation):
        read_set(path)


def test_write_refuses_invalid(tmp_path):
    es = small_set()
    es.matrix[0, 0] = np.nan
    with pytest.raises(FormatViolation, match="refusing"):
        write_set(es, tmp_path / "bad.embs")


def test_validate_clean():
    assert validate_set(small_set()) == []


def test_validate_nan_row():
    es = small_set(3, 1)
    es.matrix[2, 1] = np.inf
    findings = validate_set(es)
    assert [f.code for f in findings] == [FindingCode.NON_FINITE]
    assert findings[0].row == 2


def test_validate_zero_norm_row():
    es = small_set(2, 2)
    es.matrix[1] = 0.0
    findings = validate_set(es)
    assert [f.code for f in findings] == [FindingCode.ZERO_NORM]
    assert findings[0].row == 1


def test_validate_duplicate_id():
    es = small_set(2, 1)
    es.items[1] = EmbeddingItem(es.items[0].id, ShapeClass.ROUND, {"speaker": "a"})
    codes = [f.code for f in validate_set(es)]
    assert codes == [FindingCode.DUPLICATE_ID]


def test_validate_dim_mismatch():
    es = small_set()
    es.dim = 7
    codes = [f.code for f in validate_set(es)]
    assert FindingCode.DIM_MISMATCH in codes


def test_filter_by_class():
    es = small_set(5, 5)
    round_only = filter_set(es, shape_class=ShapeClass.ROUND)
    assert len(round_only) == 5
    assert all(i.shape_class is ShapeClass.ROUND for i in round_only.items)
    assert round_only.dim == es.dim


def test_filter_empty_raises():
    es = small_set(3, 0)
    with pytest.raises(EmptyResultError):
        filter_set(es, shape_class=ShapeClass.SHARP)


def test_filter_by_id_prefix():
    es = small_set(2, 2)
    audio_rows = filter_set(es, id_predicate=lambda s: s.startswith("aud-"))
    assert [i.id for i in audio_rows.items] == ["aud-00", "aud-01"]


def test_filter_partition():
    es = small_set(4, 3)
    round_part = filter_set(es, shape_class=ShapeClass.ROUND)
    sharp_part = filter_set(es, shape_class=ShapeClass.SHARP)
    assert len(round_part) + len(sharp_part) == len(es)
    ids = {i.id for i in round_part.items} | {i.id for i in sharp_part.items}
    assert ids == {i.id for i in es.items}


def test_csv_fixture_mode(tmp_path):
    path = tmp_path / "fixture.csv"
    path.write_text(
        "id,class,v0,v1\nr1,round,1.0,0.0\ns1,sharp,0.0,-2.5\n",
        encoding="utf-8",
    )
    es = read_csv_set(path, model_id="hand", modality=Modality.IMAGE)
    assert es.dim == 2
    assert [i.id for i in es.items] == ["r1", "s1"]
    assert es.matrix.dtype == np.float32
    assert es.matrix[1, 1] == np.float32(-2.5)


def test_csv_fixture_bad_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("foo,bar,v0\n", encoding="utf-8")
    with pytest.raises(FormatViolation):
        read_csv_set(path)


@st.composite
def embedding_sets(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    dim = draw(st.integers(min_value=1, max_value=8))
    classes = draw(
        st.lists(
            st.sampled_from([ShapeClass.ROUND, ShapeClass.SHARP]),
            min_size=n, max_size=n,
        )
    )
    metas = draw(
        st.lists(
            st.dictionaries(
                st.text("abc", min_size=1, max_size=3),
                st.text("xyz ", max_size=4),
                max_size=2,
            ),
            min_size=n, max_size=n,
        )
    )
    seed = draw(st.integers(min_value=0, max_value=2**31))
    rng = np.random.default_rng(seed)
    matrix = rng.normal(size=(n, dim)).astype(np.float32)
    items = [
        EmbeddingItem(f"it-{i:03d}", cls, meta)
        for i, (cls, meta) in enumerate(zip(classes, metas))
    ]
    return EmbeddingSet("hyp", Modality.TEXT, dim, items, matrix)


@settings(max_examples=40, deadline=None)
@given(embedding_sets())
def test_round_trip_bytes_property(tmp_path_factory, es):
    tmp = tmp_path_factory.mktemp("embs")
    (tmp / "a").mkdir()
    (tmp / "b").mkdir()
    p1 = tmp / "a" / "set.embs"
    p2 = tmp / "b" / "set.embs"
    write_set(es, p1)
    write_set(read_set(p1), p2)
    assert p1.read_bytes() == p2.read_bytes()
    assert (tmp / "a" / "set.embs.bin").read_bytes() == (
        tmp / "b" / "set.embs.bin"
    ).read_bytes()
