import json

import numpy as np
import pytest

from welchkit.errors import FrameValidationError
from welchkit.models import FieldTag
from welchkit.services.frames import (
    FrameStorage,
    builtin,
    frame_from_document,
    frame_to_document,
    load_frame,
    save_frame,
)


def test_save_and_load_complex_frame(tmp_path, sic):
    """Test a complex frame survives the file format bit for bit."""
    path = tmp_path / "sic.json"
    save_frame(sic, path)
    loaded = load_frame(path)

    # Verify results
    assert loaded.field is FieldTag.COMPLEX
    assert np.array_equal(loaded.vectors, sic.vectors)
    assert np.array_equal(loaded.weights, sic.weights)
    assert loaded.measure.atomic
    assert path.read_text().endswith("\n")


def test_real_frames_use_bare_reals(circle):
    """Test real frames are written without imaginary parts."""
    document = frame_to_document(circle)
    assert document["field"] == "R"
    assert document["atomic"] is False
    assert all(isinstance(x, float) for x in document["nodes"][1]["vector"])

    again = frame_from_document(document)
    assert np.array_equal(again.vectors, circle.vectors)
    assert not again.measure.atomic


def test_real_file_accepts_pairs_with_zero_imaginary_part():
    """Test [re, 0] pairs are accepted in real files."""
    frame = frame_from_document({"field": "R", "dim": 2, "nodes": [
        {"weight": 1.0, "vector": [[1.0, 0.0], [0.0, 0.0]]},
        {"weight": 2.0, "vector": [0.0, 1.0]},
    ]})
    assert frame.size == 2
    assert frame.weights.tolist() == [1.0, 2.0]


@pytest.mark.parametrize("document", [
    {"field": "R", "dim": 2, "nodes": [{"weight": -1.0, "vector": [1.0, 0.0]}]},
    {"field": "R", "dim": 2, "nodes": [{"weight": 0.0, "vector": [1.0, 0.0]}]},
    {"field": "R", "dim": 2, "nodes": [{"weight": 1.0, "vector": [1.0]}]},
    {"field": "R", "dim": 2, "nodes": []},
    {"field": "Q", "dim": 2, "nodes": [{"weight": 1.0, "vector": [1.0, 0.0]}]},
    {"field": "C", "dim": 2, "nodes": [{"weight": 1.0, "vector": [1.0, 0.0]}]},
    {"field": "C", "dim": 1, "nodes": [{"weight": 1.0, "vector": [[1.0, 0.0, 2.0]]}]},
    {"field": "R", "dim": 1, "nodes": [{"weight": 1.0, "vector": [[1.0, 0.5]]}]},
    {"field": "R", "dim": 1, "nodes": [{"weight": 1.0, "vector": [1.0], "label": "x"}]},
])
def test_invalid_documents(document):
    """Test malformed frame documents raise FrameValidationError."""
    with pytest.raises(FrameValidationError):
        frame_from_document(document)


def test_non_finite_values_are_rejected(tmp_path):
    """Test NaN and Infinity tokens fail validation."""
    path = tmp_path / "nan.json"
    path.write_text('{"field": "R", "dim": 1, "nodes": [{"weight": 1.0, "vector": [NaN]}]}')
    with pytest.raises(FrameValidationError):
        load_frame(path)

    path.write_text('{"field": "R", "dim": 1, "nodes": [{"weight": Infinity, "vector": [1.0]}]}')
    with pytest.raises(FrameValidationError):
        load_frame(path)


def test_unreadable_files(tmp_path):
    """Test missing files, broken JSON and non-object documents."""
    with pytest.raises(FrameValidationError):
        load_frame(tmp_path / "missing.json")

    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    with pytest.raises(FrameValidationError):
        load_frame(broken)

    listed = tmp_path / "list.json"
    listed.write_text("[1, 2]")
    with pytest.raises(FrameValidationError):
        load_frame(listed)


def test_storage_indent(tmp_path):
    """Test the storage service honors its indent setting."""
    path = tmp_path / "onb.json"
    FrameStorage(indent=4).save_frame(builtin("onb", d=2), path)
    document = json.loads(path.read_text())
    assert document["dim"] == 2
    assert '\n    "field"' in path.read_text()
