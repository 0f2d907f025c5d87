import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from futuretube import io
from futuretube.group import random_group_element

from conftest import counts, dims, seeds

finite = st.floats(allow_nan=False, allow_infinity=False)


@given(seeds, dims, counts)
def test_config_point_round_trip_is_bit_identical(seed, n, N):
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((1 + n, N)) * 10.0 ** rng.integers(-300, 300, (1 + n, N))
         + 1j * rng.standard_normal((1 + n, N)))
    text = io.dumps(io.config_point_to_json(z))
    back = io.read_config_point(json.loads(text))
    assert np.array_equal(back.view(np.uint8), z.view(np.uint8))
    assert io.dumps(io.config_point_to_json(back)) == text


@given(finite)
def test_float_format_round_trips(x):
    s = io.format_float(x)
    y = json.loads(s)
    assert isinstance(y, float)
    assert np.float64(y).tobytes() == np.float64(x).tobytes()


def test_special_floats():
    assert io.format_float(1.0) == "1.0"
    assert io.format_float(-0.0) == "-0.0"
    assert io.format_float(float("inf")) == "null"
    assert io.dumps({"a": [1, 2.5], "b": True, "c": None}, indent=None) == '{"a":[1,2.5],"b":true,"c":null}'


def test_missing_field_is_named():
    with pytest.raises(io.FormatError) as err:
        io.read_config_point({"n": 1, "N": 1, "re": [[0], [0]]})
    assert err.value.field == "im" and "'im'" in str(err.value)


@pytest.mark.parametrize("doc,field", [
    ({"n": 1, "N": 0, "re": [], "im": []}, "N"),
    ({"n": 0, "N": 1, "re": [[0]], "im": [[0]]}, "n"),
    ({"n": 1, "N": 1, "re": [[0, 1], [0, 1]], "im": [[0], [0]]}, "re"),
    ({"n": 1, "N": 1, "re": [[0], ["x"]], "im": [[0], [0]]}, "re"),
    ({"n": 1, "N": 1, "re": [[0], [0]], "im": [[1e400], [0]]}, "im"),
    ({"n": 1.5, "N": 1, "re": [[0], [0]], "im": [[0], [0]]}, "n"),
])
def test_malformed_points(doc, field):
    with pytest.raises(io.FormatError) as err:
        io.read_config_point(doc)
    assert err.value.field == field


def test_group_round_trip():
    g = random_group_element(3, 0.5, "complex", 2)
    back = io.read_group(json.loads(io.dumps(io.group_to_json(g))))
    assert np.array_equal(back.matrix, g.matrix)
    assert back.classification == g.classification


def test_vector_defaults_imaginary_part_to_zero():
    v = io.read_vector({"n": 2, "re": [1, 2, 3]})
    assert np.array_equal(v, [1, 2, 3]) and v.dtype == complex


def test_invalid_json_document(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(io.FormatError):
        io.load_json(str(p))
