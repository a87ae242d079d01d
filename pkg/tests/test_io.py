import json

import pytest
from hypothesis import given, strategies as st

from seprect.generate import generate_circles, generate_points
from seprect.geometry import Point, Rect
from seprect.io import InstanceFile, InstanceFormatError, parse_instance, render_instance, result_dict
from seprect.render import render_svg, staircase_paths

finite = st.floats(allow_nan=False, allow_infinity=False, width=64)
pts = st.lists(st.builds(Point, finite, finite), min_size=1, max_size=6)


@given(pts, st.one_of(st.none(), st.lists(st.builds(Point, finite, finite), max_size=6).map(tuple)),
       st.one_of(st.none(), st.integers(0, 20)))
def test_round_trip_is_exact(red, blue, k):
    inst = InstanceFile(tuple(red), blue, None, k, Rect(-1.5, -2.0, 3.25, 4.0))
    assert parse_instance(render_instance(inst)) == inst


def test_round_trip_circles():
    inst = generate_circles(3, 4, seed=1)
    assert parse_instance(render_instance(inst)) == inst


def test_render_is_one_point_per_line():
    text = render_instance(InstanceFile((Point(0.1, 2.0), Point(3.0, 4.5)), (), None, 0, None))
    assert text.splitlines()[1:4] == ['  "red": [', "    [0.1, 2.0],", "    [3.0, 4.5]"]
    assert json.loads(text)["blue_points"] == []


@pytest.mark.parametrize("text, fragment", [
    ('{"red": [[0, 0]],', "line 1"),
    ('{"red": [[0, NaN]]}', "non-finite"),
    ('{"red": [[0, Infinity]]}', "non-finite"),
    ('{"red": []}', "at least one"),
    ('{"blue_points": []}', "missing 'red'"),
    ('{"red": [[0, 0]], "colour": 1}', "unknown keys"),
    ('{"red": [[0, 0]], "blue_points": [], "blue_circles": []}', "either"),
    ('{"red": [[0, 0]], "k": -1}', "'k'"),
    ('{"red": [[0, 0]], "k": true}', "'k'"),
    ('{"red": [[0, "1"]]}', "must be a number"),
    ('{"red": [[0, 0, 0]]}', "pair"),
    ('{"red": [[0, 0]], "frame": [1, 1, 0, 0]}', "inverted"),
    ('[1, 2]', "JSON object"),
])
def test_malformed_input(text, fragment):
    with pytest.raises(InstanceFormatError) as err:
        parse_instance(text)
    assert fragment in str(err.value)


def test_syntax_error_has_position():
    with pytest.raises(InstanceFormatError) as err:
        parse_instance('{\n  "red": [[0, 0]\n}')
    assert (err.value.line, err.value.column) == (3, 1)


def test_result_dict_is_json_ready():
    d = result_dict(Rect(0, 0, 2, 3), 1, "baseline_k7", 5)
    assert json.loads(json.dumps(d)) == {"rect": [0.0, 0.0, 2.0, 3.0], "area": 6.0,
                                        "outliers_used": 1, "algorithm": "baseline_k7", "elapsed_ns": 5}


def test_svg_is_deterministic_and_flips_y():
    inst = generate_points(4, 12, 1, seed=3)
    a = render_svg(inst, Rect(10, 10, 90, 90), None, staircase_paths(inst, 1))
    b = render_svg(inst, Rect(10, 10, 90, 90), None, staircase_paths(inst, 1))
    assert a == b
    assert "scale(" in a and ",-" in a.split("scale(")[1].split(")")[0]
    assert a.count('fill="#c1121f"') == 4
