import json
from fractions import Fraction

import pytest

from modulicones.cones import Cone
from modulicones.curves import nem_hrep
from modulicones.porta import (
    PortaError,
    class_from_json,
    class_to_json,
    cone_from_json,
    cone_json_dumps,
    cone_to_json,
    latex_inequalities,
    latex_rays,
    matrix_to_json,
    porta_read,
    porta_write,
)
from modulicones.spaces import SpaceId


def test_hrep_write_read_write_is_identity():
    cone = Cone.from_hrep(3, [(1, 0, 0), (-1, 2, 0), (0, 0, 1)])
    text = porta_write(cone, "hrep")
    again = porta_write(porta_read(text), "hrep")
    assert text == again


def test_vrep_write_read_write_is_identity():
    cone = Cone.from_vrep(3, [(1, 0, 0), (1, 2, 0), (0, 0, 1)])
    text = porta_write(cone, "vrep")
    again = porta_write(porta_read(text), "vrep")
    assert text == again


def test_nem_hrep_porta_round_trip_bytes():
    cone = nem_hrep(SpaceId(7, 1))
    text = porta_write(cone, "hrep")
    assert text.startswith("DIM = 4\n")
    assert text.count(">= 0") == 9
    assert porta_write(porta_read(text), "hrep") == text


def test_porta_rejects_unknown_section():
    with pytest.raises(PortaError):
        porta_read("DIM = 2\n\nVALID\nEND\n")


def test_porta_rejects_missing_dim():
    with pytest.raises(PortaError):
        porta_read("INEQUALITIES_SECTION\n+x1 >= 0\nEND\n")


def test_cone_json_round_trip():
    cone = Cone.from_hrep(2, [(1, 0), (-1, 3)])
    cone.canonical_vrep()  # populate both representations
    obj = cone_to_json(cone)
    back = cone_from_json(json.loads(json.dumps(obj)))
    assert back.inequalities == cone.inequalities
    assert back.rays == cone.rays
    assert cone_json_dumps(back) == cone_json_dumps(cone)


def test_class_json_uses_rational_strings():
    obj = class_to_json(5, 2, ["b3", "b*2", "b*3"], [Fraction(-1, 3), 1, Fraction(5, 3)])
    assert obj["coords"] == ["-1/3", "1", "5/3"]
    n, m, basis, coords = class_from_json(obj)
    assert (n, m) == (5, 2)
    assert basis == ["b3", "b*2", "b*3"]
    assert coords == (Fraction(-1, 3), 1, Fraction(5, 3))


def test_class_json_length_mismatch():
    with pytest.raises(ValueError):
        class_to_json(5, 2, ["b3"], [1, 2])


def test_matrix_json_keeps_exact_entries():
    obj = matrix_to_json([[Fraction(1, 2), 0], [3, Fraction(-7, 5)]], "src", "dst")
    assert obj["matrix"] == [["1/2", "0"], ["3", "-7/5"]]
    assert obj["source"] == "src" and obj["target"] == "dst"


def test_latex_outputs_mention_every_row():
    cone = Cone.from_hrep(2, [(1, 0), (-1, 3)])
    tex = latex_inequalities(cone, "a")
    assert tex.count(r"\geq 0") == 2
    rays_tex = latex_rays(cone)
    assert rays_tex.count("(") == len(cone.rays)
