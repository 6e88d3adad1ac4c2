import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fssp.grid import (
    ConfigSyntaxError,
    ConfigValidityError,
    PathConfig,
    RegionConfig,
    boundary_condition,
    config_key,
    distance,
    iter_paths,
    load_configs,
    parse_config,
    path_from_cells,
    radius,
    render_ascii,
    serialize,
    transform,
    validate,
    validate_bruteforce,
)
from fssp.variations import line


def test_parse_line():
    C = parse_config("PATH WWW|EEE")
    assert (C.r, C.s) == (-3, 3)
    assert C.positions == tuple((x, 0) for x in range(-3, 4))
    assert C.p(-3) == (-3, 0)


def test_parse_singleton():
    C = parse_config("PATH .|.")
    assert C.cells == frozenset({(0, 0)})
    assert (C.r, C.s) == (0, 0)


def test_parse_turning_path():
    C = parse_config("PATH .|EENE")
    assert C.positions == ((0, 0), (1, 0), (2, 0), (2, 1), (3, 1))


def test_closed_loop_rejected():
    with pytest.raises(ConfigValidityError) as exc:
        parse_config("PATH .|ENWS")
    assert exc.value.violation.kind == "duplicate"
    assert exc.value.violation.indices == (0, 4)


def test_touching_rejected():
    with pytest.raises(ConfigValidityError) as exc:
        parse_config("PATH .|EENWW")
    assert exc.value.violation.kind == "touching"
    assert exc.value.violation.indices == (0, 5)


def test_u_shape_is_valid():
    C = parse_config("PATH .|EENNWW")
    assert C.p(6) == (0, 2)
    assert validate(C) is None


@pytest.mark.parametrize("text,column", [
    ("PATH WX|E", 6),
    ("LINE W|E", 0),
    ("PATH W", 6),  # missing separator at end of line
    ("REG (0,0),(0,0)", 4),
])
def test_syntax_errors_report_a_column(text, column):
    with pytest.raises(ConfigSyntaxError) as exc:
        parse_config(text)
    assert exc.value.column == column


def test_region_parsing_and_checks():
    R = parse_config("REG (0,0),(0,1),(1,0)")
    assert isinstance(R, RegionConfig)
    assert serialize(R) == "REG (0,0),(0,1),(1,0)"
    with pytest.raises(ConfigValidityError):
        parse_config("REG (0,0),(2,0)")  # disconnected
    with pytest.raises(ConfigValidityError):
        parse_config("REG (1,0),(2,0)")  # no general


def test_load_configs_skips_blank_lines():
    Cs = load_configs("PATH W|E\n\nPATH .|N\n")
    assert [serialize(C) for C in Cs] == ["PATH W|E", "PATH .|N"]


def test_boundary_conditions():
    assert boundary_condition(parse_config("PATH .|."), (0, 0)) == (0, 0, 0, 0)
    C = line(3, 3)
    assert boundary_condition(C, (0, 0)) == (1, 0, 1, 0)
    assert boundary_condition(C, (3, 0)) == (0, 0, 1, 0)


def test_distance_and_radius():
    assert radius(parse_config("PATH .|.")) == 0
    assert radius(line(3, 3)) == 3
    assert radius(line(7, 9)) == 9
    U = parse_config("PATH .|EENNWW")
    assert distance(U, (0, 0), (0, 2)) == 6


def test_render():
    assert render_ascii(parse_config("PATH .|.")) == "G"
    assert render_ascii(parse_config("PATH W|E")) == "#G#"
    assert render_ascii(parse_config("PATH .|EN")) == ".#\nG#"


def test_path_counts_match_enumeration():
    counts = [sum(1 for _ in iter_paths(n)) for n in range(1, 8)]
    assert counts == [1, 4, 18, 56, 170, 492, 1386]


def test_validation_agrees_with_bruteforce():
    for n in range(1, 7):
        for C in iter_paths(n):
            assert validate(C) is None and validate_bruteforce(C) is None


def test_path_from_cells_recovers_the_path():
    C = parse_config("PATH WN|EES")
    D = path_from_cells(C.cells)
    assert config_key(D) == config_key(C)
    assert path_from_cells({(0, 0), (1, 0), (0, 1), (1, 1)}) is None


def test_reversal_and_canonical_form():
    C = parse_config("PATH WN|EES")
    R = C.reversed()
    assert (R.r, R.s) == (-C.s, -C.r)
    assert R.cells == C.cells
    assert C.canonical() == R.canonical()


moves = st.text(alphabet="ENWS", max_size=8)


@settings(max_examples=300, deadline=None)
@given(moves, moves)
def test_serialize_round_trip(left, right):
    C = PathConfig(left, right)
    if validate(C) is not None:
        return
    text = serialize(C)
    assert parse_config(text) == C
    assert serialize(parse_config(text)) == text


@settings(max_examples=200, deadline=None)
@given(moves, moves, st.integers(0, 7))
def test_symmetries_preserve_validity_and_radius(left, right, k):
    C = PathConfig(left, right)
    if validate(C) is not None:
        return
    D = transform(C, k)
    assert validate(D) is None
    assert radius(D) == radius(C)
    assert len(D.cells) == len(C.cells)
