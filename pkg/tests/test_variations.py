from fssp.grid import PathConfig, RegionConfig, iter_paths_upto, parse_config
from fssp.variations import (
    BY_NAME,
    G_TWO_PATH,
    LINE_AB,
    TWO_PATH,
    TWO_REG,
    firing_upper_bound,
    line,
    line_shape,
)


def test_line_membership():
    assert LINE_AB.member(line(3, 5))
    assert not LINE_AB.member(line(3, 6))
    assert not LINE_AB.member(line(4, 3))
    assert line_shape(line(2, 3)) == (2, 3)


def test_two_path_needs_the_general_at_an_end():
    assert not TWO_PATH.member(parse_config("PATH W|E"))
    assert TWO_PATH.member(parse_config("PATH .|EN"))
    assert TWO_PATH.member(parse_config("PATH WS|."))


def test_regions_and_paths_are_separate():
    R = parse_config("REG (0,0),(0,1)")
    assert TWO_REG.member(R) and not G_TWO_PATH.member(R)
    assert not TWO_REG.member(line(1, 1))


def test_sub_variations():
    for C in iter_paths_upto(6):
        if LINE_AB.member(C) or TWO_PATH.member(C):
            assert G_TWO_PATH.member(C)


def test_upper_bounds():
    C = PathConfig("W" * 47, "E" * 55)
    assert firing_upper_bound(G_TWO_PATH, C) == 157
    assert firing_upper_bound(G_TWO_PATH, PathConfig()) == 0
    square = RegionConfig(frozenset({(0, 0), (0, 1), (1, 0), (1, 1)}))
    assert firing_upper_bound(TWO_REG, square) == 7


def test_names():
    assert set(BY_NAME) == {"2path", "g2path", "line-ab", "2reg"}
    assert str(LINE_AB) == "line-ab"
