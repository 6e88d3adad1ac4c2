import pytest

from fssp.cni import (
    ConfigType,
    Hand,
    cni_type2_shortcut,
    cni_verdict,
    free_left_first_finite,
    hand_status,
    ijk_sets,
)
from fssp.extensions import FgTable
from fssp.grid import PathConfig, iter_paths_upto, parse_config
from fssp.variations import line

SHARED_POCKET = parse_config("PATH NNNNNNEEEEEESSSSSSWWN|EEN")
SEPARATE_POCKETS = parse_config(
    "PATH WWWWWWNNNWWNNNNNNEEEEEESSSSSSWWN|EEEEESSSEESSSSSSWWWWWWNNNNNNEES")
FREE_LEFT_NONINTERFERING = parse_config("PATH EENNWNWWSW|N")
FREE_LEFT_INTERFERING = parse_config("PATH NNNE|SEEENNWN")


def test_general_at_an_end_always_satisfies():
    for C in iter_paths_upto(7):
        if C.r == 0:
            assert cni_verdict(C).verdict


def test_straight_line_satisfies():
    assert cni_verdict(line(3, 5)).verdict


def test_shared_pocket_fails_on_the_k_clause():
    rep = cni_verdict(SHARED_POCKET)
    assert not rep.verdict
    assert "K" in {f.clause for f in rep.failures}


def test_separate_pockets_satisfy():
    assert cni_verdict(SEPARATE_POCKETS).verdict


def test_index_sets_partition_as_expected():
    I, J, K = ijk_sets(SHARED_POCKET)
    T = FgTable(SHARED_POCKET)
    assert all(T.finite(w.i, w.j) for w in K)
    assert all(not T.finite(w.i, w.j) and T.finite(w.i - 1, w.j) for w in I)
    assert all(not T.finite(w.i, w.j) and T.finite(w.i, w.j + 1) for w in J)
    assert not set(K) & (set(I) | set(J))


def test_hand_status_of_lines_and_singleton():
    st = hand_status(line(2, 3))
    assert (st.left, st.right, st.type) == (Hand.FREE, Hand.FREE, ConfigType.I)
    assert hand_status(PathConfig()).type is ConfigType.I
    assert str(st) == "TYPE I left=FREE right=FREE"


def test_pocketed_configs_are_type_three():
    assert hand_status(SHARED_POCKET).type is ConfigType.III
    assert hand_status(SEPARATE_POCKETS).type is ConfigType.III


def test_one_sealed_hand_is_type_two():
    st = hand_status(FREE_LEFT_NONINTERFERING)
    assert (st.left, st.right, st.type) == (Hand.FREE, Hand.CLOSED, ConfigType.II)


@pytest.mark.parametrize("C", [FREE_LEFT_NONINTERFERING, FREE_LEFT_INTERFERING])
def test_single_window_shortcut_matches_full_verdict(C):
    assert cni_type2_shortcut(C) == cni_verdict(C).verdict


def test_shortcut_verdicts():
    assert cni_type2_shortcut(FREE_LEFT_NONINTERFERING) is True
    assert cni_type2_shortcut(FREE_LEFT_INTERFERING) is False


def test_shortcut_preconditions():
    with pytest.raises(ValueError):
        cni_type2_shortcut(parse_config("PATH .|EEE"))
    with pytest.raises(ValueError):
        cni_type2_shortcut(line(2, 2))


def test_first_finite_window_on_the_left_edge():
    C = FREE_LEFT_NONINTERFERING
    j0 = free_left_first_finite(C)
    T = FgTable(C)
    assert T.finite(C.r, j0)
    assert all(not T.finite(C.r, j) for j in range(j0))
