"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` (the lines are printed even
without ``-s``) or directly with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import random_walk_config  # noqa: E402
from fssp.cni import ConfigType, cni_verdict, hand_status  # noqa: E402
from fssp.extensions import FgTable, ni_bruteforce, ni_check, windows  # noqa: E402
from fssp.grid import config_key, iter_paths_upto, radius  # noqa: E402
from fssp.mft.formulas import (  # noqa: E402
    free_left_j0,
    mft_bounds,
    t_tilde,
    two_path_j0,
    type_i_value,
)
from fssp.mft.localmap import ai_is_safe, is_safe, mft_localmap, window  # noqa: E402
from fssp.solutions import (  # noqa: E402
    BoundKind,
    build_cc,
    build_lm,
    build_reflection,
    firing_interval,
    format_big,
    greedy_cover,
    simulate_cc,
    simulate_lm,
    simulate_reflection,
    state_bounds,
)
from fssp.variations import G_TWO_PATH, LINE_AB, line  # noqa: E402


def _report(number, title, ok, detail, elapsed):
    status = "PASS" if ok else "FAIL"
    print(f"\n[{status}] criterion {number:2d}: {title} ({detail}; {elapsed:.2f}s)", flush=True)


def _run(number, title, check, limit, capsys=None):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    if elapsed > limit:
        ok, detail = False, f"{detail}; over the {limit}s limit"
    if capsys is None:
        _report(number, title, ok, detail, elapsed)
    else:
        with capsys.disabled():
            _report(number, title, ok, detail, elapsed)
    return ok, detail


# -- the checks --------------------------------------------------------------

def check_line_values():
    got = {(3, 3): mft_localmap(line(3, 3), LINE_AB).value,
           (3, 4): mft_localmap(line(3, 4), LINE_AB).value,
           (3, 5): mft_localmap(line(3, 5), LINE_AB).value}
    ok = got == {(3, 3): 9, (3, 4): 11, (3, 5): 11}
    for a in range(0, 5):
        for b, expected in ((a, 3 * a), (a + 1, 3 * a + 2), (a + 2, 3 * a + 2)):
            value = mft_localmap(line(a, b), LINE_AB).value
            if value != expected:
                return False, f"line ({a},{b}) gave {value}, expected {expected}"
    return ok, f"C33/C34/C35 -> {got[(3, 3)]}/{got[(3, 4)]}/{got[(3, 5)]}; 15 lines match 3a, 3a+2, 3a+2"


def check_chain():
    safe = is_safe(line(3, 3), 8, LINE_AB)
    unsafe = is_safe(line(3, 3), 9, LINE_AB)
    reached = radius(safe.chain.configs[-1]) if safe.safe else None
    ok = safe.safe and reached == 9 and not unsafe.safe
    return ok, f"t=8 chain of {len(safe.chain.configs) if safe.safe else 0} ending at radius {reached}; " \
               f"t=9 unsafe={not unsafe.safe}"


def check_window():
    C = line(11, 11)
    got = (window(C, 11, 30), window(C, -11, 30))
    return got == ((-9, 11), (-11, 9)), f"u=11 -> {got[0]}, u=-11 -> {got[1]}"


TABLE = [
    ((-11, 9, -11, 11), (-11, 8)), ((-11, 10, -11, 11), (-10, 8)), ((-11, 11, -11, 11), (-8, 8)),
    ((-10, 11, -11, 11), (-8, 10)), ((-9, 11, -11, 11), (-8, 11)),
    ((-11, 9, -11, 10), (-11, 8)), ((-11, 10, -11, 10), (-10, 8)), ((-10, 10, -11, 10), (-10, 10)),
    ((-10, 10, -10, 11), (-10, 10)), ((-10, 11, -10, 11), (-8, 10)), ((-9, 11, -10, 11), (-8, 11)),
    ((-12, 9, -12, 10), (-12, 6)), ((-12, 10, -12, 10), (-10, 6)), ((-11, 10, -12, 10), (-10, 8)),
    ((-10, 10, -12, 10), (-10, 10)),
    ((-10, 10, -10, 12), (-10, 10)), ((-10, 11, -10, 12), (-8, 10)), ((-10, 12, -10, 12), (-6, 10)),
    ((-9, 12, -10, 12), (-6, 12)),
]


def check_intervals():
    wrong = [args for args, expected in TABLE if firing_interval(args[0], args[1], 30, args[2], args[3]) != expected]
    row = [expected for args, expected in TABLE[:5]]
    picks = greedy_cover(row, -11, 11)
    ok = not wrong and picks == [0, 4]
    return ok, f"{len(TABLE) - len(wrong)}/{len(TABLE)} intervals, first row cover {[row[p] for p in picks]}"


def check_arithmetic():
    cc = state_bounds(30, BoundKind.CC, 6).upper
    ref = state_bounds(30, BoundKind.REF_GPATH).upper
    reg = state_bounds(20, BoundKind.REG_LM)
    hi, lo = format_big(296 * reg.upper), format_big(296 * reg.lower)
    ok = (cc, 6 * cc, ref, 6 * ref) == (131072, 786432, 128, 768) and (lo, hi) == ("2.9547e31", "3.3253e8103")
    return ok, f"{cc}, {6 * cc}, {ref}, {6 * ref}, {lo}, {hi}"


def check_j0_logic():
    row = {49: 6, 50: 5, 51: 4, 52: 3, 53: 2}
    value, j0 = free_left_j0(-47, 55, row)
    straight = type_i_value(-47, 55)
    return (value, j0, straight) == (149, 51, 157), f"j0={j0}, value={value}, straight line={straight}"


def check_oracle():
    counts = {"configs": 0, "type I": 0, "cni": 0, "end": 0}
    for C in iter_paths_upto(8):
        T = FgTable(C)
        lm = mft_localmap(C, G_TWO_PATH).value
        counts["configs"] += 1
        if hand_status(C, T).type is ConfigType.I:
            counts["type I"] += 1
            if lm != type_i_value(C.r, C.s):
                return False, f"type I mismatch on {C}"
        tt = t_tilde(C, T)[0]
        if cni_verdict(C, T).verdict:
            counts["cni"] += 1
            if lm != tt:
                return False, f"noninterference mismatch on {C}"
        lower, upper = mft_bounds(C, T)
        if not (lm <= tt and lower <= lm <= upper):
            return False, f"bounds violated on {C}"
        if C.r == 0:
            counts["end"] += 1
            if two_path_j0({j: T.g(0, j) for j in range(C.s + 1)})[0] != lm:
                return False, f"end-general formula mismatch on {C}"
    return True, ", ".join(f"{v} {k}" for k, v in counts.items())


def check_interference():
    windows_checked = 0
    for C in iter_paths_upto(9):
        T = FgTable(C)
        for w in windows(C):
            if T.finite(w.i, w.j):
                windows_checked += 1
                if ni_check(C, w) != ni_bruteforce(C, w).holds:
                    return False, f"disagreement on {C} window {w}"
    return True, f"{windows_checked} finite windows agree"


def check_node_safeness():
    checked = 0
    for C in iter_paths_upto(7):
        for t in range(0, 9):
            expected = is_safe(C, t, G_TWO_PATH).safe
            for v in sorted(C.cells):
                checked += 1
                if ai_is_safe(C, v, t, G_TWO_PATH) != expected:
                    return False, f"node {v} of {C} disagrees at t={t}"
    return True, f"{checked} (config, node, time) triples agree across nodes and with the class search"


def check_soundness():
    rng = random.Random(20261019)
    runs = 0
    for _ in range(100):
        C = random_walk_config(rng, rng.randint(1, 10))
        ref = build_reflection(C)
        cc = build_cc(C, G_TWO_PATH)
        lm = build_lm(C, G_TWO_PATH)
        members = {config_key(D) for D in cc.members}
        targets = [C, *cc.members, *[random_walk_config(rng, rng.randint(1, 10)) for _ in range(5)]]
        targets += (ref.domain() or [])[:5]
        for D in targets:
            runs += 1
            out = simulate_reflection(ref, D)
            if out.fired != ref.in_domain(D) or (out.fired and (out.fire_time != ref.t_tilde
                                                                or out.fired_nodes != D.cells)):
                return False, f"reflection of {C} on {D}: {out}"
            if not out.fired and out.fired_nodes:
                return False, f"reflection partially fired on {D}"
            out = simulate_cc(cc, D)
            if out.fired != (config_key(D) in members) or (out.fired and out.fire_time != cc.t):
                return False, f"consistency checking of {C} on {D}: {out}"
            m = mft_localmap(D, G_TWO_PATH).value
            out = simulate_lm(lm, D)
            if out.fired != (m <= lm.t) or (out.fired and out.fire_time != m):
                return False, f"local map of {C} on {D}: {out}"
    return True, f"100 specs, {runs} simulations of each kind"


CRITERIA = [
    (1, "line variation exact values", check_line_values, 10),
    (2, "safeness chain for the short line", check_chain, 5),
    (3, "window formula", check_window, 1),
    (4, "firing intervals and greedy cover", check_intervals, 1),
    (5, "state-count arithmetic", check_arithmetic, 1),
    (6, "first-finite-window logic", check_j0_logic, 1),
    (7, "closed forms vs local map on all paths up to 8 cells", check_oracle, 600),
    (8, "interference check vs brute force up to 9 cells", check_interference, 600),
    (9, "node-level safeness agreement up to 7 cells", check_node_safeness, 600),
    (10, "partial-solution soundness on random paths", check_soundness, 300),
]


def _make_test(number, title, check, limit):
    def test(capsys):
        ok, detail = _run(number, title, check, limit, capsys)
        assert ok, detail
    test.__name__ = f"test_criterion_{number:02d}"
    test.__doc__ = title
    return test


for _number, _title, _check, _limit in CRITERIA:
    globals()[f"test_criterion_{_number:02d}"] = _make_test(_number, _title, _check, _limit)


if __name__ == "__main__":
    results = [_run(*c)[0] for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
