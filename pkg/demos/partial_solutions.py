"""Three automata that fire only where they are sure, and their state budgets.

The reflection solution checks one window and its boundary conditions. The
consistency-checking solution runs one checker per member of an equivalence
class. The local-map solution fires each instance whose minimum firing time
is within its horizon. All three are simulated on a few instances.
"""

from fssp.grid import parse_config, serialize
from fssp.mft.localmap import mft_localmap
from fssp.solutions import (
    BoundKind,
    build_cc,
    build_lm,
    build_reflection,
    format_big,
    simulate_cc,
    simulate_lm,
    simulate_reflection,
    state_bounds,
)
from fssp.variations import G_TWO_PATH, line

C = parse_config("PATH NWNWWSSES|SSW")
others = [line(3, 3), parse_config("PATH NWNWWSSES|SSE"), parse_config("PATH NWNWWSSES|S")]

ref = build_reflection(C)
cc = build_cc(C, G_TWO_PATH)
lm = build_lm(C, G_TWO_PATH)
print(f"built for {serialize(C)} (minimum firing time {mft_localmap(C, G_TWO_PATH).value})")
print(f"  reflection: window ({ref.i0},{ref.j0}), fires at {ref.t_tilde}, "
      f"at most {ref.state_count_bound} states")
print(f"  consistency checking: {len(cc.members)} class members, {cc.n} checkers, fires at {cc.t}")
print(f"  local map: horizon {lm.t}")
print()

for D in [C, *cc.members, *others]:
    print(serialize(D))
    print(f"  reflection {simulate_reflection(ref, D)}, consistency {simulate_cc(cc, D)}, "
          f"local map {simulate_lm(lm, D)}")
print()

print("state counts at horizon 30:")
print(f"  consistency checking with 6 checkers: {state_bounds(30, BoundKind.CC, 6).upper}")
print(f"  reflection on general paths: {state_bounds(30, BoundKind.REF_GPATH).upper}")
reg = state_bounds(20, BoundKind.REG_LM)
print(f"  local map on regions at horizon 20: between {format_big(reg.lower)} and {format_big(reg.upper)}")
