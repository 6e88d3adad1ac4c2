"""Closed forms against the exhaustive local-map computation.

Each path gets a type from its two hands (can the path be extended
arbitrarily far past each end?). Two free hands give a straight-line style
formula. Otherwise the window minimum T~ is an upper bound, and it is exact
when the extensions on the two sides never collide.
"""

from fssp.cni import cni_verdict, hand_status
from fssp.extensions import FgTable
from fssp.grid import parse_config
from fssp.mft.formulas import mft_bounds, mft_formula, t_tilde
from fssp.mft.localmap import mft_localmap
from fssp.variations import G_TWO_PATH

RECORDS = [
    "PATH WWW|EEEE",        # straight line
    "PATH EENNWNWWSW|N",    # one free hand
    "PATH .|WSWWNWNNEES",   # both hands closed, extensions independent
    "PATH NNNE|SEEENNWN",   # extensions collide but the bounds still meet
    "PATH NWNWWSSES|SSW",   # extensions collide and the bounds stay apart
]

for text in RECORDS:
    C = parse_config(text)
    T = FgTable(C)
    status = hand_status(C, T)
    report = cni_verdict(C, T)
    res = mft_formula(C, T)
    exact = mft_localmap(C, G_TWO_PATH).value
    lower, upper = mft_bounds(C, T)
    shown = res.value if res.conclusive else f"[{res.lower},{res.upper}]"
    print(text)
    print(f"  type {status.type.value}, hands {status.left.value}/{status.right.value}, "
          f"independent extensions: {report.verdict}")
    print(f"  T~ = {t_tilde(C, T)[0]}, bounds [{lower},{upper}], formula -> {shown} via {res.method.value}")
    print(f"  local map -> {exact}")
    for failure in report.failures[:1]:
        x0, x1 = failure.witness
        print(f"  first collision: clause {failure.clause} on window ({failure.window.i},{failure.window.j})"
              f" with left {x0 or '-'} and right {x1 or '-'}")
    print()
