"""Minimum firing times of small regions.

Regions have no left or right, so only the exhaustive search applies. The
search grows candidate regions cell by cell and drops any partial region
that already puts a new cell within reach of the node being tested.
"""

import time

from fssp.grid import RegionConfig, render_ascii
from fssp.mft.localmap import mft_localmap
from fssp.variations import TWO_REG

SHAPES = {
    "square": {(0, 0), (1, 0), (0, 1), (1, 1)},
    "bar": {(0, 0), (1, 0), (2, 0), (3, 0)},
    "corner": {(0, 0), (1, 0), (1, 1)},
    "tee": {(0, 0), (-1, 0), (1, 0), (0, 1)},
    "two by six": {(x, y) for x in range(6) for y in range(2)},
}

for name, cells in SHAPES.items():
    R = RegionConfig(frozenset(cells))
    start = time.perf_counter()
    value = mft_localmap(R, TWO_REG).value
    print(f"{name}: minimum firing time {value} ({time.perf_counter() - start:.2f}s)")
    print(render_ascii(R))
    print()
