import random

import pytest

from fssp.grid import PathConfig, neighbors


def random_walk_config(rng: random.Random, n: int) -> PathConfig:
    """A random valid path of up to n cells with the general at a random index."""
    path = [(0, 0)]
    used = {(0, 0)}
    while len(path) < n:
        tip = path[-1]
        options = [q for q in neighbors(tip) if q not in used
                   and not any(nb in used and nb != tip for nb in neighbors(q))]
        if not options:
            break
        q = rng.choice(options)
        path.append(q)
        used.add(q)
    k = rng.randrange(len(path))
    ox, oy = path[k]
    return PathConfig.from_positions([(x - ox, y - oy) for x, y in path], k)


@pytest.fixture
def rng():
    return random.Random(20261019)
