"""Random paths, representations and graphs for property tests and experiments."""

from __future__ import annotations

import random
from functools import lru_cache

from .graphs import random_graph
from .grid import LatticePath, PathError, path_from_corners
from .recognizer import enumerate_paths
from .representation import EpgRepresentation


def random_path(rng: random.Random, width: int, height: int, k: int, tries: int = 100) -> LatticePath:
    """A path with at most ``k`` bends inside the grid, by random turning walk."""
    for _ in range(tries):
        segs = rng.randint(1, k + 1)
        x, y = rng.randrange(width), rng.randrange(height)
        corners = [(x, y)]
        horiz = rng.random() < 0.5
        for _ in range(segs):
            if horiz:
                choices = [nx for nx in range(width) if nx != x]
                x = rng.choice(choices)
            else:
                choices = [ny for ny in range(height) if ny != y]
                y = rng.choice(choices)
            corners.append((x, y))
            horiz = not horiz
        try:
            return path_from_corners(corners)
        except PathError:
            continue
    raise RuntimeError("could not sample a simple path")


@lru_cache(maxsize=None)
def _all_paths(width, height, k):
    return tuple(enumerate_paths(width, height, k))


def random_rep(rng: random.Random, n: int, width: int, height: int, k: int,
               uniform: bool = True) -> EpgRepresentation:
    """n paths drawn independently.

    ``uniform`` samples from the full path list (small grids only); otherwise
    the turning walk of :func:`random_path` is used.
    """
    if uniform:
        pool = _all_paths(width, height, k)
        paths = [rng.choice(pool) for _ in range(n)]
    else:
        paths = [random_path(rng, width, height, k) for _ in range(n)]
    return EpgRepresentation(width, height, tuple(paths))


def random_graphs(rng: random.Random, count: int, max_n: int = 12):
    for _ in range(count):
        n = rng.randint(1, max_n)
        yield random_graph(n, rng.random(), rng)

