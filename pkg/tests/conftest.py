import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from slitmaps.core import build_map
from slitmaps.enumeration import gen_even_maps, gen_unicellular


@functools.lru_cache(maxsize=None)
def unicellular(n, g=1):
    return tuple(gen_unicellular(n, g))


@functools.lru_cache(maxsize=None)
def even_maps(n, g=1):
    return tuple(gen_even_maps(n, g))


@functools.lru_cache(maxsize=None)
def involution_population():
    """Genus 1 even-faced maps up to 3 edges plus unicellular ones up to 4."""
    seen = {}
    for n in (1, 2, 3):
        for m in even_maps(n):
            seen.setdefault(m.key(), m)
    for n in (2, 3, 4):
        for m in unicellular(n):
            seen.setdefault(m.key(), m)
    return tuple(seen.values())


@pytest.fixture
def torus_square():
    return build_map([2, 3, 1, 0], [1, 0, 3, 2], 0)


@pytest.fixture
def sphere_loop():
    return build_map([1, 0], [1, 0], 0)
