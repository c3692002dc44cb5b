"""Exact A_n* Voronoi cells and their Coxeter-plane tilings."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, NonGenericError  # noqa: F401


def tile_census(patch):
    """Count tiles per type in a patch dictionary."""
    counts = {}
    for tile in patch["tiles"]:
        counts[tile["type"]] = counts.get(tile["type"], 0) + 1
    return counts
