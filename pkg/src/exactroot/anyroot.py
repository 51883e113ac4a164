"""Recognition of graphs (and digraphs) with some exact-distance square root.

A graph has an exact-distance square root iff it equals, as a labeled graph,
the exact square of its own complement; in that case the complement itself is
a root. The digraph version is word-for-word the same with directed
distances (unreachable means distance infinity, never 2)."""

from __future__ import annotations

from .graphs import (
    Digraph,
    Graph,
    complement,
    complement_digraph,
    exact_square,
    exact_square_digraph,
)


def recognize_any_root(g: Graph) -> Graph | None:
    """The complement of g when it is an exact-distance square root of g,
    else None. Any returned root h satisfies exact_square(h) == g exactly."""
    h = complement(g)
    return h if exact_square(h) == g else None


def recognize_any_root_digraph(d: Digraph) -> Digraph | None:
    """Digraph analogue of recognize_any_root."""
    h = complement_digraph(d)
    return h if exact_square_digraph(h) == d else None
