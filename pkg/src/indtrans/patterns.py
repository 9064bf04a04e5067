"""Build forbidden-subgraph patterns from their usual names.

Names are disjoint unions written with ``+``, each term an optional
multiplicity followed by ``Pn``, ``Cn``, ``Kn``, ``Ks,t`` or ``K1,r^+``:
``"2P1+P3"``, ``"K1,3^+"``, ``"K1,4+2P1"``, ``"3P1+P2"``.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    path,
    subdivided_star,
    union_all,
)

_TERM = re.compile(r"^(\d*)(P(\d+)|C(\d+)|K(\d+),(\d+)(\^\+)?|K(\d+))$")


def _term(text: str) -> tuple[int, Graph]:
    m = _TERM.match(text)
    if not m:
        raise ValueError(f"cannot parse pattern term {text!r}")
    times = int(m.group(1)) if m.group(1) else 1
    if m.group(3):
        g = path(int(m.group(3)))
    elif m.group(4):
        g = cycle(int(m.group(4)))
    elif m.group(5):
        s, t = int(m.group(5)), int(m.group(6))
        if m.group(7):
            if s != 1:
                raise ValueError("only K1,r^+ subdivided stars are supported")
            g = subdivided_star(t)
        else:
            g = complete_bipartite(s, t)
    else:
        g = complete(int(m.group(8)))
    return times, g


@lru_cache(maxsize=None)
def pattern(name: str) -> Graph:
    """Graph for ``name``; ``0P1`` style zero multiplicities drop out."""
    name = name.replace(" ", "")
    protected = name.replace("^+", "\0")
    parts = []
    for raw in protected.split("+"):
        times, g = _term(raw.replace("\0", "^+"))
        parts += [g] * times
    if not parts:
        raise ValueError(f"pattern {name!r} has no vertices")
    return union_all(parts)
