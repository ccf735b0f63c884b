"""Finite-model laboratory for generalized covering properties.

Spaces, families, and collections travel as plain dicts in the same JSON
shapes the ``covlab`` CLI uses:

    topology   {"kind": "topology", "points": n, "opens": [[...], ...]}
    family     {"kind": "family", "ground": n, "sets": [[...], ...]}
    collection {"kind": "collection", "ground": n, "families": [[[...]], ...]}
"""

from ._covlab import *  # noqa: F401,F403
from ._covlab import GROUND_LIMIT, DEFAULT_BUDGET  # noqa: F401


def topology(points, opens):
    return {"kind": "topology", "points": points, "opens": [sorted(o) for o in opens]}


def family(ground, sets):
    return {"kind": "family", "ground": ground, "sets": [sorted(s) for s in sets]}


def collection(ground, families):
    return {
        "kind": "collection",
        "ground": ground,
        "families": [[sorted(s) for s in f] for f in families],
    }


def discrete(n):
    opens = []
    for mask in range(1 << n):
        opens.append([i for i in range(n) if mask >> i & 1])
    return topology(n, opens)


def indiscrete(n):
    return topology(n, [[], list(range(n))]) if n else topology(0, [[]])


def sierpinski():
    return topology(2, [[], [0], [0, 1]])
