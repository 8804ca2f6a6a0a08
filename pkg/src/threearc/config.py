"""Size caps for the exponential kernels.

Defaults can be overridden with the ``X3_CAPS`` environment variable, e.g.
``X3_CAPS="chi=80,hadwiger=14"``.
"""

import os

DEFAULT_CAPS = {
    "chi": 64,          # vertices for exact chromatic number
    "hadwiger": 12,     # vertices for exact Hadwiger number
    "enumerate": 5,     # n for exhaustive digraph enumeration
    "tournaments": 6,   # n for exhaustive tournament enumeration
    "minor_budget": 200_000,  # search nodes for targeted clique-minor search
}


def _parse(spec):
    caps = {}
    for item in spec.replace(";", ",").split(","):
        item = item.strip()
        if not item:
            continue
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in DEFAULT_CAPS:
            raise ValueError(f"unknown cap {key!r} in X3_CAPS")
        caps[key] = int(value)
    return caps


def get_cap(name):
    env = os.environ.get("X3_CAPS")
    if env:
        caps = _parse(env)
        if name in caps:
            return caps[name]
    return DEFAULT_CAPS[name]
