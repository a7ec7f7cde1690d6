"""User-supplied scenarios: groups given as explicit permutation tables.

A scenario file is JSON::

    {
      "name": "cyclic-pair",
      "points": ["P0", "P1", ...],
      "g1": [<generator>, ...],
      "g2": [<generator>, ...],
      "h":  [<generator>, ...],          optional, default trivial
      "q": "P0"                          outer base point, or
      "p1": "P0", "p2": "P1"             inner pair
    }

A generator is either the list of images of ``points`` in order, or a cycle
string over point names such as ``"(P1 P2)(P3 P4)"``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .criteria import Scenario
from .group import Group, GroupLaw, closure

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class PermutationLaw(GroupLaw):
    """Permutations of range(n) as image tuples; (a*b)(k) = a(b(k))."""

    def __init__(self, names):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("point names must be distinct")
        self.n = len(self.names)
        self.index = {p: k for k, p in enumerate(self.names)}
        self.identity = tuple(range(self.n))
        self.name = f"perm({self.n})"

    def mul(self, a, b):
        return tuple(a[k] for k in b)

    def inv(self, a):
        out = [0] * self.n
        for k, image in enumerate(a):
            out[image] = k
        return tuple(out)

    def format(self, a) -> str:
        seen = set()
        cycles = []
        for start in range(self.n):
            if start in seen or a[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            k = a[start]
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = a[k]
            cycles.append("(" + " ".join(self.names[k] for k in cyc) + ")")
        return "".join(cycles) or "()"

    def parse(self, text):
        if isinstance(text, list):
            if sorted(text) != sorted(self.names):
                raise ValueError(f"{text} is not a permutation of the points")
            return tuple(self.index[p] for p in text)
        images = list(range(self.n))
        stripped = text.strip()
        if _CYCLE_RE.sub("", stripped).strip():
            raise ValueError(f"cannot parse cycle notation {text!r}")
        for body in _CYCLE_RE.findall(stripped):
            try:
                cyc = [self.index[p] for p in body.split()]
            except KeyError as exc:
                raise ValueError(f"unknown point {exc.args[0]!r} in {text!r}") from None
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point in cycle {body!r}")
            step = list(range(self.n))
            for k, p in enumerate(cyc):
                step[p] = cyc[(k + 1) % len(cyc)]
            images = [step[i] for i in images]
        return tuple(images)


def permutation_act(g, p: int) -> int:
    return g[p]


def load_scenario_data(data: dict) -> tuple[Scenario, Group]:
    """Build the scenario and its H from a parsed scenario-file dict."""
    for key in ("points", "g1", "g2"):
        if key not in data:
            raise ValueError(f"scenario file is missing {key!r}")
    law = PermutationLaw(data["points"])
    gens = {k: [law.parse(t) for t in data.get(k, [])] for k in ("g1", "g2", "h")}
    g1 = closure(gens["g1"], law)
    g2 = closure(gens["g2"], law)
    h = closure(gens["h"], law)
    names = law.names

    def point(key):
        name = data[key]
        if name not in law.index:
            raise ValueError(f"unknown point {name!r}")
        return law.index[name]

    base = point("q") if "q" in data else None
    inner = (point("p1"), point("p2")) if "p1" in data and "p2" in data else None
    all_gens = gens["g1"] + gens["g2"] + gens["h"]
    scenario = Scenario(
        family="custom",
        param=None,
        g1=g1,
        g2=g2,
        act=permutation_act,
        points=tuple(range(law.n)),
        base=base,
        inner_points=inner,
        ambient_factory=lambda: closure(all_gens, law),
        assumed=frozenset({"a"}),
        format_point=lambda k: names[k],
        notes=(f"custom scenario {data.get('name', '')!r}".rstrip(),),
    )
    return scenario, h


def load_scenario_file(path: str | Path) -> tuple[Scenario, Group]:
    with open(path, encoding="utf-8") as f:
        return load_scenario_data(json.load(f))
