r"""
SL(2, Z)-orbits of square-tiled surfaces.

The generators act on permutation pairs by

- `T = (1 1; 0 1)`: `(\pi_h, \pi_v) \mapsto (\pi_h, \pi_v \pi_h^{-1})`,
- `S = (0 1; -1 0)`: `(\pi_h, \pi_v) \mapsto (\pi_v, \pi_h^{-1})`,

so that `S^2` is the half-turn `(\pi_h^{-1}, \pi_v^{-1})`. Orbits are
enumerated up to relabeling of squares, each node being stored in
canonical form.

EXAMPLES::

    >>> from cyclic_covers.origami import stairs
    >>> len(orbit(stairs(3)).nodes), len(orbit(stairs(4)).nodes)
    (3, 6)
"""

import json
from collections import deque
from dataclasses import dataclass
from typing import List, Tuple

from .errors import OrbitTooLarge, UnknownFormat
from .homology import homological_dim_surface
from .origami import Origami, canonical_form

DEFAULT_MAX_NODES = 10 ** 5


def act_T(o: Origami) -> Origami:
    h, v, hi = o._h, o._v, o._hi
    # (v o h^-1)(s) = v[h^-1[s]]
    return Origami._from0(h, [v[hi[s]] for s in range(o.squares)])


def act_S(o: Origami) -> Origami:
    return Origami._from0(o._v, o._hi)


GENERATORS = (("T", act_T), ("S", act_S))


@dataclass(frozen=True)
class OrbitGraph:
    """
    Nodes are canonical origamis sorted by their image arrays; an edge
    ``(i, j, "T")`` means `T` maps node `i` to node `j`.
    """
    nodes: Tuple[Origami, ...]
    edges: Tuple[Tuple[int, int, str], ...]

    def __len__(self):
        return len(self.nodes)


def orbit(o: Origami, max_nodes: int = DEFAULT_MAX_NODES) -> OrbitGraph:
    start = canonical_form(o)
    seen = {start}
    todo = deque([start])
    arrows = []
    while todo:
        x = todo.popleft()
        for name, act in GENERATORS:
            y = canonical_form(act(x))
            arrows.append((x, y, name))
            if y not in seen:
                if len(seen) >= max_nodes:
                    raise OrbitTooLarge("orbit has more than %d elements" % max_nodes)
                seen.add(y)
                todo.append(y)
    nodes = sorted(seen, key=lambda n: (n._h, n._v))
    index = {n: i for i, n in enumerate(nodes)}
    edges = sorted((index[x], index[y], name) for x, y, name in arrows)
    return OrbitGraph(tuple(nodes), tuple(edges))


def homological_dim_curve(o: Origami, max_nodes: int = DEFAULT_MAX_NODES) -> int:
    """Maximum of the waist-curve span dimension over the orbit of ``o``."""
    return max(homological_dim_surface(n) for n in orbit(o, max_nodes).nodes)


def export_orbit(g: OrbitGraph, format: str = "json") -> str:
    if format == "json":
        return json.dumps({"nodes": [n.to_dict() for n in g.nodes],
                           "edges": [list(e) for e in g.edges]},
                          separators=(",", ":"))
    if format == "dot":
        lines = ["digraph orbit {"]
        for i, n in enumerate(g.nodes):
            lines.append('  n%d [label="h=%s v=%s"];' % (
                i, ",".join(map(str, n.h)), ",".join(map(str, n.v))))
        for i, j, name in g.edges:
            lines.append('  n%d -> n%d [label="%s"];' % (i, j, name))
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise UnknownFormat("unknown orbit format %r (expected json or dot)" % format)


def orbit_from_json(s: str) -> OrbitGraph:
    d = json.loads(s)
    nodes = tuple(Origami.from_dict(n) for n in d["nodes"])
    edges = tuple((int(i), int(j), str(name)) for i, j, name in d["edges"])
    return OrbitGraph(nodes, edges)
