import json

import pytest

from cyclic_covers.errors import OrbitTooLarge, UnknownFormat
from cyclic_covers.homology import homological_dim_surface
from cyclic_covers.orbit import (act_S, act_T, export_orbit, homological_dim_curve, orbit,
                                 orbit_from_json)
from cyclic_covers.origami import (Origami, automorphisms, cover_involution,
                                   cyclic_cover_origami, genus_of, isomorphic, make_origami,
                                   quotient, stairs, stratum, torus)
from cyclic_covers.spectra import CoverParams

from helpers import random_origamis


def cover(N, a):
    return cyclic_cover_origami(CoverParams(N, a))


def test_generators_on_torus():
    assert act_T(torus()) == torus() and act_S(torus()) == torus()


def test_T_power_fixes_stairs():
    for N in range(1, 10):
        o = stairs(N)
        x = o
        for _ in range(N):
            x = act_T(x)
        assert isomorphic(x, o)


def test_S_squared_is_half_turn():
    for o in random_origamis(60, seed=21):
        s2 = act_S(act_S(o))
        assert s2 == Origami([o.h.index(i) + 1 for i in range(1, o.squares + 1)],
                             [o.v.index(i) + 1 for i in range(1, o.squares + 1)])
        assert act_S(act_S(s2)) == o


def test_generators_preserve_strata():
    for o in random_origamis(100, seed=22):
        assert stratum(act_T(o)) == stratum(o) == stratum(act_S(o))


def test_half_turn_on_hyperelliptic_examples():
    for o in (stairs(5), stairs(6), cover(4, (3, 1, 3, 1)), cover(6, (5, 1, 5, 1))):
        assert isomorphic(act_S(act_S(o)), o)


def test_orbit_sizes():
    assert len(orbit(stairs(4))) == 6
    assert len(orbit(stairs(3))) == 3
    assert len(orbit(cover(4, (3, 1, 3, 1)))) == 3
    assert len(orbit(torus())) == 1


def test_orbit_invariants_and_seed_independence():
    seeds = [stairs(3), stairs(4), stairs(5), stairs(6), cover(4, (3, 1, 3, 1)),
             cover(6, (5, 1, 5, 1))] + random_origamis(15, seed=23, max_squares=7)
    for o in seeds:
        g = orbit(o)
        assert len({n for n in g.nodes}) == len(g)
        assert len({stratum(n) for n in g.nodes}) == 1
        assert len({genus_of(n) for n in g.nodes}) == 1
        assert len({len(automorphisms(n)) for n in g.nodes}) == 1
        for n in g.nodes[:3] + g.nodes[-3:]:
            assert orbit(n).nodes == g.nodes
        # every node is reached, and each node has one T and one S arrow
        assert sorted((i, name) for i, _, name in g.edges) == \
            sorted((i, name) for i in range(len(g)) for name in "ST")


def test_homological_dim_curve():
    assert homological_dim_curve(cover(4, (3, 1, 3, 1))) == 3
    assert homological_dim_curve(torus()) == 1
    assert homological_dim_curve(cover(6, (5, 1, 5, 1))) == 5
    for o in random_origamis(30, seed=24, max_squares=7):
        d = homological_dim_curve(o)
        assert homological_dim_surface(o) <= d <= genus_of(o)


def test_orbit_cap():
    with pytest.raises(OrbitTooLarge):
        orbit(stairs(4), max_nodes=3)
    assert len(orbit(stairs(4), max_nodes=6)) == 6


def test_export():
    dot = export_orbit(orbit(torus()), "dot")
    assert dot.startswith("digraph orbit {")
    assert 'n0 -> n0 [label="T"];' in dot and 'n0 -> n0 [label="S"];' in dot
    dot = export_orbit(orbit(stairs(3)), "dot")
    assert sum(1 for line in dot.splitlines() if "[label=\"h=" in line) == 3
    g = orbit(stairs(4))
    d = json.loads(export_orbit(g, "json"))
    assert [make_origami(n["h"], n["v"]) for n in d["nodes"]] == list(g.nodes)
    assert all(name in ("T", "S") for _, _, name in d["edges"])
    assert orbit_from_json(export_orbit(g, "json")) == g
    with pytest.raises(UnknownFormat):
        export_orbit(g, "svg")


def stretched_stairs(N):
    """`stairs(N)` with every square cut into a horizontal pair."""
    s = stairs(N)
    h, v = [0] * (2 * N), [0] * (2 * N)
    for j in range(1, N + 1):
        left, right = 2 * j - 1, 2 * j
        h[left - 1], h[right - 1] = right, 2 * s.h[j - 1] - 1
        t = s.v[j - 1]
        v[left - 1], v[right - 1] = 2 * t - 1, 2 * t
    return Origami(h, v)


@pytest.mark.parametrize("N", [3, 5, 7, 9])
def test_odd_family_quotient(N):
    # the tau-quotient of M_{2N}(2N-1, 1, N, N) is the stairs surface built
    # from 2 x 1 rectangles, up to the SL(2, Z)-action
    p = CoverParams(2 * N, (2 * N - 1, 1, N, N))
    q = quotient(cover(2 * N, p.a), cover_involution(p))
    assert stratum(q) == stratum(stairs(N))
    assert any(isomorphic(q, x) for x in orbit(stretched_stairs(N)).nodes)
