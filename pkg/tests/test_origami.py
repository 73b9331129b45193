import itertools
import json
import random
from math import gcd

import pytest

from cyclic_covers.errors import (Disconnected, LengthMismatch, NotAbelianCase,
                                  NotAutomorphism, NotPermutation, ParseError)
from cyclic_covers.origami import (Origami, Stratum, automorphisms, canonical_form,
                                   cover_involution, cyclic_cover_origami, deck_generator,
                                   genus_of, is_automorphism, isomorphic, make_origami,
                                   quotient, stairs, stratum, stratum_from_params, torus)
from cyclic_covers.spectra import CoverParams, genus

from helpers import random_origamis


def relabel(o, rho):
    """Conjugate by the 0-indexed relabeling `s -> rho[s]`."""
    M = o.squares
    h, v = [0] * M, [0] * M
    for s in range(M):
        h[rho[s]] = rho[o.h[s] - 1] + 1
        v[rho[s]] = rho[o.v[s] - 1] + 1
    return Origami(h, v)


def brute_isomorphic(o1, o2):
    if o1.squares != o2.squares:
        return False
    return any(relabel(o1, rho) == o2 for rho in itertools.permutations(range(o1.squares)))


def brute_automorphisms(o):
    M = o.squares
    out = []
    for s in itertools.permutations(range(1, M + 1)):
        if all(s[o.h[i] - 1] == o.h[s[i] - 1] and s[o.v[i] - 1] == o.v[s[i] - 1]
               for i in range(M)):
            out.append(s)
    return out


def compose(s, t):
    return tuple(s[t[i] - 1] for i in range(len(t)))


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def test_make_origami():
    o = make_origami([2, 3, 1], [3, 2, 1])
    assert o == stairs(3) and o.squares == 3
    assert make_origami([1], [1]) == torus()
    with pytest.raises(Disconnected):
        make_origami([2, 1, 3], [2, 1, 3])
    with pytest.raises(NotPermutation):
        make_origami([1, 1], [1, 2])
    with pytest.raises(NotPermutation):
        make_origami([0, 1], [1, 2])
    with pytest.raises(LengthMismatch):
        make_origami([1, 2], [1])


def test_stairs():
    assert (stairs(3).h, stairs(3).v) == ((2, 3, 1), (3, 2, 1))
    assert stairs(1) == torus()
    assert (stairs(4).h, stairs(4).v) == ((2, 3, 4, 1), (4, 3, 2, 1))


def test_json_round_trip():
    for o in random_origamis(30, seed=1):
        assert Origami.from_json(o.to_json()) == o
        assert Origami.from_dict(json.loads(o.to_json())) == o
    assert stairs(3).to_json() == '{"squares":3,"h":[2,3,1],"v":[3,2,1]}'
    for bad in ['[1]', '{"h":[1],"v":[1]}', '{"squares":1,"h":[1],"v":"x"}', 'nope',
                '{"squares":1,"h":[1],"v":[1],"x":0}']:
        with pytest.raises(ParseError):
            Origami.from_json(bad)
    with pytest.raises(LengthMismatch):
        Origami.from_json('{"squares":2,"h":[1],"v":[1]}')


# ---------------------------------------------------------------------------
# strata and genus
# ---------------------------------------------------------------------------

def test_stratum_examples():
    assert stratum(stairs(3)) == Stratum([2]) and genus_of(stairs(3)) == 2
    assert stratum(stairs(4)) == Stratum([1, 1]) and genus_of(stairs(4)) == 2
    assert stratum(torus()) == Stratum() and str(stratum(torus())) == "H()"
    assert genus_of(stairs(5)) == 3
    assert genus_of(torus()) == 1


def test_stairs_strata():
    # odd N = 2g - 1 gives H(2g - 2), even N = 2g gives H(g - 1, g - 1)
    for N in range(2, 25):
        if N % 2:
            g = (N + 1) // 2
            assert stratum(stairs(N)) == Stratum([2 * g - 2])
        else:
            g = N // 2
            assert stratum(stairs(N)) == Stratum([g - 1, g - 1])
        assert genus_of(stairs(N)) == g


def test_stratum_from_params():
    assert stratum_from_params(CoverParams(6, (5, 1, 3, 3))) == Stratum([2, 2])
    assert stratum_from_params(CoverParams(4, (1, 1, 1, 1))) == Stratum([1, 1, 1, 1])
    assert stratum_from_params(CoverParams(2, (1, 1, 1, 1))) == Stratum()
    with pytest.raises(NotAbelianCase):
        stratum_from_params(CoverParams(3, (1, 1, 2, 2)))


def test_genus_matches_degrees():
    for o in random_origamis(200, seed=2):
        assert 2 * genus_of(o) == 2 + sum(stratum(o).zero_degrees)


# ---------------------------------------------------------------------------
# isomorphism and automorphisms
# ---------------------------------------------------------------------------

def test_isomorphic_examples():
    o = stairs(3)
    for rho in itertools.permutations(range(3)):
        assert isomorphic(o, relabel(o, rho))
    assert not isomorphic(stairs(3), stairs(4))
    assert isomorphic(quotient(stairs(4), [3, 4, 1, 2]), stairs(2))


def test_isomorphic_against_brute_force():
    os = random_origamis(60, seed=4, max_squares=5)
    for o1, o2 in zip(os, os[1:]):
        assert isomorphic(o1, o2) == brute_isomorphic(o1, o2)
    rng = random.Random(5)
    for o in random_origamis(40, seed=6, max_squares=9):
        rho = list(range(o.squares))
        rng.shuffle(rho)
        o2 = relabel(o, rho)
        assert canonical_form(o2) == canonical_form(o) and isomorphic(o, o2)


def test_automorphisms_examples():
    assert automorphisms(stairs(4)) == [(1, 2, 3, 4), (3, 4, 1, 2)]
    assert automorphisms(stairs(3)) == [(1, 2, 3)]
    assert automorphisms(torus()) == [(1,)]


def test_automorphisms_against_brute_force():
    for o in random_origamis(80, seed=7, max_squares=6) + [stairs(4), stairs(6)]:
        auts = automorphisms(o)
        assert auts == brute_automorphisms(o)
        assert o.squares % len(auts) == 0
        group = set(auts)
        assert all(compose(s, t) in group for s in auts for t in auts)


# ---------------------------------------------------------------------------
# quotients
# ---------------------------------------------------------------------------

def test_quotient_examples():
    assert isomorphic(quotient(stairs(4), [3, 4, 1, 2]), stairs(2))
    assert isomorphic(quotient(stairs(8), [5, 6, 7, 8, 1, 2, 3, 4]), stairs(4))
    p = CoverParams(4, (3, 1, 3, 1))
    assert isomorphic(quotient(cyclic_cover_origami(p), cover_involution(p)), stairs(4))
    with pytest.raises(NotAutomorphism):
        quotient(stairs(3), [2, 3, 1])
    with pytest.raises(NotPermutation):
        quotient(stairs(3), [1, 1, 2])


def test_quotients_of_random_origamis():
    for o in random_origamis(150, seed=8, max_squares=10):
        for s in automorphisms(o):
            q = quotient(o, s)      # constructor checks connectivity
            order = 1
            t = s
            while t != tuple(range(1, o.squares + 1)):
                t = compose(s, t)
                order += 1
            assert q.squares * order == o.squares


# ---------------------------------------------------------------------------
# cyclic covers
# ---------------------------------------------------------------------------

def test_cover_examples():
    o = cyclic_cover_origami(CoverParams(4, (3, 1, 3, 1)))
    assert o.squares == 8 and genus_of(o) == 3
    o = cyclic_cover_origami(CoverParams(6, (5, 1, 3, 3)))
    assert o.squares == 12 and stratum(o) == Stratum([2, 2]) and genus_of(o) == 3
    o = cyclic_cover_origami(CoverParams(2, (1, 1, 1, 1)))
    assert o.squares == 4 and genus_of(o) == 1 and stratum(o) == Stratum()
    with pytest.raises(NotAbelianCase):
        cyclic_cover_origami(CoverParams(3, (1, 1, 2, 2)))


def abelian_params(N):
    for a1 in range(1, N, 2):
        for a2 in range(1, N, 2):
            for a3 in range(1, N, 2):
                a4 = -(a1 + a2 + a3) % N
                if a4 % 2 and gcd(N, a1, a2, a3, a4) == 1:
                    yield CoverParams(N, (a1, a2, a3, a4))


@pytest.mark.parametrize("N", [22, 26, 30])
def test_cover_cross_oracle_sample(N):
    rng = random.Random(N)
    ps = list(abelian_params(N))
    for p in rng.sample(ps, 40):
        o = cyclic_cover_origami(p)
        assert genus_of(o) == genus(p)
        assert stratum(o) == stratum_from_params(p)


@pytest.mark.parametrize("N", [2, 4, 6, 8, 10, 12])
def test_deck_group(N):
    for p in abelian_params(N):
        o = cyclic_cover_origami(p)
        T = deck_generator(p)
        T2 = compose(T, T)
        assert is_automorphism(o, T2)
        # T has order N on every square and preserves colours
        t = T
        for _ in range(N - 1):
            t = compose(T, t)
        assert t == tuple(range(1, 2 * N + 1))
        assert all((T[s - 1] <= N) == (s <= N) for s in range(1, 2 * N + 1))
        tau = cover_involution(p)
        if tau is not None:
            assert is_automorphism(o, tau) and compose(tau, tau) == t
