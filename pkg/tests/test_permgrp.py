import math
import random
from collections import Counter

import pytest

from oracles import (
    brute_minimal_block,
    closure_order,
    has_nontrivial_block,
    random_perm_group,
)
from planepuzzle.permgrp import (
    classify,
    compose,
    contains,
    cycle_type,
    format_cycle_type,
    group_order,
    identity,
    inverse,
    is_primitive,
    minimal_block,
    orbits,
    parity,
    schreier_sims,
)


def cyc(n, *cycles):
    p = list(range(n))
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:]):
            p[a] = b
        p[cycle[-1]] = cycle[0]
    return tuple(p)


# ---------------------------------------------------------------------------
# Cycle types and parity
# ---------------------------------------------------------------------------

def test_cycle_type_identity():
    assert cycle_type(identity(5), range(5)) == Counter({1: 5})


def test_cycle_type_restriction_and_invariance():
    p = cyc(6, (0, 1, 2), (3, 4))
    assert cycle_type(p, range(6)) == Counter({3: 1, 2: 1, 1: 1})
    assert cycle_type(p, (3, 4, 5)) == Counter({2: 1, 1: 1})
    with pytest.raises(ValueError, match="invariant"):
        cycle_type(p, (0, 1))  # leaks into {2}


def test_cycle_type_conjugation_invariant():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randrange(4, 9)
        g = list(range(n)); rng.shuffle(g); g = tuple(g)
        h = list(range(n)); rng.shuffle(h); h = tuple(h)
        conj = compose(compose(inverse(h), g), h)
        assert cycle_type(g, range(n)) == cycle_type(conj, range(n))


def test_format_cycle_type():
    assert format_cycle_type(Counter({1: 2, 3: 3})) == "1^2.3^3"
    assert format_cycle_type(Counter({7: 1})) == "7^1"


def test_parity_basics():
    assert parity(identity(4)) == "even"
    assert parity(cyc(4, (0, 1))) == "odd"
    assert parity(cyc(6, (0, 1, 2))) == "even"


def test_parity_is_a_homomorphism():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randrange(3, 9)
        g = list(range(n)); rng.shuffle(g); g = tuple(g)
        h = list(range(n)); rng.shuffle(h); h = tuple(h)
        expected = "even" if parity(g) == parity(h) else "odd"
        assert parity(compose(g, h)) == expected


# ---------------------------------------------------------------------------
# Stabilizer chain
# ---------------------------------------------------------------------------

def test_chain_sym4():
    chain = schreier_sims([cyc(4, (0, 1, 2, 3)), cyc(4, (0, 1))], 4)
    assert group_order(chain) == 24


def test_chain_cyclic3():
    chain = schreier_sims([cyc(3, (0, 1, 2))], 3)
    assert group_order(chain) == 3


def test_chain_trivial_group():
    assert group_order(schreier_sims([], 5)) == 1
    assert group_order(schreier_sims([identity(5)], 5)) == 1


def test_chain_sym30_factorial_order():
    n = 30
    gens = [cyc(n, tuple(range(n))), cyc(n, (0, 1))]
    assert group_order(schreier_sims(gens, n)) == math.factorial(30)


def test_chain_base_is_deterministic():
    gens = [cyc(6, (2, 3, 4)), cyc(6, (3, 4, 5))]
    c1 = schreier_sims(gens, 6)
    c2 = schreier_sims(gens, 6)
    assert c1.base == c2.base and c1.base[0] == 2
    assert c1.orbit_sizes() == c2.orbit_sizes()


def test_chain_rejects_bad_input():
    with pytest.raises(ValueError, match="degree"):
        schreier_sims([cyc(4, (0, 1)), cyc(5, (0, 1))], 4)
    with pytest.raises(ValueError, match="bijection"):
        schreier_sims([(0, 0, 1, 2)], 4)


def test_contains_basics():
    chain = schreier_sims([cyc(4, (0, 1, 2, 3)), cyc(4, (0, 1))], 4)
    assert contains(chain, identity(4))
    assert contains(chain, cyc(4, (0, 1, 2, 3)))
    alt4 = schreier_sims([cyc(4, (0, 1, 2)), cyc(4, (1, 2, 3))], 4)
    assert group_order(alt4) == 12
    assert not contains(alt4, cyc(4, (0, 1)))
    with pytest.raises(ValueError, match="degree"):
        contains(alt4, identity(5))


def test_contains_closed_under_products():
    rng = random.Random(23)
    for _ in range(20):
        degree, gens = random_perm_group(rng)
        chain = schreier_sims(gens, degree)
        g = gens[rng.randrange(len(gens))]
        h = gens[rng.randrange(len(gens))]
        assert contains(chain, compose(g, h))


def test_every_input_generator_is_member():
    rng = random.Random(31)
    for _ in range(20):
        degree, gens = random_perm_group(rng)
        chain = schreier_sims(gens, degree)
        assert all(contains(chain, g) for g in gens)


def test_order_matches_closure_oracle():
    # Frozen oracle: full element enumeration on small random groups.
    rng = random.Random(2024)
    for _ in range(60):
        degree, gens = random_perm_group(rng)
        assert group_order(schreier_sims(gens, degree)) == closure_order(gens)


def test_two_phase_input_handling():
    # More generators than 4*degree exercises the subsample + sift path.
    rng = random.Random(7)
    n = 6
    gens = []
    for _ in range(40):
        p = list(range(n)); rng.shuffle(p); gens.append(tuple(p))
    chain = schreier_sims(gens, n)
    assert group_order(chain) == closure_order(gens)
    assert all(contains(chain, g) for g in gens)
    assert len(chain.generating_indices) <= len(gens)
    reduced = [gens[i] for i in chain.generating_indices]
    assert group_order(schreier_sims(reduced, n)) == group_order(chain)


# ---------------------------------------------------------------------------
# Orbits, blocks, primitivity
# ---------------------------------------------------------------------------

def test_orbits_examples():
    assert orbits([cyc(3, (0, 1))], range(3)) == [(0, 1), (2,)]
    assert orbits([], range(2)) == [(0,), (1,)]
    with pytest.raises(ValueError, match="invariant"):
        orbits([cyc(3, (0, 2))], (0, 1))


def test_minimal_block_cyclic4():
    gens = [cyc(4, (0, 1, 2, 3))]
    dom = (0, 1, 2, 3)
    # Frozen from the brute-force partition oracle.
    assert brute_minimal_block(gens, 0, 2, dom) == (0, 2)
    assert minimal_block(gens, 0, 2) == (0, 2)
    assert brute_minimal_block(gens, 0, 1, dom) == dom
    assert minimal_block(gens, 0, 1) == dom


def test_minimal_block_symmetric_group():
    gens = [cyc(4, (0, 1, 2, 3)), cyc(4, (0, 1))]
    assert minimal_block(gens, 0, 1) == (0, 1, 2, 3)


def test_minimal_block_validation():
    gens = [cyc(4, (0, 1))]
    with pytest.raises(ValueError, match="transitive"):
        minimal_block(gens, 0, 2)
    with pytest.raises(ValueError, match="distinct"):
        minimal_block(gens, 1, 1)


def test_is_primitive_examples():
    assert is_primitive([cyc(4, (0, 1, 2, 3)), cyc(4, (0, 1))], range(4))
    assert not is_primitive([cyc(4, (0, 1, 2, 3))], range(4))
    with pytest.raises(ValueError, match="transitive"):
        is_primitive([cyc(4, (0, 1))], range(4))


def test_is_primitive_matches_partition_oracle():
    rng = random.Random(4242)
    checked = 0
    while checked < 25:
        degree, gens = random_perm_group(rng)
        dom = range(degree)
        if len(orbits(gens, dom)) != 1:
            continue
        expected = not has_nontrivial_block(gens, dom)
        assert is_primitive(gens, dom) == expected
        checked += 1


def test_minimal_block_matches_partition_oracle():
    rng = random.Random(777)
    checked = 0
    while checked < 25:
        degree, gens = random_perm_group(rng)
        dom = tuple(range(degree))
        if len(orbits(gens, dom)) != 1:
            continue
        b = rng.randrange(1, degree)
        assert minimal_block(gens, 0, b) == brute_minimal_block(gens, 0, b, dom)
        checked += 1


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

def test_classify_examples():
    assert classify(24, 4).tag == "symmetric"
    assert classify(360, 6).tag == "alternating"
    assert classify(95040, 12).tag == "other"


def test_classify_rejects_nonpositive():
    with pytest.raises(ValueError):
        classify(0, 4)
