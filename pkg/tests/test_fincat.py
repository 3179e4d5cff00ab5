import random

import pytest

from spankit import fincat
from spankit.fincat import Diagram, FinCategory, FinFunctor


def random_poset_category(rng, n):
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                leq[i][j] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if leq[i][k] and leq[k][j]:
                    leq[i][j] = True
    return fincat.FinCategory.from_poset(n, lambda i, j: leq[i][j])


def chain_diagram(rng, n, max_size=3):
    """A random diagram on the chain category [n]: free on the
    consecutive maps, composites filled in from the tables."""
    shape = FinCategory.chain(n)
    sets = [["x%d_%d" % (a, i) for i in range(rng.randrange(1, max_size + 1))]
            for a in range(n + 1)]
    step = [{x: rng.choice(sets[a + 1]) for x in sets[a]} for a in range(n)]

    def arrow_map(s, d):
        out = {x: x for x in sets[s]}
        for a in range(s, d):
            out = {x: step[a][out[x]] for x in sets[s]}
        return out

    on_morphisms = [arrow_map(s, d) for (s, d) in shape.morphisms]
    return Diagram(shape, sets, on_morphisms)


def monotone_functor(rng, chain, poset, leq_check=None):
    """A functor from a chain category into a poset category."""
    n = chain.n_objects - 1
    m = poset.n_objects
    while True:
        objs = sorted(rng.randrange(m) for _ in range(n + 1))
        if all(poset.hom(objs[i], objs[i + 1]) for i in range(n)):
            break
    mor_map = []
    for (s, d) in chain.morphisms:
        mor_map.append(poset.hom(objs[s], objs[d])[0])
    return FinFunctor(chain, poset, objs, mor_map)


class TestFinCategory:
    def test_chain_hom_sizes(self):
        c = FinCategory.chain(3)
        for i in range(4):
            for j in range(4):
                assert len(c.hom(i, j)) == (1 if i <= j else 0)

    def test_from_monoid(self):
        z3 = FinCategory.from_monoid(
            [[(i + j) % 3 for j in range(3)] for i in range(3)], 0)
        assert z3.n_objects == 1
        assert len(z3.morphisms) == 3

    def test_opposite_involution(self):
        rng = random.Random(0)
        c = random_poset_category(rng, 4)
        assert c.opposite().opposite().morphisms == c.morphisms

    def test_bad_tables_rejected(self):
        # identity law broken: id . f comes out as id
        with pytest.raises(ValueError):
            FinCategory(1, [(0, 0), (0, 0)], [0],
                        {(0, 0): 0, (0, 1): 0, (1, 0): 1, (1, 1): 0})


class TestLimits:
    def test_limit_matches_bruteforce(self):
        rng = random.Random(1)
        for _ in range(20):
            d = chain_diagram(rng, rng.randrange(1, 4))
            fast = sorted(fincat.limit(d).apex)
            slow = sorted(fincat.limit_bruteforce(d))
            assert fast == slow

    def test_limit_of_pullback_shape(self):
        # cospan x -> z <- y with two-point fibers
        shape = fincat.FinCategory.from_poset(
            3, lambda i, j: i == j or j == 2)
        sets = [["x0", "x1"], ["y0", "y1"], ["z0", "z1"]]
        maps = []
        for f, (s, d) in enumerate(shape.morphisms):
            if s == d:
                maps.append({v: v for v in sets[s]})
            elif s == 0:
                maps.append({"x0": "z0", "x1": "z1"})
            else:
                maps.append({"y0": "z0", "y1": "z0"})
        d = fincat.Diagram(shape, sets, maps)
        apex = fincat.limit(d).apex
        assert sorted(apex) == [("x0", "y0", "z0"), ("x0", "y1", "z0")]
        assert fincat.check_cone_terminal(d, fincat.limit(d))


class TestEndsAndNat:
    def test_end_of_hom_is_nat(self):
        rng = random.Random(2)
        for _ in range(10):
            n = rng.randrange(1, 3)
            f = chain_diagram(rng, n)
            g = chain_diagram(rng, n)
            h = fincat.hom_bifunctor(f, g)
            wedges = fincat.end(h)
            nats = fincat.nat_transformations(f, g)
            assert len(wedges) == len(nats)
            wedge_keys = sorted(
                tuple(sorted(w[a]) for a in sorted(w)) for w in wedges)
            nat_keys = sorted(
                tuple(sorted(eta[a].items())
                      for a in range(len(eta))) for eta in nats)
            assert wedge_keys == nat_keys

    def test_coend_point_count(self):
        rng = random.Random(3)
        f = chain_diagram(rng, 2)
        g = chain_diagram(rng, 2)
        h = fincat.hom_bifunctor(f, g)
        classes, quotient = fincat.coend(h)
        assert sum(len(c) for c in classes) == len(quotient)


class TestRightKan:
    def test_comma_equals_end_formula(self):
        rng = random.Random(4)
        for _ in range(25)              :
            chain = FinCategory.chain(rng.randrange(1, 3))
            poset = random_poset_category(rng, rng.randrange(2, 4))
            f = monotone_functor(rng, chain, poset)
            g = chain_diagram(rng, chain.n_objects - 1)
            for b in range(poset.n_objects):
                via_comma, _ = fincat.right_kan(f, g, b)
                via_end = fincat.right_kan_end_formula(f, g, b)
                assert len(via_comma) == len(via_end)

    def test_kan_along_identity(self):
        rng = random.Random(5)
        chain = FinCategory.chain(2)
        ident = FinFunctor(chain, chain, [0, 1, 2],
                           list(range(len(chain.morphisms))))
        g = chain_diagram(rng, 2)
        for b in range(3):
            fams, _ = fincat.right_kan(ident, g, b)
            assert len(fams) == len(g.on_objects[b])


class TestCotensor:
    def test_function_set_size(self):
        assert len(fincat.cotensor(["t0", "t1"], ["a", "b", "c"])) == 9
        assert len(fincat.cotensor([], ["a"])) == 1
