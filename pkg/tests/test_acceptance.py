"""End-to-end acceptance checks: each test states its exactness claim
and asserts a wall-clock budget alongside it."""

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from spankit import crw, fincat, pathnerve as pn, pushpull as pp, ratlin
from spankit import simplex, spans as sp
from spankit.fincat import Diagram, FinCategory, FinFunctor
from spankit.pushpull import FamilyMap, VectorFamily
from spankit.simplex import MonotoneMap


@contextmanager
def budget(seconds):
    start = time.monotonic()
    yield
    elapsed = time.monotonic() - start
    assert elapsed < seconds, "exceeded %.0fs budget (%.1fs)" % (
        seconds, elapsed)


# ---------------------------------------------------------------------------
# shared random builders and oracles
# ---------------------------------------------------------------------------

def random_category(rng, max_objects=5):
    kind = rng.randrange(3)
    if kind == 0:
        return FinCategory.chain(rng.randrange(1, max_objects))
    if kind == 1:
        n = rng.randrange(2, max_objects + 1)
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
        return FinCategory.from_poset(n, lambda i, j: leq[i][j])
    k = rng.randrange(2, 5)
    return FinCategory.from_monoid(
        [[(i + j) % k for j in range(k)] for i in range(k)], 0)


def square_fiber_product(X):
    """Direct model of the level-2 labelled limit: pairs of a triangle
    and a square glued along the composite edge, where the square's two
    vertical corner restrictions agree (both corner faces of the
    indexing square land on the same point of the shape)."""
    long_edge = MonotoneMap(1, 2, (0, 2))
    id1 = MonotoneMap.identity(1)
    id0 = MonotoneMap.identity(0)
    top = MonotoneMap(0, 1, (1,))
    bottom = MonotoneMap(0, 1, (0,))
    squares = [y for y in X.values(1, 1)
               if all(X.act(side, top, y) == X.act(side, bottom, y)
                      for side in (bottom, top))]
    out = []
    for x in X.values(2, 0):
        fx = X.act(long_edge, id0, x)
        out.extend((x, y) for y in squares if X.act(id1, top, y) == fx)
    return out


def chain_count(cat, k):
    """Number of k-chains of composable morphisms."""
    if k == 0:
        return cat.n_objects
    counts = {f: 1 for f in range(len(cat.morphisms))}
    for _ in range(k - 1):
        counts = {g: sum(c for f, c in counts.items()
                         if cat.dst(f) == cat.src(g))
                  for g in range(len(cat.morphisms))}
    return sum(counts.values())


def random_bottom_diagram(rng, sigma_levels, theta_levels, width=1,
                          max_label=3):
    poset = sp.ProductPoset(sigma_levels, theta_levels)
    bottom_labels = {}
    for x in poset.objects:
        if poset.is_bottom(x):
            bottom_labels[x] = [
                ["e%d" % i for i in range(rng.randrange(1, max_label + 1))]
                for _ in range(width)]
    bottom_maps = {}
    for (a, b) in poset.covers:
        if poset.is_bottom(a):
            bottom_maps[(a, b)] = [
                {e: rng.choice(bottom_labels[b][s])
                 for e in bottom_labels[a][s]}
                for s in range(width)]
    return sp.diagram_from_bottom(poset, width, bottom_labels, bottom_maps)


def direct_value_count(F, k, x, slot):
    """Iterated-pullback/product prediction for the cartesian value at
    x = (interval, subset) over SpanPoset(k) x SubsetPoset(l): a product
    over the singletons of the subset of the count of compatible edge
    chains along the interval in that slice."""
    phi, subset = x
    offset, length = phi.values[0], phi.source_size

    def slice_chains(s):
        if length == 0:
            vx = (MonotoneMap.inert(offset, 0, k), (s,))
            return len(F.labels[vx][slot])
        edges = [(MonotoneMap.inert(j, 1, k), (s,))
                 for j in range(offset, offset + length)]
        total = 0
        for choice in itertools.product(*[F.labels[e][slot] for e in edges]):
            ok = True
            for j in range(1, length):
                vx = (MonotoneMap.inert(offset + j, 0, k), (s,))
                left = F.maps[(edges[j - 1], vx)][slot][choice[j - 1]]
                right = F.maps[(edges[j], vx)][slot][choice[j]]
                if left != right:
                    ok = False
                    break
            if ok:
                total += 1
        return total

    out = 1
    for s in subset:
        out *= slice_chains(s)
    return out


def unit_spine(vertices, dim_fn):
    spine = {}
    for a in range(len(vertices) - 1):
        base = tuple((x, y) for x in vertices[a] for y in vertices[a + 1])
        spine[a] = [VectorFamily.build(base, dim_fn)]
    return spine


def inverse_family_map(phi):
    return FamilyMap.build(phi.target, phi.source,
                           lambda x: ratlin.inverse(phi.mat(x)))


def conjugated(rng, d):
    """A second filling over the same spine: transport of the structure
    maps along random invertible maps of the non-spine systems."""
    spine_pairs = {(j, j + 1) for j in range(d.l)}
    psi = {}
    for pr in d._pairs():
        psi[pr] = []
        for i in range(d.club + 1):
            if pr in spine_pairs:
                psi[pr].append(FamilyMap.identity(d.r[pr][i]))
                continue

            def block(x, fam=d.r[pr][i]):
                n = fam.dim(x)
                while True:
                    m = tuple(tuple(Fraction(rng.randrange(-2, 3))
                                    for _ in range(n)) for _ in range(n))
                    if not n or ratlin.is_invertible(m):
                        return m
            psi[pr].append(FamilyMap.build(d.r[pr][i], d.r[pr][i], block))
    phi = {}
    for s in d._faces():
        pi = pp._proj(d.vertices, s, (s[0], s[-1]))
        phi[s] = []
        for i in range(d.club + 1):
            seg = None
            for j in range(len(s) - 1):
                piece = pp.pullback_map(
                    pp._proj(d.vertices, s, (s[j], s[j + 1])),
                    psi[(s[j], s[j + 1])][i])
                seg = piece if seg is None else pp.tensor_map(seg, piece)
            long_inv = pp.pullback_map(
                pi, inverse_family_map(psi[(s[0], s[-1])][i]))
            phi[s].append(seg.compose(d.phi[s][i]).compose(long_inv))
    return pp.PushPullThetaDiagram(d.vertices, d.club, d.r, d.vertical, phi)


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
    return FinCategory.from_poset(n, lambda i, j: leq[i][j])


def chain_diagram(rng, n, max_size=3):
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


def monotone_functor(rng, chain, poset):
    n = chain.n_objects - 1
    m = poset.n_objects
    while True:
        objs = sorted(rng.randrange(m) for _ in range(n + 1))
        if all(poset.hom(objs[i], objs[i + 1]) for i in range(n)):
            break
    mor_map = [poset.hom(objs[s], objs[d])[0] for (s, d) in chain.morphisms]
    return FinFunctor(chain, poset, objs, mor_map)


# ---------------------------------------------------------------------------
# the eleven criteria
# ---------------------------------------------------------------------------

def test_01_poset_enumeration():
    with budget(1):
        sigma3 = simplex.build_sigma(3)
        assert len(sigma3.objects) == 10
        assert sum(1 for f in sigma3.lambda_flags if f) == 7
        theta2 = simplex.build_theta(2)
        assert len(theta2.objects) == 7
        assert sum(1 for f in theta2.xi_flags if f) == 3


def test_02_path_category_hom_sizes():
    with budget(1):
        for l in range(6):
            cat = pn.build_path(l)
            for i in range(l + 1):
                for j in range(i + 1, l + 1):
                    assert len(cat.hom(i, j)) == 2 ** (j - i - 1)


def test_03_nondegeneracy_lemma():
    with budget(10):
        for l in range(5):
            table = pn.nondegenerate_table(l, bound=l + 2)
            for (u, v), cells in table.items():
                if u + v > l:
                    assert cells == []
        counts = {k: len(v)
                  for k, v in pn.nondegenerate_table(2, bound=2).items()}
        assert (counts[(0, 0)], counts[(1, 0)], counts[(2, 0)],
                counts[(1, 1)], counts[(0, 1)]) == (3, 4, 1, 1, 0)


def test_04_labelled_limit_closed_forms():
    rng = random.Random(0)
    with budget(30):
        for _ in range(25):
            X = pn.SquareOfNerve(random_category(rng))
            assert len(pn.labelled_limit(X, 0)) == len(X.values(0, 0))
            assert len(pn.labelled_limit(X, 1)) == len(X.values(1, 0))
            assert len(pn.labelled_limit(X, 2)) == len(
                square_fiber_product(X))


def test_05_square_grid_facts():
    rng = random.Random(1)
    with budget(10):
        for _ in range(10):
            cat = random_category(rng)
            X = pn.SquareOfNerve(cat)
            for k in range(3):
                assert len(X.values(k, 0)) == chain_count(cat, k)
            pairs = sum(
                1
                for f1, g1 in itertools.product(
                    range(len(cat.morphisms)), repeat=2)
                if cat.dst(f1) == cat.src(g1)
                for f2, g2 in itertools.product(
                    range(len(cat.morphisms)), repeat=2)
                if cat.dst(f2) == cat.src(g2)
                and cat.compose(g2, f2) == cat.compose(g1, f1))
            assert len(X.values(1, 1)) == pairs
        walking = pn.SquareOfNerve(FinCategory.chain(1))
        assert len(walking.values(1, 1)) == 6


def test_06_cartesian_replacement_vs_direct():
    rng = random.Random(2)
    with budget(60):
        for k in range(4):
            for l in range(4):
                F = random_bottom_diagram(rng, (k,), (l,))
                G, _ = sp.cartesian_replacement(F)
                ok, witness = sp.is_cartesian(G)
                assert ok, witness
                for x in G.poset.objects:
                    assert len(G.labels[x][0]) == direct_value_count(
                        G, k, x, 0), x


def test_07_vertical_composition_oracle():
    rng = random.Random(3)
    with budget(60):
        for _ in range(200):
            def span(name, size):
                apex = tuple("%s%d" % (name, i) for i in range(size))
                return sp.Span((0,), apex, (0,),
                               tuple((a, 0) for a in apex),
                               tuple((a, 0) for a in apex))
            l = span("l", rng.randrange(1, 5))
            m = span("m", rng.randrange(1, 5))
            n = span("n", rng.randrange(1, 5))
            mm = pp.TwoMorphism.from_dims(l, m, lambda t: rng.randrange(0, 4))
            nn = pp.TwoMorphism.from_dims(m, n, lambda t: rng.randrange(0, 4))
            out = pp.compose2_vertical(mm, nn)
            for a in l.apex:
                for c in n.apex:
                    assert out.payload.dim((a, c)) == sum(
                        mm.payload.dim((a, b)) * nn.payload.dim((b, c))
                        for b in m.apex)
        # unit laws via the explicitly assembled isomorphisms
        for _ in range(10):
            l = sp.Span((0,), ("l0", "l1"), (0,),
                        (("l0", 0), ("l1", 0)), (("l0", 0), ("l1", 0)))
            m = sp.Span((0,), ("m0", "m1"), (0,),
                        (("m0", 0), ("m1", 0)), (("m0", 0), ("m1", 0)))
            mm = pp.TwoMorphism.from_dims(l, m, lambda t: rng.randrange(0, 3))
            composite, iso = pp.vertical_unit_law_iso(mm)
            assert composite.payload == mm.payload
            for x in iso.source.base:
                a = iso.mat(x)
                assert a == ratlin.identity(len(a))


def test_08_uniqueness_of_fillings():
    rng = random.Random(4)
    with budget(120):
        for l in (2, 3):
            vertices = [("a", "b")[:1 + (a % 2)] for a in range(l + 1)]
            spine = unit_spine(vertices,
                               lambda t: 1 + rng.randrange(2))
            d = pp.synthesize_filling(vertices, 0, spine)
            assert pp.is_pushpull(d)
            for _ in range(3):
                dc = conjugated(rng, d)
                assert pp.is_pushpull(dc)
                assert pp.fillings_isomorphic(d, dc)
            psi, dof = pp.filling_iso_solutions(d, d)
            assert psi is not None and dof == 0


def test_09_tensor_pipeline_closed_forms():
    with budget(60):
        examples = [
            pn.FinSymMonCat.from_commutative_monoid([[0, 1], [1, 0]], 0),
            pn.FinSymMonCat.from_commutative_monoid(
                [[(i + j) % 3 for j in range(3)] for i in range(3)], 0),
            pn.FinSymMonCat.subsets_under_union(1),
        ]
        for Q in examples:
            assert len(pn.build_cq(Q, 1, 1, 1, 0)) == 1
            assert len(pn.build_cq(Q, 1, 1, 1, 1)) == len(pn.qpow(Q, 1, 1))
            X = pn.TensorGridObject(Q, 1, 1)
            assert len(pn.build_cq(Q, 1, 1, 1, 2)) == len(
                square_fiber_product(X))


def test_10_derived_critical_locus():
    with budget(10):
        for n in range(2, 6):
            a, b, report = crw.build_intro_algebras(n)
            table = crw.cohomology(b, n + 2)
            for (w, e, o) in table:
                assert e == (1 if w < n else 0)
                assert o == 0
            assert report["A_d_squared_zero"]
            assert report["B_d_squared_zero"]
            for g in b.gens:
                assert b.d(b.d(b.gen(g.name))) == {}


def test_11_kan_and_end_cross_checks():
    rng = random.Random(5)
    with budget(60):
        count = 0
        while count < 100:
            chain = FinCategory.chain(rng.randrange(1, 3))
            poset = random_poset_category(rng, rng.randrange(2, 4))
            f = monotone_functor(rng, chain, poset)
            g = chain_diagram(rng, chain.n_objects - 1)
            for b in range(poset.n_objects):
                via_comma, _ = fincat.right_kan(f, g, b)
                via_end = fincat.right_kan_end_formula(f, g, b)
                assert len(via_comma) == len(via_end)
                count += 1
        for _ in range(10):
            n = rng.randrange(1, 3)
            f = chain_diagram(rng, n)
            g = chain_diagram(rng, n)
            wedges = fincat.end(fincat.hom_bifunctor(f, g))
            nats = fincat.nat_transformations(f, g)
            assert len(wedges) == len(nats)
