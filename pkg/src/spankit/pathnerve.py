"""The path 2-category, its binerve, labelled limits, and grid objects.

Path(l) has objects 0..l and Hom(i,j) the poset of subsets of [i,j]
containing both endpoints; horizontal composition is union.  Its nerve
in two simplicial directions consists of (u,v)-simplices: a chain of
u+1 objects together with, for each consecutive pair, a weak chain of
v+1 nested subsets.  Nondegenerate simplices live only in the range
u + v <= l and every simplex is the degeneracy of a unique one.

The labelled limit glues values of a two-variable simplicial object X
over the nondegenerate simplices; commutative-square objects of a
finite category (grid diagrams) provide the instances, and the strict
monoidal pipeline build_cq stacks the tensor-width, grid, and labelled
limit constructions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fincat import FinCategory
from .simplex import MonotoneMap, PointedMap, all_monotone_maps, underlying_monoid


# ---------------------------------------------------------------------------
# the path 2-category
# ---------------------------------------------------------------------------

class Path2Cat:
    """Path(l): objects 0..l, hom posets of endpoint-containing subsets."""

    def __init__(self, level):
        if level < 0:
            raise ValueError("negative level")
        self.level = level
        self.homs = {}
        for i in range(level + 1):
            for j in range(i, level + 1):
                if i == j:
                    self.homs[(i, j)] = [(i,)]
                    continue
                interior = range(i + 1, j)
                subsets = []
                for r in range(j - i):
                    for mid in itertools.combinations(interior, r):
                        subsets.append(tuple(sorted((i, j) + mid)))
                subsets.sort()
                self.homs[(i, j)] = subsets

    def hom(self, i, j):
        return self.homs.get((i, j), [])

    @staticmethod
    def compose(s, t):
        """Horizontal composition (union) of subsets s: i->j, t: j->k."""
        if s[-1] != t[0]:
            raise ValueError("not composable")
        return tuple(sorted(set(s) | set(t)))


def build_path(l):
    return Path2Cat(l)


# ---------------------------------------------------------------------------
# bisimplices of the nerve
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BiSimplex:
    """A (u,v)-simplex: objects i_0 <= ... <= i_u and, per consecutive
    pair, a weak chain of v+1 nested subsets of the hom poset."""

    u: int
    v: int
    objs: tuple
    chains: tuple  # chains[a][b] is the b-th subset from i_a to i_{a+1}


def nerve(l, u, v):
    """All (u,v)-simplices of the binerve of Path(l)."""
    path = Path2Cat(l)
    simplices = []
    for objs in itertools.combinations_with_replacement(range(l + 1), u + 1):
        per_pair = []
        for a in range(u):
            i, j = objs[a], objs[a + 1]
            homs = path.hom(i, j)
            chains = []
            for chain in itertools.product(homs, repeat=v + 1):
                if all(set(chain[b]) <= set(chain[b + 1]) for b in range(v)):
                    chains.append(chain)
            per_pair.append(chains)
        for pick in itertools.product(*per_pair):
            simplices.append(BiSimplex(u, v, objs, tuple(pick)))
    return simplices


def act(simplex, alpha, beta):
    """The bisimplicial action of (alpha, beta) : ([u'],[v']) -> ([u],[v])."""
    if alpha.target_size != simplex.u or beta.target_size != simplex.v:
        raise ValueError("size mismatch")
    up, vp = alpha.source_size, beta.source_size
    objs = tuple(simplex.objs[alpha(i)] for i in range(up + 1))
    chains = []
    for a in range(up):
        row = []
        for b in range(vp + 1):
            lo, hi = alpha(a), alpha(a + 1)
            if lo == hi:
                row.append((objs[a],))
                continue
            acc = simplex.chains[lo][beta(b)]
            for j in range(lo + 1, hi):
                acc = Path2Cat.compose(acc, simplex.chains[j][beta(b)])
            row.append(acc)
        chains.append(tuple(row))
    return BiSimplex(up, vp, objs, tuple(chains))


def is_degenerate(simplex):
    u, v = simplex.u, simplex.v
    for a in range(u):
        if (simplex.objs[a] == simplex.objs[a + 1]
                and all(c == (simplex.objs[a],) for c in simplex.chains[a])):
            return True
    for b in range(v):
        if all(simplex.chains[a][b] == simplex.chains[a][b + 1]
               for a in range(u)) and u > 0:
            return True
    # for u == 0 the chains are empty, so every v-direction step repeats
    if u == 0 and v > 0:
        return True
    return False


def nondegenerate_core(simplex):
    """The unique nondegenerate simplex this one is a degeneracy of."""
    s = simplex
    changed = True
    while changed:
        changed = False
        for a in range(s.u):
            if (s.objs[a] == s.objs[a + 1]
                    and all(c == (s.objs[a],) for c in s.chains[a])):
                alpha_vals = tuple(i if i <= a else i + 1 for i in range(s.u))
                alpha = MonotoneMap(s.u - 1, s.u, alpha_vals)
                s = act(s, alpha, MonotoneMap.identity(s.v))
                changed = True
                break
        if changed:
            continue
        for b in range(s.v):
            if s.u == 0 or all(s.chains[a][b] == s.chains[a][b + 1]
                               for a in range(s.u)):
                beta_vals = tuple(j if j <= b else j + 1 for j in range(s.v))
                beta = MonotoneMap(s.v - 1, s.v, beta_vals)
                s = act(s, MonotoneMap.identity(s.u), beta)
                changed = True
                break
    return s


def nondegenerate_table(l, bound=5):
    """Counts and lists of nondegenerate (u,v)-simplices for u+v <= bound."""
    if l > bound:
        raise ValueError("level exceeds configured bound")
    table = {}
    for u in range(bound + 1):
        for v in range(bound + 1 - u):
            nd = [s for s in nerve(l, u, v) if not is_degenerate(s)]
            table[(u, v)] = nd
    return table


def table_to_json(table):
    out = {}
    for (u, v), simplices in sorted(table.items()):
        out[f"({u},{v})"] = [
            {"objects": list(s.objs),
             "chains": [[list(sub) for sub in row] for row in s.chains]}
            for s in simplices
        ]
    return out


def counts_csv(table):
    lines = ["u,v,count"]
    for (u, v), simplices in sorted(table.items()):
        lines.append(f"{u},{v},{len(simplices)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# grid diagrams (commutative cubes) in a finite category
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridElement:
    """A functor from the product poset [k_1] x ... x [k_n] to a category.

    ``objs`` maps each node (a tuple) to an object; ``edges`` maps
    (node, axis) to the morphism from node to node+e_axis.  All unit
    squares commute, so path composites are well defined.
    """

    dims: tuple
    objs: tuple   # sorted tuple of (node, obj)
    edges: tuple  # sorted tuple of ((node, axis), morphism)

    def obj(self, node):
        return dict(self.objs)[node]

    def edge(self, node, axis):
        return dict(self.edges)[(node, axis)]


def _grid_nodes(dims):
    return list(itertools.product(*[range(k + 1) for k in dims]))


def square_n(cat, dims):
    """All commutative-grid diagrams of shape prod_i [k_i] in ``cat``.

    This realizes the commutative n-cube object of the nerve of ``cat``:
    the (k_1,..,k_n) component is the set of maps from the product of
    standard simplices, i.e. functors out of the grid poset.
    """
    nodes = _grid_nodes(dims)
    n = len(dims)
    results = []

    def extend(pos, objs, edges):
        if pos == len(nodes):
            results.append(GridElement(tuple(dims), tuple(sorted(objs.items())),
                                       tuple(sorted(edges.items()))))
            return
        node = nodes[pos]
        preds = []
        for ax in range(n):
            if node[ax] > 0:
                prev = tuple(c - 1 if i == ax else c for i, c in enumerate(node))
                preds.append((ax, prev))
        for obj in range(cat.n_objects):
            choices = []
            for ax, prev in preds:
                choices.append([(ax, prev, f) for f in cat.hom(objs[prev], obj)])
            for combo in itertools.product(*choices):
                ok = True
                new_edges = {(prev, ax): f for (ax, prev, f) in combo}
                # unit squares ending at this node must commute
                for (ax1, p1, f1), (ax2, p2, f2) in itertools.combinations(combo, 2):
                    pp = tuple(min(a, b) for a, b in zip(p1, p2))
                    g1 = edges[(pp, ax2)]   # pp -> p1 along ax2
                    g2 = edges[(pp, ax1)]   # pp -> p2 along ax1
                    if cat.comp[(f1, g1)] != cat.comp[(f2, g2)]:
                        ok = False
                        break
                if ok:
                    objs[node] = obj
                    edges.update(new_edges)
                    extend(pos + 1, objs, edges)
                    for k in new_edges:
                        del edges[k]
                    del objs[node]

    extend(0, {}, {})
    return results


def grid_composite(cat, grid, start, end):
    """The composite morphism of a grid diagram from node start to end."""
    node = start
    f = cat.identities[grid.obj(start)]
    for ax in range(len(grid.dims)):
        while node[ax] < end[ax]:
            f = cat.comp[(grid.edge(node, ax), f)]
            node = tuple(c + 1 if i == ax else c for i, c in enumerate(node))
    return f


def grid_act(cat, grid, maps):
    """Reindex a grid diagram along monotone maps, one per axis."""
    dims = tuple(m.source_size for m in maps)
    nodes = _grid_nodes(dims)
    objs = {}
    edges = {}
    for node in nodes:
        old = tuple(m(c) for m, c in zip(maps, node))
        objs[node] = grid.obj(old)
        for ax in range(len(dims)):
            if node[ax] < dims[ax]:
                nxt = tuple(c + 1 if i == ax else c for i, c in enumerate(node))
                old_nxt = tuple(m(c) for m, c in zip(maps, nxt))
                edges[(node, ax)] = grid_composite(cat, grid, old, old_nxt)
    return GridElement(dims, tuple(sorted(objs.items())),
                       tuple(sorted(edges.items())))


class SquareOfNerve:
    """The two-variable object X with X_{u,v} = grid diagrams [u] x [v].

    This is the commutative-square object of the nerve of a finite
    category, the instance family used for labelled limits.
    """

    def __init__(self, cat):
        self.cat = cat

    def values(self, u, v):
        return square_n(self.cat, (u, v))

    def act(self, alpha, beta, element):
        return grid_act(self.cat, element, (alpha, beta))


# ---------------------------------------------------------------------------
# labelled limits
# ---------------------------------------------------------------------------

def _injective_maps(m, n):
    out = []
    for vals in itertools.combinations(range(n + 1), m + 1):
        out.append(MonotoneMap(m, n, vals))
    return out


def labelled_limit(X, l):
    """The labelled limit over the nondegenerate category of elements.

    An element assigns to every nondegenerate (u,v)-simplex of the
    binerve (u+v <= l) an element of X_{u,v}, compatibly with all face
    maps between nondegenerate simplices.  Returns a list of dicts.
    """
    table = nondegenerate_table(l, bound=l)
    simplices = []
    for (u, v), nd in table.items():
        if u + v <= l:
            simplices.extend(nd)
    # higher dimension first so faces are forced early
    simplices.sort(key=lambda s: (-(s.u + s.v), s.objs, s.chains))
    index = {s: i for i, s in enumerate(simplices)}
    # face arrows: (source index, alpha, beta, target index)
    arrows = []
    for s in simplices:
        for up in range(s.u + 1):
            for vp in range(s.v + 1):
                for alpha in _injective_maps(up, s.u):
                    for beta in _injective_maps(vp, s.v):
                        t = act(s, alpha, beta)
                        if t in index and t != s:
                            arrows.append((index[s], alpha, beta, index[t]))
    out_arrows = [[] for _ in simplices]
    for (i, alpha, beta, j) in arrows:
        out_arrows[i].append((alpha, beta, j))

    values = [X.values(s.u, s.v) for s in simplices]
    results = []

    def extend(pos, assignment, forced):
        if pos == len(simplices):
            results.append({simplices[i]: assignment[i]
                            for i in range(len(simplices))})
            return
        candidates = ([forced[pos]] if pos in forced else values[pos])
        for x in candidates:
            new_forced = {}
            ok = True
            for (alpha, beta, j) in out_arrows[pos]:
                y = X.act(alpha, beta, x)
                if j < pos:
                    if assignment[j] != y:
                        ok = False
                        break
                elif j in forced or j in new_forced:
                    prev = new_forced.get(j, forced.get(j))
                    if prev != y:
                        ok = False
                        break
                else:
                    new_forced[j] = y
            if ok:
                assignment[pos] = x
                forced.update(new_forced)
                extend(pos + 1, assignment, forced)
                for k in new_forced:
                    del forced[k]
        assignment[pos] = None

    extend(0, [None] * len(simplices), {})
    return results


def labelled_limit_full(X, l, ubound=None, vbound=None):
    """Independent cross-check: limit over all simplices (degenerate ones
    included) in the window u <= ubound, v <= vbound with all monotone
    maps between them."""
    ubound = l if ubound is None else ubound
    vbound = l if vbound is None else vbound
    simplices = []
    for u in range(ubound + 1):
        for v in range(vbound + 1):
            simplices.extend(nerve(l, u, v))
    index = {s: i for i, s in enumerate(simplices)}
    out_arrows = [[] for _ in simplices]
    for s in simplices:
        for up in range(ubound + 1):
            for vp in range(vbound + 1):
                for alpha in all_monotone_maps(up, s.u):
                    for beta in all_monotone_maps(vp, s.v):
                        t = act(s, alpha, beta)
                        if t in index and t != s:
                            out_arrows[index[s]].append((alpha, beta, index[t]))
    values = [X.values(s.u, s.v) for s in simplices]
    results = []

    def extend(pos, assignment, forced):
        if pos == len(simplices):
            results.append({simplices[i]: assignment[i]
                            for i in range(len(simplices))})
            return
        candidates = ([forced[pos]] if pos in forced else values[pos])
        for x in candidates:
            new_forced = {}
            ok = True
            for (alpha, beta, j) in out_arrows[pos]:
                y = X.act(alpha, beta, x)
                if j < pos:
                    if assignment[j] != y:
                        ok = False
                        break
                elif j in forced or j in new_forced:
                    prev = new_forced.get(j, forced.get(j))
                    if prev != y:
                        ok = False
                        break
                else:
                    new_forced[j] = y
            if ok:
                assignment[pos] = x
                forced.update(new_forced)
                extend(pos + 1, assignment, forced)
                for k in new_forced:
                    del forced[k]
        assignment[pos] = None

    extend(0, [None] * len(simplices), {})
    return results


def spine_square_simplex(l):
    """The (1,1)-simplex {0,l} into {0,1,...,l} used by the projection."""
    return BiSimplex(1, 1, (0, l), ((((0, l), tuple(range(l + 1)))),))


def xi(element, l):
    """Project a labelled-limit element to its component at the
    (1,1)-simplex pairing the long edge {0,l} with the full spine."""
    if l < 2:
        raise ValueError("projection defined for l >= 2")
    return element[spine_square_simplex(l)]


# ---------------------------------------------------------------------------
# strict symmetric monoidal categories and the tensor pipeline
# ---------------------------------------------------------------------------

class FinSymMonCat:
    """A finite category with a strictly associative, strictly unital,
    strictly commutative tensor on objects and morphisms."""

    def __init__(self, cat, unit, obj_tensor, mor_tensor, check=True):
        self.cat = cat
        self.unit = unit
        self.obj_tensor = dict(obj_tensor)
        self.mor_tensor = dict(mor_tensor)
        if check:
            self._check()

    def _check(self):
        C = self.cat
        n, k = C.n_objects, len(C.morphisms)
        for a in range(n):
            for b in range(n):
                if (a, b) not in self.obj_tensor:
                    raise ValueError("object tensor not total")
                if self.obj_tensor[(a, b)] != self.obj_tensor[(b, a)]:
                    raise ValueError("object tensor not commutative")
            if (self.obj_tensor[(a, self.unit)] != a
                    or self.obj_tensor[(self.unit, a)] != a):
                raise ValueError("unit law fails on objects")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if (self.obj_tensor[(self.obj_tensor[(a, b)], c)]
                            != self.obj_tensor[(a, self.obj_tensor[(b, c)])]):
                        raise ValueError("object tensor not associative")
        for f in range(k):
            for g in range(k):
                fg = self.mor_tensor[(f, g)]
                want = (self.obj_tensor[(C.src(f), C.src(g))],
                        self.obj_tensor[(C.dst(f), C.dst(g))])
                if C.morphisms[fg] != want:
                    raise ValueError("morphism tensor breaks endpoints")
                if fg != self.mor_tensor[(g, f)]:
                    raise ValueError("morphism tensor not commutative")
            if self.mor_tensor[(f, C.identities[self.unit])] != f:
                raise ValueError("unit law fails on morphisms")
        for f in range(k):
            for g in range(k):
                for h in range(k):
                    if (self.mor_tensor[(self.mor_tensor[(f, g)], h)]
                            != self.mor_tensor[(f, self.mor_tensor[(g, h)])]):
                        raise ValueError("morphism tensor not associative")
        for a in range(n):
            for b in range(n):
                ia, ib = C.identities[a], C.identities[b]
                if self.mor_tensor[(ia, ib)] != C.identities[self.obj_tensor[(a, b)]]:
                    raise ValueError("tensor of identities is not an identity")
        for (g1, f1) in C.comp:
            for (g2, f2) in C.comp:
                left = self.mor_tensor[(C.comp[(g1, f1)], C.comp[(g2, f2)])]
                right_g = self.mor_tensor[(g1, g2)]
                right_f = self.mor_tensor[(f1, f2)]
                if C.comp[(right_g, right_f)] != left:
                    raise ValueError("tensor not functorial")

    @staticmethod
    def from_commutative_monoid(table, unit):
        """One-object strict symmetric monoidal category whose morphism
        tensor and composition are both the (commutative) monoid product."""
        cat = FinCategory.from_monoid(table, unit)
        mor = {(f, g): table[f][g] for f in range(len(table))
               for g in range(len(table))}
        return FinSymMonCat(cat, 0, {(0, 0): 0}, mor)

    @staticmethod
    def subsets_under_union(n):
        """Poset of subsets of {0..n-1} under inclusion, tensor = union."""
        objs = list(itertools.chain.from_iterable(
            itertools.combinations(range(n), r) for r in range(n + 1)))
        objs.sort(key=lambda s: (len(s), s))
        idx = {s: i for i, s in enumerate(objs)}
        cat = FinCategory.from_poset(
            len(objs), lambda a, b: set(objs[a]) <= set(objs[b]))
        obj_tensor = {}
        for a in range(len(objs)):
            for b in range(len(objs)):
                obj_tensor[(a, b)] = idx[tuple(sorted(set(objs[a]) | set(objs[b])))]
        mor_tensor = {}
        for f, (a1, b1) in enumerate(cat.morphisms):
            for g, (a2, b2) in enumerate(cat.morphisms):
                src = obj_tensor[(a1, a2)]
                dst = obj_tensor[(b1, b2)]
                mor_tensor[(f, g)] = cat.hom(src, dst)[0]
        return FinSymMonCat(cat, idx[()], obj_tensor, mor_tensor)

    def tensor_grid(self, g1, g2):
        """Pointwise tensor of two grid diagrams of the same shape."""
        objs = tuple(sorted((node, self.obj_tensor[(o1, dict(g2.objs)[node])])
                            for node, o1 in g1.objs))
        edges = tuple(sorted((key, self.mor_tensor[(m1, dict(g2.edges)[key])])
                             for key, m1 in g1.edges))
        return GridElement(g1.dims, objs, edges)

    def unit_grid(self, dims):
        nodes = _grid_nodes(dims)
        objs = tuple(sorted((node, self.unit) for node in nodes))
        edges = []
        for node in nodes:
            for ax in range(len(dims)):
                if node[ax] < dims[ax]:
                    edges.append(((node, ax), self.cat.identities[self.unit]))
        return GridElement(tuple(dims), objs, tuple(sorted(edges)))


class TensorGridObject:
    """The two-variable object X_{u,v} = (width t·k·u)-tuples of grid
    diagrams [v] x [n] in a strict monoidal category.

    The u-direction acts through the pointed-set structure: a monotone
    map alpha reindexes tensor-width via id_<tk> smashed with the
    underlying pointed map of alpha; the v-direction acts by grid
    reindexing.  The n-direction is a fixed parameter.
    """

    def __init__(self, Q, tk, n):
        self.Q = Q
        self.tk = tk
        self.n = n

    def values(self, u, v):
        grids = square_n(self.Q.cat, (v, self.n))
        return [tuple(t) for t in
                itertools.product(grids, repeat=self.tk * u)]

    def gamma_act(self, psi, element, v):
        """Γ-direction action on tuple width (tensor over preimages)."""
        out = []
        for j in range(1, psi.target_size + 1):
            pre = [k for k in range(1, psi.source_size + 1) if psi(k) == j]
            if not pre:
                out.append(self.Q.unit_grid((v, self.n)))
                continue
            acc = element[pre[0] - 1]
            for k in pre[1:]:
                acc = self.Q.tensor_grid(acc, element[k - 1])
            out.append(acc)
        return tuple(out)

    def act(self, alpha, beta, element):
        u, v = alpha.target_size, beta.target_size
        if len(element) != self.tk * u:
            raise ValueError("width mismatch")
        idn = MonotoneMap.identity(self.n)
        element = tuple(grid_act(self.Q.cat, g, (beta, idn)) for g in element)
        psi = PointedMap.identity(self.tk).smash(underlying_monoid(alpha))
        return self.gamma_act(psi, element, beta.source_size)


def qpow(Q, s, n):
    """Q^⊗_{s,n}: s-tuples of n-chains, encoded as (0, n)-grid diagrams."""
    chains = square_n(Q.cat, (0, n))
    return [tuple(t) for t in itertools.product(chains, repeat=s)]


def build_cq(Q, t, k, n, l):
    """The truncated tensor pipeline: width upgrade, commutative squares,
    and the labelled limit at level l.  Returns the list of elements."""
    X = TensorGridObject(Q, t * k, n)
    return labelled_limit(X, l)
