"""Generalized cartesian spans valued in finite sets.

A generalized span diagram labels the product poset Sigma^{k_1} x ... x
Theta^{l_1} x ... with tuples of finite sets (one per tuple slot) and a
map for every poset arrow.  Cartesianness means every label is, via the
canonical comparison, the limit of the diagram's restriction to the
bottom layer (intervals of length <= 1, singleton subsets) under the
object.  Cartesian replacement rebuilds every label as that limit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .simplex import (MonotoneMap, SpanPoset, SubsetPoset, build_sigma,
                      build_theta, push_sigma, push_theta)


# ---------------------------------------------------------------------------
# plain spans and pullback composition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Span:
    """A span  left_foot <- apex -> right_foot  of finite sets."""

    left_foot: tuple
    apex: tuple
    right_foot: tuple
    left_map: tuple   # pairs (apex element, foot element)
    right_map: tuple

    def __post_init__(self):
        lm, rm = dict(self.left_map), dict(self.right_map)
        for a in self.apex:
            if lm.get(a) not in self.left_foot or rm.get(a) not in self.right_foot:
                raise ValueError("span legs not total")

    def left(self, a):
        return dict(self.left_map)[a]

    def right(self, a):
        return dict(self.right_map)[a]

    @staticmethod
    def identity(x):
        x = tuple(x)
        idm = tuple((a, a) for a in x)
        return Span(x, x, x, idm, idm)

    def to_json(self):
        return {
            "feet": [[str(a) for a in self.left_foot],
                     [str(a) for a in self.right_foot]],
            "apex": [str(a) for a in self.apex],
            "left_map": [[str(a), str(b)] for a, b in self.left_map],
            "right_map": [[str(a), str(b)] for a, b in self.right_map],
        }


def compose_spans(s1, s2):
    """Composite span with apex the pullback over the shared foot."""
    if tuple(s1.right_foot) != tuple(s2.left_foot):
        raise ValueError("foot mismatch")
    apex = tuple((a, b) for a in s1.apex for b in s2.apex
                 if s1.right(a) == s2.left(b))
    left = tuple(((a, b), s1.left(a)) for (a, b) in apex)
    right = tuple(((a, b), s2.right(b)) for (a, b) in apex)
    return Span(tuple(s1.left_foot), apex, tuple(s2.right_foot), left, right)


# ---------------------------------------------------------------------------
# the indexing product poset
# ---------------------------------------------------------------------------

class ProductPoset:
    """Product of interval pyramids (sigma factors) and subset posets
    (theta factors).  Objects are tuples of factor objects; arrows go
    componentwise downward (to subintervals / subsets)."""

    def __init__(self, sigma_levels, theta_levels):
        self.sigma_levels = tuple(sigma_levels)
        self.theta_levels = tuple(theta_levels)
        self.factors = ([build_sigma(k) for k in sigma_levels]
                        + [build_theta(l) for l in theta_levels])
        self.objects = [tuple(o) for o in
                        itertools.product(*[f.objects for f in self.factors])]
        self._index = {o: i for i, o in enumerate(self.objects)}
        self.covers = []
        for obj in self.objects:
            for fi, factor in enumerate(self.factors):
                a = factor.index_of(obj[fi])
                for (i, j) in factor.hasse_edges:
                    if i == a:
                        tgt = list(obj)
                        tgt[fi] = factor.objects[j]
                        self.covers.append((obj, tuple(tgt)))

    def leq(self, a, b):
        return all(f.leq(x, y) for f, x, y in zip(self.factors, a, b))

    def is_bottom(self, obj):
        for factor, x in zip(self.factors, obj):
            if isinstance(factor, SpanPoset):
                if x.source_size > 1:
                    return False
            else:
                if len(x) > 1:
                    return False
        return True

    def bottom(self):
        return [o for o in self.objects if self.is_bottom(o)]

    def index_of(self, obj):
        return self._index[obj]


# ---------------------------------------------------------------------------
# generalized span diagrams
# ---------------------------------------------------------------------------

def _compose_dicts(outer, inner):
    return {k: outer[v] for k, v in inner.items()}


class GeneralizedSpanDiagram:
    """A width-t labelling of a product poset by finite sets and maps.

    ``labels[obj]`` is a list of t label sets (lists); ``maps[(a, b)]``,
    for each covering arrow a -> b, is a list of t dicts.  Functoriality
    (all composites between the same endpoints agree) is checked on
    construction.
    """

    def __init__(self, poset, width, labels, maps, check=True):
        self.poset = poset
        self.width = width
        self.labels = {o: [list(s) for s in labels[o]] for o in poset.objects}
        self.maps = {e: [dict(d) for d in maps[e]] for e in poset.covers}
        self._path_cache = {}
        if check:
            self._check()

    def _check(self):
        for obj in self.poset.objects:
            if len(self.labels[obj]) != self.width:
                raise ValueError("wrong number of label slots")
        for (a, b) in self.poset.covers:
            for s in range(self.width):
                d = self.maps[(a, b)][s]
                if set(d) != set(self.labels[a][s]):
                    raise ValueError("map not total on its label set")
                if not set(d.values()) <= set(self.labels[b][s]):
                    raise ValueError("map lands outside its target label set")
        # all cover paths with the same endpoints give the same composite
        for a in self.poset.objects:
            for b in self.poset.objects:
                if a == b or not self.poset.leq(a, b):
                    continue
                composites = []
                for (x, m) in self.poset.covers:
                    if x == a and (m == b or self.poset.leq(m, b)):
                        step = self.maps[(a, m)]
                        rest = ([{k: k for k in self.labels[b][s]}
                                 for s in range(self.width)]
                                if m == b else self.get_map(m, b))
                        composites.append([_compose_dicts(rest[s], step[s])
                                           for s in range(self.width)])
                for c in composites[1:]:
                    if c != composites[0]:
                        raise ValueError("diagram not functorial at %r -> %r"
                                         % (a, b))

    def get_map(self, a, b):
        """The composite map along any cover path from a to b."""
        if a == b:
            return [{k: k for k in self.labels[a][s]} for s in range(self.width)]
        key = (a, b)
        if key in self._path_cache:
            return self._path_cache[key]
        if not self.poset.leq(a, b):
            raise ValueError("no arrow between the given objects")
        for (x, m) in self.poset.covers:
            if x == a and (m == b or self.poset.leq(m, b)):
                step = self.maps[(a, m)]
                rest = self.get_map(m, b)
                out = [_compose_dicts(rest[s], step[s]) for s in range(self.width)]
                self._path_cache[key] = out
                return out
        raise ValueError("no cover path found")


def _slice_objects(F, x):
    return [y for y in F.poset.bottom() if F.poset.leq(x, y)]


def _slice_limit(F, x, slot):
    """Families over the bottom objects under x, compatible with all
    maps between them; returned as value tuples in slice order."""
    objs = _slice_objects(F, x)
    pos_of = {y: i for i, y in enumerate(objs)}
    out_arrows = [[] for _ in objs]
    for i, y in enumerate(objs):
        for j, z in enumerate(objs):
            if i != j and F.poset.leq(y, z):
                out_arrows[i].append((j, F.get_map(y, z)[slot]))
    results = []

    def extend(pos, assignment, forced):
        if pos == len(objs):
            results.append(tuple(assignment))
            return
        candidates = ([forced[pos]] if pos in forced
                      else F.labels[objs[pos]][slot])
        for v in candidates:
            new_forced = {}
            ok = True
            for (j, d) in out_arrows[pos]:
                w = d[v]
                if j < pos:
                    if assignment[j] != w:
                        ok = False
                        break
                elif j in forced or j in new_forced:
                    if new_forced.get(j, forced.get(j)) != w:
                        ok = False
                        break
                else:
                    new_forced[j] = w
            if ok:
                assignment[pos] = v
                forced.update(new_forced)
                extend(pos + 1, assignment, forced)
                for k in new_forced:
                    del forced[k]
        assignment[pos] = None

    extend(0, [None] * len(objs), {})
    return objs, results


def comparison_map(F, x, slot):
    """The canonical map from the label at x into its slice limit."""
    objs = _slice_objects(F, x)
    return {e: tuple(F.get_map(x, y)[slot][e] for y in objs)
            for e in F.labels[x][slot]}


def is_cartesian(F):
    """True iff every comparison into the slice limit is a bijection.
    Returns (flag, witness); witness is (object, slot) on failure."""
    for x in F.poset.objects:
        for s in range(F.width):
            _, fams = _slice_limit(F, x, s)
            comp = comparison_map(F, x, s)
            image = list(comp.values())
            if len(set(image)) != len(image) or set(image) != set(fams):
                return False, (x, s)
    return True, None


def cartesian_replacement(F):
    """Rebuild every label as the limit over its bottom slice.

    Returns (G, comparison) where G is the replaced diagram (labels are
    value tuples in slice order) and comparison[x][slot] is the
    canonical map from F's label into G's.
    """
    poset = F.poset
    new_labels = {}
    slices = {}
    for x in poset.objects:
        slots = []
        for s in range(F.width):
            objs, fams = _slice_limit(F, x, s)
            slots.append(fams)
        slices[x] = _slice_objects(F, x)
        new_labels[x] = slots
    new_maps = {}
    for (a, b) in poset.covers:
        sub = [slices[a].index(y) for y in slices[b]]
        new_maps[(a, b)] = [
            {fam: tuple(fam[i] for i in sub) for fam in new_labels[a][s]}
            for s in range(F.width)]
    G = GeneralizedSpanDiagram(poset, F.width, new_labels, new_maps)
    comparison = {x: [comparison_map(F, x, s) for s in range(F.width)]
                  for x in poset.objects}
    return G, comparison


# ---------------------------------------------------------------------------
# the three reindexing actions
# ---------------------------------------------------------------------------

def gamma_act(psi, F):
    """Pointed-map action on tuple slots: slot j of the result is the
    product of the slots in the preimage of j (singleton if empty)."""
    if psi.source_size != F.width:
        raise ValueError("width mismatch")
    pre = [[k for k in range(1, psi.source_size + 1) if psi(k) == j]
           for j in range(1, psi.target_size + 1)]
    labels = {}
    for x in F.poset.objects:
        labels[x] = [
            [tuple(t) for t in
             itertools.product(*[F.labels[x][k - 1] for k in ks])]
            for ks in pre]
    maps = {}
    for (a, b) in F.poset.covers:
        maps[(a, b)] = [
            {t: tuple(F.maps[(a, b)][k - 1][v] for k, v in zip(ks, t))
             for t in labels[a][j]}
            for j, ks in enumerate(pre)]
    return GeneralizedSpanDiagram(F.poset, psi.target_size, labels, maps)


def delta_act(F, factor_index, alpha, replace=None):
    """Reindex one poset factor along a monotone map alpha.

    For an interval (sigma) factor this is a pure reindex along the
    interval pushforward; for a subset (theta) factor the reindex along
    the image pushforward is followed by cartesian replacement (the
    reindex alone can break cartesianness on collapsed faces).  Set
    replace=False/True to override that default.
    """
    old = F.poset
    factor = old.factors[factor_index]
    is_sigma = isinstance(factor, SpanPoset)
    if alpha.target_size != factor.level:
        raise ValueError("level mismatch")
    sig = list(old.sigma_levels)
    th = list(old.theta_levels)
    if is_sigma:
        sig[factor_index] = alpha.source_size
    else:
        th[factor_index - len(sig)] = alpha.source_size
    new = ProductPoset(sig, th)

    def transport(obj):
        out = list(obj)
        out[factor_index] = (push_sigma(alpha, obj[factor_index]) if is_sigma
                             else push_theta(alpha, obj[factor_index]))
        return tuple(out)

    labels = {x: [list(s) for s in F.labels[transport(x)]]
              for x in new.objects}
    maps = {}
    for (a, b) in new.covers:
        maps[(a, b)] = F.get_map(transport(a), transport(b))
    G = GeneralizedSpanDiagram(new, F.width, labels, maps)
    if replace is None:
        replace = not is_sigma
    if replace:
        G, _ = cartesian_replacement(G)
    return G


# ---------------------------------------------------------------------------
# decorated spans
# ---------------------------------------------------------------------------

class DecoratedSpanDiagram:
    """A cartesian span diagram with an integer weight on every label
    element.  Weights are carried contravariantly only: no compatibility
    with the maps is imposed.  Under the slotwise product action the
    weights add up."""

    def __init__(self, diagram, weights, check=True):
        self.diagram = diagram
        self.weights = {o: [dict(d) for d in weights[o]]
                        for o in diagram.poset.objects}
        if check:
            flag, witness = is_cartesian(diagram)
            if not flag:
                raise ValueError("underlying diagram not cartesian at %r"
                                 % (witness,))
            for o in diagram.poset.objects:
                for s in range(diagram.width):
                    if set(self.weights[o][s]) != set(diagram.labels[o][s]):
                        raise ValueError("weights not total")

    def gamma_act(self, psi):
        G = gamma_act(psi, self.diagram)
        pre = [[k for k in range(1, psi.source_size + 1) if psi(k) == j]
               for j in range(1, psi.target_size + 1)]
        weights = {}
        for x in G.poset.objects:
            weights[x] = [
                {t: sum(self.weights[x][k - 1][v] for k, v in zip(ks, t))
                 for t in G.labels[x][j]}
                for j, ks in enumerate(pre)]
        return DecoratedSpanDiagram(G, weights)


# ---------------------------------------------------------------------------
# construction helpers and serialization
# ---------------------------------------------------------------------------

def diagram_from_bottom(poset, width, bottom_labels, bottom_maps):
    """Build the cartesian diagram generated by labels on the bottom
    layer: every other label is the slice limit.

    ``bottom_labels[obj]`` and ``bottom_maps[(a, b)]`` (for covers with
    both endpoints in the bottom) follow the same slot conventions as
    the diagram itself.
    """
    labels = {}
    maps = {}
    for x in poset.objects:
        if poset.is_bottom(x):
            labels[x] = [list(s) for s in bottom_labels[x]]
        else:
            labels[x] = [[] for _ in range(width)]
    for (a, b) in poset.covers:
        if poset.is_bottom(a):
            maps[(a, b)] = [dict(d) for d in bottom_maps[(a, b)]]
        else:
            maps[(a, b)] = [{} for _ in range(width)]
    F = GeneralizedSpanDiagram(poset, width, labels, maps, check=False)
    G, _ = cartesian_replacement(F)
    return G


def _obj_key(poset, obj):
    parts = []
    for factor, x in zip(poset.factors, obj):
        if isinstance(factor, SpanPoset):
            parts.append("i" + ",".join(map(str, x.values)))
        else:
            parts.append("s" + ",".join(map(str, x)))
    return "|".join(parts)


def diagram_to_json(F):
    out = {"sigma_levels": list(F.poset.sigma_levels),
           "theta_levels": list(F.poset.theta_levels),
           "width": F.width,
           "labels": {}, "maps": []}
    for x in F.poset.objects:
        out["labels"][_obj_key(F.poset, x)] = [
            [str(e) for e in s] for s in F.labels[x]]
    for (a, b) in F.poset.covers:
        out["maps"].append({
            "from": _obj_key(F.poset, a),
            "to": _obj_key(F.poset, b),
            "slots": [[[str(k), str(v)] for k, v in sorted(d.items(), key=repr)]
                      for d in F.maps[(a, b)]],
        })
    return out
