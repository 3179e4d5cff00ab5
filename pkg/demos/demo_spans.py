"""Spans of finite sets: composition by pullback, diagrams over product
posets, and cartesian replacement."""

import random

from spankit import spans as sp
from spankit.simplex import PointedMap


def main():
    print("== composing two spans by pullback ==")
    s1 = sp.Span(("x",), ("a", "b"), ("y", "z"),
                 (("a", "x"), ("b", "x")), (("a", "y"), ("b", "z")))
    s2 = sp.Span(("y", "z"), ("c",), ("w",), (("c", "y"),), (("c", "w"),))
    out = sp.compose_spans(s1, s2)
    print("  apex of the composite:", out.apex)

    print("\n== a cartesian diagram from bottom data ==")
    rng = random.Random(0)
    poset = sp.ProductPoset((2,), ())
    labels = {}
    maps = {}
    for x in poset.objects:
        if poset.is_bottom(x):
            labels[x] = [["e%d" % i for i in range(rng.randrange(1, 4))]]
    for (a, b) in poset.covers:
        if poset.is_bottom(a):
            maps[(a, b)] = [{e: rng.choice(labels[b][0])
                             for e in labels[a][0]}]
    F = sp.diagram_from_bottom(poset, 1, labels, maps)
    ok, _ = sp.is_cartesian(F)
    print("  cartesian:", ok)
    top = max(poset.objects, key=lambda x: x[0].source_size)
    print("  top value (composable chains):", len(F.labels[top][0]))

    print("\n== breaking and repairing cartesianness ==")
    F.labels[top][0] = F.labels[top][0][:1]
    for (a, b) in poset.covers:
        if a == top:
            F.maps[(a, b)][0] = {e: F.maps[(a, b)][0][e]
                                 for e in F.labels[top][0]}
    broken = sp.GeneralizedSpanDiagram(poset, 1, F.labels, F.maps,
                                       check=False)
    print("  after truncating the top label:",
          sp.is_cartesian(broken)[0])
    G, _ = sp.cartesian_replacement(broken)
    print("  after replacement:", sp.is_cartesian(G)[0],
          "- top restored to", len(G.labels[top][0]), "chains")

    print("\n== reindexing along a pointed map merges slots ==")
    F2 = sp.diagram_from_bottom(poset, 1, labels, maps)
    wide = sp.gamma_act(PointedMap(1, 2, (1,)), F2)
    print("  width after splitting:", wide.width)


if __name__ == "__main__":
    main()
