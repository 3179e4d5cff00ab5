"""Vector-space families over finite sets: the pull/push adjunction,
2-morphisms between spans, and canonical fillings over a vertex chain."""

from fractions import Fraction

from spankit import pushpull as pp
from spankit.pushpull import SetMap, Span, VectorFamily


def main():
    print("== the pull/push adjunction ==")
    f = SetMap.build((0, 1, 2), ("a", "b"),
                     lambda x: "a" if x < 2 else "b")
    v = VectorFamily.build((0, 1, 2), lambda x: x + 1)
    w = VectorFamily.build(("a", "b"), lambda y: 2)
    print("  pullback dims:", dict(pp.pullback_ls(f, w).dims))
    print("  pushforward dims:", dict(pp.pushforward_ls(f, v).dims))
    phi = pp.FamilyMap.build(pp.pullback_ls(f, w), v,
                             lambda x: tuple(
                                 tuple(Fraction(1) for _ in range(2))
                                 for _ in range(v.dim(x))))
    print("  adjunct round-trips:",
          pp.check_adjunction(f, v, w, [phi]))

    print("\n== vertical composition is matrix multiplication on dims ==")
    def point_span(name, size):
        apex = tuple("%s%d" % (name, i) for i in range(size))
        return Span((0,), apex, (0,),
                    tuple((a, 0) for a in apex), tuple((a, 0) for a in apex))
    l, m, n = point_span("l", 2), point_span("m", 2), point_span("n", 1)
    mm = pp.TwoMorphism.from_dims(l, m, lambda t: 1)
    nn = pp.TwoMorphism.from_dims(m, n, lambda t: 2)
    out = pp.compose2_vertical(mm, nn)
    print("  composite dims:", dict(out.payload.dims))

    print("\n== the unit law holds via an assembled isomorphism ==")
    composite, iso = pp.vertical_unit_law_iso(mm)
    identity = all(iso.mat(x) == tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(len(iso.mat(x))))
        for i in range(len(iso.mat(x)))) for x in iso.source.base)
    print("  comparison map is the identity:", identity)

    print("\n== canonical filling over a three-vertex chain ==")
    vertices = [("a", "b"), ("a",), ("a", "b")]
    spine = {}
    for a in range(2):
        base = tuple((x, y) for x in vertices[a] for y in vertices[a + 1])
        spine[a] = [VectorFamily.unit(base)]
    d = pp.synthesize_filling(vertices, 0, spine)
    print("  push-pull condition holds:", pp.is_pushpull(d))
    print("  long-edge system dims:", dict(d.r[(0, 2)][0].dims))
    psi, dof = pp.filling_iso_solutions(d, d)
    print("  self-comparison: unique (degrees of freedom = %d)" % dof)


if __name__ == "__main__":
    main()
