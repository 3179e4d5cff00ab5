"""Index shapes: interval and subset posets, path categories, and the
bisimplex tables behind the labelled limits."""

from spankit import pathnerve as pn, simplex


def main():
    print("== interval poset of level 3 ==")
    sigma = simplex.build_sigma(3)
    print("objects:", len(sigma.objects),
          " bottom layer:", sum(1 for f in sigma.lambda_flags if f))

    print("\n== subset poset of level 2 ==")
    theta = simplex.build_theta(2)
    for obj, flag in zip(theta.objects, theta.xi_flags):
        print(" ", set(obj), "(bottom)" if flag else "")

    print("\n== path category hom sizes, level 4 ==")
    cat = pn.build_path(4)
    for j in range(1, 5):
        print("  hom(0, %d): %d subsets" % (j, len(cat.hom(0, j))))
    print("  compose (0,2) . (2,4) =", cat.compose((0, 2), (2, 4)))

    print("\n== nondegenerate bisimplices of the level-2 shape ==")
    table = pn.nondegenerate_table(2, bound=2)
    for (u, v) in sorted(table):
        if table[(u, v)]:
            print("  (%d,%d): %d cells" % (u, v, len(table[(u, v)])))


if __name__ == "__main__":
    main()
