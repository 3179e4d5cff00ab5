from fractions import Fraction

import pytest

from spankit import crw
from spankit.crw import Generator as G

ONE = Fraction(1)


class TestGenerators:
    def test_bad_parity_rejected(self):
        with pytest.raises(ValueError):
            G("x", 2, 1)

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            G("x", 0, -1)

    def test_even_weight_zero_rejected(self):
        with pytest.raises(ValueError):
            G("x", 0, 0)

    def test_odd_weight_zero_allowed(self):
        assert G("eps", 1, 0).weight == 0


class TestPolynomials:
    GENS = [G("a", 1, 1), G("b", 1, 1), G("x", 0, 1)]

    def test_odd_square_vanishes(self):
        a = crw.poly_gen(self.GENS, "a")
        assert crw.poly_mul(self.GENS, a, a) == {}

    def test_koszul_sign(self):
        a = crw.poly_gen(self.GENS, "a")
        b = crw.poly_gen(self.GENS, "b")
        ab = crw.poly_mul(self.GENS, a, b)
        ba = crw.poly_mul(self.GENS, b, a)
        assert ab == {(1, 1, 0): ONE}
        assert ba == {(1, 1, 0): -ONE}

    def test_even_factors_commute(self):
        x = crw.poly_gen(self.GENS, "x")
        a = crw.poly_gen(self.GENS, "a")
        assert crw.poly_mul(self.GENS, x, a) == crw.poly_mul(self.GENS, a, x)

    def test_add_cancels(self):
        a = crw.poly_gen(self.GENS, "a")
        assert crw.poly_add(a, crw.poly_scale(-1, a)) == {}

    def test_str_format(self):
        p = {(1, 1, 0): ONE, (0, 0, 2): Fraction(-1, 2)}
        assert crw.poly_str(self.GENS, p) == "-1/2*x^2 + a*b"


class TestAlgebra:
    def test_power_rule_normalizes(self):
        alg = crw.GradedDGAlgebra([G("x", 0, 1)],
                                  power_rules={"x": (3, {})})
        x = alg.gen("x")
        x2 = alg.mul(x, x)
        assert alg.mul(x2, x) == {}
        assert alg.mul(x2, x2) == {}

    def test_leibniz_rule(self):
        alg = crw.GradedDGAlgebra(
            [G("x", 0, 1), G("eps", 1, 1)],
            differential={"eps": {(1, 0): ONE}})
        x, eps = alg.gen("x"), alg.gen("eps")
        xe = alg.mul(x, eps)
        assert alg.d(xe) == alg.mul(x, x)
        # d(eps * x^2) = x^3 as well, with the sign from parity 1
        assert alg.d(alg.mul(eps, alg.mul(x, x))) == alg.mul(
            x, alg.mul(x, x))

    def test_differential_must_preserve_weight(self):
        with pytest.raises(ValueError):
            crw.GradedDGAlgebra(
                [G("x", 0, 1), G("eps", 1, 3)],
                differential={"eps": {(1, 0): ONE}})

    def test_differential_must_flip_parity(self):
        with pytest.raises(ValueError):
            crw.GradedDGAlgebra(
                [G("x", 0, 1), G("y", 0, 1)],
                differential={"y": {(1, 0): ONE}})

    def test_d_squared_enforced(self):
        # d(a) = b, d(b) = a gives d^2(a) = a
        with pytest.raises(ValueError):
            crw.GradedDGAlgebra(
                [G("a", 1, 1), G("b", 0, 1)],
                differential={"a": {(0, 1): ONE}, "b": {(1, 0): ONE}})

    def test_graded_dims_polynomial_ring(self):
        alg = crw.GradedDGAlgebra([G("x", 0, 1), G("y", 0, 1)])
        assert alg.graded_dims(3) == [(0, 1, 0), (1, 2, 0), (2, 3, 0),
                                      (3, 4, 0)]


class TestCohomology:
    def test_koszul_critical_locus_of_cubic(self):
        # K[x; eps], d(eps) = x^2: cohomology is K[x]/(x^2), all even
        alg = crw.GradedDGAlgebra(
            [G("x", 0, 1), G("eps", 1, 2)],
            differential={"eps": {(2, 0): ONE}})
        assert crw.cohomology(alg, 4) == [
            (0, 1, 0), (1, 1, 0), (2, 0, 0), (3, 0, 0), (4, 0, 0)]

    def test_contractible_koszul(self):
        # d(eps) = 1 contracts everything
        alg = crw.GradedDGAlgebra(
            [G("x", 0, 1), G("eps", 1, 0)],
            differential={"eps": {(0, 0): ONE}})
        assert all(e == 0 and o == 0
                   for (_, e, o) in crw.cohomology(alg, 4))

    def test_zero_differential_keeps_everything(self):
        alg = crw.GradedDGAlgebra([G("x", 0, 1), G("eps", 1, 1)])
        table = crw.cohomology(alg, 3)
        assert table == [(0, 1, 0), (1, 1, 1), (2, 1, 1), (3, 1, 1)]

    def test_csv_format(self):
        out = crw.cohomology_csv([(0, 1, 0), (1, 2, 3)])
        assert out == "weight,even_dim,odd_dim\n0,1,0\n1,2,3\n"


class TestQuotients:
    def test_substitution_eliminates_generator(self):
        gens = [G("x", 0, 1), G("y", 0, 2)]
        rel = crw.poly_add(crw.poly_gen(gens, "y"),
                           crw.poly_scale(-1, {(2, 0): ONE}))
        alg = crw.quotient_algebra(gens, [rel])
        assert [g.name for g in alg.gens] == ["x"]

    def test_power_rewrite_truncates(self):
        gens = [G("x", 0, 1)]
        alg = crw.quotient_algebra(gens, [{(2,): ONE}])
        assert alg.graded_dims(3) == [(0, 1, 0), (1, 1, 0), (2, 0, 0),
                                      (3, 0, 0)]

    def test_unsupported_relation_rejected(self):
        gens = [G("x", 0, 1), G("y", 0, 1)]
        mixed = {(1, 1): ONE}  # xy = 0 is neither shape
        with pytest.raises(ValueError):
            crw.quotient_algebra(gens, [mixed])


class TestKoszulIntersections:
    def test_origin_self_intersection_on_line(self):
        alg = crw.koszul_intersection([G("x", 0, 1)], [], [{(1,): ONE}])
        t = crw.cohomology(alg, 3)
        assert t[0] == (0, 1, 0)
        assert all(e == 0 and o == 0 for (_, e, o) in t[1:])

    def test_transverse_axes_in_plane(self):
        alg = crw.koszul_intersection(
            [G("x", 0, 1), G("y", 0, 1)],
            [{(1, 0): ONE}], [{(0, 1): ONE}])
        t = crw.cohomology(alg, 3)
        assert t[0] == (0, 1, 0)
        assert all(e == 0 and o == 0 for (_, e, o) in t[1:])

    def test_self_intersection_keeps_odd_class(self):
        # intersecting the origin with itself twice on a line leaves
        # one odd generator acting freely in weight 1
        alg = crw.koszul_intersection(
            [G("x", 0, 1)], [{(1,): ONE}], [{(1,): ONE}])
        t = crw.cohomology(alg, 2)
        assert t[0] == (0, 1, 0)
        assert t[1] == (1, 0, 1)

    def test_inhomogeneous_equation_rejected(self):
        gens = [G("x", 0, 1)]
        with pytest.raises(ValueError):
            crw.koszul_intersection(gens, [], [{(1,): ONE, (0,): ONE}])


class TestModules:
    def test_module_d_squared_enforced(self):
        alg = crw.GradedDGAlgebra([G("x", 0, 1)])
        gens = [G("a", 0, 1), G("b", 1, 2)]
        # d(b) = x a, d(a) = 0 is fine; making d(a) hit b breaks d^2
        good = [[{}, {(1,): ONE}], [{}, {}]]
        crw.DGModule(alg, gens, good)
        bad = [[{}, {(1,): ONE}], [{(1,): ONE}, {}]]
        with pytest.raises(ValueError):
            crw.DGModule(alg, gens, bad)

    def test_chain_maps_between_free_rank_one(self):
        alg = crw.GradedDGAlgebra([G("x", 0, 1)])
        m = crw.DGModule.free(alg, [G("m", 0, 1)])
        n = crw.DGModule.free(alg, [G("n", 0, 1)])
        # even weight-0 maps m -> c n with c scalar: one dimension
        assert crw.chain_map_dimension(m, n) == 1

    def test_pullback_transports_differential(self):
        r = crw.GradedDGAlgebra([G("x", 0, 1)])
        s = crw.GradedDGAlgebra([G("x", 0, 1)], power_rules={"x": (2, {})})
        phi = crw.algebra_map(r, s, {"x": s.gen("x")})
        gens = [G("a", 0, 1), G("b", 1, 3)]
        m = crw.DGModule(r, gens, [[{}, {(2,): ONE}], [{}, {}]])
        mm = crw.module_pullback(r, s, phi, m)
        assert mm.algebra is s
        assert mm.d_entries[0][1] == {}  # x^2 dies in the truncation

    def test_adjunction_dimensions_agree(self):
        r = crw.GradedDGAlgebra([G("x", 0, 1)])
        s = crw.GradedDGAlgebra([G("x", 0, 1)], power_rules={"x": (3, {})})
        phi = crw.algebra_map(r, s, {"x": s.gen("x")})
        for k, j in [(1, 1), (2, 1), (1, 2), (2, 2)]:
            m = crw.DGModule.free(r, [G("m%d" % i, 0, 1) for i in range(k)])
            n = crw.DGModule.free(s, [G("n%d" % i, 0, 1) for i in range(j)])
            d1 = crw.chain_map_dimension(crw.module_pullback(r, s, phi, m), n)
            d2 = crw.chain_map_dimension(
                m, crw.module_pushforward(r, s, phi, n))
            assert d1 == d2

    def test_algebra_map_must_kill_relations(self):
        r = crw.GradedDGAlgebra([G("x", 0, 1)], power_rules={"x": (2, {})})
        s = crw.GradedDGAlgebra([G("x", 0, 1)])
        with pytest.raises(ValueError):
            crw.algebra_map(r, s, {"x": s.gen("x")})


class TestWorkedExample:
    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            crw.build_intro_algebras(1)

    def test_report_for_cubic_potential(self):
        a, b, report = crw.build_intro_algebras(2)
        assert report["A_d_squared_zero"] is True
        assert report["B_d_squared_zero"] is True
        assert report["A_commutative"] is False
        assert report["A_d_theta_scalar"] == "x"
        assert report["A_d_dtheta_scalar"] == "1/3*x^2"
        assert report["quoted_d_dtheta"] == "3*x^2"
        assert report["d_dtheta_mismatch_factor"] == "9"
        assert report["A_weight_gradable"] is False

    def test_koszul_model_cohomology(self):
        for n in (2, 3, 4):
            a, b, report = crw.build_intro_algebras(n)
            table = crw.cohomology(b, n + 2)
            for (w, e, o) in table:
                assert e == (1 if w < n else 0)
                assert o == 0

    def test_matrix_factorization_relations(self):
        a = crw.MatrixFactorizationAlgebra(3)
        th, dth = a.theta(), a.dtheta_gen()
        assert a.mul(th, th) == {}
        assert a.mul(dth, dth) == {}
        assert a.add(a.mul(th, dth), a.mul(dth, th)) == a.one()
        assert a.d_squared_zero()
