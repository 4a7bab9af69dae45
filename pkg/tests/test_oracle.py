import pytest
from hypothesis import given

from conftest import CHAIN3, CORPUS, TWO_FACET, complexes
from scx.complex import face, from_facets, full_simplex
from scx.errors import ComplexMismatch, FacetCapExceeded
from scx.game import cardinality_game, random_game
from scx.matroid import uniform_matroid
from scx.oracle import oracle_characterization, oracle_d_coefficients, oracle_order_independence
from scx.payoff import (
    d_coefficients,
    random_family,
    simplicial_payoff,
    traditional_family,
    uniform_family,
)
from scx.scheme import ValueScheme, check_efficiency, shapley_scheme, solve_scheme


def F(*vs):
    return face(vs)


class TestOracleD:
    def test_full_simplex(self):
        assert oracle_d_coefficients(full_simplex(4)).coeffs == {F(1, 2, 3, 4): 1}

    def test_two_facet(self):
        assert oracle_d_coefficients(TWO_FACET).coeffs == {F(1, 2, 3): 1, F(3, 4, 5): 1, F(3): -1}

    def test_chain3_cancellation(self):
        got = oracle_d_coefficients(CHAIN3)
        assert F(3) not in got.coeffs
        assert got == d_coefficients(CHAIN3)

    @pytest.mark.parametrize("name", sorted(CORPUS))
    def test_matches_main_path_exactly(self, name):
        a, b = oracle_d_coefficients(CORPUS[name]), d_coefficients(CORPUS[name])
        assert a.coeffs == b.coeffs
        assert all(type(x) is int for x in a.coeffs.values())

    @given(complexes(max_n=7, max_facets=7))
    def test_random_complexes(self, delta):
        assert oracle_d_coefficients(delta).coeffs == d_coefficients(delta).coeffs

    def test_cap(self):
        delta = uniform_matroid(2, 7)  # 21 facets
        with pytest.raises(FacetCapExceeded):
            oracle_d_coefficients(delta)


class TestOracleCharacterization:
    def test_shapley(self):
        delta = full_simplex(3)
        rep = oracle_characterization(delta, traditional_family(delta), shapley_scheme(delta), trials=100)
        assert rep.passed
        assert rep.max_abs_deviation <= 1e-9

    def test_zero_scheme_fails_on_grand_coalition(self):
        delta = full_simplex(3)
        rep = oracle_characterization(delta, traditional_family(delta), ValueScheme(delta, {}), trials=5)
        assert not rep
        names = [name for name, _, _ in rep.failures]
        assert "v_{1,2,3}" in names
        rhs, lhs = next((r, l) for name, r, l in rep.failures if name == "v_{1,2,3}")
        assert (lhs, rhs) == (0.0, 1.0)

    def test_solver_round_trip(self):
        d = d_coefficients(TWO_FACET)
        s, _ = solve_scheme(TWO_FACET, d)
        rep = oracle_characterization(TWO_FACET, d, s, trials=100)
        assert rep.max_abs_deviation <= 1e-8

    def test_game_count(self):
        # 13 nonempty faces give 13 inclusive and 14 strict carriers (with the empty one)
        rep = oracle_characterization(TWO_FACET, uniform_family(TWO_FACET), ValueScheme(TWO_FACET, {}), trials=3)
        assert rep.trials == 13 + 14 + 3

    @pytest.mark.parametrize("name", sorted(CORPUS))
    def test_agrees_with_checker(self, name):
        delta = CORPUS[name]
        for target in (uniform_family(delta), d_coefficients(delta), random_family(delta, 1)):
            s, _ = solve_scheme(delta, target)
            for scheme in (s, s.perturbed(next(iter(sorted(s.p))), 1e-3)):
                rep = oracle_characterization(delta, target, scheme, trials=10)
                assert rep.passed == check_efficiency(scheme, target).passed

    def test_mismatch(self):
        with pytest.raises(ComplexMismatch):
            oracle_characterization(TWO_FACET, uniform_family(CHAIN3), ValueScheme(TWO_FACET, {}))


class TestOracleOrders:
    def test_two_facet(self):
        rep = oracle_order_independence(random_game(TWO_FACET, 3), num_orders=10)
        assert rep.passed and rep.max_abs_deviation == 0

    def test_full_simplex(self):
        rep = oracle_order_independence(random_game(full_simplex(4), 3), num_orders=3)
        assert rep.passed and rep.max_abs_deviation == 0

    def test_chain3_spread(self):
        rep = oracle_order_independence(cardinality_game(CHAIN3), num_orders=6)
        assert rep.trials == 6
        assert set(rep.values) == {4, 5}
        assert rep.max_abs_deviation == 1
        assert not rep.passed

    def test_sampled_orders_are_seeded(self):
        v = random_game(uniform_matroid(2, 4), 0)
        a = oracle_order_independence(v, num_orders=5, seed=4)
        b = oracle_order_independence(v, num_orders=5, seed=4)
        assert a.values == b.values and a.trials == 5

    def test_canonical_value_matches_closed_form_on_matroids(self):
        for r, n in [(2, 3), (2, 4)]:
            v = random_game(uniform_matroid(r, n), 1)
            rep = oracle_order_independence(v, num_orders=20)
            assert rep.passed
            assert all(abs(x - simplicial_payoff(v)) <= 1e-12 for x in rep.values)

    def test_disjoint_facets_independent(self):
        rep = oracle_order_independence(random_game(from_facets(4, [[1, 2], [3, 4]]), 0), num_orders=2)
        assert rep.passed
