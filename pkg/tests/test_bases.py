import math

import numpy as np
import pytest

from conftest import random_matrix, random_monic
from polyregions import GeneralizedBasis, MatrixPolynomial
from polyregions._validation import DimensionError
from polyregions.bases import (
    InvalidBasisError,
    basis_gamma,
    basis_zeros,
    convert_quadratic,
    convert_to_basis,
    verify_basis_condition,
)
from polyregions.problems import mass_spring, tridiag

S87 = math.sqrt(87)
B_NODE = complex(-1.5, S87 / 2)


def _random_nodes(rng, n):
    return list(rng.uniform(-2, 2, n) + 1j * rng.uniform(-2, 2, n))


class TestGamma:
    def test_newton_is_one(self, rng):
        assert basis_gamma(GeneralizedBasis.newton(_random_nodes(rng, 3))) == 1.0

    def test_power_is_one(self):
        assert basis_gamma(GeneralizedBasis.power(4)) == 1.0

    def test_symmetric_triple(self):
        # |0 - 1| / 2 + |0 + 1| / 2
        assert basis_gamma(GeneralizedBasis.quadratic_general(0, 1, -1)) == pytest.approx(1.0, abs=1e-15)

    def test_mass_spring_triple(self):
        B = GeneralizedBasis.quadratic_general(-8, B_NODE, B_NODE.conjugate())
        assert B.gamma == pytest.approx(16 / S87, abs=1e-14)

    def test_generic_stored(self):
        B = GeneralizedBasis.generic([[0], [1, 2]], [[1], [0.5, 0.5]], 1.5)
        assert basis_gamma(B) == 1.5

    def test_at_least_one(self, rng):
        for _ in range(1000):
            a, b, c = rng.normal(size=3) + 1j * rng.normal(size=3)
            assert GeneralizedBasis.quadratic_general(a, b, c).gamma >= 1 - 1e-15

    def test_unnormalized_raises(self):
        B = GeneralizedBasis("quadratic_general", 2, a=0j, b=1 + 0j, c=1 + 0j, _zero_table=((0j,), (1, 1)))
        with pytest.raises(InvalidBasisError):
            basis_gamma(B)


class TestConstruction:
    def test_equal_b_c_becomes_newton(self):
        B = GeneralizedBasis.quadratic_general(5, 2, 2)
        assert B.variant == "newton" and B.nodes == (2, 2)

    def test_newton_zeros_are_leading_nodes(self, rng):
        nodes = _random_nodes(rng, 4)
        B = GeneralizedBasis.newton(nodes)
        for j in range(1, 5):
            for a in nodes[:j]:
                assert abs(B.evaluate(j, a)) == 0.0
            assert B.zeros_of(j) == tuple(nodes[:j])

    def test_generic_alpha_sum_checked(self):
        with pytest.raises(InvalidBasisError):
            GeneralizedBasis.generic([[0], [1, 2]], [[1], [0.8, 0.8]], 1.5)

    def test_generic_shape_checked(self):
        with pytest.raises(InvalidBasisError):
            GeneralizedBasis.generic([[0], [1]], [[1], [0.5]], 1.0)

    def test_power_coefficients(self):
        B = GeneralizedBasis.newton([1, 2])
        # (z - 1)(z - 2) = z^2 - 3z + 2
        np.testing.assert_array_equal(B.power_coefficients(2), [2, -3, 1])

    @pytest.mark.parametrize(
        "basis",
        [
            GeneralizedBasis.power(3),
            GeneralizedBasis.newton([1 + 2j, -0.5, 3j]),
            GeneralizedBasis.quadratic_general(-8, B_NODE, B_NODE.conjugate()),
            GeneralizedBasis.generic([[0.1], [1, 2j]], [[1.0], [0.25, 0.5]], 1.0),
        ],
    )
    def test_json_round_trip(self, basis):
        d = basis.to_dict()
        again = GeneralizedBasis.from_dict(d)
        assert again == basis
        assert again.to_dict() == d

    def test_unknown_variant(self):
        with pytest.raises(InvalidBasisError):
            GeneralizedBasis.from_dict({"variant": "chebyshev"})


class TestZeros:
    def test_power(self):
        (z,) = basis_zeros(GeneralizedBasis.power(3))
        assert z.center == 0 and z.degrees == {1, 2, 3} and z.qn_multiplicity == 3

    def test_newton_pair(self):
        a1, a2 = 1 + 1j, -2.0
        z1, z2 = basis_zeros(GeneralizedBasis.newton([a1, a2]))
        assert (z1.center, z1.degrees, z1.qn_multiplicity) == (a1, {1, 2}, 1)
        assert (z2.center, z2.degrees, z2.qn_multiplicity) == (a2, {2}, 1)

    def test_quadratic_general(self):
        zs = basis_zeros(GeneralizedBasis.quadratic_general(0, 1, -1))
        assert [(z.center, set(z.degrees), z.qn_multiplicity) for z in zs] == [
            (0, {1}, 0),
            (1, {2}, 1),
            (-1, {2}, 1),
        ]

    def test_merges_close_zeros(self):
        zs = basis_zeros(GeneralizedBasis.newton([1.0, 1.0 + 1e-13, 2.0]))
        assert len(zs) == 2 and zs[0].qn_multiplicity == 2

    def test_sizes(self, rng):
        for n in range(1, 6):
            B = GeneralizedBasis.newton(_random_nodes(rng, n))
            zs = basis_zeros(B)
            assert len(zs) == n
            assert sum(z.qn_multiplicity for z in zs) == n
            G = GeneralizedBasis.generic(
                [_random_nodes(rng, j) for j in range(1, n + 1)],
                [[1.0 / j] * j for j in range(1, n + 1)],
                1.0,
            )
            assert len(basis_zeros(G)) <= n * (n + 1) // 2

    def test_truncated_degree(self):
        zs = basis_zeros(GeneralizedBasis.newton([1, 2, 3]), 2)
        assert [z.center for z in zs] == [1, 2]

    def test_too_high_degree(self):
        with pytest.raises(DimensionError):
            basis_zeros(GeneralizedBasis.newton([1, 2]), 3)


class TestConversion:
    def test_power_basis_newton_zero_nodes(self, rng):
        A1, A0 = random_matrix(rng, 3), random_matrix(rng, 3)
        C = convert_quadratic(A1, A0, GeneralizedBasis.newton([0, 0]))
        np.testing.assert_array_equal(C.coefficients[1], A1)
        np.testing.assert_array_equal(C.coefficients[0], A0)

    def test_scalar_factors(self):
        # z^2 + 3z + 2 = (z + 1)(z + 2) = q_2
        C = convert_quadratic([[3.0]], [[2.0]], GeneralizedBasis.newton([-1, -2]))
        assert C.coefficients[1][0, 0] == 0 and C.coefficients[0][0, 0] == 0

    def test_mass_spring_three_node(self):
        P = mass_spring(50, 1.0, 8.0)
        B = GeneralizedBasis.quadratic_general(-8, B_NODE, B_NODE.conjugate())
        C = convert_quadratic(P.coefficients[1], P.coefficients[0], B)
        np.testing.assert_allclose(C.coefficients[1], tridiag(50, -1, 0, -1), atol=1e-13)
        np.testing.assert_allclose(C.coefficients[0], 0, atol=1e-12)

    def test_general_matches_closed_form(self, rng):
        P = random_monic(rng, 3, 2)
        for B in (
            GeneralizedBasis.newton(_random_nodes(rng, 2)),
            GeneralizedBasis.quadratic_general(*_random_nodes(rng, 3)),
        ):
            closed = convert_quadratic(P.coefficients[1], P.coefficients[0], B)
            general = convert_to_basis(P, B)
            for X, Y in zip(closed.coefficients, general.coefficients):
                np.testing.assert_allclose(X, Y, atol=1e-13)

    def test_cubic_binomial(self):
        # z^3 = ((z - 1) + 1)^3 = q_3 + 3 q_2 + 3 q_1 + 1
        P = MatrixPolynomial([[[0.0]], [[0.0]], [[0.0]], [[1.0]]])
        C = convert_to_basis(P, GeneralizedBasis.newton([1, 1, 1]))
        assert [c[0, 0] for c in C.coefficients] == [1, 3, 3, 1]

    def test_power_identity(self, rng):
        P = random_monic(rng, 2, 3)
        C = convert_to_basis(P, GeneralizedBasis.power(3))
        for X, Y in zip(C.coefficients, P.coefficients):
            np.testing.assert_array_equal(X, Y)

    def test_degree_mismatch(self, rng):
        with pytest.raises(DimensionError):
            convert_to_basis(random_monic(rng, 2, 2), GeneralizedBasis.newton([1, 2, 3]))

    def test_quadratic_shape_mismatch(self):
        with pytest.raises(DimensionError):
            convert_quadratic(np.eye(2), np.eye(3), GeneralizedBasis.newton([1, 2]))

    def test_evaluation_invariant(self, rng):
        for n in (1, 2, 3, 4):
            P = MatrixPolynomial([random_matrix(rng, 3) for _ in range(n + 1)])
            B = GeneralizedBasis.newton(_random_nodes(rng, n))
            C = convert_to_basis(P, B)
            z = rng.normal(size=20) + 1j * rng.normal(size=20)
            np.testing.assert_allclose(C.evaluate_many(z), P.evaluate_many(z), rtol=1e-10, atol=1e-10)

    def test_round_trip(self, rng):
        for _ in range(20):
            n = int(rng.integers(1, 5))
            P = MatrixPolynomial([random_matrix(rng, 3) for _ in range(n + 1)])
            B = GeneralizedBasis.newton(_random_nodes(rng, n))
            back = convert_to_basis(P, B).to_power()
            for X, Y in zip(back.coefficients, P.coefficients):
                np.testing.assert_allclose(X, Y, rtol=0, atol=1e-12 * np.abs(Y).max())


class TestCondition:
    def test_newton_equality(self, rng):
        for _ in range(20):
            B = GeneralizedBasis.newton(_random_nodes(rng, 3))
            rep = verify_basis_condition(B, samples=32, seed=int(rng.integers(1 << 30)))
            assert rep.holds and abs(rep.worst_slack) <= 1e-12
            assert rep.witness is None

    def test_power_equality(self):
        rep = verify_basis_condition(GeneralizedBasis.power(3), samples=16, seed=1)
        assert rep.holds and abs(rep.worst_slack) <= 1e-12

    def test_three_node_holds(self):
        B = GeneralizedBasis.quadratic_general(-8, B_NODE, B_NODE.conjugate())
        rep = verify_basis_condition(B, samples=64, seed=3)
        assert rep.holds and rep.worst_slack >= -1e-10

    def test_halved_alphas_fail(self):
        B = GeneralizedBasis.quadratic_general(-8, B_NODE, B_NODE.conjugate())
        halved = [[0.5 * x for x in B.alphas_of(j)] for j in (1, 2)]
        rep = verify_basis_condition(B, samples=64, seed=3, alphas=halved)
        assert not rep.holds
        assert rep.witness is not None and np.isfinite(rep.witness)
        j = rep.witness_degree
        lhs = abs(B.evaluate(j - 1, rep.witness) / B.evaluate(j, rep.witness))
        rhs = sum(a / abs(rep.witness - r) for a, r in zip(halved[j - 1], B.zeros_of(j)))
        assert lhs > rhs

    def test_generic_halved_via_descriptor(self):
        a, b, c = -8, B_NODE, B_NODE.conjugate()
        d = abs(c - b)
        G = GeneralizedBasis.generic([[a], [b, c]], [[0.5], [abs(a - b) / (2 * d), abs(a - c) / (2 * d)]], 1.0)
        assert not verify_basis_condition(G, seed=0).holds

    def test_seed_determinism(self):
        B = GeneralizedBasis.quadratic_general(0, 1, -1)
        assert verify_basis_condition(B, seed=7) == verify_basis_condition(B, seed=7)

    def test_points_avoid_zeros(self):
        from polyregions.bases import sample_points

        B = GeneralizedBasis.newton([0, 1e-7])
        z = sample_points(B, 2, 200, 0)
        assert np.abs(z[:, None] - np.array([0, 1e-7])[None, :]).min() > 1e-6
