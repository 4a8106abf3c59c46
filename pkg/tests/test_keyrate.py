"""Key-rate bound: eigenvalue formulas, minimization, reference curves."""

import math
from dataclasses import replace

import numpy as np
import pytest

from qkdbound.attacks import (
    AttackOperator,
    exact_conditional_entropy,
    exact_inner_products,
    induced_statistics,
    rephased_attack,
)
from qkdbound.entropy import binary_entropy, hermitian_eigenvalues
from qkdbound.errors import DomainError, NonPhysicalStateError
from qkdbound.keyrate import (
    bb84_reference_rate,
    keyrate_bound,
    lambda_rho,
    lambda_sigma,
)
from qkdbound.scenarios import ScenarioSpec, depolarizing_statistics, scenario_statistics
from qkdbound.validation import sample_symmetric_attack

ROOT_HALF = 1 / math.sqrt(2)


def rho_e_matrix(attack):
    """Adversary's error-free conditional state, built from the vectors."""
    q = float(np.vdot(attack.e1, attack.e1).real)
    p0 = np.outer(attack.e0, attack.e0.conj())
    p3 = np.outer(attack.e3, attack.e3.conj())
    m = (p0 + p3) / (2.0 * (1.0 - q))
    return 0.5 * (m + m.conj().T), q


class TestLambdaFormulas:
    def test_lambda_rho_boundary(self):
        assert lambda_rho(0.9, 0.1) == 1.0

    def test_lambda_rho_mixed(self):
        assert lambda_rho(0.0, 0.3) == 0.5

    def test_lambda_rho_derived_value(self):
        assert abs(lambda_rho(0.8, 0.1) - (0.5 + 0.8 / 1.8)) < 1e-15

    def test_lambda_rho_against_eigendecomposition(self):
        # explicit vectors with |e0|^2 = |e3|^2 = 0.9 and <e0|e3> = 0.8
        q = 0.1
        e0 = math.sqrt(0.9) * np.array([1.0, 0.0])
        c = 0.8 / 0.9
        e3 = math.sqrt(0.9) * np.array([c, math.sqrt(1 - c * c)])
        rho = (np.outer(e0, e0) + np.outer(e3, e3)) / (2 * (1 - q))
        top = hermitian_eigenvalues(rho)[0]
        assert abs(lambda_rho(0.8, q) - top) < 1e-12

    def test_lambda_rho_rejects_oversized_overlap(self):
        with pytest.raises(NonPhysicalStateError):
            lambda_rho(0.95, 0.1)

    def test_lambda_sigma_boundary(self):
        assert lambda_sigma(0.1, 0.1) == 1.0

    def test_lambda_sigma_center(self):
        assert lambda_sigma(0.0, 0.1) == 0.5

    def test_lambda_sigma_derived_value(self):
        assert abs(lambda_sigma(-0.05, 0.1) - 0.75) < 1e-15

    def test_lambda_sigma_sign_symmetric(self):
        assert lambda_sigma(-0.03, 0.1) == lambda_sigma(0.03, 0.1)

    def test_lambda_sigma_rejects_zero_q(self):
        with pytest.raises(DomainError):
            lambda_sigma(0.0, 0.0)

    def test_formula_never_exceeds_numeric_eigenvalue(self):
        for seed in range(200):
            attack = sample_symmetric_attack(0.1 + 0.001 * seed % 0.3, 4, seed)
            rho, q = rho_e_matrix(attack)
            top = hermitian_eigenvalues(rho)[0]
            formula = lambda_rho(exact_inner_products(attack).re03, q)
            assert formula <= top + 1e-10

    def test_formula_matches_numeric_for_real_overlap(self):
        for seed in range(200):
            attack = rephased_attack(sample_symmetric_attack(0.12, 4, seed))
            rho, q = rho_e_matrix(attack)
            top = hermitian_eigenvalues(rho)[0]
            formula = lambda_rho(exact_inner_products(attack).re03, q)
            assert abs(formula - top) < 1e-10


class TestReferenceRate:
    def test_trivials(self):
        assert bb84_reference_rate(0.0) == 1.0
        assert bb84_reference_rate(0.5) == -1.0

    def test_near_zero_at_threshold(self):
        assert abs(bb84_reference_rate(0.11)) < 5e-4

    def test_rejects_large_q(self):
        with pytest.raises(DomainError):
            bb84_reference_rate(0.6)


class TestKeyRateBound:
    def test_perfect_channel(self):
        result = keyrate_bound(depolarizing_statistics(0.0, 0.6))
        assert result.rate == 1.0
        assert result.minimizing_re12 == 0.0
        assert result.lambda_rho == 1.0

    @pytest.mark.parametrize("alpha_sq", [0.2, 0.5, 0.8])
    def test_matches_four_state_reference(self, alpha_sq):
        for q in np.linspace(0.0, 0.25, 26):
            result = keyrate_bound(depolarizing_statistics(float(q), math.sqrt(alpha_sq)))
            assert abs(result.rate - bb84_reference_rate(float(q))) < 1e-6

    def test_depolarizing_minimizer_location(self):
        for q in (0.02, 0.1, 0.2):
            result = keyrate_bound(depolarizing_statistics(q, ROOT_HALF))
            assert abs(result.minimizing_re12 - q * (1 - 2 * q)) < 1e-6

    def test_result_recomputable_from_fields(self):
        for q, alpha in ((0.0, 0.5), (0.07, 0.3), (0.2, ROOT_HALF)):
            result = keyrate_bound(depolarizing_statistics(q, alpha))
            sigma_term = result.Q * binary_entropy(result.lambda_sigma)
            recomputed = (1.0
                          - (1.0 - result.Q) * binary_entropy(result.lambda_rho)
                          - sigma_term - binary_entropy(result.Q))
            assert abs(result.rate - recomputed) < 1e-12

    def test_lambda_fields_in_range(self):
        for seed in range(60):
            rng = np.random.default_rng(seed)
            attack = sample_symmetric_attack(rng.uniform(0, 0.4), 4, rng)
            result = keyrate_bound(induced_statistics(attack, 0.6))
            assert 0.5 <= result.lambda_rho <= 1.0
            assert 0.5 <= result.lambda_sigma <= 1.0

    def test_minimizer_beats_random_probes(self):
        rng = np.random.default_rng(99)
        cases = [depolarizing_statistics(0.08, 0.4),
                 scenario_statistics(ScenarioSpec(name="qa-double", Q=0.05, alpha=0.7)),
                 scenario_statistics(ScenarioSpec(name="re23-extremal", Q=0.06, alpha=0.3))]
        for seed in range(40):
            attack = sample_symmetric_attack(rng.uniform(0.01, 0.3), 4, seed)
            cases.append(induced_statistics(attack, 0.6))
        for stats in cases:
            result = keyrate_bound(stats)
            lo, hi = result.feasible_interval
            q = result.Q
            for re12 in rng.uniform(lo, hi, size=64):
                probe = (1.0
                         - (1.0 - q) * binary_entropy(lambda_rho(
                             result.re03_at_min + result.minimizing_re12 - re12, q))
                         - q * binary_entropy(lambda_sigma(re12, q))
                         - binary_entropy(q))
                assert result.rate <= probe + 1e-9

    def test_alpha_invariance_on_depolarizing(self):
        for q in np.linspace(0.0, 0.25, 11):
            rates = [keyrate_bound(depolarizing_statistics(float(q), math.sqrt(a2))).rate
                     for a2 in (0.2, 0.5, 0.8)]
            assert max(rates) - min(rates) < 1e-9

    @pytest.mark.parametrize("alpha_sq", [0.2, 0.5, 0.8])
    def test_scenario_ordering(self, alpha_sq):
        alpha = math.sqrt(alpha_sq)
        for q in np.linspace(0.01, 0.1, 10):
            q = float(q)
            r_half = keyrate_bound(
                scenario_statistics(ScenarioSpec(name="qa-half", Q=q, alpha=alpha))).rate
            r_depol = keyrate_bound(depolarizing_statistics(q, alpha)).rate
            r_double = keyrate_bound(
                scenario_statistics(ScenarioSpec(name="qa-double", Q=q, alpha=alpha))).rate
            assert r_half >= r_depol - 1e-12
            assert r_depol >= r_double - 1e-12

    def test_qa_double_crossing_regression(self):
        # zero crossing pinned from the first converged run of this code
        def rate(q):
            spec = ScenarioSpec(name="qa-double", Q=q, alpha=ROOT_HALF)
            return keyrate_bound(scenario_statistics(spec)).rate

        lo, hi = 0.05, 0.11
        assert rate(lo) > 0.0 > rate(hi)
        while hi - lo > 1e-10:
            mid = 0.5 * (lo + hi)
            if rate(mid) > 0.0:
                lo = mid
            else:
                hi = mid
        crossing = 0.5 * (lo + hi)
        assert abs(crossing - 0.0756794560114213) < 1e-8
        assert crossing < 0.11

    def test_zero_q_with_conjugate_noise(self):
        # Q = 0 but QA > 0: the bound must agree with the exact entropy of
        # the real-overlap attack producing those statistics
        c = 0.6
        attack = AttackOperator(
            e0=[1.0, 0.0],
            e1=[0.0, 0.0],
            e2=[0.0, 0.0],
            e3=[c, math.sqrt(1 - c * c)],
        )
        stats = induced_statistics(attack, 0.7)
        assert stats.Q == 0.0 and stats.QA > 0.0
        result = keyrate_bound(stats)
        expected = exact_conditional_entropy(attack)
        assert abs(result.rate - expected) < 1e-9
        assert result.minimizing_re12 == 0.0
