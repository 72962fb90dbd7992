"""Amplitude-damping channel, composition law, and the Bloch trajectory."""

import numpy as np
import pytest
from conftest import random_cq_state, random_direction

from cqdiscord import (
    CqState,
    DomainError,
    KrausPair,
    amplitude_damping,
    apply_channel,
    apply_local,
    assemble,
    bloch_to_density,
    canonicalize,
    density_to_bloch,
    eigvals_hermitian,
    p_of_t,
    plus_minus_state,
    trajectory,
    validate_density,
)


class TestKraus:
    def test_identity_channel(self):
        k = amplitude_damping(0.0)
        np.testing.assert_array_equal(k.e0, np.eye(2))
        np.testing.assert_array_equal(k.e1, np.zeros((2, 2)))

    def test_full_decay(self):
        k = amplitude_damping(1.0)
        np.testing.assert_array_equal(k.e0, np.diag([1.0, 0.0]))
        np.testing.assert_array_equal(k.e1, np.array([[0, 1], [0, 0]]))

    def test_half_damping(self):
        k = amplitude_damping(0.5)
        np.testing.assert_allclose(k.e0, np.diag([1.0, np.sqrt(0.5)]))

    def test_completeness(self, rng):
        for p in rng.uniform(0, 1, size=100):
            k = amplitude_damping(p)
            gap = k.e0.conj().T @ k.e0 + k.e1.conj().T @ k.e1 - np.eye(2)
            assert np.max(np.abs(gap)) <= 1e-12

    def test_probability_out_of_range(self):
        with pytest.raises(DomainError):
            amplitude_damping(-0.1)
        with pytest.raises(DomainError):
            amplitude_damping(1.1)

    def test_incomplete_pair_rejected(self):
        with pytest.raises(DomainError, match="trace preserving"):
            KrausPair(np.eye(2), np.eye(2), 0.5)


class TestTimeMap:
    def test_zero_time(self):
        assert p_of_t(1.7, 0.0) == 0.0

    def test_half_life(self):
        assert p_of_t(1.0, np.log(2.0)) == pytest.approx(0.5, abs=1e-15)

    def test_long_time_asymptote(self):
        p = p_of_t(1.0, 10.0)
        assert 0.9999 < p < 1.0

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            p_of_t(-1.0, 1.0)
        with pytest.raises(DomainError):
            p_of_t(1.0, -1.0)


class TestApply:
    def test_identity_channel_is_identity(self, rng):
        rho = assemble(random_cq_state(rng))
        np.testing.assert_allclose(apply_local(rho, amplitude_damping(0.0), "B"), rho, atol=1e-15)

    def test_full_decay_sends_b_to_north_pole(self):
        rho = assemble(plus_minus_state())
        out = apply_local(rho, amplitude_damping(1.0), "B")
        expect = np.kron(np.eye(2) / 2, np.diag([1.0, 0.0])).astype(complex)
        np.testing.assert_allclose(out, expect, atol=1e-12)

    def test_single_qubit_bloch_image(self):
        plus = bloch_to_density([1, 0, 0])
        out = apply_channel(plus, amplitude_damping(0.5))
        np.testing.assert_allclose(density_to_bloch(out), [np.sqrt(0.5), 0, 0.5], atol=1e-12)

    def test_target_a_acts_on_a_marginal(self):
        rho = np.kron(bloch_to_density([1, 0, 0]), np.eye(2) / 2)
        out = apply_local(rho, amplitude_damping(0.5), "A")
        from cqdiscord import partial_trace

        np.testing.assert_allclose(
            density_to_bloch(partial_trace(out, "A")), [np.sqrt(0.5), 0, 0.5], atol=1e-12
        )
        np.testing.assert_allclose(partial_trace(out, "B"), np.eye(2) / 2, atol=1e-12)

    def test_trace_and_positivity_preserved(self, rng):
        for _ in range(1000):
            rho = assemble(random_cq_state(rng))
            out = apply_local(rho, amplitude_damping(rng.uniform(0, 1)), "B")
            assert abs(np.trace(out).real - 1.0) <= 1e-12
            assert eigvals_hermitian(out)[-1] >= -1e-10

    def test_memoryless_composition_law(self, rng):
        for _ in range(200):
            p1, p2 = rng.uniform(0, 1, size=2)
            rho = assemble(random_cq_state(rng))
            stepwise = apply_local(
                apply_local(rho, amplitude_damping(p1), "B"), amplitude_damping(p2), "B"
            )
            combined = apply_local(rho, amplitude_damping(p1 + p2 - p1 * p2), "B")
            np.testing.assert_allclose(stepwise, combined, atol=1e-10)

    def test_invalid_label(self):
        with pytest.raises(DomainError):
            apply_local(np.eye(4) / 4, amplitude_damping(0.5), "C")


class TestTrajectory:
    def test_endpoints(self):
        start = trajectory(0.0)
        assert (start.s, start.phi) == (1.0, np.pi)
        np.testing.assert_array_equal(start.bloch_plus, [1, 0, 0])
        end = trajectory(1.0)
        assert (end.s, end.phi) == (1.0, 0.0)
        np.testing.assert_array_equal(end.bloch_plus, [0, 0, 1])
        np.testing.assert_array_equal(end.bloch_minus, [0, 0, 1])

    def test_purity_dip(self):
        assert trajectory(0.5).s == pytest.approx(np.sqrt(3) / 2, abs=1e-15)
        grid = np.linspace(0, 1, 201)
        svals = np.array([trajectory(p).s for p in grid])
        assert grid[np.argmin(svals)] == 0.5
        assert svals.min() == pytest.approx(np.sqrt(3) / 2, abs=1e-12)

    def test_bloch_lengths_match_s(self, rng):
        for p in rng.uniform(0, 1, size=100):
            tp = trajectory(p)
            assert np.linalg.norm(tp.bloch_plus) == pytest.approx(tp.s, abs=1e-12)
            assert np.linalg.norm(tp.bloch_minus) == pytest.approx(tp.s, abs=1e-12)

    def test_angle_between_vectors_matches_phi(self, rng):
        for p in rng.uniform(0, 1, size=100):
            tp = trajectory(p)
            cosang = np.dot(tp.bloch_plus, tp.bloch_minus) / tp.s**2
            assert np.arccos(np.clip(cosang, -1, 1)) == pytest.approx(tp.phi, abs=1e-12)

    def test_channel_consistency_on_grid(self):
        rho0 = assemble(plus_minus_state())
        for p in np.linspace(0, 1, 201):
            evolved = apply_local(rho0, amplitude_damping(p), "B")
            params = canonicalize(CqState.from_assembled(evolved))
            tp = trajectory(p)
            assert params.s0 == pytest.approx(tp.s, abs=1e-10)
            assert params.s1 == pytest.approx(tp.s, abs=1e-10)
            assert params.phi == pytest.approx(tp.phi, abs=1e-10)

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            trajectory(1.5)
