"""Shared test utilities: random states, random unitaries, and the
independent reference oracles the numeric routes are checked against."""

import math

import numpy as np
import pytest

from cqdiscord import CanonicalParams, CqState, delta_tilde


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)


def random_unitary(rng, dim):
    """Haar-ish random unitary from the QR decomposition of a Ginibre matrix."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_direction(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_cq_state(rng, equal_purity=False, smin=0.05, smax=0.95):
    s0 = rng.uniform(smin, smax)
    s1 = s0 if equal_purity else rng.uniform(smin, smax)
    return CqState.from_bloch(s0 * random_direction(rng), s1 * random_direction(rng))


def random_unequal_params(rng, gap=0.05):
    """Canonical parameters guaranteed to give a rotated (B != 0) ellipse."""
    while True:
        s0 = rng.uniform(0.3, 0.95)
        s1 = rng.uniform(0.3, 0.95)
        if abs(s0 - s1) >= gap:
            break
    return CanonicalParams(s0, s1, rng.uniform(0.3, np.pi - 0.3))


def h_ref(x):
    """Independent binary entropy in bits, straight from the definition."""
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -(x * math.log2(x) + (1.0 - x) * math.log2(1.0 - x))


def discord_p_ref(p):
    """Discord along the damping sweep, reduced independently to a single
    composition: s cos(phi/2) = p and s sin(phi/2) = sqrt(1-p)."""
    return (
        h_ref((1.0 + p) / 2.0)
        + h_ref((1.0 + math.sqrt(1.0 - p)) / 2.0)
        - h_ref((1.0 + math.sqrt(1.0 - p + p * p)) / 2.0)
        - 1.0
    )


def classical_p_ref(p):
    return 1.0 - h_ref((1.0 + math.sqrt(1.0 - p)) / 2.0)


def brute_force_ellipse_min(A, B, C, n_angle=4096, n_radial=250):
    """Brute-force minimum of delta_tilde over the filled elliptic region.

    Dense polar sampling through the principal axes, about 10^6 points,
    boundary ring included; independent of the boundary-search route.
    """
    lam, vecs = np.linalg.eigh(np.array([[A, B], [B, C]]))
    u = vecs[:, 0] / np.sqrt(lam[0])
    v = vecs[:, 1] / np.sqrt(lam[1])
    t = np.linspace(0.0, 2.0 * np.pi, n_angle, endpoint=False)
    r = np.linspace(0.0, 1.0, n_radial)
    ct = np.cos(t)[:, None] * r[None, :]
    st = np.sin(t)[:, None] * r[None, :]
    x = ct * u[0] + st * v[0]
    y = ct * u[1] + st * v[1]
    return float(np.min(delta_tilde(x, y)))


def run_cli(argv):
    """Invoke the CLI in-process, returning its exit code."""
    from cqdiscord.cli import main

    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
