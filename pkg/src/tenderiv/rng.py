"""Seeded random inputs for the fuzzing suites.

Streams come from the Philox counter-based generator (Salmon et al.,
"Parallel Random Numbers: As Easy as 1, 2, 3").  The 128-bit Philox key is
``(seed << 64) | trial``, so every (seed, trial) pair owns an independent
substream and results do not depend on execution order or parallel schedule.
"""

import numpy as np

from .algebra import DIM


def trial_rng(seed, trial=0):
    """Independent generator for one trial of a seeded suite."""
    key = (int(seed) << 64) | int(trial)
    return np.random.Generator(np.random.Philox(key=key))


def random_ten2(rng, scale=1.0):
    """Second-rank tensor with entries uniform in [-scale, scale]."""
    return rng.uniform(-scale, scale, size=(DIM, DIM))


def random_ten4(rng, scale=1.0):
    """Fourth-rank tensor with entries uniform in [-scale, scale]."""
    return rng.uniform(-scale, scale, size=(DIM, DIM, DIM, DIM))


def random_invertible(rng, det_floor=0.1, cond_max=50.0):
    """Well-conditioned random tensor: |det| >= det_floor and cond <= cond_max."""
    while True:
        a = random_ten2(rng)
        if abs(np.linalg.det(a)) >= det_floor and np.linalg.cond(a) <= cond_max:
            return a


def random_near_identity(rng, spread=0.3):
    """Unit tensor plus a uniform perturbation of the given spread."""
    return np.eye(DIM) + spread * random_ten2(rng)


def random_orthogonal(rng):
    """Orthogonal tensor from the QR factorization of a random matrix.

    The determinant sign is left as drawn, so both proper and improper
    orthogonal tensors occur.
    """
    q, r = np.linalg.qr(rng.standard_normal((DIM, DIM)))
    # Fix the factorization's sign ambiguity so the draw is unambiguous.
    return q * np.sign(np.diag(r))


def random_frame(rng, min_triple=0.2):
    """Rows of a mildly skewed frame: I + 0.5 U with |triple product| >= min_triple."""
    while True:
        f = np.eye(DIM) + 0.5 * random_ten2(rng)
        if abs(np.linalg.det(f)) >= min_triple:
            return f
