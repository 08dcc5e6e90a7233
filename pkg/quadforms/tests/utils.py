import random

from quadforms.forms_core import UnimodularMatrix

T_POWERS = [UnimodularMatrix(1, k, 0, 1) for k in range(-3, 4) if k]
S = UnimodularMatrix(0, -1, 1, 0)
FLIP = UnimodularMatrix(1, 0, 0, -1)


def random_unimodular(rng: random.Random, steps: int = 6, determinant: int = 1) -> UnimodularMatrix:
    """A product of translations and the rotation S; determinant +1 unless asked for -1."""
    m = UnimodularMatrix.identity()
    for _ in range(steps):
        m = m @ rng.choice(T_POWERS + [S])
    if determinant == -1:
        m = m @ FLIP
    return m
