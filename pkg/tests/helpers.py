"""Seeded random generators shared by the property and acceptance suites."""

import random
from fractions import Fraction

from dplct.algebra import BinaryForm

SEED = 20240611


def unimodular(rng, size=2, steps=6):
    """Random integer matrix of determinant +-1, a product of elementary moves."""
    m = [[int(i == j) for j in range(size)] for i in range(size)]
    for _ in range(steps):
        i, j = rng.sample(range(size), 2)
        c = rng.choice([-2, -1, 1, 2])
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    if rng.random() < 0.5:
        m[0] = [-a for a in m[0]]
    return m


def det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def random_binary(rng, degree, bound=4):
    while True:
        coeffs = [Fraction(rng.randint(-bound, bound)) for _ in range(degree + 1)]
        if any(coeffs):
            return BinaryForm(degree, tuple(coeffs))


def binary_pairs(count, seed=SEED):
    """Random pairs of binary forms, about half of them sharing a linear factor."""
    rng = random.Random(seed)
    for _ in range(count):
        f = random_binary(rng, rng.randint(1, 4))
        g = random_binary(rng, rng.randint(1, 4))
        if rng.random() < 0.5:
            common = random_binary(rng, 1, 3)
            f, g = f * common, g * common
        yield f, g


def affine_points(points, rng):
    """Image of affine points under a random unimodular map plus translation."""
    m = unimodular(rng)
    tx, ty = rng.randint(-3, 3), rng.randint(-3, 3)
    return [
        (m[0][0] * x + m[0][1] * y + tx, m[1][0] * x + m[1][1] * y + ty)
        for x, y in points
    ]
