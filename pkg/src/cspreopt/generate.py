"""Seeded instance generators.

Randomness comes from numpy's PCG64 bit generator, which produces the same
stream on every platform for a given seed.
"""
from __future__ import annotations

import string
from dataclasses import dataclass

import numpy as np

from .model import Instance, Pattern, make_alphabet


def alphabet_of(sigma) -> str:
    """``sigma`` as an alphabet: an int picks the first letters ``A, B, ...``."""
    if isinstance(sigma, (int, np.integer)):
        if not 1 <= sigma <= 26:
            raise ValueError(f"alphabet size {sigma} out of range 1..26")
        return string.ascii_uppercase[:sigma]
    return make_alphabet(sigma)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed) & (2**64 - 1)))


def _draw(rng: np.random.Generator, alphabet: str, size) -> np.ndarray:
    return rng.integers(0, len(alphabet), size=size)


def _text(alphabet: str, codes) -> str:
    return "".join(alphabet[c] for c in codes)


def random_sequences(count: int, n: int, sigma, seed: int) -> list[str]:
    alphabet = alphabet_of(sigma)
    codes = _draw(_rng(seed), alphabet, (count, n))
    return [_text(alphabet, row) for row in codes]


def gen_random(t: int, n: int, l: int, sigma, seed: int) -> Instance:
    """``t`` i.i.d. uniform sequences of length ``n``."""
    if t < 1 or n < 1:
        raise ValueError("need t >= 1 and n >= 1")
    alphabet = alphabet_of(sigma)
    return Instance(tuple(random_sequences(t, n, alphabet, seed)), l, alphabet)


@dataclass(frozen=True)
class PlantedSpec:
    t: int
    n: int
    l: int
    d: int
    sigma: str | int
    seed: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("need t >= 1")
        if not 0 <= self.d <= self.l <= self.n:
            raise ValueError(f"need 0 <= d <= l <= n, got d={self.d} l={self.l} n={self.n}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def gen_planted(spec: PlantedSpec) -> tuple[Instance, Pattern]:
    """Random background with one mutated copy of a random pattern per sequence.

    Each copy differs from the pattern in exactly ``d`` distinct columns
    (zero when the alphabet has a single symbol).
    """
    alphabet = alphabet_of(spec.sigma)
    sigma = len(alphabet)
    rng = _rng(spec.seed)
    motif = _draw(rng, alphabet, spec.l)
    rows = []
    for _ in range(spec.t):
        seq = _draw(rng, alphabet, spec.n)
        pos = int(rng.integers(0, spec.n - spec.l + 1))
        copy = motif.copy()
        if sigma > 1:
            for col in rng.choice(spec.l, size=spec.d, replace=False):
                copy[col] = (copy[col] + rng.integers(1, sigma)) % sigma
        seq[pos:pos + spec.l] = copy
        rows.append(_text(alphabet, seq))
    return Instance(tuple(rows), spec.l, alphabet), _text(alphabet, motif)
