"""Shared helpers: reusable fields and a randomized code-spec generator."""

import math
import random

import pytest

from tgrs import Field, TgrsSpec

_FIELDS: dict[tuple, Field] = {}


def get_field(p, m=1, modulus=None):
    key = (p, m, tuple(modulus) if modulus else None)
    if key not in _FIELDS:
        _FIELDS[key] = Field(p, m, modulus)
    return _FIELDS[key]


@pytest.fixture
def gf7():
    return get_field(7)


@pytest.fixture
def gf31():
    return get_field(31)


@pytest.fixture
def gf37():
    return get_field(37)


def random_spec(rng: random.Random, qs=(7, 31, 37), n_min=3, n_max=14,
                comb_cap=None) -> TgrsSpec:
    """A uniformly messy but valid single-hook spec for property tests."""
    while True:
        q = rng.choice(qs)
        f = get_field(q)
        hi = min(n_max, q)
        if hi < n_min:
            continue
        n = rng.randint(n_min, hi)
        if n < 3:
            continue
        k = rng.randint(2, n - 1)
        if comb_cap is not None and math.comb(n, k) > comb_cap:
            continue
        l = rng.randint(0, n - k - 1)
        h = rng.randint(1, k - 1)
        alpha = [f.element(a) for a in rng.sample(range(q), n)]
        v = [f.element(rng.randint(1, q - 1)) for _ in range(n)]
        eta = [f.element(rng.randint(0, q - 1)) for _ in range(l + 1)]
        return TgrsSpec(field=f, n=n, k=k, l=l, h=h,
                        alpha=tuple(alpha), v=tuple(v), eta=tuple(eta))
