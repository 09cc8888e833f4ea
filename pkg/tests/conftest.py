"""Shared strategies for the property suites."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from toricbn import Fan, LatticeVector, blow_up, laurent_curve, preset, smoothness, vec

coordinates = st.integers(min_value=-8, max_value=8)

lattice_vectors = st.builds(vec, coordinates, coordinates)

nonzero_vectors = lattice_vectors.filter(lambda v: not v.is_zero())


@st.composite
def sl2_matrices(draw) -> tuple[tuple[int, int], tuple[int, int]]:
    """Random element of SL(2, Z) as a product of the shear generators.

    Building from generators keeps determinant one exactly and biases the
    entries toward small values, which is what the equivariance tests want.
    """
    a, b, c, d = 1, 0, 0, 1
    for _ in range(draw(st.integers(min_value=0, max_value=6))):
        k = draw(st.integers(min_value=-3, max_value=3))
        if draw(st.booleans()):
            # row shear: R1 += k R2
            a, b = a + k * c, b + k * d
        else:
            c, d = c + k * a, d + k * b
    return ((a, b), (c, d))


_PRESET_POOL = (
    ("P2", {}),
    ("P1xP1", {}),
    ("Hirzebruch", {"a": 1}),
    ("Hirzebruch", {"a": 2}),
    ("Hirzebruch", {"a": 3}),
    ("Bl3P2", {}),
)


@st.composite
def smooth_fans(draw) -> Fan:
    """A smooth complete fan: a preset refined by up to three blow-ups."""
    name, kwargs = draw(st.sampled_from(_PRESET_POOL))
    fan = preset(name, **kwargs)
    for _ in range(draw(st.integers(min_value=0, max_value=3))):
        fan = blow_up(fan, draw(st.integers(min_value=0, max_value=10)) % fan.ray_count)
    assert smoothness(fan).smooth
    return fan


@st.composite
def curves(draw, min_terms: int = 2, max_terms: int = 6):
    """A Laurent curve with small support and small rational coefficients."""
    count = draw(st.integers(min_value=min_terms, max_value=max_terms))
    exps = draw(
        st.lists(
            st.tuples(
                st.integers(min_value=-4, max_value=4),
                st.integers(min_value=-4, max_value=4),
            ),
            min_size=count,
            max_size=count,
            unique=True,
        )
    )
    coeffs = {}
    for e in exps:
        num = draw(st.integers(min_value=-9, max_value=9).filter(lambda n: n != 0))
        den = draw(st.integers(min_value=1, max_value=4))
        coeffs[e] = f"{num}/{den}"
    return laurent_curve(coeffs)


def seeded_rng(tag: str) -> random.Random:
    """Deterministic RNG for the exhaustive-ish sweeps outside hypothesis."""
    return random.Random(f"toricbn:{tag}")
