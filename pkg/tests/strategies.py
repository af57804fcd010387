"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from motdec.weights import AbelianDescriptor, PermutationGroup, SimpleFactorDescriptor


@st.composite
def descriptors(draw, max_n: int = 4, max_d: int = 2, max_g: int = 8):
    """Single-factor descriptors with n <= 4, d <= 2, g <= 8 and nd | 2g."""
    n = draw(st.integers(1, max_n))
    d = draw(st.integers(1, max_d))
    g = draw(st.sampled_from([g for g in range(1, max_g + 1) if (2 * g) % (n * d) == 0]))
    kind = draw(st.sampled_from(["symmetric", "cyclic"]))
    group = PermutationGroup.symmetric(n) if kind == "symmetric" else PermutationGroup.cyclic(n)
    return AbelianDescriptor(g, (SimpleFactorDescriptor(n, d, group.generators),))
