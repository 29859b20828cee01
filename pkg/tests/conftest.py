import pytest
from hypothesis import strategies as st

from filtrated_k.poset import FinitePoset
from filtrated_k.rings import chain_category, d4_category, d4_opposite_category, d4_refined_category


@pytest.fixture(scope="session")
def d4():
    return d4_category()


@pytest.fixture(scope="session")
def d4op():
    return d4_opposite_category()


@pytest.fixture(scope="session")
def refined():
    return d4_refined_category()


@pytest.fixture(scope="session")
def chains():
    return {n: chain_category(n) for n in range(1, 6)}


@st.composite
def posets(draw, max_size=6):
    """Random finite posets; relations only go from lower to higher index."""
    n = draw(st.integers(1, max_size))
    names = [str(i + 1) for i in range(n)]
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    perm = draw(st.permutations(names))
    return FinitePoset(names, [(perm[a], perm[b]) for a, b in chosen])
