"""Hypothesis strategies for realizable link codes (braid closures)."""
from hypothesis import assume, strategies as st

from .braids import from_braid
from .codes import self_subdiagram


@st.composite
def braid_links(draw, max_strands=3, max_length=6, max_components=3):
    strands = draw(st.integers(min_value=2, max_value=max_strands))
    letters = st.integers(min_value=1, max_value=strands - 1).flatmap(
        lambda g: st.sampled_from([g, -g])
    )
    word = draw(st.lists(letters, min_size=1, max_size=max_length))
    link = from_braid(word, strands)
    assume(link.n_components <= max_components)
    return link


@st.composite
def braid_knots(draw, max_strands=3, max_length=6):
    """First component of a braid closure; deleting components keeps realizability."""
    link = draw(braid_links(max_strands=max_strands, max_length=max_length))
    return self_subdiagram(link, 0)
