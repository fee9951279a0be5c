from hypothesis import strategies as st

from ldic.model import validate


def params(hi=12):
    return st.tuples(*[st.integers(0, hi)] * 6).map(validate)


def base_params(hi=12):
    return st.tuples(*[st.integers(0, hi)] * 4)
