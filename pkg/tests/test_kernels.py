import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ldic import _pykernels, kernels

try:
    from ldic import _ckernels
except ImportError:
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")

row = st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-20, 40)).filter(
    lambda r: r[0] or r[1])
rows = st.lists(row, min_size=2, max_size=8).map(lambda rs: sorted(set(rs)))
big_row = st.tuples(*[st.integers(-(1 << 40), 1 << 40)] * 3).filter(lambda r: r[0] or r[1])


def test_square():
    rs = [(1, 0, 2), (0, 1, 3), (-1, 0, 0), (0, -1, 0)]
    pts = set(_pykernels.polygon_vertices(rs))
    assert pts == {(0, 0, 1), (2, 0, 1), (0, 3, 1), (2, 3, 1)}
    assert _pykernels.tight_counts(rs, sorted(pts)) == [2, 2, 2, 2]


def test_vertices_are_reduced():
    # x + 2y <= 3, 2x + y <= 3 meet at (1, 1) with determinant 3
    pts = _pykernels.polygon_vertices([(1, 2, 3), (2, 1, 3), (-1, 0, 0), (0, -1, 0)])
    assert (1, 1, 1) in pts


@needs_ext
@given(rows)
def test_parity(rs):
    assert _ckernels.polygon_vertices(rs) == _pykernels.polygon_vertices(rs)
    pts = _pykernels.polygon_vertices(rs)
    assert _ckernels.tight_counts(rs, pts) == _pykernels.tight_counts(rs, pts)


@needs_ext
@given(st.lists(big_row, min_size=2, max_size=5))
def test_parity_large_values_fall_back(rs):
    assert _ckernels.polygon_vertices(rs) == _pykernels.polygon_vertices(rs)


def test_backend_override():
    code = "from ldic.kernels import BACKEND; print(BACKEND)"
    env = dict(os.environ, LDIC_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.strip()
    assert out == "python"
    assert kernels.BACKEND in ("python", "cython")
