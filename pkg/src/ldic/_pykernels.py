"""Pure-Python kernels for exact 2-D halfplane geometry.

Rows are integer triples ``(a1, a2, b)`` meaning ``a1*x + a2*y <= b``.
Points are integer triples ``(xn, yn, d)`` meaning ``(xn/d, yn/d)`` with
``d > 0`` and ``gcd(xn, yn, d) == 1``.
"""

from math import gcd


def _reduce(xn, yn, d):
    if d < 0:
        xn, yn, d = -xn, -yn, -d
    g = gcd(gcd(xn, yn), d)
    return xn // g, yn // g, d // g


def polygon_vertices(rows):
    """Return the distinct feasible pairwise intersections of ``rows``."""
    n = len(rows)
    seen = set()
    out = []
    for i in range(n):
        a1, a2, b = rows[i]
        for j in range(i + 1, n):
            c1, c2, e = rows[j]
            det = a1 * c2 - a2 * c1
            if det == 0:
                continue
            xn = b * c2 - a2 * e
            yn = a1 * e - b * c1
            if det < 0:
                xn, yn, det = -xn, -yn, -det
            feasible = True
            for k1, k2, kb in rows:
                if k1 * xn + k2 * yn > kb * det:
                    feasible = False
                    break
            if feasible:
                p = _reduce(xn, yn, det)
                if p not in seen:
                    seen.add(p)
                    out.append(p)
    return out


def tight_counts(rows, points):
    """Number of ``points`` lying on the boundary line of each row."""
    counts = []
    for a1, a2, b in rows:
        c = 0
        for xn, yn, d in points:
            if a1 * xn + a2 * yn == b * d:
                c += 1
        counts.append(c)
    return counts
