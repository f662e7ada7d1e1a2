"""Slow independent reference implementations used only by the tests."""

from qweight.poly import QPolynomial
from qweight.roots import STANDARD


def brute_kostant(beta, rs, L=STANDARD):
    """Depth-first search over root multiplicities with no memo.

    Every positive root has height >= 1, so the height of what is left
    bounds the search.
    """
    roots = rs.positive
    terms = {}

    def rec(k, rest, e):
        if k == len(roots):
            if not any(rest):
                terms[e] = terms.get(e, 0) + 1
            return
        a = roots[k]
        c = 0
        while rs.height(rest) >= 0:
            rec(k + 1, rest, e + c * L(a))
            rest = tuple(x - y for x, y in zip(rest, a))
            c += 1

    rec(0, tuple(beta), 0)
    return QPolynomial.from_dict(terms)
