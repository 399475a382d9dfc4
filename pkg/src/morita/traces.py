"""Content polynomials and exact trace formulas.

Every trace value here is a rational function in x = n*c, understood as
the coefficient of the canonical basis element of the one-dimensional
trace group.  The central table is the integer coefficient matrix
a[lam, k] of the elementary-fraction expansion of G_lam, computed by
three independent routes that must agree.
"""

import math
from fractions import Fraction
from functools import lru_cache

from .exact import Poly, RationalFunction, partial_fractions
from .partitions import enumerate_partitions, gamma_star, schur_eval_ones


class TrivialPartition(ValueError):
    pass


class RouteDisagreement(AssertionError):
    """Independent formulas for a[lam, k] differ -- an implementation bug."""


class NonIntegerCoefficient(AssertionError):
    """a[lam, k] came out non-integral, contradicting its divisibility
    property -- an implementation bug."""


def content_polynomial(lam):
    """F_lam(x): product of (x + j - i) over the cells of the diagram."""
    return Poly.from_roots([-c for c in lam.content_multiset()])


def f_trivial(n):
    """Content polynomial of the one-row partition: x(x+1)...(x+n-1)."""
    return Poly.from_roots([-k for k in range(n)])


def g_function(lam, n):
    """G_lam(x) = dim(lam) * (1 - F_lam(x)/F_triv(x)), reduced."""
    if lam.weight != n:
        raise ValueError("partition weight %d != n = %d" % (lam.weight, n))
    if lam.length == 1:
        raise TrivialPartition("G is defined on nontrivial representations only")
    d = lam.dimension()
    return RationalFunction(d * (f_trivial(n) - content_polynomial(lam)),
                            f_trivial(n))


def _a_via_partial_fractions(lam, n):
    pf = partial_fractions(g_function(lam, n))
    return [pf.residues.get(-k, Fraction(0)) for k in range(1, n)]


def _a_via_conjugate_content(lam, n):
    # (-1)^(n-k-1) * dim(lam) / (k! (n-1-k)!) * F_{lam'}(k)
    f_conj = content_polynomial(lam.conjugate())
    d = lam.dimension()
    out = []
    for k in range(1, n):
        sign = (-1) ** (n - k - 1)
        out.append(Fraction(sign * d, math.factorial(k) * math.factorial(n - 1 - k))
                   * f_conj(k))
    return out


def _a_via_schur(lam, n):
    # (-1)^(n-k-1) * n * binom(n-1, k) * s_{lam'}(1^k)
    conj = lam.conjugate()
    return [Fraction((-1) ** (n - k - 1) * n * math.comb(n - 1, k)
                     * schur_eval_ones(conj, k))
            for k in range(1, n)]


def a_coefficients(lam, n):
    """The integer vector a[lam, 1..n-1] with G_lam = sum a_k/(x+k).

    Computed by partial fractions, by the conjugate-content closed form,
    and by the Schur-function form; the three must agree and be integral.
    """
    return list(_a_coefficients_cached(lam, n))


@lru_cache(maxsize=None)
def _a_coefficients_cached(lam, n):
    routes = (_a_via_partial_fractions(lam, n),
              _a_via_conjugate_content(lam, n),
              _a_via_schur(lam, n))
    if not (routes[0] == routes[1] == routes[2]):
        raise RouteDisagreement("a-coefficient routes differ for %r: %r" % (lam, routes))
    vals = routes[0]
    if any(v.denominator != 1 for v in vals):
        raise NonIntegerCoefficient("non-integer a-coefficient for %r: %r" % (lam, vals))
    return tuple(int(v) for v in vals)


def chi_H(lam, n):
    """Trace of the standard projective of lam over the full algebra:
    dim(lam) * F_lam(x) / (n! x^n), reduced."""
    assert lam.weight == n
    den = math.factorial(n) * Poly.from_roots([0] * n)
    return RationalFunction(lam.dimension() * content_polynomial(lam), den)


def chi_B(lam, n):
    """Spherical trace: dim(lam) * F_lam(x) / F_triv(x), reduced."""
    assert lam.weight == n
    return RationalFunction(lam.dimension() * content_polynomial(lam), f_trivial(n))


def morita_phi_factor(n):
    """Factor carrying the trace basis across the Morita equivalence:
    n! x^n / F_triv(x), reduced."""
    assert n >= 2
    return RationalFunction(math.factorial(n) * Poly.from_roots([0] * n),
                            f_trivial(n))


def verify_sum_identity(n):
    """Check sum over lam of dim(lam)^2 * F_lam(x) = n! * x^n exactly."""
    assert n >= 2
    lhs = Poly()
    for lam in enumerate_partitions(n):
        lhs = lhs + lam.dimension() ** 2 * content_polynomial(lam)
    rhs = math.factorial(n) * Poly.from_roots([0] * n)
    return lhs == rhs


def trace_table(n):
    """One row per nontrivial partition: partition, dim, F coefficients,
    reduced G, and the a-coefficient vector.  Backs the CLI."""
    rows = []
    for lam in gamma_star(n):
        rows.append({
            "partition": lam.to_json(),
            "dim": lam.dimension(),
            "content_poly": content_polynomial(lam).to_json(),
            "g": g_function(lam, n).to_json(),
            "a": a_coefficients(lam, n),
        })
    return rows
