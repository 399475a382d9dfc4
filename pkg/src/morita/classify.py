"""Parameter classification from K-theory data.

An integer vector over the nontrivial representations determines a monic
integer polynomial f(x); its roots must form an arithmetic progression
with unit common difference for a parameter relation to exist.  Each
accepted reading yields a relation q*(c + 1/2) = (c' + 1/2) + s with
q = +1 or -1 and an integer shift s.
"""

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .exact import Poly, RationalFunction
from .partitions import Partition, gamma_star, hook_partition, kostka
from .traces import a_coefficients, g_function


class InternalDivisibility(AssertionError):
    """The shift s failed to be an integer -- an implementation bug."""


@dataclass(frozen=True)
class Relation:
    """q*(c + 1/2) = (c' + 1/2) + s, with q in {+1, -1} and s an integer."""
    q: int
    s: int

    def __post_init__(self):
        assert self.q in (1, -1)

    def describe(self):
        if self.q == 1:
            if self.s == 0:
                return "c = c'"
            return "c = c' %s %d" % ("+" if self.s > 0 else "-", abs(self.s))
        k = 1 + self.s
        if k == 0:
            return "c = -c'"
        return "c = -c' %s %d" % ("-" if k > 0 else "+", abs(k))

    def to_json(self):
        return {"q": self.q, "s": self.s, "relation": self.describe()}


@dataclass
class Rejection:
    """Why no relation exists for the given data, with enough witness
    data to reproduce the failure."""
    reason: str  # NonIntegerRoots | CommonDifferenceNotUnit | NotArithmeticProgression
    witness: dict = field(default_factory=dict)

    def to_json(self):
        return {"reason": self.reason, "witness": self.witness}


class KTheoryVector:
    """Integer coordinates over the nontrivial representations of S_n,
    in canonical (descending lexicographic) order."""

    def __init__(self, n, coords=None):
        self.n = n
        self.index = gamma_star(n)
        coords = dict(coords or {})
        allowed = set(self.index)
        for lam in coords:
            if lam not in allowed:
                raise ValueError("%r does not index a nontrivial representation of S_%d"
                                 % (lam, n))
        self.coords = {lam: int(coords.get(lam, 0)) for lam in self.index}

    @classmethod
    def from_list(cls, n, values):
        index = gamma_star(n)
        if len(values) != len(index):
            raise ValueError("expected %d coordinates, got %d" % (len(index), len(values)))
        return cls(n, dict(zip(index, values)))

    def as_list(self):
        return [self.coords[lam] for lam in self.index]

    def __eq__(self, other):
        return (isinstance(other, KTheoryVector)
                and self.n == other.n and self.coords == other.coords)

    def __repr__(self):
        return "KTheoryVector(%d, %r)" % (self.n, self.as_list())

    def to_json(self):
        return self.as_list()


def hook_matrix(n):
    """Rows m = 1..n-1: the a-coefficient vectors of the hooks (m, 1^(n-m)).
    Lower-triangular with nonzero diagonal."""
    assert n >= 2
    return [a_coefficients(hook_partition(n, m), n) for m in range(1, n)]


def invert_hook_matrix(n):
    """Matrix C with 1/(x+k) = sum over m of C[k-1][m-1] * G_{hook m},
    verified by exact recombination."""
    a = [[Fraction(v) for v in row] for row in hook_matrix(n)]
    c = linalg.invert(a)
    for k in range(1, n):
        lhs = RationalFunction(Poly([1]), Poly([k, 1]))
        rhs = RationalFunction(Poly())
        for m in range(1, n):
            rhs = rhs + c[k - 1][m - 1] * g_function(hook_partition(n, m), n)
        assert lhs == rhs, "hook-basis recombination failed at k=%d" % k
    return c


def build_f(n, v):
    """The monic integer polynomial f(x) = prod(x+k) + sum a_k prod_{j!=k}(x+j)
    attached to the data vector; also returns the vector a_k."""
    assert n >= 2
    a = [0] * (n - 1)
    for lam, coeff in v.coords.items():
        if coeff == 0:
            continue
        row = a_coefficients(lam, n)
        for i in range(n - 1):
            a[i] += coeff * row[i]
    f = Poly.from_roots([-k for k in range(1, n)])
    for k in range(1, n):
        f = f + a[k - 1] * Poly.from_roots([-j for j in range(1, n) if j != k])
    return f, a


def derive_relation(n, v):
    """Relations compatible with the data vector, or a Rejection.

    Extracts the integer roots of f; accepts each reading of the sorted
    root multiset as an arithmetic progression with common difference
    +1 or -1, emitting one relation per reading.  For n = 2 a single
    root determines no difference and both signs are emitted.
    """
    from .exact import rational_roots

    f, a = build_f(n, v)
    roots, remainder = rational_roots(f)
    if remainder.degree > 0:
        return Rejection("NonIntegerRoots",
                         {"roots_found": roots, "remainder": remainder.to_json()})
    s_frac = Fraction(sum(a), n * (n - 1))
    if s_frac.denominator != 1:
        raise InternalDivisibility("shift %s is not an integer for %r" % (s_frac, v))
    s = int(s_frac)
    if n == 2:
        return {Relation(1, s), Relation(-1, s)}
    diffs = sorted(set(roots[i + 1] - roots[i] for i in range(len(roots) - 1)))
    if len(diffs) > 1:
        return Rejection("NotArithmeticProgression",
                         {"roots": roots, "differences": diffs})
    d = diffs[0]
    if d != 1:
        return Rejection("CommonDifferenceNotUnit",
                         {"roots": roots, "common_difference": d})
    return {Relation(1, s), Relation(-1, s)}


def remark_identity_check(n, v):
    """Check sum(a_k) = n(n-1) * sum over lam of K[conj(lam), alpha] * n_lam,
    where alpha = (2, 1^(n-2))."""
    assert n >= 2
    _, a = build_f(n, v)
    alpha = hook_partition(n, 2) if n >= 2 else None
    total = 0
    for lam, coeff in v.coords.items():
        if coeff:
            total += kostka(lam.conjugate(), alpha) * coeff
    return sum(a) == n * (n - 1) * total


def search_relations(n, bound):
    """Exhaustive box search |n_lam| <= bound; groups accepted outcomes
    by relation, each with its list of witness vectors."""
    index = gamma_star(n)
    found = {}
    for point in itertools.product(range(-bound, bound + 1), repeat=len(index)):
        v = KTheoryVector.from_list(n, list(point))
        result = derive_relation(n, v)
        if isinstance(result, Rejection):
            continue
        for rel in result:
            found.setdefault(rel, []).append(v)
    return found


def iso_obstruction(n, l, sign):
    """Evaluate prod_{k=1}^{n-1}(sign*x + n*l + k) * x^n at x = -sign*n*l.

    Equals (n-1)! * (-sign*n*l)^n: nonzero whenever l != 0, which rules
    out any nonzero integer shift between isomorphic members of the
    family."""
    assert n >= 2 and sign in (1, -1)
    p = Poly([1])
    for k in range(1, n):
        p = p * Poly([n * l + k, sign])
    p = p * Poly.from_roots([0] * n)
    value = p(-sign * n * l)
    expected = Fraction(math.factorial(n - 1) * (-sign * n * l) ** n)
    assert value == expected
    return value
