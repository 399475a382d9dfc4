"""Partition combinatorics of the symmetric group.

Partitions index the irreducible representations of S_n; the canonical
ordering used everywhere in this package is descending lexicographic,
so the list for a given n starts with (n) (the trivial representation)
and the nontrivial tail is what vectors over "Gamma star" are indexed by.
"""

import math
from fractions import Fraction
from functools import lru_cache


class WeightMismatch(ValueError):
    pass


class InternalDisagreement(AssertionError):
    """Two independent evaluation routes differ -- an implementation bug."""


class Partition:
    """A weakly decreasing tuple of positive integers.

    Immutable value type; weight, length and part multiplicities are
    computed on construction.
    """

    __slots__ = ("parts", "weight", "length", "multiplicities")

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        assert all(p > 0 for p in parts), parts
        assert all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)), parts
        self.parts = parts
        self.weight = sum(parts)
        self.length = len(parts)
        mult = {}
        for p in parts:
            mult[p] = mult.get(p, 0) + 1
        self.multiplicities = mult

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return self.length

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self):
        return "Partition(%r)" % (self.parts,)

    def cells(self):
        """Cells (i, j) of the Young diagram, 0-based rows/columns."""
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield (i, j)

    def conjugate(self):
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def hook_lengths(self):
        """Hook length of every cell, as a flat list."""
        conj = self.conjugate().parts
        return [self.parts[i] - j + conj[j] - i - 1 for (i, j) in self.cells()]

    def dimension(self):
        """Irreducible dimension by the hook length formula."""
        num = math.factorial(self.weight)
        for h in self.hook_lengths():
            num //= h
        return num

    def content_multiset(self):
        """Contents j - i over the cells of the diagram."""
        return [j - i for (i, j) in self.cells()]

    def dominates(self, other):
        """Dominance order: partial sums of self bound those of other."""
        if self.weight != other.weight:
            return False
        a = b = 0
        for i in range(max(self.length, other.length)):
            a += self.parts[i] if i < self.length else 0
            b += other.parts[i] if i < other.length else 0
            if a < b:
                return False
        return True

    def to_json(self):
        return list(self.parts)


def conjugate(lam):
    return lam.conjugate()


def dimension(lam):
    return lam.dimension()


def content_multiset(lam):
    return lam.content_multiset()


def enumerate_partitions(n):
    """All partitions of n in descending lexicographic order."""
    assert n >= 1

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in gen(n, n)]


def gamma_star(n):
    """Nontrivial representations: canonical list minus its head (n)."""
    return enumerate_partitions(n)[1:]


def hook_partition(n, m):
    """The hook (m, 1^(n-m))."""
    assert 1 <= m <= n
    return Partition((m,) + (1,) * (n - m))


@lru_cache(maxsize=None)
def _kostka(shape, content):
    # number of SSYT of the given shape whose letter i appears content[i-1]
    # times, counted by peeling horizontal strips from the top letter down
    if not content:
        return 1 if not shape else 0
    size = content[-1]
    total = 0
    for inner in _horizontal_strips(shape, size):
        total += _kostka(inner, content[:-1])
    return total


def _horizontal_strips(shape, size):
    """Partitions inner <= shape with shape/inner a horizontal strip of
    the given size (rows interlace: shape[i+1] <= inner[i] <= shape[i])."""
    rows = len(shape)

    def rec(i, remaining):
        if i == rows:
            if remaining == 0:
                yield ()
            return
        lo = shape[i + 1] if i + 1 < rows else 0
        hi = shape[i]
        for v in range(hi, lo - 1, -1):
            removed = hi - v
            if removed > remaining:
                break
            for tail in rec(i + 1, remaining - removed):
                yield (v,) + tail

    for inner in rec(0, size):
        yield tuple(p for p in inner if p > 0)


def kostka(lam, sigma):
    """Number of semistandard Young tableaux of shape lam, content sigma."""
    if lam.weight != sigma.weight:
        raise WeightMismatch("shape and content must have equal weight")
    return _kostka(lam.parts, sigma.parts)


def monomial_eval_ones(sigma, k):
    """m_sigma at k ones: the number of distinct monomials of exponent
    type sigma in k variables; 0 when k < length(sigma)."""
    l = sigma.length
    if k < l:
        return 0
    denom = 1
    for m in sigma.multiplicities.values():
        denom *= math.factorial(m)
    return math.comb(k, l) * math.factorial(l) // denom


def _schur_hook_content(lam, k):
    # product of (k + content)/hook over the cells; an integer for k >= 0
    val = Fraction(1)
    conj = lam.conjugate().parts
    for (i, j) in lam.cells():
        hook = lam.parts[i] - j + conj[j] - i - 1
        val *= Fraction(k + j - i, hook)
    assert val.denominator == 1
    return int(val)


def _schur_kostka(lam, k):
    total = 0
    for sigma in enumerate_partitions(lam.weight):
        if sigma.length > k:
            continue
        total += kostka(lam, sigma) * monomial_eval_ones(sigma, k)
    return total


def schur_eval_ones(lam, k):
    """Schur function of lam at k ones, by two independent routes.

    Route (i) is the Kostka expansion over monomial symmetric functions,
    route (ii) the hook-content product; their agreement is asserted on
    every call.
    """
    assert k >= 0
    if lam.length > k:
        return 0
    via_kostka = _schur_kostka(lam, k)
    via_hooks = _schur_hook_content(lam, k)
    if via_kostka != via_hooks:
        raise InternalDisagreement(
            "schur routes differ for %r at k=%d: %d vs %d"
            % (lam, k, via_kostka, via_hooks))
    return via_hooks
