"""Exact scalar and univariate polynomial arithmetic.

Scalars are ``fractions.Fraction`` throughout -- no floats anywhere.
Polynomials are dense lists of Fractions indexed by degree.  On top of
that we provide reduced rational functions, partial fraction expansions
at simple integer poles, and integer-root extraction for monic integer
polynomials.
"""

from fractions import Fraction

Rational = Fraction


class ZeroDenominator(ZeroDivisionError):
    pass


class DegreeError(ValueError):
    pass


class NonSimplePoles(ValueError):
    pass


class NotMonicInteger(ValueError):
    pass


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def rational_to_str(r):
    """Serialize a Fraction as "p/q", or "p" when the denominator is 1."""
    r = _as_fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return "%d/%d" % (r.numerator, r.denominator)


def rational_from_str(s):
    return Fraction(s)


class Poly:
    """Dense univariate polynomial with Fraction coefficients.

    coeffs[i] is the coefficient of x**i; trailing zeros are stripped,
    so the zero polynomial has an empty coefficient list.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots):
        """Monic product of (x - r) over the given roots."""
        p = cls([1])
        for r in roots:
            p = p * cls([-_as_fraction(r), 1])
        return p

    @property
    def degree(self):
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def monic(self):
        if self.is_zero():
            return self
        lc = self.leading()
        return Poly([c / lc for c in self.coeffs])

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def has_integer_coeffs(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def __call__(self, x):
        """Evaluate by Horner's rule with exact arithmetic."""
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _as_fraction(other)
            return Poly([c * a for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def __rmul__(self, other):
        return self * other

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        if other.is_zero():
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self.coeffs)
        dd, dv = self.degree, other.degree
        if dd < dv:
            return Poly(), self
        quot = [Fraction(0)] * (dd - dv + 1)
        lc = other.leading()
        for i in range(dd - dv, -1, -1):
            c = rem[i + dv] / lc
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(rational_to_str(c))
            elif i == 1:
                terms.append("%s*x" % rational_to_str(c))
            else:
                terms.append("%s*x^%d" % (rational_to_str(c), i))
        return "Poly(%s)" % " + ".join(terms)

    def to_json(self):
        return [rational_to_str(c) for c in self.coeffs]


def poly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm (monic 1 for coprime inputs)."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def poly_eval(p, x):
    return p(x)


class RationalFunction:
    """Reduced ratio num/den of Polys: gcd divided out, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=Poly([1])):
        if not isinstance(num, Poly):
            num = Poly.constant(num)
        if not isinstance(den, Poly):
            den = Poly.constant(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        g = poly_gcd(num, den)
        if not g.is_zero():
            num, den = num // g, den // g
        lc = den.leading()
        self.num = num * (1 / lc)
        self.den = den.monic()

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction)):
            return self == RationalFunction(other if isinstance(other, Poly)
                                            else Poly.constant(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        return RationalFunction(Poly.constant(other))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDenominator("evaluation at a pole")
        return self.num(x) / d

    def __repr__(self):
        return "RationalFunction(%r, %r)" % (self.num, self.den)

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def rf_normalize(num, den):
    """Reduced rational function num/den; raises ZeroDenominator on den = 0."""
    return RationalFunction(num, den)


class PartialFraction:
    """Sum of residue/(x - pole) over distinct integer poles."""

    __slots__ = ("residues",)

    def __init__(self, residues):
        self.residues = {int(p): _as_fraction(r) for p, r in residues.items()}

    def to_rational_function(self):
        total = RationalFunction(Poly())
        for p, r in self.residues.items():
            total = total + RationalFunction(Poly.constant(r), Poly([-p, 1]))
        return total

    def __eq__(self, other):
        if isinstance(other, PartialFraction):
            return self.residues == other.residues
        return NotImplemented

    def __repr__(self):
        return "PartialFraction(%r)" % (self.residues,)

    def to_json(self):
        return {str(p): rational_to_str(r)
                for p, r in sorted(self.residues.items())}


def rational_roots(p):
    """All integer roots (with multiplicity) of a monic integer polynomial.

    Candidates are divisors of the constant term, verified by exact
    evaluation and removed by synthetic division.  Returns the sorted
    root list together with the integer-root-free remaining factor.
    """
    if not (p.is_monic() and p.has_integer_coeffs()):
        raise NotMonicInteger("need a monic polynomial with integer coefficients")
    roots = []
    cur = p
    # peel off roots at zero first
    while cur.degree >= 1 and cur.coeffs[0] == 0:
        roots.append(0)
        cur = cur // Poly.x()
    while cur.degree >= 1:
        c0 = abs(int(cur.coeffs[0]))
        found = None
        for d in range(1, c0 + 1):
            if c0 % d:
                continue
            for r in (d, -d):
                if cur(r) == 0:
                    found = r
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        cur = cur // Poly([-found, 1])
    roots.sort()
    return roots, cur


def partial_fractions(rf):
    """Expand rf into elementary fractions at simple integer poles.

    Requires deg(num) < deg(den) and a denominator that splits into
    distinct monic linear factors with integer roots.  Poles with zero
    residue (zero numerator) are kept.
    """
    if rf.num.degree >= rf.den.degree:
        raise DegreeError("numerator degree must be below denominator degree")
    roots, rem = rational_roots(rf.den)
    if rem.degree > 0 or len(set(roots)) != len(roots):
        raise NonSimplePoles("denominator must have distinct integer roots")
    residues = {}
    for p in roots:
        denom = Fraction(1)
        for q in roots:
            if q != p:
                denom *= (p - q)
        residues[p] = rf.num(p) / denom
    return PartialFraction(residues)
