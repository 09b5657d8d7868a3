"""Sparse multivariate Laurent polynomials over the integers.

Terms are a dict from exponent tuples to nonzero integer coefficients;
exponents may be negative.  Besides ring arithmetic the module provides
exact division and a primitive-PRS multivariate GCD, which back the
fraction reduction in the symbolic exchange engine.  The expected case
there is a monomial denominator, so reduction tries content extraction
and a single trial division first and only falls back to the full GCD.

Monomial order is lexicographic on the exponent tuple; for division by a
single divisor that is all we need (leading monomials multiply).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    self.terms[tuple(exps)] = coeff

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "Poly":
        return cls.const(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, slot: int, power: int = 1) -> "Poly":
        exps = [0] * nvars
        exps[slot] = power
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars: int, exps, coeff: int = 1) -> "Poly":
        return cls(nvars, {tuple(exps): coeff})

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> int:
        if self.is_zero():
            return 0
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # mutable dict inside; never used as a key

    def __repr__(self) -> str:
        return f"Poly({self.format([f'v{i}' for i in range(self.nvars)])})"

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- structure -------------------------------------------------------

    def min_exponents(self) -> tuple[int, ...]:
        """Componentwise minimum exponent (zeros for the zero polynomial)."""
        if not self.terms:
            return (0,) * self.nvars
        mins = None
        for exps in self.terms:
            mins = exps if mins is None else tuple(map(min, mins, exps))
        return mins

    def shift(self, delta: tuple[int, ...]) -> "Poly":
        """Multiply by the (unit) monomial with exponent vector delta."""
        if all(d == 0 for d in delta):
            return self
        return Poly(
            self.nvars,
            {tuple(a + b for a, b in zip(e, delta)): c for e, c in self.terms.items()},
        )

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = int_gcd(g, c)
        return g

    def lex_lead(self) -> tuple[tuple[int, ...], int]:
        e = max(self.terms)
        return e, self.terms[e]

    def degree(self, slot: int) -> int:
        """Max exponent of one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(e[slot] for e in self.terms)

    def coeff_in(self, slot: int, power: int) -> "Poly":
        """Coefficient of variable^power, as a polynomial with that slot zeroed."""
        out = {}
        for exps, c in self.terms.items():
            if exps[slot] == power:
                out[exps[:slot] + (0,) + exps[slot + 1 :]] = c
        return Poly(self.nvars, out)

    def shift_var(self, slot: int, k: int) -> "Poly":
        if k == 0:
            return self
        return Poly(
            self.nvars,
            {e[:slot] + (e[slot] + k,) + e[slot + 1 :]: c for e, c in self.terms.items()},
        )

    # -- division and gcd --------------------------------------------------

    def exact_div(self, divisor: "Poly") -> "Poly | None":
        """Exact quotient self/divisor in the Laurent ring, or None.

        Both operands are first shifted so all exponents are nonnegative
        (monomials are units), then ordinary single-divisor division runs
        under lex order with an integer-divisibility check per step; any
        failure means the division is not exact.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Poly.zero(self.nvars)
        smin = self.min_exponents()
        dmin = divisor.min_exponents()
        num = self.shift(tuple(-m for m in smin)).terms
        den = divisor.shift(tuple(-m for m in dmin)).terms
        lead = max(den)
        lc = den[lead]
        rem = dict(num)
        quot: dict[tuple[int, ...], int] = {}
        while rem:
            re = max(rem)
            qe = tuple(a - b for a, b in zip(re, lead))
            if any(e < 0 for e in qe):
                return None
            qc, r = divmod(rem[re], lc)
            if r:
                return None
            quot[qe] = qc
            for de, dc in den.items():
                ke = tuple(a + b for a, b in zip(qe, de))
                s = rem.get(ke, 0) - qc * dc
                if s:
                    rem[ke] = s
                else:
                    rem.pop(ke, None)
        back = tuple(a - b for a, b in zip(smin, dmin))
        return Poly(self.nvars, quot).shift(back)

    # -- evaluation and printing -------------------------------------------

    def evaluate(self, values) -> Fraction:
        """Exact evaluation at rational points.

        Negative exponents at a zero coordinate raise ZeroDivisionError,
        which callers surface as a pole error.
        """
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = Fraction(coeff)
            for v, e in zip(values, exps):
                if e:
                    term *= Fraction(v) ** e
            total += term
        return total

    def format(self, names) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(names[i])
                elif e:
                    factors.append(f"{names[i]}^{e}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, first = pieces[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def sexpr(self, names) -> str:
        """Deterministic parenthesized form: (+ (* c (^ v e) ...) ...)."""
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(names[i])
                elif e:
                    factors.append(f"(^ {names[i]} {e})")
            if factors:
                parts.append(f"(* {c} " + " ".join(factors) + ")")
            else:
                parts.append(str(c))
        if len(parts) == 1:
            return parts[0]
        return "(+ " + " ".join(parts) + ")"


# -- multivariate gcd (primitive pseudo-remainder sequences) ---------------


def _positive_lead(p: Poly) -> Poly:
    if p.is_zero():
        return p
    _, c = p.lex_lead()
    return -p if c < 0 else p


def _content_wrt(p: Poly, slot: int) -> Poly:
    """GCD of the coefficients of p viewed as a polynomial in one variable."""
    groups: dict[int, Poly] = {}
    for exps, c in p.terms.items():
        k = exps[slot]
        base = exps[:slot] + (0,) + exps[slot + 1 :]
        g = groups.setdefault(k, Poly(p.nvars))
        g.terms[base] = g.terms.get(base, 0) + c
    result = Poly.zero(p.nvars)
    for g in groups.values():
        result = _gcd_nonneg(result, g)
    return result


def _prem(a: Poly, b: Poly, slot: int) -> Poly:
    """Pseudo-remainder of a by b in the given variable (up to lc powers)."""
    db = b.degree(slot)
    lcb = b.coeff_in(slot, db)
    r = a
    while not r.is_zero() and r.degree(slot) >= db:
        dr = r.degree(slot)
        lr = r.coeff_in(slot, dr)
        r = lcb * r - (lr * b).shift_var(slot, dr - db)
    return r


def _gcd_nonneg(a: Poly, b: Poly) -> Poly:
    if a.is_zero():
        return _positive_lead(b)
    if b.is_zero():
        return _positive_lead(a)
    if a.is_constant() or b.is_constant():
        return Poly.const(a.nvars, int_gcd(a.content(), b.content()))
    slot = next(
        i for i in range(a.nvars) if a.degree(i) > 0 or b.degree(i) > 0
    )
    ca = _content_wrt(a, slot)
    cb = _content_wrt(b, slot)
    d = _gcd_nonneg(ca, cb)
    pa = a.exact_div(ca)
    pb = b.exact_div(cb)
    if pa.degree(slot) < pb.degree(slot):
        pa, pb = pb, pa
    while True:
        r = _prem(pa, pb, slot)
        if r.is_zero():
            g = pb
            break
        if r.degree(slot) == 0:
            g = Poly.one(a.nvars)
            break
        pa, pb = pb, r.exact_div(_content_wrt(r, slot))
    return _positive_lead(d * g)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """GCD in the Laurent ring, returned with nonnegative exponents.

    Monomial factors are units, so they are stripped from the inputs and
    never appear in the result; the result has a positive leading
    coefficient.
    """
    a = p if p.is_zero() else p.shift(tuple(-m for m in p.min_exponents()))
    b = q if q.is_zero() else q.shift(tuple(-m for m in q.min_exponents()))
    return _gcd_nonneg(a, b)
