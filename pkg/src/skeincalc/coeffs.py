"""Exact coefficient arithmetic over the ring Z[t, t^-1].

Everything downstream (Chebyshev bases, handlebody skeins, torus-knot
reductions, quantum-torus operators) is linear over Laurent polynomials in a
single variable t with arbitrary-precision integer coefficients.  Three sparse
types live here:

* :class:`LaurentPoly`   -- Z[t, t^-1], the ground ring.
* :class:`XZPoly`        -- polynomials in two commuting variables x, z over
                            the ground ring (also used z-free as the
                            coefficient ring of the quantum torus).
* :class:`WLaurent`      -- Laurent polynomials in an auxiliary variable w
                            over the ground ring, used for the substitution
                            identities that certify the Chebyshev tables.

All types are canonical (zero coefficients are pruned eagerly), immutable by
convention, and compare by structural equality.  Python integers never
overflow, so coefficient growth is exact by construction.

JSON forms use decimal strings for integer coefficients and sorted term lists,
giving deterministic, arbitrary-precision round trips:

    LaurentPoly  {"t":  [[exp, "coeff"], ...]}            ascending exp
    XZPoly       {"xz": [[xdeg, zdeg, {laurent}], ...]}   lex (xdeg, zdeg)
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """A Laurent polynomial in t with integer coefficients.

    Terms are held as a dict mapping exponent to nonzero coefficient.

    >>> p = LaurentPoly({4: -1, -2: 3})
    >>> str(p)
    '3*t^-2 - t^4'
    >>> str(p * p)
    '9*t^-4 - 6*t^2 + t^8'
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self.terms = clean

    @staticmethod
    def zero() -> LaurentPoly:
        return LaurentPoly()

    @staticmethod
    def one() -> LaurentPoly:
        return LaurentPoly({0: 1})

    @staticmethod
    def t_power(exp: int, coeff: int = 1) -> LaurentPoly:
        """The monomial coeff * t^exp."""
        return LaurentPoly({exp: coeff})

    @staticmethod
    def from_int(n: int) -> LaurentPoly:
        return LaurentPoly({0: n})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return LaurentPoly.from_int(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            res = LaurentPoly.__new__(LaurentPoly)
            res.terms = {e: c * other for e, c in self.terms.items()} if other else {}
            return res
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use t_power")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def bar(self) -> LaurentPoly:
        """The mirror involution t -> t^-1."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {-e: c for e, c in self.terms.items()}
        return res

    def substitute_one(self) -> int:
        """Evaluate at t = 1."""
        return sum(self.terms.values())

    def to_json(self) -> dict:
        return {"t": [[e, str(c)] for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPoly:
        return cls({int(e): int(c) for e, c in data["t"]})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            if e == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}t^{e}" if e != 1 else f"{mag}t"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()


def t(exp: int, coeff: int = 1) -> LaurentPoly:
    """Shorthand for the monomial coeff * t^exp."""
    return LaurentPoly.t_power(exp, coeff)


def bar(p: LaurentPoly) -> LaurentPoly:
    """Module-level alias for :meth:`LaurentPoly.bar`."""
    return p.bar()


class XZPoly:
    """A polynomial in commuting variables x, z over Z[t, t^-1].

    Keys are (x-degree, z-degree) pairs with degrees >= 0; values are nonzero
    LaurentPoly coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], LaurentPoly] | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                xd, zd = key
                if xd < 0 or zd < 0:
                    raise ValueError(f"negative degree in {key}")
                if c:
                    clean[(int(xd), int(zd))] = c
        self.terms = clean

    @staticmethod
    def zero() -> XZPoly:
        return XZPoly()

    @staticmethod
    def one() -> XZPoly:
        return XZPoly({(0, 0): ONE})

    @staticmethod
    def monomial(xdeg: int, zdeg: int, coeff: LaurentPoly | int = 1) -> XZPoly:
        if isinstance(coeff, int):
            coeff = LaurentPoly.from_int(coeff)
        return XZPoly({(xdeg, zdeg): coeff})

    @staticmethod
    def from_laurent(c: LaurentPoly) -> XZPoly:
        return XZPoly({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XZPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other: XZPoly) -> XZPoly:
        if not isinstance(other, XZPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = XZPoly.__new__(XZPoly)
        res.terms = out
        return res

    def __neg__(self) -> XZPoly:
        res = XZPoly.__new__(XZPoly)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other: XZPoly) -> XZPoly:
        return self + (-other)

    def __mul__(self, other: XZPoly | LaurentPoly | int) -> XZPoly:
        if isinstance(other, (LaurentPoly, int)):
            out = {}
            for k, c in self.terms.items():
                s = c * other
                if s:
                    out[k] = s
            res = XZPoly.__new__(XZPoly)
            res.terms = out
            return res
        if not isinstance(other, XZPoly):
            return NotImplemented
        out: dict[tuple[int, int], LaurentPoly] = {}
        for (x1, z1), c1 in self.terms.items():
            for (x2, z2), c2 in other.terms.items():
                k = (x1 + x2, z1 + z2)
                s = out.get(k, ZERO) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        res = XZPoly.__new__(XZPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def bar(self) -> XZPoly:
        res = XZPoly.__new__(XZPoly)
        res.terms = {k: c.bar() for k, c in self.terms.items()}
        return res

    def to_json(self) -> dict:
        return {
            "xz": [[xd, zd, self.terms[(xd, zd)].to_json()]
                   for xd, zd in sorted(self.terms)]
        }

    @classmethod
    def from_json(cls, data: dict) -> XZPoly:
        return cls({(int(xd), int(zd)): LaurentPoly.from_json(c)
                    for xd, zd, c in data["xz"]})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for xd, zd in sorted(self.terms):
            c = self.terms[(xd, zd)]
            mono = "".join(
                [f"x^{xd}" if xd > 1 else "x" if xd == 1 else "",
                 f"z^{zd}" if zd > 1 else "z" if zd == 1 else ""])
            parts.append(f"({c}){'*' + mono if mono else ''}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"XZPoly('{self}')"


class WLaurent:
    """A Laurent polynomial in w over Z[t, t^-1]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, LaurentPoly] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = c
        self.terms = clean

    @staticmethod
    def zero() -> WLaurent:
        return WLaurent()

    @staticmethod
    def one() -> WLaurent:
        return WLaurent({0: ONE})

    @staticmethod
    def w_power(exp: int, coeff: LaurentPoly | int = 1) -> WLaurent:
        if isinstance(coeff, int):
            coeff = LaurentPoly.from_int(coeff)
        return WLaurent({exp: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WLaurent):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other: WLaurent) -> WLaurent:
        if not isinstance(other, WLaurent):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = WLaurent.__new__(WLaurent)
        res.terms = out
        return res

    def __neg__(self) -> WLaurent:
        res = WLaurent.__new__(WLaurent)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other: WLaurent) -> WLaurent:
        return self + (-other)

    def __mul__(self, other: WLaurent | LaurentPoly | int) -> WLaurent:
        if isinstance(other, (LaurentPoly, int)):
            out = {}
            for e, c in self.terms.items():
                s = c * other
                if s:
                    out[e] = s
            res = WLaurent.__new__(WLaurent)
            res.terms = out
            return res
        if not isinstance(other, WLaurent):
            return NotImplemented
        out: dict[int, LaurentPoly] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = WLaurent.__new__(WLaurent)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[e]})*w^{e}" for e in sorted(self.terms))

    def __repr__(self) -> str:
        return f"WLaurent('{self}')"


def substitute_w(coeffs: Iterable[int | LaurentPoly], value: WLaurent) -> WLaurent:
    """Evaluate a univariate polynomial at a WLaurent argument.

    `coeffs` lists the polynomial's coefficients from the constant term up
    (the convention used by the Chebyshev tables in :mod:`skeincalc.chebyshev`).
    Evaluation is Horner's scheme in the exact coefficient ring.
    """
    result = WLaurent.zero()
    for c in reversed(list(coeffs)):
        if isinstance(c, int):
            c = LaurentPoly.from_int(c)
        result = result * value + WLaurent({0: c})
    return result
