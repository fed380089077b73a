"""Exact polynomial scalars.

Two small dict-backed polynomial rings, enough for the chain-complex
coefficients and the graded Euler characteristic:

* ``STPoly`` -- Z[s,t], the generic deformation coefficients.
* ``LaurentQX`` -- Z[q, q^-1, x, x^-1], Euler characteristics and the
  Drobotukhina polynomial (x tracks the essential-circle grading).

Everything is immutable-by-convention and hashable where needed; no
floating point anywhere.
"""

from __future__ import annotations


class STPoly:
    """Integer polynomial in the two deformation parameters s and t."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: {(s_exp, t_exp): coeff}, zeros stripped
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, n):
        return cls({(0, 0): int(n)})

    @classmethod
    def gen_s(cls):
        return cls({(1, 0): 1})

    @classmethod
    def gen_t(cls):
        return cls({(0, 1): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        return isinstance(other, STPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = STPoly.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return STPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return STPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = STPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return STPoly({k: v * other for k, v in self.terms.items()})
        out = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                k = (a + c, b + d)
                w = out.get(k, 0) + u * v
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return STPoly(out)

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b), c in sorted(self.terms.items()):
            mono = "".join(
                [f"s^{a}" if a > 1 else "s" if a == 1 else "",
                 f"t^{b}" if b > 1 else "t" if b == 1 else ""])
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append(f"{c}{mono}")
        s = "+".join(bits).replace("+-", "-")
        return s


class LaurentQX:
    """Integer Laurent polynomial in q and x."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def term(cls, coeff, qe, xe=0):
        return cls({(qe, xe): coeff})

    @classmethod
    def const(cls, n):
        return cls.term(int(n), 0, 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        return isinstance(other, LaurentQX) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return LaurentQX(out)

    def __neg__(self):
        return LaurentQX({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentQX({k: v * other for k, v in self.terms.items()})
        out = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                k = (a + c, b + d)
                w = out.get(k, 0) + u * v
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return LaurentQX(out)

    __rmul__ = __mul__

    def x_part(self, xe):
        """The q-Laurent slice at a fixed power of x."""
        return LaurentQX({(qe, 0): c for (qe, e), c in self.terms.items() if e == xe})

    def q_shift(self, d):
        return LaurentQX({(qe + d, xe): c for (qe, xe), c in self.terms.items()})

    def divide_by_q_plus_qinv(self):
        """Exact division by (q + q^-1); raises ValueError when not divisible.

        Only sensible on pure-q polynomials (x-exponent 0 throughout).
        """
        if any(xe for (_, xe) in self.terms):
            raise ValueError("not a pure-q polynomial")
        if not self.terms:
            return LaurentQX()
        coeffs = {qe: c for (qe, _), c in self.terms.items()}
        lo = min(coeffs)
        hi = max(coeffs)
        # (q + q^-1) * J = E  =>  E_e = J_{e-1} + J_{e+1}; solve ascending.
        j = {}
        for e in range(lo, hi):
            j[e + 1] = coeffs.get(e, 0) - j.get(e - 1, 0)
        quot = LaurentQX({(e, 0): c for e, c in j.items() if c})
        if quot * LaurentQX({(1, 0): 1, (-1, 0): 1}) != self:
            raise ValueError("not divisible by (q + q^-1)")
        return quot

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b), c in sorted(self.terms.items()):
            mono = ""
            if a:
                mono += "q" if a == 1 else f"q^{a}"
            if b:
                mono += "x" if b == 1 else f"x^{b}"
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append(f"{c}{mono}")
        return "+".join(bits).replace("+-", "-")

    def as_coeff_map(self):
        """JSON-friendly view: {"q^a" or "q^a x^b": coeff} with sorted keys."""
        out = {}
        for (a, b), c in sorted(self.terms.items()):
            key = f"q^{a}" if b == 0 else f"q^{a} x^{b}"
            out[key] = c
        return out


ONE = STPoly.const(1)
