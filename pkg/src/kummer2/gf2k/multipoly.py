"""Sparse multivariate polynomials over GF(2^k)."""

from __future__ import annotations

from .field import F2, FieldElement, FieldError, FieldSpec

MAX_VARIABLES = 10


class MultiPoly:
    """Polynomial in named variables; ``terms`` maps exponent tuples to bit-encoded coefficients.

    Over F_2 the coefficient domain is just ``F2``; that is how symbolic
    coefficients are handled (they are extra variables).
    """

    __slots__ = ("field", "variables", "terms")

    def __init__(self, field: FieldSpec, variables, terms=None):
        variables = tuple(variables)
        if len(variables) > MAX_VARIABLES:
            raise ValueError(f"at most {MAX_VARIABLES} variables supported")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        self.field = field
        self.variables = variables
        clean = {}
        for e, c in (terms or {}).items():
            if isinstance(c, FieldElement):
                c = c.bits
            if len(e) != len(variables):
                raise ValueError("exponent vector length does not match variables")
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    # constructors

    @classmethod
    def var(cls, field, variables, name):
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls(field, variables, {tuple(e): 1})

    @classmethod
    def const(cls, field, variables, c=1):
        if isinstance(c, FieldElement):
            c = c.bits
        return cls(field, variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def gens(cls, field, variables):
        return [cls.var(field, variables, v) for v in variables]

    @classmethod
    def parse(cls, text: str, variables, field: FieldSpec = F2):
        """Parse sums of products like ``"z^2 + x*y + 0x3*x^2*y"``.

        Coefficients are hex literals; no parentheses.
        """
        variables = tuple(variables)
        terms = {}
        text = text.replace("-", "+").replace(" ", "")
        for chunk in text.split("+"):
            if not chunk:
                continue
            c = 1
            e = [0] * len(variables)
            for factor in chunk.split("*"):
                if factor.startswith("0x") or factor.isdigit():
                    c = field.mul(c, int(factor, 0))
                    continue
                name, _, power = factor.partition("^")
                if name not in variables:
                    raise ValueError(f"unknown variable {name!r}")
                e[variables.index(name)] += int(power) if power else 1
            e = tuple(e)
            terms[e] = terms.get(e, 0) ^ c
        return cls(field, variables, terms)

    # basic protocol

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return (isinstance(other, MultiPoly) and self.field == other.field
                and self.variables == other.variables and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if p == 1 else f"{v}^{p}" for v, p in zip(self.variables, e) if p)
            if not mono:
                parts.append(f"{c:#x}")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c:#x}*{mono}")
        return " + ".join(parts)

    def _check(self, other):
        if self.field != other.field or self.variables != other.variables:
            raise FieldError("polynomials live in different rings")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, FieldElement):
            if other.spec != self.field:
                raise FieldError("scalar from a different field")
            return MultiPoly.const(self.field, self.variables, other.bits)
        if isinstance(other, int) and other in (0, 1):
            return MultiPoly.const(self.field, self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) ^ c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly(self.field, self.variables, out)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) ^ F.mul(c1, c2)
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MultiPoly(F, self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = MultiPoly.const(self.field, self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> "MultiPoly":
        F = self.field
        return MultiPoly(F, self.variables, {e: F.mul(v, c) for e, v in self.terms.items()})

    def mul_monomial(self, mono, c: int = 1) -> "MultiPoly":
        F = self.field
        return MultiPoly(F, self.variables, {
            tuple(a + b for a, b in zip(e, mono)): F.mul(v, c) for e, v in self.terms.items()})

    def diff(self, name: str) -> "MultiPoly":
        """Formal partial derivative; even exponents die in characteristic 2."""
        i = self.variables.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] % 2:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c
        return MultiPoly(self.field, self.variables, out)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def substitute(self, mapping: dict, target_vars=None) -> "MultiPoly":
        """Replace variables by polynomials of a (possibly different) ring.

        Variables absent from ``mapping`` must exist in the target ring.
        """
        target_vars = tuple(target_vars or self.variables)
        images = []
        for v in self.variables:
            if v in mapping:
                images.append(mapping[v])
            else:
                images.append(MultiPoly.var(self.field, target_vars, v))
        acc = MultiPoly(self.field, target_vars)
        cache = {}
        for e, c in self.terms.items():
            term = MultiPoly.const(self.field, target_vars, c)
            for i, p in enumerate(e):
                if p:
                    key = (i, p)
                    if key not in cache:
                        cache[key] = images[i] ** p
                    term = term * cache[key]
            acc = acc + term
        return acc

    def evaluate(self, point: dict) -> FieldElement:
        F = self.field
        vals = []
        for v in self.variables:
            x = point[v]
            vals.append(x.bits if isinstance(x, FieldElement) else int(x))
        acc = 0
        for e, c in self.terms.items():
            t = c
            for x, p in zip(vals, e):
                if p:
                    t = F.mul(t, F.pow(x, p))
            acc ^= t
        return FieldElement(F, acc)


def grlex_key(e):
    """Graded-lexicographic sort key; the first declared variable is largest."""
    return (sum(e), e)


def derivation(p: MultiPoly, field_components: dict) -> MultiPoly:
    """Apply the derivation sum_v field_components[v] * d/dv to p."""
    acc = MultiPoly(p.field, p.variables)
    for v, coeff in field_components.items():
        acc = acc + coeff * p.diff(v)
    return acc
