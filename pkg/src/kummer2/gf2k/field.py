"""Binary extension fields GF(2^k) with bitmask-encoded elements.

Bit ``i`` of an element encoding is the coefficient of ``x**i`` in the
residue representative modulo the field's modulus.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

MAX_DEGREE = 16


class FieldError(ValueError):
    """Invalid field specification or incompatible operands."""


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def is_irreducible(m: int) -> bool:
    """Trial division by every polynomial of degree 1 .. deg(m)//2."""
    d = m.bit_length() - 1
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if poly_mod(m, q) == 0:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(k: int) -> int:
    for m in range((1 << k) | 1, 1 << (k + 1), 2):
        if is_irreducible(m):
            return m
    raise FieldError(f"no irreducible polynomial of degree {k}")  # pragma: no cover


@lru_cache(maxsize=None)
def _tables(k: int, modulus: int):
    """exp/log tables with respect to the smallest primitive element."""
    q = 1 << k
    n = q - 1

    def mul(a, b):
        return poly_mod(clmul(a, b), modulus)

    for g in range(1, q):
        exp = [0] * (2 * n)
        x = 1
        ok = True
        for i in range(n):
            if i and x == 1:
                ok = False
                break
            exp[i] = x
            x = mul(x, g)
        if ok and x == 1:
            break
    else:  # pragma: no cover
        raise FieldError("no primitive element found")
    for i in range(n, 2 * n):
        exp[i] = exp[i - n]
    log = [0] * q
    for i in range(n):
        log[exp[i]] = i
    return g, tuple(exp), tuple(log)


_SPEC_RE = re.compile(r"^gf(\d+):(0x[0-9a-fA-F]+|\d+)$")


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^k) presented as F_2[x]/(modulus)."""

    k: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.k <= MAX_DEGREE:
            raise FieldError(f"extension degree must be in 1..{MAX_DEGREE}, got {self.k}")
        if self.modulus.bit_length() - 1 != self.k:
            raise FieldError(f"modulus {self.modulus:#x} does not have degree {self.k}")
        if not is_irreducible(self.modulus):
            raise FieldError(f"modulus {self.modulus:#x} is reducible over F_2")

    @classmethod
    def default(cls, k: int) -> "FieldSpec":
        """GF(2^k) with the numerically smallest irreducible modulus."""
        if not 1 <= k <= MAX_DEGREE:
            raise FieldError(f"extension degree must be in 1..{MAX_DEGREE}, got {k}")
        return cls(k, smallest_irreducible(k))

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``"gf16:0x13"``."""
        mo = _SPEC_RE.match(text.strip())
        if mo is None:
            raise FieldError(f"cannot parse field spec {text!r}")
        order = int(mo.group(1))
        modulus = int(mo.group(2), 0)
        if order < 2 or order & (order - 1):
            raise FieldError(f"field order {order} is not a power of two")
        return cls(order.bit_length() - 1, modulus)

    def __str__(self):
        return f"gf{self.order}:{self.modulus:#x}"

    @property
    def order(self) -> int:
        return 1 << self.k

    # raw integer arithmetic; hot loops use these directly

    def _t(self):
        return _tables(self.k, self.modulus)

    @property
    def primitive(self) -> int:
        return self._t()[0]

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        try:
            exp, log = self._exp, self._log
        except AttributeError:
            _, exp, log = self._t()
            object.__setattr__(self, "_exp", exp)
            object.__setattr__(self, "_log", log)
        return exp[log[a] + log[b]]

    def _el(self, bits: int) -> "FieldElement":
        """Shared (interned) element object for ``bits``."""
        try:
            return self._elts[bits]
        except AttributeError:
            object.__setattr__(self, "_elts", [FieldElement(self, b) for b in range(self.order)])
            return self._elts[bits]

    def _mul_table(self):
        """Element-valued multiplication table for fields of order <= 256, else None."""
        try:
            return self._mt
        except AttributeError:
            mt = None
            if self.order <= 256:
                mt = [[self._el(self.mul(a, b)) for b in range(self.order)]
                      for a in range(self.order)]
            object.__setattr__(self, "_mt", mt)
            return mt

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero in " + str(self))
        _, exp, log = self._t()
        return exp[(self.order - 1 - log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if not a:
            return 0
        _, exp, log = self._t()
        return exp[(log[a] * e) % (self.order - 1)]

    def sqrt(self, a: int) -> int:
        # Frobenius is bijective; its inverse is x -> x^(2^(k-1))
        return self.pow(a, 1 << (self.k - 1)) if a else 0

    def exp(self, i: int) -> int:
        """The element g^i for the cached primitive element g."""
        _, exp, _ = self._t()
        return exp[i % (self.order - 1)]

    def log(self, a: int) -> int:
        if not a:
            raise ValueError("log of zero")
        return self._t()[2][a]

    def element(self, bits) -> "FieldElement":
        if isinstance(bits, FieldElement):
            if bits.spec != self:
                raise FieldError("element belongs to a different field")
            return bits
        if isinstance(bits, str):
            bits = int(bits, 16)
        if not 0 <= bits < self.order:
            raise FieldError(f"{bits:#x} is not a canonical element of {self}")
        return FieldElement(self, bits)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def gen(self) -> "FieldElement":
        """The class of x (not necessarily primitive)."""
        return FieldElement(self, 2 % self.order if self.k > 1 else 1)

    def elements(self):
        return [FieldElement(self, b) for b in range(self.order)]

    def is_subfield_degree(self, d: int) -> bool:
        return self.k % d == 0


F2 = FieldSpec(1, 0b11)


class FieldElement:
    """Immutable element of a :class:`FieldSpec`; ``bits`` is its bitmask encoding."""

    __slots__ = ("spec", "bits")

    def __init__(self, spec: FieldSpec, bits: int):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __eq__(self, other):
        if other.__class__ is not FieldElement:
            return NotImplemented
        return self.bits == other.bits and (self.spec is other.spec or self.spec == other.spec)

    def __hash__(self):
        return hash((self.spec, self.bits))

    def __reduce__(self):
        return FieldElement, (self.spec, self.bits)

    def _other(self, other) -> int:
        if other.__class__ is FieldElement:
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldError(f"mismatched fields {self.spec} and {other.spec}")
            return other.bits
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        spec = self.spec
        if other.__class__ is FieldElement and other.spec is spec:
            try:
                return spec._elts[self.bits ^ other.bits]
            except AttributeError:
                return spec._el(self.bits ^ other.bits)
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self.spec._el(self.bits ^ b)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        spec = self.spec
        if other.__class__ is FieldElement and other.spec is spec:
            try:
                mt = spec._mt
            except AttributeError:
                mt = spec._mul_table()
            if mt is not None:
                return mt[self.bits][other.bits]
            return spec._el(spec.mul(self.bits, other.bits))
        b = self._other(other)
        if b is NotImplemented:
            return b
        return spec._el(spec.mul(self.bits, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(self.bits, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(b, self.bits))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.bits, e))

    def inverse(self):
        return FieldElement(self.spec, self.spec.inv(self.bits))

    def sqrt(self):
        return FieldElement(self.spec, self.spec.sqrt(self.bits))

    def frobenius(self):
        return self * self

    def __bool__(self):
        return self.bits != 0

    def __int__(self):
        return self.bits

    def hex(self) -> str:
        return f"{self.bits:#x}"

    def __repr__(self):
        return f"{self.spec}[{self.bits:#x}]"


def ff_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Dispatch ``add``/``mul``/``div``/``pow``; for ``pow`` ``b`` is an int."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a ** int(b)
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=None)
def embedding(small: FieldSpec, big: FieldSpec) -> tuple:
    """Table ``bits -> bits`` of a field embedding GF(2^k) -> GF(2^K).

    The image of x is the smallest-encoded root of the small modulus lying in
    the degree-k subfield of the big field.
    """
    if big.k % small.k:
        raise FieldError(f"{small} does not embed in {big}")
    if small == big:
        return tuple(range(small.order))
    n = big.order - 1
    h = big.exp(n // (small.order - 1))
    sub = [0] + [big.pow(h, i) for i in range(small.order - 1)]
    m = small.modulus
    roots = []
    for r in sub:
        acc = 0
        for i in range(small.k, -1, -1):
            acc = big.mul(acc, r) ^ ((m >> i) & 1)
        if acc == 0:
            roots.append(r)
    r = min(roots)
    powers = [1]
    for _ in range(small.k - 1):
        powers.append(big.mul(powers[-1], r))
    table = []
    for b in range(small.order):
        acc = 0
        for i in range(small.k):
            if (b >> i) & 1:
                acc ^= powers[i]
        table.append(acc)
    return tuple(table)


def embed(a: FieldElement, big: FieldSpec) -> FieldElement:
    return FieldElement(big, embedding(a.spec, big)[a.bits])


def extension_degrees(k: int, cap: int = MAX_DEGREE) -> list:
    """Multiples of k that can host splitting fields of quartics, up to ``cap``."""
    out = []
    for d in (1, 2, 3, 4, 6, 12):
        if k * d <= cap:
            out.append(k * d)
    return out
