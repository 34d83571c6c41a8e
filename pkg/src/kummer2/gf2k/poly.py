"""Univariate polynomials over GF(2^k), root finding and additive polynomials."""

from __future__ import annotations

from .field import FieldElement, FieldError, FieldSpec


class UniPoly:
    """Immutable polynomial with coefficients stored lowest degree first.

    Coefficients are kept as raw bit encodings; ``coefficients`` exposes them
    as :class:`FieldElement` values.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs=()):
        cs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.spec is not field and c.spec != field:
                    raise FieldError(f"coefficient from {c.spec} in a polynomial over {field}")
                cs.append(c.bits)
            else:
                c = int(c)
                if not 0 <= c < field.order:
                    raise FieldError(f"{c:#x} is not an element of {field}")
                cs.append(c)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_elements(cls, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("need at least one coefficient to infer the field")
        return cls(coeffs[0].spec, coeffs)

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def const(cls, field, c):
        return cls(field, (c,))

    @property
    def coefficients(self):
        return [FieldElement(self.field, c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1]

    def __eq__(self, other):
        return (isinstance(other, UniPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                if c == 1 and mono:
                    terms.append(mono)
                else:
                    terms.append(f"{c:#x}" + (("*" + mono) if mono else ""))
        return " + ".join(reversed(terms))

    def _check(self, other):
        if other.field != self.field:
            raise FieldError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return UniPoly(self.field, out)

    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            other = UniPoly(self.field, (other.bits,))
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly(self.field)
        F = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] ^= F.mul(a, b)
        return UniPoly(F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = UniPoly(self.field, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = F.inv(other.lead())
        q = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                f = F.mul(c, inv_lead)
                q[i - db] = f
                for j, b in enumerate(other.coeffs):
                    if b:
                        rem[i - db + j] ^= F.mul(f, b)
        return UniPoly(F, q), UniPoly(F, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        inv = self.field.inv(self.lead())
        return UniPoly(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def derivative(self):
        # d/dx x^i = i x^(i-1); only odd i survive in characteristic 2
        return UniPoly(self.field, [c if i % 2 else 0 for i, c in enumerate(self.coeffs)][1:])

    def sqrt(self):
        """Square root of a polynomial whose odd coefficients vanish."""
        if any(c for i, c in enumerate(self.coeffs) if i % 2):
            raise ValueError("polynomial is not a square")
        F = self.field
        return UniPoly(F, [F.sqrt(c) for c in self.coeffs[::2]])

    def eval_bits(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.mul(acc, x) ^ c
        return acc

    def __call__(self, x):
        if isinstance(x, UniPoly):
            return self.compose(x)
        if isinstance(x, FieldElement):
            return FieldElement(self.field, self.eval_bits(x.bits))
        return FieldElement(self.field, self.eval_bits(int(x)))

    def compose(self, g: "UniPoly") -> "UniPoly":
        acc = UniPoly(self.field)
        for c in reversed(self.coeffs):
            acc = acc * g + UniPoly(self.field, (c,))
        return acc


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero if both inputs vanish)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def radical(f: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_zero():
        raise ValueError("radical of the zero polynomial")
    if f.degree == 0:
        return UniPoly(f.field, (1,))
    df = f.derivative()
    if df.is_zero():
        return radical(f.sqrt())
    g = poly_gcd(f, df)
    if g.degree == 0:
        return f.monic()
    a = radical(f // g)
    b = radical(g)
    return (a * b) // poly_gcd(a, b)


def distinct_root_count(f: UniPoly) -> int:
    """Number of distinct roots in an algebraic closure."""
    return radical(f).degree


def roots(f: UniPoly):
    """Roots in ``f.field`` with multiplicities, by exhaustive evaluation and deflation."""
    if f.is_zero():
        raise ValueError("roots of the zero polynomial are undefined")
    F = f.field
    out = []
    for x in range(F.order):
        if f.eval_bits(x) == 0:
            lin = UniPoly(F, (x, 1))
            mult = 0
            g = f
            while True:
                q, r = g.divmod(lin)
                if not r.is_zero():
                    break
                mult += 1
                g = q
            out.append((FieldElement(F, x), mult))
    return out


def is_separable(f: UniPoly) -> bool:
    if f.degree < 1:
        raise ValueError("separability is undefined for constant polynomials")
    return poly_gcd(f, f.derivative()).degree == 0


def additive_map_matrix(F: FieldSpec, l4: int, l2: int, tau: int):
    """Columns (as bitmasks) of beta -> l4 beta^4 + l2 beta^2 + tau beta over F_2."""
    cols = []
    for i in range(F.k):
        b = 1 << i
        b2 = F.mul(b, b)
        b4 = F.mul(b2, b2)
        cols.append(F.mul(l4, b4) ^ F.mul(l2, b2) ^ F.mul(tau, b))
    return cols


def solve_f2(cols, k: int, target: int):
    """All x in F_2^k with sum(x_i * cols[i]) == target.

    Returns ``(particular, kernel_basis)`` or ``None`` if unsolvable.
    """
    # eliminate on augmented rows: track combination masks
    rows = [(c, 1 << i) for i, c in enumerate(cols)]
    pivots = []  # (pivot_bit, value, combo)
    kernel = []
    for val, combo in rows:
        for pb, pv, pc in pivots:
            if val & pb:
                val ^= pv
                combo ^= pc
        if val == 0:
            kernel.append(combo)
        else:
            pb = 1 << (val.bit_length() - 1)
            # keep pivots reduced so later rows clear every pivot bit
            new = []
            for qb, qv, qc in pivots:
                if qv & pb:
                    qv ^= val
                    qc ^= combo
                new.append((qb, qv, qc))
            pivots = new + [(pb, val, combo)]
    val, combo = target, 0
    for pb, pv, pc in pivots:
        if val & pb:
            val ^= pv
            combo ^= pc
    if val:
        return None
    return combo, kernel


def additive_solve(l4: FieldElement, l2: FieldElement, tau: FieldElement, c: FieldElement):
    """All beta in the field with l4 beta^4 + l2 beta^2 + tau beta = c.

    The left side is F_2-linear in beta, so the solution set is empty or a
    coset of the kernel.
    """
    F = l4.spec
    for e in (l2, tau, c):
        if e.spec != F:
            raise FieldError("mismatched fields")
    if not (l4.bits or l2.bits or tau.bits):
        raise ValueError("additive polynomial with all coefficients zero")
    cols = additive_map_matrix(F, l4.bits, l2.bits, tau.bits)
    sol = solve_f2(cols, F.k, c.bits)
    if sol is None:
        return []
    part, kernel = sol
    span = {0}
    for v in kernel:
        span |= {s ^ v for s in span}
    return [FieldElement(F, part ^ s) for s in sorted(span, key=lambda s: part ^ s)]
