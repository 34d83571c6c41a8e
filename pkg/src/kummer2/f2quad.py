"""Quadratic forms over F_2, Arf invariants and totally singular subspaces.

Vectors are bitmasks: bit ``i`` is the coordinate t_{i+1}.  A form is stored
as an upper-triangular bit matrix U (row ``i`` holds the coefficients of
t_i t_j for j >= i), so that q(x) = x^T U x.
"""

from __future__ import annotations

from dataclasses import dataclass


class QuadFormError(ValueError):
    pass


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


@dataclass(frozen=True)
class F2QuadForm:
    dim: int
    upper: tuple

    def __post_init__(self):
        rows = tuple(int(r) for r in self.upper)
        if len(rows) != self.dim:
            raise QuadFormError("need one row per variable")
        for i, r in enumerate(rows):
            if r & ((1 << i) - 1) or r >> self.dim:
                raise QuadFormError(f"row {i} has entries outside the upper triangle")
        object.__setattr__(self, "upper", rows)

    def __call__(self, x: int) -> int:
        val = 0
        for i, row in enumerate(self.upper):
            if (x >> i) & 1:
                val ^= _parity(row & x)
        return val

    def polar(self, x: int, y: int) -> int:
        return self(x ^ y) ^ self(x) ^ self(y)

    def polar_rows(self):
        """Rows of the alternating matrix B = U + U^T as bitmasks."""
        n = self.dim
        rows = [0] * n
        for i, r in enumerate(self.upper):
            for j in range(i + 1, n):
                if (r >> j) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return rows

    def radical(self):
        """Basis (bitmasks) of the kernel of the polar form."""
        return _kernel(self.polar_rows(), self.dim)

    def is_nondegenerate(self) -> bool:
        return not self.radical()

    def to_hex(self) -> list:
        return [f"{r:#x}" for r in self.upper]

    @classmethod
    def from_hex(cls, rows):
        rows = [int(r, 16) for r in rows]
        return cls(len(rows), tuple(rows))

    def __str__(self):
        terms = []
        for i, r in enumerate(self.upper):
            for j in range(i, self.dim):
                if (r >> j) & 1:
                    terms.append(f"t{i + 1}^2" if i == j else f"t{i + 1}t{j + 1}")
        return " + ".join(terms) or "0"


def _kernel(rows, n):
    """Null space over F_2 of the matrix whose row i is ``rows[i]`` (acting on column vectors)."""
    # Gaussian elimination on the columns of the transpose: solve sum x_j col_j = 0
    cols = []
    for j in range(n):
        c = 0
        for i, r in enumerate(rows):
            if (r >> j) & 1:
                c |= 1 << i
        cols.append(c)
    pivots = []
    kernel = []
    for j, c in enumerate(cols):
        combo = 1 << j
        for pb, pv, pc in pivots:
            if c & pb:
                c ^= pv
                combo ^= pc
        if c:
            pivots.append((1 << (c.bit_length() - 1), c, combo))
        else:
            kernel.append(combo)
    return kernel


def standard_form(sigma: int, r_mod_8: int) -> F2QuadForm:
    """t1 t2 + ... + t_{2s-1} t_{2s}, plus t1^2 + t2^2 when r = 6 mod 8."""
    if sigma < 0 or r_mod_8 not in (2, 6):
        raise QuadFormError("need sigma >= 0 and r mod 8 in {2, 6}")
    if sigma == 0 and r_mod_8 == 6:
        raise QuadFormError("the minus-type form needs sigma >= 1")
    n = 2 * sigma
    rows = [0] * n
    for i in range(0, n, 2):
        rows[i] |= 1 << (i + 1)
    if r_mod_8 == 6:
        rows[0] |= 1
        rows[1] |= 1 << 1
    return F2QuadForm(n, tuple(rows))


def zero_count_formula(sigma: int, arf: int) -> int:
    """2^{2s-1} + 2^{s-1} (Arf 0) or 2^{2s-1} - 2^{s-1} (Arf 1), including the zero vector."""
    if sigma == 0:
        return 1
    sign = -1 if arf else 1
    return 2 ** (2 * sigma - 1) + sign * 2 ** (sigma - 1)


def count_zeros(q: F2QuadForm) -> int:
    if not q.is_nondegenerate():
        raise QuadFormError("form is degenerate")
    return sum(1 for x in range(1 << q.dim) if not q(x))


def arf_invariant(q: F2QuadForm) -> int:
    if q.dim % 2:
        raise QuadFormError("odd-dimensional forms are degenerate")
    z = count_zeros(q)
    sigma = q.dim // 2
    if z == zero_count_formula(sigma, 0):
        return 0
    if z == zero_count_formula(sigma, 1):
        return 1
    raise QuadFormError("zero count matches neither type")  # pragma: no cover


def arf_symplectic(q: F2QuadForm) -> int:
    """Arf invariant via a symplectic basis: sum q(e_i) q(f_i).  Independent of zero counting."""
    if not q.is_nondegenerate():
        raise QuadFormError("form is degenerate")
    remaining = [1 << i for i in range(q.dim)]
    arf = 0
    while remaining:
        e = remaining.pop(0)
        f_idx = next(i for i, v in enumerate(remaining) if q.polar(e, v))
        f = remaining.pop(f_idx)
        arf ^= q(e) & q(f)
        # project the rest onto the orthogonal complement of <e, f>
        new = []
        for v in remaining:
            if q.polar(v, f):
                v ^= e
            if q.polar(v, e):
                v ^= f
            new.append(v)
        remaining = new
    return arf


def _rref(vectors):
    """Canonical reduced echelon basis (pivot = highest bit), sorted descending."""
    basis = []
    for v in vectors:
        for b in basis:
            if v & (1 << (b.bit_length() - 1)):
                v ^= b
        if v:
            top = 1 << (v.bit_length() - 1)
            basis = [b ^ v if b & top else b for b in basis]
            basis.append(v)
    return tuple(sorted(basis, reverse=True))


def span(basis):
    out = [0]
    for b in basis:
        out += [x ^ b for x in out]
    return out


def totally_singular_subspaces(q: F2QuadForm, d: int):
    """All d-dimensional subspaces on which q vanishes, as canonical echelon bases."""
    if d < 0:
        raise QuadFormError("dimension must be nonnegative")
    singular = [x for x in range(1, 1 << q.dim) if not q(x)]
    level = {()}
    for _ in range(d):
        nxt = set()
        for S in level:
            members = set(span(S))
            for v in singular:
                if v in members:
                    continue
                if all(not q.polar(v, s) for s in S):
                    nxt.add(_rref(S + (v,)))
        level = nxt
        if not level:
            break
    return sorted(level)


def perp(q: F2QuadForm, H):
    """Basis of the polar-orthogonal complement of span(H)."""
    rows = []
    for h in H:
        rows.append(sum(1 << j for j in range(q.dim) if q.polar(h, 1 << j)))
    if not rows:
        return [1 << i for i in range(q.dim)]
    return _kernel(rows, q.dim)


def induced_form(q: F2QuadForm, H) -> F2QuadForm:
    """The form q on H^perp / H for a totally singular subspace H."""
    H = list(_rref(H))
    for h in H:
        if q(h):
            raise QuadFormError("H is not totally singular")
    P = list(_rref(perp(q, H)))
    # complement of H inside P: extend the echelon basis of H
    basis_H = list(H)
    comp = []
    for v in P:
        if len(_rref(basis_H + comp + [v])) > len(basis_H) + len(comp):
            comp.append(v)
    n = len(comp)

    def lift(x):
        out = 0
        for i in range(n):
            if (x >> i) & 1:
                out ^= comp[i]
        return out

    rows = []
    for i in range(n):
        row = q(comp[i]) << i
        for j in range(i + 1, n):
            if q.polar(comp[i], comp[j]):
                row |= 1 << j
        rows.append(row)
    form = F2QuadForm(n, tuple(rows))
    assert all(form(x) == q(lift(x)) for x in range(1 << n))
    return form


def overlattice_count(r: int, sigma: int) -> int:
    """Number of index-2 even overlattices: 2^{2s-1} + (-1)^eps 2^{s-1} - 1, eps = (r-2)/4."""
    if r % 4 != 2 or sigma < 0 or 2 * sigma > r:
        raise QuadFormError(f"invalid invariants r={r}, sigma={sigma}")
    if sigma == 0:
        return 0
    eps = (r - 2) // 4
    return 2 ** (2 * sigma - 1) + (-1) ** eps * 2 ** (sigma - 1) - 1


def r_residue(r: int) -> int:
    if r % 4 != 2:
        raise QuadFormError("r must be 2 mod 4")
    return r % 8
