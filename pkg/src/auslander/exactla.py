"""Exact linear algebra over the rationals and prime fields.

Matrices are python-flint ``fmpq_mat`` (over Q) or ``nmod_mat`` (over F_p).
All vectors are row vectors; a matrix acts on the right of a row vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import flint
from flint import fmpq, fmpq_mat, fmpq_poly, nmod, nmod_mat, nmod_poly

Matrix = "fmpq_mat | nmod_mat"

_NMOD_LIMIT = 2**63


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class Field:
    """A base field: ``Field("Q")`` or ``Field("Fp", p)``."""

    kind: str = "Q"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise FieldError("the rationals take no characteristic")
        elif self.kind == "Fp":
            if self.p is None or self.p < 2 or not flint.fmpz(self.p).is_prime():
                raise FieldError(f"p must be prime, got {self.p}")
            if self.p >= _NMOD_LIMIT:
                raise FieldError("prime too large for word-size arithmetic")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``Q`` or ``Fp:P`` (the CLI spelling)."""
        text = text.strip()
        if text in ("Q", "QQ"):
            return cls("Q")
        if text.startswith("Fp:") or text.startswith("F"):
            digits = text.split(":", 1)[1] if ":" in text else text[1:]
            try:
                return cls("Fp", int(digits))
            except ValueError:
                pass
        raise FieldError(f"cannot parse field {text!r}")

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.p

    def __str__(self):
        return "Q" if self.kind == "Q" else f"Fp:{self.p}"

    # scalars

    def scalar(self, x):
        if self.kind == "Q":
            if isinstance(x, fmpq):
                return x
            if isinstance(x, Fraction):
                return fmpq(x.numerator, x.denominator)
            if isinstance(x, str):
                return self.parse_scalar(x)
            return fmpq(x)
        if isinstance(x, nmod):
            return x
        if isinstance(x, str):
            return self.parse_scalar(x)
        if isinstance(x, (fmpq, Fraction)):
            num, den = int(x.numerator if isinstance(x, Fraction) else x.p), int(
                x.denominator if isinstance(x, Fraction) else x.q
            )
            return nmod(num, self.p) / nmod(den, self.p)
        return nmod(int(x), self.p)

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    def parse_scalar(self, text: str):
        text = str(text).strip()
        if "/" in text:
            num, den = text.split("/", 1)
            num, den = int(num), int(den)
            if den == 0:
                raise FieldError("zero denominator")
        else:
            num, den = int(text), 1
        if self.kind == "Q":
            return fmpq(num, den)
        if den % self.p == 0:
            raise FieldError(f"denominator divisible by {self.p}")
        return nmod(num, self.p) / nmod(den, self.p)

    def format_scalar(self, x) -> str:
        """Rationals as ``a/b`` in lowest terms, F_p as the representative 0..p-1."""
        if self.kind == "Q":
            x = self.scalar(x)
            return str(x.p) if x.q == 1 else f"{x.p}/{x.q}"
        return str(int(self.scalar(x)))

    def is_zero(self, x) -> bool:
        return x == 0

    # matrices

    def matrix(self, rows: Sequence[Sequence]) -> Matrix:
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        flat = [self.scalar(x) for r in rows for x in r]
        if len(flat) != nrows * ncols:
            raise FieldError("ragged matrix")
        return self.from_flat(nrows, ncols, flat)

    def from_flat(self, nrows: int, ncols: int, flat: Iterable) -> Matrix:
        flat = list(flat)
        if self.kind == "Q":
            return fmpq_mat(nrows, ncols, [self.scalar(x) for x in flat]) if flat else fmpq_mat(nrows, ncols)
        if not flat:
            return nmod_mat(nrows, ncols, self.p)
        return nmod_mat(nrows, ncols, [int(self.scalar(x)) for x in flat], self.p)

    def zeros(self, nrows: int, ncols: int) -> Matrix:
        if self.kind == "Q":
            return fmpq_mat(nrows, ncols)
        return nmod_mat(nrows, ncols, self.p)

    def identity(self, n: int) -> Matrix:
        m = self.zeros(n, n)
        for i in range(n):
            m[i, i] = 1
        return m

    def row(self, values: Sequence) -> Matrix:
        return self.from_flat(1, len(values), values)

    def poly(self, coeffs: Sequence):
        if self.kind == "Q":
            return fmpq_poly([self.scalar(c) for c in coeffs])
        return nmod_poly([int(self.scalar(c)) for c in coeffs], self.p)

    def field_of(self, m) -> "Field":
        return self


def field_of_matrix(m) -> Field:
    if isinstance(m, fmpq_mat):
        return Field("Q")
    return Field("Fp", int(m.modulus()))


# structural helpers -------------------------------------------------------


def shape(m) -> tuple[int, int]:
    return m.nrows(), m.ncols()


def rows_of(m) -> list[list]:
    nc = m.ncols()
    flat = m.entries()
    return [flat[i * nc : (i + 1) * nc] for i in range(m.nrows())]


def is_zero_matrix(m) -> bool:
    return all(x == 0 for x in m.entries())


def submatrix(field: Field, m, rows: Sequence[int], cols: Sequence[int]):
    nc = m.ncols()
    flat = m.entries()
    return field.from_flat(len(rows), len(cols), [flat[r * nc + c] for r in rows for c in cols])


def vstack(field: Field, blocks: Sequence, ncols: int | None = None):
    blocks = [b for b in blocks]
    if ncols is None:
        if not blocks:
            raise ValueError("vstack of nothing needs ncols")
        ncols = blocks[0].ncols()
    flat = []
    nrows = 0
    for b in blocks:
        if b.ncols() != ncols:
            raise ValueError("vstack column mismatch")
        flat.extend(b.entries())
        nrows += b.nrows()
    return field.from_flat(nrows, ncols, flat) if flat else field.zeros(nrows, ncols)


def hstack(field: Field, blocks: Sequence, nrows: int | None = None):
    blocks = list(blocks)
    if nrows is None:
        if not blocks:
            raise ValueError("hstack of nothing needs nrows")
        nrows = blocks[0].nrows()
    return vstack(field, [b.transpose() for b in blocks], nrows).transpose()


def block_diag(field: Field, blocks: Sequence):
    nr = sum(b.nrows() for b in blocks)
    nc = sum(b.ncols() for b in blocks)
    out = field.zeros(nr, nc)
    r0 = c0 = 0
    for b in blocks:
        br, bc = b.nrows(), b.ncols()
        flat = b.entries()
        for i in range(br):
            for j in range(bc):
                x = flat[i * bc + j]
                if x != 0:
                    out[r0 + i, c0 + j] = x
        r0 += br
        c0 += bc
    return out


def place(target, block, r0: int, c0: int):
    """Add ``block`` into ``target`` at offset (r0, c0), in place."""
    br, bc = block.nrows(), block.ncols()
    flat = block.entries()
    for i in range(br):
        for j in range(bc):
            x = flat[i * bc + j]
            if x != 0:
                target[r0 + i, c0 + j] += x
    return target


def flatten(m) -> list:
    return list(m.entries())


def linear_combination(field: Field, coeffs: Sequence, mats: Sequence, nrows: int, ncols: int):
    out = field.zeros(nrows, ncols)
    for c, m in zip(coeffs, mats):
        if c != 0:
            out += m * c if c != 1 else m
    return out


# the four contract operations --------------------------------------------


def rref(m) -> tuple:
    """Reduced row-echelon form and strictly increasing pivot columns."""
    if m.nrows() == 0 or m.ncols() == 0:
        return m, []
    r, rk = m.rref()
    nc = m.ncols()
    flat = r.entries()
    pivots = []
    col = 0
    for i in range(rk):
        while flat[i * nc + col] == 0:
            col += 1
        pivots.append(col)
        col += 1
    return r, pivots


def rank(m) -> int:
    if m.nrows() == 0 or m.ncols() == 0:
        return 0
    return m.rank()


def kernel_basis(m):
    """Right null space as the columns of the returned matrix.

    The basis vector attached to free column ``f`` has a 1 at ``f`` and zeros
    at every other free column, so coordinates of any kernel vector are read
    off its free entries (see :func:`free_columns`).
    """
    field = field_of_matrix(m)
    n = m.ncols()
    r, pivots = rref(m)
    free = [j for j in range(n) if j not in set(pivots)]
    out = field.zeros(n, len(free))
    if not free:
        return out
    nc = r.ncols()
    flat = r.entries()
    for k, f in enumerate(free):
        out[f, k] = 1
        for i, pc in enumerate(pivots):
            x = flat[i * nc + f]
            if x != 0:
                out[pc, k] = -x
    return out


def free_columns(m) -> list[int]:
    _, pivots = rref(m)
    pset = set(pivots)
    return [j for j in range(m.ncols()) if j not in pset]


def left_kernel(m):
    """Rows spanning ``{x : x m = 0}``."""
    return kernel_basis(m.transpose()).transpose()


def solve(a, b):
    """Some ``x`` with ``a x = b`` exactly, or ``None`` when inconsistent."""
    if a.nrows() != b.nrows():
        raise ValueError("solve: row counts differ")
    field = field_of_matrix(a)
    n, k = a.ncols(), b.ncols()
    if a.nrows() == 0:
        return field.zeros(n, k)
    aug = hstack(field, [a, b])
    r, pivots = rref(aug)
    if any(p >= n for p in pivots):
        return None
    x = field.zeros(n, k)
    nc = r.ncols()
    flat = r.entries()
    for i, pc in enumerate(pivots):
        for j in range(k):
            x[pc, j] = flat[i * nc + n + j]
    return x


def solve_left(a, b):
    """Some ``x`` with ``x a = b``, or ``None``."""
    x = solve(a.transpose(), b.transpose())
    return None if x is None else x.transpose()


def row_space(m):
    """Nonzero rows of rref(m) with their pivots."""
    r, pivots = rref(m)
    rk = len(pivots)
    field = field_of_matrix(m)
    if rk == 0:
        return field.zeros(0, m.ncols()), []
    return submatrix(field, r, range(rk), range(m.ncols())), pivots


def in_row_space(basis_rref, pivots, v) -> bool:
    """Whether row vector ``v`` lies in the span of an rref basis."""
    nc = v.ncols()
    vv = list(v.entries())
    bflat = basis_rref.entries()
    for i, pc in enumerate(pivots):
        c = vv[pc]
        if c != 0:
            for j in range(nc):
                b = bflat[i * nc + j]
                if b != 0:
                    vv[j] -= c * b
    return all(x == 0 for x in vv)


def is_invertible(m) -> bool:
    return m.nrows() == m.ncols() and rank(m) == m.nrows()


def inverse(m):
    if m.nrows() == 0:
        return m
    return m.inv()


def mat_pow(m, k: int):
    field = field_of_matrix(m)
    out = field.identity(m.nrows())
    base = m
    while k:
        if k & 1:
            out = out * base
        base = base * base
        k >>= 1
    return out


def is_nilpotent(m) -> bool:
    n = m.nrows()
    if n == 0:
        return True
    return is_zero_matrix(mat_pow(m, n))


def trace(m):
    field = field_of_matrix(m)
    t = field.zero
    for i in range(m.nrows()):
        t += m[i, i]
    return t


# polynomials --------------------------------------------------------------


def minpoly(m):
    return m.minpoly()


def factor_poly(poly) -> list:
    """Monic irreducible factors with multiplicities."""
    _, factors = poly.factor()
    return [(f, e) for f, e in factors]


def poly_eval_matrix(poly, m):
    field = field_of_matrix(m)
    n = m.nrows()
    out = field.zeros(n, n)
    for c in reversed(poly.coeffs()):
        out = out * m
        if c != 0:
            out += field.identity(n) * c
    return out
