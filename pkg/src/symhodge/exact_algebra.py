"""Exact scalars over Q and F_p, and kernel/rank of matrices over them.

Dimensions of fixed spaces of a finite group acting by matrices with entries
in the prime field do not change under extension of scalars, so working over
Q (characteristic 0) or F_p is enough to get dimensions over any field of
that characteristic, algebraically closed or not.

Raw values are ``Fraction`` in characteristic 0 and ``int`` in [0, p)
otherwise.  :class:`FieldScalar` wraps a raw value together with its field;
the elimination routines work on raw values for speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class FieldMismatchError(ValueError):
    """Operands live over different fields."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field of a given characteristic (0 means Q)."""

    characteristic: int

    def __post_init__(self):
        c = self.characteristic
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError(f"characteristic must be an int, got {c!r}")
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")

    # raw-value arithmetic; inputs are assumed normalized

    def normalize(self, value):
        p = self.characteristic
        if p == 0:
            if isinstance(value, str):
                return Fraction(value)
            if isinstance(value, float):
                raise TypeError("floating point values are not exact")
            return Fraction(value)
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, p)) % p
        if not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into F_{p}")
        return value % p

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def add(self, a, b):
        p = self.characteristic
        return a + b if p == 0 else (a + b) % p

    def sub(self, a, b):
        p = self.characteristic
        return a - b if p == 0 else (a - b) % p

    def mul(self, a, b):
        p = self.characteristic
        return a * b if p == 0 else (a * b) % p

    def neg(self, a):
        p = self.characteristic
        return -a if p == 0 else (-a) % p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return 1 / a if p == 0 else pow(a, -1, p)

    def __call__(self, value) -> "FieldScalar":
        return FieldScalar(self, value)

    def __str__(self):
        p = self.characteristic
        return "QQ" if p == 0 else f"GF({p})"


QQ = FieldSpec(0)


@dataclass(frozen=True, init=False)
class FieldScalar:
    """An immutable element of Q or F_p."""

    spec: FieldSpec
    value: object

    def __init__(self, spec: FieldSpec, value=0):
        if isinstance(value, FieldScalar):
            if value.spec != spec:
                raise FieldMismatchError(f"{value.spec} element given for {spec}")
            value = value.value
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "value", spec.normalize(value))

    def _other(self, other) -> object:
        if isinstance(other, FieldScalar):
            if other.spec != self.spec:
                raise FieldMismatchError(f"cannot combine {self.spec} and {other.spec}")
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.spec.normalize(other)
        return NotImplemented

    def _wrap(self, raw) -> "FieldScalar":
        return FieldScalar(self.spec, raw)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.mul(self.value, self.spec.inv(b)))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def inverse(self) -> "FieldScalar":
        return self._wrap(self.spec.inv(self.value))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.value == self.spec.normalize(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def __repr__(self):
        return f"{self.spec}({self.value})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True, init=False)
class ExactMatrix:
    """Dense row-major matrix over a prime field.

    Entries are stored as normalized raw values; :meth:`entry` and
    :attr:`entries` hand out :class:`FieldScalar` objects.
    """

    spec: FieldSpec
    rows: int
    cols: int
    raw: tuple

    def __init__(self, spec: FieldSpec, rows: int, cols: int, entries: Iterable):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        vals = []
        for x in entries:
            if isinstance(x, FieldScalar):
                if x.spec != spec:
                    raise FieldMismatchError(f"{x.spec} entry in a {spec} matrix")
                vals.append(x.value)
            else:
                vals.append(spec.normalize(x))
        if len(vals) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(vals)}")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "raw", tuple(vals))

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence], cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(spec, len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, spec: FieldSpec, n: int):
        return cls(spec, n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, spec: FieldSpec, rows: int, cols: int):
        return cls(spec, rows, cols, [0] * (rows * cols))

    @property
    def entries(self) -> tuple:
        return tuple(FieldScalar(self.spec, v) for v in self.raw)

    def entry(self, i: int, j: int) -> FieldScalar:
        return FieldScalar(self.spec, self.raw[i * self.cols + j])

    def row(self, i: int) -> tuple:
        return self.raw[i * self.cols:(i + 1) * self.cols]

    def sparse_rows(self):
        for i in range(self.rows):
            yield {j: v for j, v in enumerate(self.row(i)) if v}

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if other.spec != self.spec:
            raise FieldMismatchError(f"cannot combine {self.spec} and {other.spec}")
        if (other.rows, other.cols) != (self.rows, self.cols):
            raise ValueError("shape mismatch")
        sub = self.spec.sub
        return ExactMatrix(self.spec, self.rows, self.cols,
                           [sub(a, b) for a, b in zip(self.raw, other.raw)])

    def __matmul__(self, vector: Sequence) -> tuple:
        """Matrix times column vector, returning a tuple of FieldScalar."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        spec = self.spec
        v = [FieldScalar(spec, x).value for x in vector]
        out = []
        for i in range(self.rows):
            acc = spec.zero
            for a, b in zip(self.row(i), v):
                if a and b:
                    acc = spec.add(acc, spec.mul(a, b))
            out.append(FieldScalar(spec, acc))
        return tuple(out)

    @staticmethod
    def vstack(blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        if not blocks:
            raise ValueError("nothing to stack")
        spec, cols = blocks[0].spec, blocks[0].cols
        for b in blocks:
            if b.spec != spec or b.cols != cols:
                raise ValueError("blocks must share field and column count")
        return ExactMatrix(spec, sum(b.rows for b in blocks), cols,
                           [x for b in blocks for x in b.raw])


class EchelonForm:
    """Incrementally maintained reduced row echelon form.

    Rows are fed as sparse ``{column: raw value}`` mappings.  The pivot rows
    are kept fully reduced at all times, so the final state is the unique
    RREF of the row space no matter in which order rows arrive.  Rows coming
    from signed permutation matrices stay sparse under this reduction, which
    is what keeps the full-group stacks tractable.
    """

    def __init__(self, spec: FieldSpec, cols: int):
        self.spec = spec
        self.cols = cols
        self._pivots: dict[int, dict[int, object]] = {}
        # non-pivot column -> pivot columns whose rows have an entry there
        self._users: dict[int, set[int]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def add_row(self, row: Mapping[int, object]) -> bool:
        """Reduce ``row`` into the form; return True if the rank grew."""
        spec = self.spec
        r = {c: v for c, v in row.items() if v}
        for c in [c for c in r if c in self._pivots]:
            coef = r.get(c)
            if not coef:
                continue
            for k, v in self._pivots[c].items():
                nv = spec.sub(r.get(k, spec.zero), spec.mul(coef, v))
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        if not r:
            return False
        if self.rank == self.cols:
            raise AssertionError("nonzero residue with full rank")
        lead = min(r)
        scale = spec.inv(r[lead])
        r = {k: spec.mul(v, scale) for k, v in r.items()}

        for p in self._users.pop(lead, ()):
            prow = self._pivots[p]
            coef = prow.pop(lead)
            for k, v in r.items():
                if k == lead:
                    continue
                nv = spec.sub(prow.get(k, spec.zero), spec.mul(coef, v))
                if nv:
                    if k not in prow:
                        self._users.setdefault(k, set()).add(p)
                    prow[k] = nv
                elif k in prow:
                    del prow[k]
                    self._users[k].discard(p)
        for k in r:
            if k != lead:
                self._users.setdefault(k, set()).add(lead)
        self._pivots[lead] = r
        return True

    def add_rows(self, rows: Iterable[Mapping[int, object]]) -> None:
        for row in rows:
            self.add_row(row)

    def pivot_columns(self) -> list[int]:
        return sorted(self._pivots)

    def kernel_raw(self) -> list[list]:
        """Kernel basis, one vector per free column, in increasing order."""
        spec = self.spec
        basis = []
        for f in range(self.cols):
            if f in self._pivots:
                continue
            v = [spec.zero] * self.cols
            v[f] = spec.one
            for p in self._users.get(f, ()):
                v[p] = spec.neg(self._pivots[p][f])
            basis.append(v)
        return basis


def kernel_basis(m: ExactMatrix) -> list[tuple[FieldScalar, ...]]:
    """Basis of ``{v : m v = 0}`` read off the reduced row echelon form.

    The vector for free column ``f`` has a 1 in position ``f``, zeros in the
    other free positions, so the output is canonical.
    """
    ech = EchelonForm(m.spec, m.cols)
    ech.add_rows(m.sparse_rows())
    return [tuple(FieldScalar(m.spec, x) for x in v) for v in ech.kernel_raw()]


def rank(m: ExactMatrix) -> int:
    ech = EchelonForm(m.spec, m.cols)
    ech.add_rows(m.sparse_rows())
    return ech.rank
