"""Dimension of S_n-invariant global q-forms on X^n.

The invariant q-forms on X^n are the q-forms on the symmetric product
X^(n), and h^{q,0} is a birational invariant, so the numbers computed here
are also h^{q,0}(Hilb^n(X)) via the Hilbert-Chow morphism.

No averaging is used: when p divides n! there is no Reynolds projector, so
the fixed space is always computed as a kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .exact_algebra import EchelonForm, ExactMatrix, FieldScalar, FieldSpec
from .graded_basis import (
    Permutation,
    SurfaceHodgeData,
    TensorBasisElement,
    enumerate_basis,
    iter_permutations,
    permute_raw,
)

GENERATOR_KERNEL = "generator-kernel"
BRUTE_FORCE = "brute-force"
CLOSED_FORM = "closed-form"
METHODS = (GENERATOR_KERNEL, BRUTE_FORCE, CLOSED_FORM)

DEFAULT_BRUTEFORCE_MAX_N = 6


@dataclass(frozen=True)
class InvariantReport:
    data: SurfaceHodgeData
    n: int
    q: int
    dimension: int
    method: str
    basis: tuple[tuple[FieldScalar, ...], ...] | None = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.basis is not None and len(self.basis) != self.dimension:
            raise ValueError("basis length differs from dimension")

    def to_dict(self) -> dict:
        out = {
            "characteristic": self.data.characteristic,
            "n": self.n,
            "q": self.q,
            "hodge": list(self.data.hodge),
            "label": self.data.label,
            "dimension": self.dimension,
            "method": self.method,
        }
        if self.basis is not None:
            out["basis"] = [[_encode(x) for x in v] for v in self.basis]
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantReport":
        spec = FieldSpec(d["characteristic"])
        h00, h10, h20 = d["hodge"]
        data = SurfaceHodgeData(h00, h10, h20, spec, d.get("label", ""))
        basis = d.get("basis")
        if basis is not None:
            basis = tuple(tuple(FieldScalar(spec, _decode(x)) for x in v) for v in basis)
        return cls(data, d["n"], d["q"], d["dimension"], d["method"], basis)


def _encode(x: FieldScalar):
    # rationals as strings so JSON stays exact
    return str(x.value) if x.spec.characteristic == 0 else x.value


def _decode(x):
    return Fraction(x) if isinstance(x, str) else x


def _check_range(n: int, q: int) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not 0 <= q <= 2 * n:
        raise ValueError(f"q must lie in 0..2n = 0..{2 * n}, got {q}")


def _keys(basis: Sequence[TensorBasisElement]) -> tuple[list, dict]:
    keys = [(e.composition.parts, e.choices) for e in basis]
    return keys, {k: i for i, k in enumerate(keys)}


def _signed_images(perm: Permutation, keys: list, index: dict,
                   spec: FieldSpec) -> list[tuple[int, object]]:
    """For each source column j: (row index of its image, raw sign)."""
    signs = {1: spec.one, -1: spec.neg(spec.one)}
    out = []
    for parts, choices in keys:
        sign, new_parts, new_choices = permute_raw(perm.images, parts, choices)
        out.append((index[new_parts, new_choices], signs[sign]))
    return out


def _difference_rows(images: list[tuple[int, object]], spec: FieldSpec) -> Iterable[dict]:
    """Sparse rows of M - I for a signed permutation matrix M."""
    for j, (k, s) in enumerate(images):
        # row k of M has its single entry s in column j
        if j == k:
            v = spec.sub(s, spec.one)
            yield {k: v} if v else {}
        else:
            yield {j: s, k: spec.neg(spec.one)}


def action_matrix(perm: Permutation, data: SurfaceHodgeData, n: int, q: int) -> ExactMatrix:
    """Signed permutation matrix of ``perm`` in the enumerate_basis order."""
    basis = enumerate_basis(data, n, q)
    spec = data.field
    size = len(basis)
    entries = [spec.zero] * (size * size)
    for j, (k, s) in enumerate(_signed_images(perm, *_keys(basis), spec)):
        entries[k * size + j] = s
    return ExactMatrix(spec, size, size, entries)


def _fixed_space(data: SurfaceHodgeData, n: int, q: int, perms: Iterable[Permutation],
                 want_basis: bool) -> tuple[int, tuple | None]:
    spec = data.field
    basis = enumerate_basis(data, n, q)
    keys, index = _keys(basis)
    ech = EchelonForm(spec, len(basis))
    for perm in perms:
        ech.add_rows(_difference_rows(_signed_images(perm, keys, index, spec), spec))
    dim = len(basis) - ech.rank
    vectors = None
    if want_basis:
        vectors = tuple(tuple(FieldScalar(spec, x) for x in v) for v in ech.kernel_raw())
    return dim, vectors


def invariant_dimension(data: SurfaceHodgeData, n: int, q: int,
                        want_basis: bool = False) -> InvariantReport:
    """h^{q,0}(X^(n)) as the common kernel of M_s - I over adjacent swaps s."""
    _check_range(n, q)
    gens = (Permutation.adjacent(n, i) for i in range(n - 1))
    dim, vectors = _fixed_space(data, n, q, gens, want_basis)
    return InvariantReport(data, n, q, dim, GENERATOR_KERNEL, vectors)


def invariant_dimension_bruteforce(data: SurfaceHodgeData, n: int, q: int,
                                   max_n: int = DEFAULT_BRUTEFORCE_MAX_N,
                                   want_basis: bool = False) -> InvariantReport:
    """Same number, stacking M_sigma - I over every sigma in S_n."""
    if n > max_n:
        raise ValueError(f"brute force over S_{n} refused: n exceeds the bound {max_n}")
    _check_range(n, q)
    dim, vectors = _fixed_space(data, n, q, iter_permutations(n), want_basis)
    return InvariantReport(data, n, q, dim, BRUTE_FORCE, vectors)


def closed_form_q2(data: SurfaceHodgeData, n: int) -> int:
    """Closed count of invariant 2-forms, for h00 = 1.

    Diagonal 2-forms sum_i p_i^* sigma give h20.  Pairs of 1-forms give the
    antisymmetric part of H^0(Omega^1)^{x2} when the characteristic is not 2
    and the symmetric part (a_i = a_j allowed) when it is.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return data.h20
    h10 = data.h10
    if data.characteristic == 2:
        return data.h20 + comb(h10 + 1, 2)
    return data.h20 + comb(h10, 2)


def is_fixed(vector: Sequence[FieldScalar], data: SurfaceHodgeData, n: int, q: int) -> bool:
    """True when every adjacent transposition fixes ``vector`` exactly."""
    for i in range(n - 1):
        m = action_matrix(Permutation.adjacent(n, i), data, n, q)
        if tuple(m @ vector) != tuple(vector):
            return False
    return True
