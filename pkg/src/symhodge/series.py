"""Generating functions for h^{q,0} of all symmetric products at once.

In characteristic 0 the S_n-invariants of the n-th graded tensor power of
V = H^0(Omega^*_X) are its n-th graded-symmetric power.  With h00 even
generators of degree 0, h10 odd ones of degree 1 and h20 even ones of
degree 2,

    sum_{n,q} h^{q,0}(X^(n)) t^n x^q
        = (1 - t)^{-h00} (1 + t x)^{h10} (1 - t x^2)^{-h20}.

The characteristic 2 series treats every generator as even,

    (1 - t)^{-h00} (1 - t x)^{-h10} (1 - t x^2)^{-h20},

and is only a prediction; :func:`compare` checks the engine against the
characteristic 0 series.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graded_basis import SurfaceHodgeData
from .invariants import invariant_dimension


@dataclass(frozen=True)
class BivariateSeries:
    """Coefficients of t^n x^q for 0 <= n <= n_max, 0 <= q <= q_max."""

    coefficients: tuple[tuple[int, ...], ...]
    n_max: int
    q_max: int
    predicted: bool = False

    def __getitem__(self, key: tuple[int, int]) -> int:
        n, q = key
        if not (0 <= n <= self.n_max and 0 <= q <= self.q_max):
            raise IndexError(f"({n}, {q}) lies outside the truncation "
                             f"n <= {self.n_max}, q <= {self.q_max}")
        return self.coefficients[n][q]

    def restrict(self, n_max: int, q_max: int) -> "BivariateSeries":
        if n_max > self.n_max or q_max > self.q_max:
            raise IndexError("cannot restrict to a larger range")
        coeffs = tuple(row[:q_max + 1] for row in self.coefficients[:n_max + 1])
        return BivariateSeries(coeffs, n_max, q_max, self.predicted)

    def items(self):
        for n, row in enumerate(self.coefficients):
            for q, c in enumerate(row):
                yield (n, q), c


def _check_bounds(n_max: int, q_max: int) -> None:
    if n_max < 1 or q_max < 1:
        raise ValueError(f"truncation bounds must be positive, got n_max={n_max}, q_max={q_max}")


def _factor(count: int, x_degree: int, odd: bool, n_max: int, q_max: int) -> list[list[int]]:
    """(1 + t x^d)^count if odd else (1 - t x^d)^{-count}, truncated."""
    f = [[0] * (q_max + 1) for _ in range(n_max + 1)]
    for k in range(n_max + 1):
        if k * x_degree > q_max:
            break
        if odd:
            f[k][k * x_degree] = comb(count, k)
        else:
            # multisets of size k from count generators
            f[k][k * x_degree] = comb(count + k - 1, k) if count else int(k == 0)
    return f


def _multiply(a: list[list[int]], b: list[list[int]], n_max: int, q_max: int) -> list[list[int]]:
    out = [[0] * (q_max + 1) for _ in range(n_max + 1)]
    for n1, row1 in enumerate(a):
        for q1, c1 in enumerate(row1):
            if not c1:
                continue
            for n2 in range(n_max - n1 + 1):
                row2 = b[n2]
                for q2 in range(q_max - q1 + 1):
                    if row2[q2]:
                        out[n1 + n2][q1 + q2] += c1 * row2[q2]
    return out


def _series(data: SurfaceHodgeData, n_max: int, q_max: int, odd_one_forms: bool) -> list[list[int]]:
    _check_bounds(n_max, q_max)
    s = _factor(data.h00, 0, False, n_max, q_max)
    s = _multiply(s, _factor(data.h10, 1, odd_one_forms, n_max, q_max), n_max, q_max)
    s = _multiply(s, _factor(data.h20, 2, False, n_max, q_max), n_max, q_max)
    return s


def char0_hq0_series(data: SurfaceHodgeData, n_max: int, q_max: int) -> BivariateSeries:
    coeffs = _series(data, n_max, q_max, odd_one_forms=True)
    return BivariateSeries(tuple(map(tuple, coeffs)), n_max, q_max)


def char2_predicted_series(data: SurfaceHodgeData, n_max: int, q_max: int) -> BivariateSeries:
    coeffs = _series(data, n_max, q_max, odd_one_forms=False)
    return BivariateSeries(tuple(map(tuple, coeffs)), n_max, q_max, predicted=True)


@dataclass(frozen=True)
class Discrepancy:
    n: int
    q: int
    char0_value: int
    charp_engine_value: int

    def to_dict(self) -> dict:
        return {"n": self.n, "q": self.q, "char0": self.char0_value,
                "engine": self.charp_engine_value}


def compare(data: SurfaceHodgeData, n_max: int, q_max: int) -> list[Discrepancy]:
    """Points 1 <= n <= n_max, q <= min(q_max, 2n) where the engine in
    characteristic p disagrees with the characteristic 0 series."""
    if data.characteristic == 0:
        raise ValueError("compare needs a positive characteristic")
    series = char0_hq0_series(data, n_max, q_max)
    out = []
    for n in range(1, n_max + 1):
        for q in range(min(q_max, 2 * n) + 1):
            engine = invariant_dimension(data, n, q).dimension
            if engine != series[n, q]:
                out.append(Discrepancy(n, q, series[n, q], engine))
    return out
