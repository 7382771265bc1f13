"""Brute-force dynamic-programming path counter; the ground truth.

Counts lattice paths over the step set {up (1,1), down (1,-1), horizontal
(w,0)} where each horizontal step contributes one factor of the weight w.
Three modes:

  * grand     no height restriction
  * quadrant  paths stay weakly above the x-axis
  * banded k  quadrant paths that additionally stay strictly below height k

Everything is computed cell-by-cell from the step recursion with OmegaPoly
entries, independently of all closed forms, so these counts can adjudicate
any formula in the package.  Weighted counting is always symbolic; the
weight is specialized at the query boundary if at all.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import OP_ONE, OP_ZERO, OmegaPoly, TSeries, W
from .checks import PASS, CheckResult, fail

GRAND = "grand"
QUADRANT = "quadrant"
BANDED = "banded"


class BandViolation(ValueError):
    """Height query outside [0, k) for a banded path family."""


class IndexOutOfTriangle(IndexError):
    """Triangle entry requested above the diagonal."""


@dataclass(frozen=True)
class PathSpec:
    """Path family: horizontal step length w plus a height constraint."""

    w: int
    mode: str
    band: int = 0

    def __post_init__(self):
        if self.w < 1:
            raise ValueError("horizontal step length must be positive")
        if self.mode not in (GRAND, QUADRANT, BANDED):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == BANDED and self.band < 1:
            raise ValueError("band height must be positive")

    @classmethod
    def grand(cls, w: int = 1) -> "PathSpec":
        return cls(w, GRAND)

    @classmethod
    def quadrant(cls, w: int = 1) -> "PathSpec":
        return cls(w, QUADRANT)

    @classmethod
    def banded(cls, k: int, w: int = 1) -> "PathSpec":
        return cls(w, BANDED, k)


class CountTable:
    """DP table of weighted path counts, indexed by (x-coordinate, height)."""

    def __init__(self, spec: PathSpec, n_max: int):
        self.spec = spec
        self.n_max = n_max
        if spec.mode == GRAND:
            self._offset = n_max
            height = 2 * n_max + 1
        elif spec.mode == QUADRANT:
            self._offset = 0
            height = n_max + 1
        else:
            self._offset = 0
            height = spec.band
        cols = [[OP_ZERO] * height for _ in range(n_max + 1)]
        cols[0][self._offset] = OP_ONE
        w = spec.w
        for x in range(1, n_max + 1):
            prev = cols[x - 1]
            horiz = cols[x - w] if x >= w else None
            cur = cols[x]
            for y in range(height):
                acc = OP_ZERO
                if y + 1 < height:
                    acc = acc + prev[y + 1]
                if y >= 1:
                    acc = acc + prev[y - 1]
                if horiz is not None and not horiz[y].is_zero():
                    acc = acc + W * horiz[y]
                cur[y] = acc
        self._cols = cols

    def value(self, n: int, j: int) -> OmegaPoly:
        """Weighted count of paths from the origin to (n, j)."""
        if n < 0 or n > self.n_max:
            raise IndexError(f"x-coordinate {n} outside table range 0..{self.n_max}")
        spec = self.spec
        if spec.mode == BANDED:
            if not 0 <= j < spec.band:
                raise BandViolation(f"height {j} outside [0, {spec.band})")
            return self._cols[n][j]
        if spec.mode == QUADRANT and j < 0:
            return OP_ZERO
        idx = j + self._offset
        if not 0 <= idx < len(self._cols[n]):
            return OP_ZERO
        return self._cols[n][idx]

    def recursion_holds(self) -> CheckResult:
        """Cell-by-cell re-check of the defining step recursion."""
        spec = self.spec
        top = spec.band - 1 if spec.mode == BANDED else self.n_max
        lo = -self.n_max if spec.mode == GRAND else 0
        for n in range(1, self.n_max + 1):
            for j in range(lo, top + 1):
                want = self._neighbor(n - 1, j + 1) + self._neighbor(n - 1, j - 1)
                if n >= spec.w:
                    want = want + W * self._neighbor(n - spec.w, j)
                got = self._neighbor(n, j)
                if got != want:
                    return fail(f"(n={n}, j={j})", got, want)
        if self.value(0, 0) != OP_ONE:
            return fail("(0, 0)", self.value(0, 0), OP_ONE)
        return PASS

    def _neighbor(self, n, j):
        # like value(), but out-of-band heights read as zero
        if self.spec.mode == BANDED and not 0 <= j < self.spec.band:
            return OP_ZERO
        return self.value(n, j)


def count_paths(spec: PathSpec, n: int, j: int) -> OmegaPoly:
    """Weighted count of paths from (0,0) to (n, j) under the given mode."""
    if n < 0:
        raise ValueError("path length must be nonnegative")
    return CountTable(spec, n).value(n, j)


def oracle_series(spec: PathSpec, j: int, order: int) -> TSeries:
    """Series whose t^n coefficient counts the paths ending at (n, j)."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    table = CountTable(spec, order)
    return TSeries([table.value(n, j) for n in range(order + 1)], order)


def compress_schroder(n: int, j: int) -> OmegaPoly:
    """Entry (n, j) of the compressed horizontal-step-2 triangle.

    Compression removes the parity zeros of the w=2 quadrant table (the
    substitution t^2 -> t); entry (n, j) is the count of quadrant paths to
    (2n - j, j).
    """
    if j < 0 or j > n:
        raise IndexOutOfTriangle(f"column {j} outside triangle row {n}")
    return count_paths(PathSpec.quadrant(w=2), 2 * n - j, j)


def compressed_series(j: int, order: int, band: int = 0) -> TSeries:
    """Compressed w=2 column series: t^n coefficient counts paths to (2n-j, j).

    With band > 0 the paths additionally stay strictly below height band.
    """
    spec = PathSpec.banded(band, w=2) if band else PathSpec.quadrant(w=2)
    table = CountTable(spec, 2 * order + max(j, 0))
    return TSeries(
        [table.value(2 * n - j, j) if 2 * n - j >= 0 else OP_ZERO for n in range(order + 1)],
        order,
    )
