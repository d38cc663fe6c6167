"""Dense rectangular matrices over L_K(E), block sums, and witnesses for
the subequivalence relation x ≾ y (x = alpha y beta)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..graph import Graph
from .algebra import Element, KernelError


class DimensionError(KernelError):
    pass


@dataclass(frozen=True, eq=False)
class ElementMatrix:
    graph: Graph
    entries: tuple[tuple[Element, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise DimensionError("matrices must have positive dimensions")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise DimensionError("ragged matrix rows")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ElementMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __matmul__(self, other: "ElementMatrix") -> "ElementMatrix":
        return mat_mul(self, other)

    def is_zero(self) -> bool:
        return not any(x for row in self.entries for x in row)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"ElementMatrix[{self.rows}x{self.cols}]({body})"


def matrix(g: Graph, rows: Sequence[Sequence[Element]]) -> ElementMatrix:
    return ElementMatrix(g, tuple(tuple(r) for r in rows))


def scalar(x: Element) -> ElementMatrix:
    return ElementMatrix(x.graph, ((x,),))


def column(g: Graph, xs: Sequence[Element]) -> ElementMatrix:
    return matrix(g, [[x] for x in xs])


def row(g: Graph, xs: Sequence[Element]) -> ElementMatrix:
    return matrix(g, [list(xs)])


def zeros(g: Graph, rows: int, cols: int) -> ElementMatrix:
    z = Element.zero(g)
    return matrix(g, [[z] * cols for _ in range(rows)])


def diag(g: Graph, xs: Sequence[Element]) -> ElementMatrix:
    return block_sum([scalar(x) for x in xs]) if xs else zeros(g, 1, 1)


def mat_mul(a: ElementMatrix, b: ElementMatrix) -> ElementMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    g = a.graph
    out = []
    for i in range(a.rows):
        out_row = []
        for j in range(b.cols):
            acc = Element.zero(g)
            for k in range(a.cols):
                x, y = a.entries[i][k], b.entries[k][j]
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return ElementMatrix(g, tuple(out))


def block_sum(xs: Sequence[ElementMatrix]) -> ElementMatrix:
    """Block-diagonal assembly x_1 ⊕ ... ⊕ x_n."""
    if not xs:
        raise DimensionError("block sum of no matrices")
    g = xs[0].graph
    rows = sum(x.rows for x in xs)
    cols = sum(x.cols for x in xs)
    z = Element.zero(g)
    out = [[z] * cols for _ in range(rows)]
    r0 = c0 = 0
    for x in xs:
        for i in range(x.rows):
            for j in range(x.cols):
                out[r0 + i][c0 + j] = x.entries[i][j]
        r0 += x.rows
        c0 += x.cols
    return matrix(g, out)


def hstack(xs: Sequence[ElementMatrix]) -> ElementMatrix:
    if len({x.rows for x in xs}) != 1:
        raise DimensionError("hstack needs equal row counts")
    return matrix(xs[0].graph, [sum((x.entries[i] for x in xs), ()) for i in range(xs[0].rows)])


def vstack(xs: Sequence[ElementMatrix]) -> ElementMatrix:
    if len({x.cols for x in xs}) != 1:
        raise DimensionError("vstack needs equal column counts")
    return matrix(xs[0].graph, [r for x in xs for r in x.entries])


@dataclass(frozen=True)
class Witness:
    """Certificate for x ≾ y: ``x == alpha @ y @ beta``."""

    alpha: ElementMatrix
    beta: ElementMatrix

    def then(self, other: "Witness") -> "Witness":
        """Compose x ≾ y (self) with y ≾ z (other) into x ≾ z."""
        return Witness(self.alpha @ other.alpha, other.beta @ self.beta)

    def scaled(self, c) -> "Witness":
        a = self.alpha
        return Witness(matrix(a.graph, [[x.scale(c) for x in r] for r in a.entries]), self.beta)


def witness_block_sum(ws: Sequence[Witness]) -> Witness:
    """x_i ≾ y_i for all i gives ⊕x_i ≾ ⊕y_i."""
    return Witness(block_sum([w.alpha for w in ws]), block_sum([w.beta for w in ws]))


def verify_precsim(g: Graph, x: ElementMatrix, y: ElementMatrix, w: Witness) -> bool:
    """Exact check of ``x == alpha y beta``."""
    k, n = x.rows, y.rows
    if x.rows != x.cols or y.rows != y.cols:
        raise DimensionError("x and y must be square")
    if w.alpha.shape != (k, n) or w.beta.shape != (n, k):
        raise DimensionError(
            f"witness shapes {w.alpha.shape}/{w.beta.shape} do not fit {k}x{k} ≾ {n}x{n}"
        )
    for m in (x, y, w.alpha, w.beta):
        if m.graph != g:
            raise KernelError("graph mismatch")
    return w.alpha @ y @ w.beta == x


def verify_K_membership(g: Graph, a: Element, x: Element, w: Witness) -> bool:
    """Check ``x ∈ K(a)`` through the 2x2 identity

        [[a, 0], [0, x]] == [[a1, 0], [a2, 0]] [[a, 0], [0, 0]] [[b1, b2], [0, 0]]

    with ``w.alpha = col(a1, a2)`` and ``w.beta = row(b1, b2)``.
    """
    if w.alpha.shape != (2, 1) or w.beta.shape != (1, 2):
        raise DimensionError(
            f"K(a) witness must be 2x1 / 1x2, got {w.alpha.shape}/{w.beta.shape}"
        )
    z = Element.zero(g)
    (a1,), (a2,) = w.alpha.entries
    (b1, b2), = w.beta.entries
    left = matrix(g, [[a1, z], [a2, z]])
    mid = matrix(g, [[a, z], [z, z]])
    right = matrix(g, [[b1, b2], [z, z]])
    return left @ mid @ right == matrix(g, [[a, z], [z, x]])
