"""Diagrams of linear maps and the snake lemma.

A snake diagram is the usual two-row picture::

    A1 --f1--> A2 --f2--> A3 --> 0
    |psi1      |psi2      |psi3
    v          v          v
    0 --> B1 --g1--> B2 --g2--> B3

and :func:`snake_sequence` computes the six-term sequence
``Ker psi1 -> Ker psi2 -> Ker psi3 -> Coker psi1 -> Coker psi2 -> Coker psi3``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import PreconditionViolated, ShapeError
from .fields import Field
from .linalg import Matrix, PresentedQuotient, Subspace, solve_linear


def exact_at(field: Field, n: int, incoming: Matrix | None, outgoing: Matrix | None) -> bool:
    """Is ``incoming`` followed by ``outgoing`` exact at a node of dimension ``n``?

    ``None`` stands for the zero map from or to the zero space.
    """
    image = incoming.image() if incoming is not None else Subspace.zero(field, n)
    kernel = outgoing.kernel() if outgoing is not None else Subspace.full(field, n)
    return image == kernel


@dataclass
class LinearDiagram:
    """Named spaces and maps plus the exactness and commutativity claims about them.

    ``exact`` holds pairs ``(incoming, outgoing)`` of arrow names meeting at a
    node; either may be ``None`` for a zero map.  ``squares`` holds pairs of
    paths (lists of arrow names, applied left to right) that must agree.
    """

    field: Field
    nodes: dict = dc_field(default_factory=dict)
    arrows: dict = dc_field(default_factory=dict)
    exact: list = dc_field(default_factory=list)
    squares: list = dc_field(default_factory=list)

    def add_node(self, name: str, dim: int):
        self.nodes[name] = dim

    def add_arrow(self, name: str, src: str, tgt: str, matrix: Matrix):
        if src not in self.nodes or tgt not in self.nodes:
            raise ShapeError(f"arrow {name} joins unknown nodes {src}, {tgt}")
        if matrix.shape != (self.nodes[tgt], self.nodes[src]):
            raise ShapeError(
                f"arrow {name}: matrix {matrix.shape} does not fit {src}({self.nodes[src]}) -> {tgt}({self.nodes[tgt]})"
            )
        if matrix.field != self.field:
            raise ShapeError(f"arrow {name} lives over another field")
        self.arrows[name] = (src, tgt, matrix)

    def matrix(self, name: str) -> Matrix:
        return self.arrows[name][2]

    def compose(self, path) -> Matrix:
        src = self.arrows[path[0]][0]
        out = Matrix.identity(self.field, self.nodes[src])
        for name in path:
            s, _, m = self.arrows[name]
            if s != src:
                raise ShapeError(f"path {path} is not composable at {name}")
            out = m @ out
            src = self.arrows[name][1]
        return out

    def _exact_node(self, incoming, outgoing):
        if incoming is not None:
            node = self.arrows[incoming][1]
        else:
            node = self.arrows[outgoing][0]
        if incoming is not None and outgoing is not None and self.arrows[outgoing][0] != node:
            raise ShapeError(f"{incoming} and {outgoing} do not meet")
        return node

    def failures(self) -> list:
        """Every declared claim that does not hold, as ``(kind, detail)`` pairs."""
        bad = []
        for incoming, outgoing in self.exact:
            node = self._exact_node(incoming, outgoing)
            u = self.matrix(incoming) if incoming is not None else None
            v = self.matrix(outgoing) if outgoing is not None else None
            if not exact_at(self.field, self.nodes[node], u, v):
                bad.append(("exactness", (incoming, node, outgoing)))
        for p, q in self.squares:
            if self.compose(p) != self.compose(q):
                bad.append(("square", (tuple(p), tuple(q))))
        return bad

    def check(self):
        bad = self.failures()
        if bad:
            kind, detail = bad[0]
            raise PreconditionViolated(f"diagram {kind} claim fails at {detail}", witness=bad)

    @classmethod
    def snake(cls, field: Field, f1: Matrix, f2: Matrix, g1: Matrix, g2: Matrix,
              psi1: Matrix, psi2: Matrix, psi3: Matrix, bottom_onto: bool = True) -> "LinearDiagram":
        """Assemble the standard snake-lemma diagram from its seven maps."""
        d = cls(field)
        d.add_node("A1", f1.ncols)
        d.add_node("A2", f2.ncols)
        d.add_node("A3", f2.nrows)
        d.add_node("B1", g1.ncols)
        d.add_node("B2", g2.ncols)
        d.add_node("B3", g2.nrows)
        for name, s, t, m in (
            ("f1", "A1", "A2", f1), ("f2", "A2", "A3", f2),
            ("g1", "B1", "B2", g1), ("g2", "B2", "B3", g2),
            ("psi1", "A1", "B1", psi1), ("psi2", "A2", "B2", psi2), ("psi3", "A3", "B3", psi3),
        ):
            d.add_arrow(name, s, t, m)
        d.exact = [("f1", "f2"), ("f2", None), (None, "g1"), ("g1", "g2")]
        if bottom_onto:
            d.exact.append(("g2", None))
        d.squares = [(["f1", "psi2"], ["psi1", "g1"]), (["f2", "psi3"], ["psi2", "g2"])]
        return d


@dataclass
class SnakeResult:
    """The six-term sequence in explicit coordinates.

    ``kernels[i]`` is a Subspace of ``A_{i+1}``; ``cokernels[i]`` a
    PresentedQuotient of ``B_{i+1}``.  The five maps act on kernel
    coordinates (echelon basis) and on quotient coordinates.
    """

    kernels: tuple
    cokernels: tuple
    k12: Matrix
    k23: Matrix
    connecting: Matrix
    c12: Matrix
    c23: Matrix
    exact: dict
    right_onto: bool

    @property
    def six_term_exact(self) -> bool:
        return all(self.exact.values())

    @property
    def failure_position(self) -> Optional[str]:
        return next((k for k, ok in self.exact.items() if not ok), None)

    def dims(self) -> dict:
        return {
            "ker1": self.kernels[0].dim, "ker2": self.kernels[1].dim, "ker3": self.kernels[2].dim,
            "coker1": self.cokernels[0].dim, "coker2": self.cokernels[1].dim, "coker3": self.cokernels[2].dim,
        }


def _on_kernels(field, f: Matrix, src: Subspace, tgt: Subspace) -> Matrix:
    cols = [tgt.coordinates(f.apply(b)) for b in src.basis]
    return Matrix.from_columns(field, cols, tgt.dim)


def _on_cokernels(field, g: Matrix, src: PresentedQuotient, tgt: PresentedQuotient) -> Matrix:
    return tgt.projection @ g @ src.section


def connecting_value(d: LinearDiagram, z) -> tuple:
    """Lift ``z`` in Ker psi3 through f2, push by psi2, pull back along g1.

    Returns the representative in ``B1`` (not yet projected to Coker psi1).
    """
    a2 = solve_linear(d.matrix("f2"), z)
    if a2 is None:
        raise PreconditionViolated("f2 is not onto: cannot lift", witness=z)
    b2 = d.matrix("psi2").apply(a2)
    b1 = solve_linear(d.matrix("g1"), b2)
    if b1 is None:
        raise PreconditionViolated("pushed element does not come from B1", witness=b2)
    return b1


def _exact_pair(field, n, u: Matrix, v: Matrix) -> bool:
    if not (v @ u).is_zero():
        return False
    return u.rank() == n - v.rank()


def snake_sequence(d: LinearDiagram) -> SnakeResult:
    """Six-term sequence of a checked snake diagram, with exactness report."""
    d.check()
    F = d.field
    psi = [d.matrix("psi1"), d.matrix("psi2"), d.matrix("psi3")]
    kernels = tuple(p.kernel() for p in psi)
    cokernels = tuple(PresentedQuotient(p.image()) for p in psi)
    k12 = _on_kernels(F, d.matrix("f1"), kernels[0], kernels[1])
    k23 = _on_kernels(F, d.matrix("f2"), kernels[1], kernels[2])
    cols = [cokernels[0].project(connecting_value(d, z)) for z in kernels[2].basis]
    connecting = Matrix.from_columns(F, cols, cokernels[0].dim)
    c12 = _on_cokernels(F, d.matrix("g1"), cokernels[0], cokernels[1])
    c23 = _on_cokernels(F, d.matrix("g2"), cokernels[1], cokernels[2])
    exact = {
        "ker2": _exact_pair(F, kernels[1].dim, k12, k23),
        "ker3": _exact_pair(F, kernels[2].dim, k23, connecting),
        "coker1": _exact_pair(F, cokernels[0].dim, connecting, c12),
        "coker2": _exact_pair(F, cokernels[1].dim, c12, c23),
    }
    return SnakeResult(kernels, cokernels, k12, k23, connecting, c12, c23, exact, c23.is_surjective())
