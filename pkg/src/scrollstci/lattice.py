"""Lattice (binomial) ideals from integer lattice bases.

The ideal of a lattice L in Z^r is generated by the binomials
x^{v+} - x^{v-} for every v in L; from a basis this is realized as the
saturation of the basis binomials by the product of all variables.  The
bridge back to the scroll world: the twisted-cubic basis yields exactly the
minor ideal of a one-block scroll on four variables.

``fiber_spec_check`` recognizes specifications with the shape that fiber
cones of codimension-two lattice ideals take: one-block scrolls with distinct
variable entries and variable-spanned linear parts.  For such specifications
the synthesis certificate realizes the set-theoretic-complete-intersection
statement on the instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .linjoin import TwoLinearSpec
from .oracle import IdealHandle, ideal_member, saturate
from .poly import Polynomial, Ring, ScrollstciError, is_variable


class LatticeError(ScrollstciError):
    pass


@dataclass(frozen=True)
class LatticeBasis:
    """Nonzero integer vectors of one common length r."""

    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if not vecs:
            raise LatticeError("empty lattice basis")
        r = len(vecs[0])
        for v in vecs:
            if len(v) != r:
                raise LatticeError("basis vectors must share one length")
            if all(x == 0 for x in v):
                raise LatticeError("basis vectors must be nonzero")

    @property
    def r(self) -> int:
        return len(self.vectors[0])

    def combinations(self, bound: int = 2):
        """All nonzero integer combinations with coefficients in [-bound, bound]."""
        for coeffs in iter_product(range(-bound, bound + 1), repeat=len(self.vectors)):
            if all(c == 0 for c in coeffs):
                continue
            vec = tuple(
                sum(c * v[i] for c, v in zip(coeffs, self.vectors))
                for i in range(self.r)
            )
            if any(x != 0 for x in vec):
                yield vec

    def screen_nonnegative(self, bound: int = 2) -> list[str]:
        """Heuristic screen for the no-nonnegative-vectors hypothesis.

        Checks the basis and bounded integer combinations only; a clean screen
        is not a proof.  Violations are reported as warnings, never errors.
        """
        warnings = []
        for vec in self.combinations(bound):
            if all(x >= 0 for x in vec):
                warnings.append(f"lattice contains the nonnegative vector {vec}")
        return warnings


def binomial(ring: Ring, v) -> Polynomial:
    """x^{v+} - x^{v-} for v = v+ - v- with disjoint nonnegative supports."""
    v = tuple(int(x) for x in v)
    if len(v) != ring.arity:
        raise LatticeError("vector length must equal the ring arity")
    if all(x == 0 for x in v):
        raise LatticeError("zero vector has no binomial")
    plus = tuple(max(x, 0) for x in v)
    minus = tuple(max(-x, 0) for x in v)
    return ring.monomial(plus) - ring.monomial(minus)


def lattice_ideal(ring: Ring, basis: LatticeBasis, check: bool = True) -> IdealHandle:
    """Saturation of the basis binomials by the product of all variables.

    With ``check`` set, membership of the binomials of all small integer
    combinations of the basis (coefficients bounded by 2) is asserted; a
    failure would indicate an engine defect, not bad input.
    """
    if basis.r != ring.arity:
        raise LatticeError("basis length must equal the ring arity")
    gens = [binomial(ring, v) for v in basis.vectors]
    allvars = ring.one()
    for name in ring.variables:
        allvars = allvars * ring.variable(name)
    result = saturate(IdealHandle(ring, gens), allvars)
    if check:
        for w in basis.combinations(bound=2):
            if not ideal_member(binomial(ring, w), result):
                raise LatticeError(
                    f"combination binomial for {w} escaped the saturation")
    return result


def fiber_spec_check(spec: TwoLinearSpec) -> bool:
    """True iff the spec has the fiber-cone shape.

    Every scroll has exactly one block with pairwise distinct variable
    entries, and every Delta/P form is a plain ring variable (so each linear
    part is spanned by a subset of the coordinates).
    """
    for i in range(1, spec.l + 1):
        comp = spec.component(i)
        if comp.scroll is not None:
            if len(comp.scroll.blocks) != 1:
                return False
            entries = comp.scroll.blocks[0].entries
            if not all(is_variable(e) for e in entries):
                return False
            if len(set(entries)) != len(entries):
                return False
        forms = comp.delta + comp.p_forms
        if not all(is_variable(f) for f in forms):
            return False
        if len(set(forms)) != len(forms):
            return False
    return True
