"""Worked-example corpus: curve specifications exercised by the test suite.

Each builder returns a `TwoLinearSpec` (or a lattice basis); ``write_all``
dumps one JSON file per example so the CLI can be driven against the same
instances.  Regenerate with::

    python -m scrollstci.fixtures fixtures/
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .lattice import LatticeBasis
from .linjoin import ComponentSpec, TwoLinearSpec
from .poly import QQ, Ring, parse
from .scroll import ScrollBlock, ScrollMatrix


def _spec(ring: Ring, components) -> TwoLinearSpec:
    comps = []
    for doc in components:
        scroll = None
        if doc.get("blocks"):
            blocks = tuple(
                ScrollBlock(tuple(parse(ring, e) for e in entries))
                for entries in doc["blocks"]
            )
            scroll = ScrollMatrix(blocks)
        comps.append(ComponentSpec(
            scroll=scroll,
            delta=tuple(parse(ring, s) for s in doc.get("delta", [])),
            p_forms=tuple(parse(ring, s) for s in doc.get("p", [])),
        ))
    return TwoLinearSpec(ring, tuple(comps))


CURVE_RING = Ring(("a", "b", "c", "x", "y", "z", "u", "v", "w"), QQ)


def first_curve_spec() -> TwoLinearSpec:
    """Four components on nine variables; one scroll block (u, w, v).

    Component ideals: (uv - w^2, a, b, c), (y, z, v, w, a, b),
    (x, z-u, v, w, c, b), (x-u, y-u, a, c, v, w); projective dimension 6.
    """
    return _spec(CURVE_RING, [
        {"blocks": [["u", "w", "v"]]},
        {"delta": ["c"], "p": ["y", "z", "v", "w"]},
        {"delta": ["a"], "p": ["x", "z - u", "v", "w", "c"]},
        {"delta": ["b"], "p": ["x - u", "y - u", "a", "c", "v", "w"]},
    ])


def second_curve_spec() -> TwoLinearSpec:
    """Four components on nine variables; the scroll sits on component 2.

    Component ideals: (a, b, c, x), (x(x-u) - c^2, a, b, y, z),
    (b, x, z-u, c), (x, y-u, a, c); projective dimension 5.
    """
    return _spec(CURVE_RING, [
        {},
        {"blocks": [["x", "c", "x - u"]], "delta": ["x", "c"], "p": ["y", "z"]},
        {"delta": ["a"], "p": ["x", "z - u", "c"]},
        {"delta": ["b"], "p": ["x", "y - u", "a", "c"]},
    ])


QPRIME_RING = Ring(("a", "b", "c", "d", "e", "f", "g"), QQ)


def qprime_spec() -> TwoLinearSpec:
    """Generic 2x2 scroll F = ad - bc with components (F,e,f), (b,d,f), (b,d,g)."""
    return _spec(QPRIME_RING, [
        {"blocks": [["a", "b"], ["c", "d"]]},
        {"delta": ["e"], "p": ["b", "d"]},
        {"delta": ["f"], "p": ["b", "d", "g"]},
    ])


def qprime_generators() -> list:
    """The three certified generators: rad(q1', q2', q3') equals the intersection."""
    ring = QPRIME_RING
    a, b, c, d, e, f, g = (ring.variable(v) for v in "abcdefg")
    F = a * d - b * c
    q1 = a * F + b * e
    qp1 = a * a * q1 + b * f
    qp2 = c * F + d * e + f * g
    qp3 = (a * c - e) * q1 + d * f
    return [qp1, qp2, qp3]


def square_block_spec() -> TwoLinearSpec:
    """One non-generic block (c-f, d-f, d+c-f) with no row inside the P spans.

    Validation passes with projective dimension 3, but the synthesis row
    hypotheses fail, so only the hand-supplied four-element list is certified.
    """
    ring = Ring(("a", "b", "c", "d", "e", "f"), QQ)
    return _spec(ring, [
        {"blocks": [["c - f", "d - f", "d + c - f"]]},
        {"delta": ["a"], "p": ["c", "d"]},
        {"delta": ["b"], "p": ["c", "d", "e"]},
    ])


def square_block_generators() -> list:
    ring = Ring(("a", "b", "c", "d", "e", "f"), QQ)
    a, b, c, d, e, f = (ring.variable(v) for v in "abcdef")
    F = (c - f) * (d + c - f) - (d - f) ** 2
    return [F, b * c, a * c + b * d, a * d + b * e]


def two_rows_spec() -> TwoLinearSpec:
    """Generic 2x2 scroll with components (F,e,f), (b,d,f), (a,c,e).

    Projective dimension 3; the summed bound gives 4; synthesis is refused
    (two blocks) and no certified short list ships with the example.
    """
    ring = Ring(("a", "b", "c", "d", "e", "f"), QQ)
    return _spec(ring, [
        {"blocks": [["a", "b"], ["c", "d"]]},
        {"delta": ["e"], "p": ["b", "d"]},
        {"delta": ["f"], "p": ["a", "c", "e"]},
    ])


def barile_spec(n_delta: int = 2) -> TwoLinearSpec:
    """Generic 2x2 scroll against the coordinate plane (b, d).

    Components (ad - bc, e_1..e_n) and (b, d); projective dimension n + 1.
    """
    if not 1 <= n_delta <= 3:
        raise ValueError("supported Delta sizes are 1..3")
    delta_vars = ("e", "f", "g")[:n_delta]
    ring = Ring(("a", "b", "c", "d") + delta_vars, QQ)
    return _spec(ring, [
        {"blocks": [["a", "b"], ["c", "d"]]},
        {"delta": list(delta_vars), "p": ["b", "d"]},
    ])


def eisenbud_evans_spec(r: int = 2, alpha: int = 1, n_delta: int = 2) -> TwoLinearSpec:
    """Generic 2 x r scroll joined to the coordinate space (x_1..x_{2r-alpha}).

    Projective dimension is dim S - alpha - 1 for alpha <= 2.
    """
    if r < 2:
        raise ValueError("need r >= 2")
    if not 0 <= alpha <= r:
        raise ValueError("need 0 <= alpha <= r")
    xs = tuple(f"x{i}" for i in range(1, 2 * r + 1))
    ds = tuple(f"d{i}" for i in range(1, n_delta + 1))
    ring = Ring(xs + ds, QQ)
    blocks = [[f"x{i}", f"x{r + i}"] for i in range(1, r + 1)]
    return _spec(ring, [
        {"blocks": blocks},
        {"delta": list(ds), "p": [f"x{i}" for i in range(1, 2 * r - alpha + 1)]},
    ])


def coordinate_lines_spec() -> TwoLinearSpec:
    """Two coordinate lines: (x) and (y); the smallest valid specification."""
    ring = Ring(("x", "y"), QQ)
    return _spec(ring, [
        {},
        {"delta": ["x"], "p": ["y"]},
    ])


def fiber_shaped_spec() -> TwoLinearSpec:
    """A fiber-cone-shaped instance on T1..T5: one-block scroll, variable spans."""
    ring = Ring(("T1", "T2", "T3", "T4", "T5"), QQ)
    return _spec(ring, [
        {"blocks": [["T1", "T2", "T3"]]},
        {"delta": ["T4"], "p": ["T1", "T2", "T3", "T5"]},
    ])


def twisted_cubic_basis() -> LatticeBasis:
    return LatticeBasis(((1, -2, 1, 0), (0, 1, -2, 1)))


SPEC_FIXTURES = {
    "example-curve-1": first_curve_spec,
    "example-curve-2": second_curve_spec,
    "example-qprime": qprime_spec,
    "example-square-block": square_block_spec,
    "example-two-rows": two_rows_spec,
    "example-barile": barile_spec,
    "example-eisenbud-evans": eisenbud_evans_spec,
    "example-coordinate-lines": coordinate_lines_spec,
    "example-fiber-shape": fiber_shaped_spec,
}


def write_all(directory) -> list[Path]:
    """Write one JSON file per example; returns the written paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, builder in SPEC_FIXTURES.items():
        path = directory / f"{name}.json"
        path.write_text(json.dumps(builder().to_json(), indent=2) + "\n")
        written.append(path)
    path = directory / "example-twisted-cubic.json"
    path.write_text(json.dumps([list(v) for v in twisted_cubic_basis().vectors]) + "\n")
    written.append(path)
    path = directory / "example-qprime-generators.json"
    path.write_text(json.dumps([str(g) for g in qprime_generators()], indent=2) + "\n")
    written.append(path)
    return written


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "fixtures"
    for p in write_all(target):
        print(p)
