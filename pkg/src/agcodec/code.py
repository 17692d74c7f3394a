"""Evaluation codes on Miura-Kamiya curves.

A code is determined by the curve, an ordered list of distinct nonsingular
rational points P_1..P_n, and a pole-order limit u < n.  Messages are
indexed by the nongaps s <= u; encoding evaluates mu = sum(w_s * phi_s) at
the points.

Construction also computes, by incremental Gaussian elimination over the
rows ev(phi_s) in increasing pole order:

* the reduced Groebner basis {eta_i} of the ideal J of functions vanishing
  at all points, together with its footprint (exactly n monomials), and
* the inverse of the n x n evaluation matrix on the footprint monomials,
  which makes interpolation of a received vector a single matrix product.

The point order is part of the code: vectors align index by index with the
stored point list.  The default order is lexicographic in the textual form
of x then y; an explicit point list may be supplied instead (and is what
the bundled fixtures do).
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Optional, Sequence

from .curvering import Curve, Monomial, RingElement, Semigroup
from .gf import Field, FieldElement

Point = tuple[FieldElement, FieldElement]
Vector = tuple[FieldElement, ...]


def rational_points(curve: Curve) -> list[Point]:
    """All nonsingular affine rational points, in the canonical order."""
    elems = sorted(curve.field.elements(), key=str)
    points = []
    for x in elems:
        for y in elems:
            if curve.contains(x, y) and curve.is_smooth_at(x, y):
                points.append((x, y))
    return points


def points_ideal_basis(
    curve: Curve, points: Sequence[Point]
) -> tuple[tuple[RingElement, ...], tuple[Monomial, ...], list[list[FieldElement]]]:
    """Reduced Groebner basis of the ideal of the given points.

    Returns (etas, footprint monomials in increasing pole order, inverse of
    the evaluation matrix on those monomials).  The footprint always has
    exactly as many monomials as there are points.
    """
    sg = curve.semigroup
    n = len(points)
    etas: list[RingElement] = []
    eta_lms: list[Monomial] = []
    delta_monos: list[Monomial] = []
    pivots: list[tuple[int, list[FieldElement], RingElement]] = []

    s = 0
    cap = 4 * (n + curve.a * curve.b) * (curve.a + curve.b)
    while True:
        if etas and len(delta_monos) == n and len(sg.footprint(eta_lms)) == n:
            break
        if s > cap:
            raise RuntimeError("ideal basis computation failed to close")
        if not sg.is_nongap(s):
            s += 1
            continue
        mono = sg.phi(s)
        s += 1
        if any(sg.monomial_divides(lm, mono) for lm in eta_lms):
            continue
        combo = curve.monomial(*mono)
        row = [combo.evaluate(px, py) for px, py in points]
        for col, vec, prev in pivots:
            if not row[col].is_zero:
                factor = row[col] / vec[col]
                row = [r - factor * v for r, v in zip(row, vec)]
                combo = combo - prev * factor
        if any(not r.is_zero for r in row):
            col = next(idx for idx, r in enumerate(row) if not r.is_zero)
            pivots.append((col, row, combo))
            delta_monos.append(mono)
        else:
            etas.append(combo)
            eta_lms.append(mono)

    inverse = _invert(
        [[curve.monomial(*m).evaluate(px, py) for m in delta_monos]
         for px, py in points],
        curve.field)
    return tuple(etas), tuple(delta_monos), inverse


def _invert(matrix: list[list[FieldElement]], field: Field) -> list[list[FieldElement]]:
    """Gauss-Jordan inverse over the field; the matrix must be square."""
    n = len(matrix)
    aug = [list(row) + [field.one if i == j else field.zero
                        for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not aug[r][col].is_zero), None)
        if pivot is None:
            raise ValueError("evaluation matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class Code:
    """An evaluation code C_u with its decoding-side precomputations."""

    def __init__(self, curve: Curve, u: int,
                 points: Optional[Sequence[Point]] = None) -> None:
        self.curve = curve
        self.field = curve.field
        sg = curve.semigroup
        if points is None:
            points = rational_points(curve)
        else:
            points = [self._check_point(p) for p in points]
        if len(set((str(x), str(y)) for x, y in points)) != len(points):
            raise ValueError("duplicate points")
        self.points: tuple[Point, ...] = tuple(points)
        self.n = len(self.points)
        if not (0 < u < self.n):
            raise ValueError(f"u must satisfy 0 < u < n = {self.n}, got {u}")
        self.u = u
        self.message_orders: tuple[int, ...] = sg.nongaps(u)
        self.k = len(self.message_orders)
        etas, delta_monos, inverse = points_ideal_basis(curve, self.points)
        self.eta_basis = etas
        self.delta_monomials = delta_monos
        self._interp_inverse = inverse
        missing = [s for s in self.message_orders
                   if sg.phi(s) not in set(delta_monos)]
        if missing:
            raise ValueError(
                f"evaluation is not injective on pole orders {missing}; "
                "the point set is too small for this u")
        self._distance: Optional[int] = None

    def _check_point(self, p: Point) -> Point:
        x, y = p
        if x.field != self.field or y.field != self.field:
            raise ValueError("point coordinates from a different field")
        if not self.curve.contains(x, y):
            raise ValueError(f"point ({x}, {y}) is not on the curve")
        if not self.curve.is_smooth_at(x, y):
            raise ValueError(f"point ({x}, {y}) is singular")
        return (x, y)

    # -- encoding ---------------------------------------------------------------

    def ev(self, f: RingElement) -> Vector:
        return tuple(f.evaluate(px, py) for px, py in self.points)

    def message_function(self, message: Sequence[FieldElement]) -> RingElement:
        """mu = sum of w_s * phi_s over the message coordinates."""
        self._check_vector(message, self.k, "message")
        sg = self.curve.semigroup
        terms = {sg.phi(s): w for s, w in zip(self.message_orders, message)
                 if not w.is_zero}
        return RingElement(self.curve, terms)

    def encode(self, message: Sequence[FieldElement]) -> Vector:
        return self.ev(self.message_function(message))

    def lagrange(self, v: Sequence[FieldElement]) -> RingElement:
        """The unique function supported on the footprint with ev(h) = v."""
        self._check_vector(v, self.n, "vector")
        terms: dict[Monomial, FieldElement] = {}
        for mono, row in zip(self.delta_monomials, self._interp_inverse):
            c = self.field.zero
            for coeff, vi in zip(row, v):
                if not vi.is_zero:
                    c = c + coeff * vi
            if not c.is_zero:
                terms[mono] = c
        return RingElement(self.curve, terms)

    def _check_vector(self, v: Sequence[FieldElement], length: int,
                      what: str) -> None:
        if len(v) != length:
            raise ValueError(f"{what} length {len(v)}, expected {length}")
        for e in v:
            if not isinstance(e, FieldElement) or e.field != self.field:
                raise ValueError(f"{what} entry from a different field")

    # -- distance bounds ----------------------------------------------------------

    def order_bound(self, s: int) -> int:
        """The per-order guarantee nu(s) = |footprint(J) union
        non-multiples(phi_s)| - s; voting at order s is reliable while
        nu(s) > 2 * (error weight)."""
        sg = self.curve.semigroup
        if not sg.is_nongap(s):
            raise ValueError(f"{s} is a gap")
        delta_j = set(self.delta_monomials)
        extra = sum(1 for m in sg.non_multiples(s) if m not in delta_j)
        return self.n + extra - s

    def decoding_distance(self) -> int:
        """d_u = min of the order bound over nongaps s <= u (>= n - u)."""
        if self._distance is None:
            self._distance = min(self.order_bound(s)
                                 for s in self.message_orders)
        return self._distance

    def __repr__(self) -> str:
        return f"Code(n={self.n}, k={self.k}, u={self.u} over {self.field!r})"


def hermitian_decoding_distance(q: int, u: int) -> int:
    """Closed form of the decoding distance for Hermitian codes.

    For nongap u = aa*q + bb < q^3 with 0 <= bb < q the distance is
    q^3 - aa*q when bb <= aa + q - q^2, and q^3 - u otherwise.
    """
    sg = Semigroup(q, q + 1)
    if u >= q ** 3 or not sg.is_nongap(u):
        raise ValueError(f"u must be a nongap below q^3 = {q ** 3}, got {u}")
    aa, bb = divmod(u, q)
    if bb <= aa + q - q * q:
        return q ** 3 - aa * q
    return q ** 3 - u


def radius_rows(curve: Curve,
                points: Optional[Sequence[Point]] = None) -> list[tuple[int, int]]:
    """Rows (u, d_u) for every nongap u below n, by prefix minimisation of
    the order bound.  Gap u have no voting round and are omitted."""
    if points is None:
        points = rational_points(curve)
    sg = curve.semigroup
    n = len(points)
    _, delta_monos, _ = points_ideal_basis(curve, points)
    delta_j = set(delta_monos)
    rows = []
    best = None
    for u in sg.nongaps(n - 1):
        extra = sum(1 for m in sg.non_multiples(u) if m not in delta_j)
        nu = n + extra - u
        best = nu if best is None else min(best, nu)
        rows.append((u, best))
    return rows


# ---------------------------------------------------------------------------
# Vector and message files: one line of comma-separated element tokens.
# ---------------------------------------------------------------------------

class VectorParseError(ValueError):
    def __init__(self, line: int, column: int, reason: str) -> None:
        super().__init__(f"line {line}, column {column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason


def parse_vector(field: Field, text: str,
                 expect_length: Optional[int] = None) -> Vector:
    content = None
    line_no = 0
    for ln, raw in enumerate(text.split("\n"), start=1):
        if raw.strip():
            if content is not None:
                raise VectorParseError(ln, 1, "expected a single data line")
            content = raw
            line_no = ln
    if content is None:
        raise VectorParseError(1, 1, "empty input")
    out = []
    col = 1
    for chunk in content.split(","):
        token = chunk.strip()
        tok_col = col + (len(chunk) - len(chunk.lstrip()))
        if not token:
            raise VectorParseError(line_no, tok_col, "empty element token")
        try:
            out.append(field.parse(token))
        except ValueError as exc:
            raise VectorParseError(line_no, tok_col, str(exc)) from None
        col += len(chunk) + 1
    if expect_length is not None and len(out) != expect_length:
        raise VectorParseError(
            line_no, 1,
            f"expected {expect_length} elements, found {len(out)}")
    return tuple(out)


def format_vector(elements: Iterable[FieldElement]) -> str:
    return ",".join(str(e) for e in elements)


# ---------------------------------------------------------------------------
# Code configuration files (JSON).
# ---------------------------------------------------------------------------

def curve_from_config(cfg: Mapping) -> tuple[Curve, Optional[list[Point]]]:
    """Build (curve, explicit point list or None) from a config mapping."""
    kind = cfg.get("type")
    if kind == "hermitian":
        curve = Curve.hermitian(int(cfg["q"]))
    elif kind == "mk":
        fld = cfg.get("field")
        if not isinstance(fld, Mapping):
            raise ValueError('mk config requires a "field" object with p, m')
        field = Field(int(fld["p"]), int(fld.get("m", 1)),
                      fld.get("modulus"))
        coeffs = {}
        for entry in cfg.get("coeffs", []):
            i, j, tok = entry
            coeffs[(int(i), int(j))] = field.parse(tok)
        curve = Curve(field, int(cfg["a"]), int(cfg["b"]),
                      field.parse(cfg["d"]), coeffs)
    else:
        raise ValueError(f'unknown code type {kind!r}')
    points = None
    if "points" in cfg:
        points = [(curve.field.parse(ex), curve.field.parse(ey))
                  for ex, ey in cfg["points"]]
    return curve, points


def code_from_config(cfg: Mapping) -> Code:
    curve, points = curve_from_config(cfg)
    if "u" not in cfg:
        raise ValueError('code config requires "u"')
    return Code(curve, int(cfg["u"]), points)


def load_code(path: str) -> Code:
    with open(path, "r", encoding="utf-8") as fh:
        return code_from_config(json.load(fh))
