"""Interpolation-based unique decoding by Groebner bases and majority voting.

The decoder works in the module Rz + R over the coordinate ring: a pair
f = f_up * z + f_down interpolates the received word when it vanishes at
every (P_i, v_i).  Under the weighted order that gives z weight s, a
reduced Groebner basis of the interpolation module splits into

* G elements, leading term downstairs (in R), and
* F elements, leading term upstairs (in Rz).

Decoding starts from {eta_i} plus z - h_v (h_v interpolating v) at weight
N = delta(h_v) and walks the weight down to 0.  At each nongap weight
s <= u it tallies votes for the message coordinate w_s: every F element
nominates one field value, weighted by how much of the downstairs footprint
its upstairs cone covers; the winner is subtracted by substituting
z -> z + w * phi_s.  The basis is then converted from weight s to s - 1 by
the spoly combinations, followed by removal of elements whose leading term
another element's leading term divides (within the G part and the F part
separately).

The guarantee: if the error weight t satisfies 2*t < d_u (the code's
decoding distance), every vote picks the sent coordinate.  Decoding never
aborts; a re-encoding check afterwards flags outputs that land outside the
guaranteed radius.
"""

from __future__ import annotations

import dataclasses
from typing import Callable, Mapping, NamedTuple, Optional, Sequence

from .code import Code, Vector
from .curvering import BOTTOM, Curve, Monomial, RingElement
from .gf import FieldElement, canonical_key

UP = "up"
DOWN = "down"

STATUS_OK = "ok"
STATUS_LOW_CONFIDENCE = "low-confidence"
STATUS_FAILED = "failed-verification"


class Lead(NamedTuple):
    location: str
    monomial: Monomial
    coefficient: FieldElement


@dataclasses.dataclass(frozen=True)
class ModulePair:
    """f = up * z + down with both components reduced."""

    up: RingElement
    down: RingElement

    def __sub__(self, other: "ModulePair") -> "ModulePair":
        return ModulePair(self.up - other.up, self.down - other.down)

    def times(self, factor: RingElement) -> "ModulePair":
        return ModulePair(self.up * factor, self.down * factor)

    def substitute(self, shift_term: RingElement) -> "ModulePair":
        """z -> z + shift_term, i.e. add shift_term * up downstairs."""
        return ModulePair(self.up, self.down + self.up * shift_term)


def leading(s: int, pair: ModulePair) -> Lead:
    """Leading term under the order giving z weight s.

    Upstairs wins when delta(up) + s >= delta(down); ties go upstairs.
    """
    du = pair.up.delta()
    dd = pair.down.delta()
    if du is BOTTOM and dd is BOTTOM:
        raise ValueError("the zero pair has no leading term")
    if du + s >= dd:
        return Lead(UP, pair.up.leading_monomial(), pair.up.leading_coefficient())
    return Lead(DOWN, pair.down.leading_monomial(), pair.down.leading_coefficient())


@dataclasses.dataclass(frozen=True)
class GBState:
    """Groebner basis of the interpolation module at one weight.

    Within g the downstairs leading monomials are pairwise non-divisible,
    within f the upstairs ones are; together their footprints count n
    monomials.
    """

    weight: int
    g: tuple[ModulePair, ...]
    f: tuple[ModulePair, ...]
    curve: Curve

    def g_leads(self) -> list[Lead]:
        return [leading(self.weight, p) for p in self.g]

    def f_leads(self) -> list[Lead]:
        return [leading(self.weight, p) for p in self.f]


@dataclasses.dataclass(frozen=True)
class VoteRecord:
    """One voting round: candidates, their tallies, and the winner."""

    s: int
    candidates: tuple[FieldElement, ...]
    tallies: Mapping[FieldElement, int]
    chosen: FieldElement
    margin: int


@dataclasses.dataclass(frozen=True)
class DecodeResult:
    message: Vector
    votes: tuple[VoteRecord, ...]
    final_basis: GBState
    status: str
    distance: int


Watcher = Callable[[int, GBState, Optional[VoteRecord]], None]


def initial_basis(code: Code, v: Sequence[FieldElement]) -> GBState:
    """Basis {0*z + eta_i} + {z - h_v} at weight N = delta(h_v)."""
    h = code.lagrange(v)
    n_weight = h.delta()
    if n_weight is BOTTOM:
        n_weight = 0
    curve = code.curve
    g = tuple(ModulePair(curve.zero(), eta) for eta in code.eta_basis)
    f = (ModulePair(curve.one(), -h),)
    return GBState(n_weight, g, f, curve)


def vote(code: Code, s: int, state: GBState) -> VoteRecord:
    """Majority vote for the message coordinate at nongap order s <= u."""
    sg = state.curve.semigroup
    if not sg.is_nongap(s) or s > code.u:
        raise ValueError(f"voting requires a nongap s <= u, got {s}")
    field = state.curve.field
    g_lms = [ld.monomial for ld in state.g_leads()]
    delta_g = sg.footprint(g_lms)

    nominations: dict[FieldElement, list[Monomial]] = {}
    for pair in state.f:
        du = pair.up.delta()
        target = sg.phi(du + s)  # leading monomial of up * phi_s
        d = pair.down.coefficient(target)
        w_j = -(d / pair.up.leading_coefficient())
        nominations.setdefault(w_j, []).append(target)

    tallies: dict[FieldElement, int] = {}
    for c, targets in nominations.items():
        covered = {m for m in delta_g
                   if any(sg.monomial_divides(t, m) for t in targets)}
        tallies[c] = len(covered)

    candidates = tuple(sorted(nominations, key=canonical_key))
    counts = sorted(tallies.values(), reverse=True)
    top = counts[0]
    runner_up = counts[1] if len(counts) > 1 else 0
    if top == 0:
        chosen = field.zero  # all votes empty; any choice ties
        margin = 0
    else:
        chosen = None
        for c in candidates:
            if tallies[c] == top:
                chosen = c
                break
        margin = top - runner_up
    return VoteRecord(s, candidates, tallies, chosen, margin)


def shift(state: GBState, w: FieldElement, s: int) -> GBState:
    """Substitute z -> z + w * phi_s; leading data at weight s is unchanged."""
    sg = state.curve.semigroup
    if not sg.is_nongap(s):
        raise ValueError(f"{s} is a gap")
    if w.is_zero:
        return state
    mono = sg.phi(s)
    term = state.curve.monomial(mono.i, mono.j, w)
    return GBState(state.weight,
                   tuple(p.substitute(term) for p in state.g),
                   tuple(p.substitute(term) for p in state.f),
                   state.curve)


def spoly(s: int, pair: ModulePair, g_part: Sequence[ModulePair]) -> list[ModulePair]:
    """Combinations converting one F element from weight s to weight s - 1.

    Three cases on the weight-(s-1) leading term of the pair:
    still upstairs -> the pair itself; downstairs and divisible by a G
    leading monomial -> one elimination against the first such G;
    downstairs in the G footprint -> one elimination per lcm with each G
    leading monomial.  Every output leads upstairs at weight s - 1.
    """
    if leading(s, pair).location is not UP:
        raise ValueError("spoly needs a pair leading upstairs at weight s")
    sg = pair.up.curve.semigroup
    curve = pair.up.curve
    ld = leading(s - 1, pair)
    if ld.location is UP:
        return [pair]
    mu, lc_down = ld.monomial, ld.coefficient
    g_leads = [leading(s, g) for g in g_part]
    for g, g_ld in zip(g_part, g_leads):
        if sg.monomial_divides(g_ld.monomial, mu):
            q = sg.monomial_quotient(g_ld.monomial, mu)
            return [pair.times(curve.monomial(0, 0, lc_down.inverse()))
                    - g.times(curve.monomial(q.i, q.j,
                                             g_ld.coefficient.inverse()))]
    out = []
    for g, g_ld in zip(g_part, g_leads):
        for psi in sg.monomial_lcms(mu, g_ld.monomial):
            qf = sg.monomial_quotient(mu, psi)
            qg = sg.monomial_quotient(g_ld.monomial, psi)
            out.append(
                pair.times(curve.monomial(qf.i, qf.j, lc_down.inverse()))
                - g.times(curve.monomial(qg.i, qg.j,
                                         g_ld.coefficient.inverse())))
    return out


def _prime_reduce(pairs: list[ModulePair], lms: list[Monomial],
                  sg) -> tuple[list[ModulePair], list[Monomial]]:
    """Drop pairs whose leading monomial another pair's divides.

    Equal leading monomials keep the earlier element; output order follows
    input order.
    """
    keep_pairs, keep_lms = [], []
    for i, (p, m) in enumerate(zip(pairs, lms)):
        dominated = False
        for j, other in enumerate(lms):
            if j == i:
                continue
            if sg.monomial_divides(other, m) and (other != m or j < i):
                dominated = True
                break
        if not dominated:
            keep_pairs.append(p)
            keep_lms.append(m)
    return keep_pairs, keep_lms


def step(state: GBState) -> GBState:
    """Convert a basis at weight s into the reduced basis at weight s - 1.

    The new G part is the old one plus those F elements whose weight-(s-1)
    leading monomial falls in the old G footprint; the new F part collects
    the spoly outputs; both parts are then pruned by divisibility of
    leading terms within the part.
    """
    s = state.weight
    sg = state.curve.semigroup
    g_lms = [ld.monomial for ld in state.g_leads()]

    new_g = list(state.g)
    new_g_lms = list(g_lms)  # lm at s-1 equals lm at s for G elements
    new_f: list[ModulePair] = []
    for pair in state.f:
        ld = leading(s - 1, pair)
        if ld.location is DOWN and \
                not any(sg.monomial_divides(lm, ld.monomial) for lm in g_lms):
            new_g.append(pair)
            new_g_lms.append(ld.monomial)
        new_f.extend(spoly(s, pair, state.g))

    new_g, _ = _prime_reduce(new_g, new_g_lms, sg)
    f_lms = [leading(s - 1, p).monomial for p in new_f]
    new_f, _ = _prime_reduce(new_f, f_lms, sg)
    return GBState(s - 1, tuple(new_g), tuple(new_f), state.curve)


def hamming_distance(v: Sequence[FieldElement], w: Sequence[FieldElement]) -> int:
    return sum(1 for a, b in zip(v, w) if a != b)


def decode(code: Code, v: Sequence[FieldElement],
           watch: Optional[Watcher] = None) -> DecodeResult:
    """Decode a received vector; never aborts.

    Runs the weight loop from N down to 0, voting at every nongap weight
    s <= u (coordinates above N, when any, are zero).  When 2 * wt(error)
    is below the decoding distance the output message is the sent one.
    ``watch`` is called as watch(s, basis entering weight s, vote or None)
    for every s, and once more with the final basis at weight -1.
    """
    code._check_vector(v, code.n, "vector")
    sg = code.curve.semigroup
    field = code.field
    state = initial_basis(code, v)
    votes: list[VoteRecord] = []
    chosen: dict[int, FieldElement] = {}
    for s in range(state.weight, -1, -1):
        record = None
        if s <= code.u and sg.is_nongap(s):
            record = vote(code, s, state)
            votes.append(record)
            chosen[s] = record.chosen
        if watch is not None:
            watch(s, state, record)
        shifted = shift(state, record.chosen, s) if record is not None else state
        state = step(shifted)
    if watch is not None:
        watch(-1, state, None)

    message = tuple(chosen.get(s, field.zero) for s in code.message_orders)
    distance = hamming_distance(code.encode(message), v)
    if distance > (code.decoding_distance() - 1) // 2:
        status = STATUS_FAILED
    elif any(r.margin == 0 for r in votes):
        status = STATUS_LOW_CONFIDENCE
    else:
        status = STATUS_OK
    return DecodeResult(message, tuple(votes), state, status, distance)
