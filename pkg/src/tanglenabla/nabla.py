"""The state-sum invariants: per-crossing quadrant codes, their products
over Kauffman states, and the two-ended specialization to the Conway
potential.

The quadrant codes, in the slot conventions of :mod:`tanglenabla.diagram`
(slot 0 = under-in, quadrants counterclockwise):

* the under colour u contributes u^{-1/2} on the two quadrants left of the
  under-strand (q2, q3) and u^{+1/2} on its right (q0, q1);
* the over colour o contributes o^{+1/2} left of the over-strand and
  o^{-1/2} on its right;
* the single quadrant adjacent to both incoming ends carries an extra
  factor h^{-sign}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .diagram import Site, TangleDiagram, TangleError
from .laurent import H, LaurentPoly, binomial
from .states import KauffmanState, enumerate_states, site_of


def quadrant_exponents(d: TangleDiagram, ci: int, q: int) -> dict[str, int]:
    """Doubled exponents of the label monomial of quadrant q at crossing ci."""
    c = d.crossings[ci]
    u = d.colour_of_edge[c.under[0]]
    o = d.colour_of_edge[c.over[0]]
    exp: dict[str, int] = {}
    exp[u] = exp.get(u, 0) + (-1 if q in (2, 3) else 1)
    oi = c.over_in_slot
    left_of_over = ((oi + 2) % 4, (oi + 3) % 4)
    exp[o] = exp.get(o, 0) + (1 if q in left_of_over else -1)
    both_in = 3 if c.sign > 0 else 0
    if q == both_in:
        exp[H] = exp.get(H, 0) - 2 * c.sign
    return {v: e for v, e in exp.items() if e}


def quadrant_label(d: TangleDiagram, ci: int, q: int) -> LaurentPoly:
    """The label monomial itself (coefficient +1; signs only enter at h=-1)."""
    return LaurentPoly.monomial(1, quadrant_exponents(d, ci, q))


def state_monomial(d: TangleDiagram, x: KauffmanState) -> LaurentPoly:
    exp: dict[str, int] = {}
    for ci, q in enumerate(x.markers):
        for v, e in quadrant_exponents(d, ci, q).items():
            exp[v] = exp.get(v, 0) + e
    return LaurentPoly.monomial(1, {v: e for v, e in exp.items() if e})


def nabla_hat_all(d: TangleDiagram) -> dict[Site, LaurentPoly]:
    """The full family of hatted state sums, one per site (h unevaluated)."""
    out: dict[Site, LaurentPoly] = {s: LaurentPoly.zero() for s in d.sites()}
    if d.split:
        return out
    for x in enumerate_states(d):
        s = site_of(d, x)
        out[s] = out.get(s, LaurentPoly.zero()) + state_monomial(d, x)
    return out


def _check_site(d: TangleDiagram, s: Site) -> None:
    if not isinstance(s, Site):
        raise TangleError("E_BAD_SITE", f"not a site: {s!r}")
    labels = set(d.arcs) if d.boundary else set()
    if len(s.arcs) != max(d.n_open - 1, 0) or not s.arcs <= labels:
        raise TangleError(
            "E_BAD_SITE",
            f"site {s} is not an ({d.n_open - 1})-element subset of {sorted(labels)}")


def nabla_hat(d: TangleDiagram, s: Site) -> LaurentPoly:
    _check_site(d, s)
    if d.split:
        return LaurentPoly.zero()
    return nabla_hat_all(d)[s]


def nabla_at_site(d: TangleDiagram, s: Site) -> LaurentPoly:
    return nabla_hat(d, s).eval_h()


def nabla_all(d: TangleDiagram) -> dict[Site, LaurentPoly]:
    return {s: p.eval_h() for s, p in nabla_hat_all(d).items()}


@dataclass(frozen=True)
class ConwayPotential:
    """The empty-site value of a 2-ended tangle together with the declared
    divisor (c - c^{-1}) for the open colour c; `quotient` is filled in when
    the division is exact (always the case with closed components present)."""

    numerator: LaurentPoly
    colour: str
    quotient: Optional[LaurentPoly]

    def pretty(self) -> str:
        if self.quotient is not None:
            return self.quotient.pretty()
        return f"({self.numerator.pretty()}) / ({self.colour} - {self.colour}^-1)"


def conway_potential(d: TangleDiagram) -> ConwayPotential:
    if d.n_open != 1:
        raise TangleError("E_NOT_TWO_ENDED", f"diagram has {2 * d.n_open} ends")
    open_colour = next(c.colour for c in d.components if c.kind == "open")
    num = nabla_at_site(d, Site(frozenset()))
    try:
        quot = num.divide_binomial(open_colour)
    except Exception:
        quot = None
    return ConwayPotential(num, open_colour, quot)


def euler_factor(d: TangleDiagram) -> LaurentPoly:
    """Product of (c - c^{-1}) over the closed components of the diagram."""
    out = LaurentPoly.integer(1)
    for comp in d.components:
        if comp.kind == "closed":
            out = out * binomial(comp.colour)
    return out
