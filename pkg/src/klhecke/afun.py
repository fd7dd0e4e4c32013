"""The a-function, distinguished involutions and leading coefficients.

a(z) is the largest degree attained by the structure constants
h_{x, y, z}.  On a finite group the table over all pairs is exact, with
the weight of the longest element a proven bound.  On an infinite group
the table over a length ball yields a lower bound per element, which is
promoted to a certified value when one of three sound arguments applies:

* z is the identity (only the unit product reaches it);
* the windowed value attains the conjectural global bound
  max_I L(w0^I), so no product anywhere can push higher (this leans on
  the boundedness conjecture, recorded in ``notes``);
* every x with z below it in the right preorder and every y with z
  below it in the left preorder sits well inside the window, so all
  products that can reach z were already inspected (edge locality within
  the margin is the same heuristic the cells module documents).

Everything downstream (Delta, n_z, the distinguished set, gamma) reads
from this table.  CSV dumps: ``z,a,certified,delta,n`` and
``x,y,z,gamma``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cells import edges
from .coxeter import Element
from .errors import UncertifiedRegion
from .kl import KL
from .rings import Laurent


@dataclass
class AData:
    """a-function data over a region, with per-element certification."""

    kl: KL
    region: list[Element]
    bound: int | None
    margin: int
    a: dict[Element, int]
    certified: dict[Element, bool]
    conj_bound: int
    notes: list[str] = field(default_factory=list)

    @property
    def sys(self):
        return self.kl.sys

    def safe(self) -> list[Element]:
        if self.bound is None:
            return list(self.region)
        cutoff = self.bound - self.margin
        return [z for z in self.region if len(z.word) <= cutoff]

    def h(self, x: Element, y: Element) -> dict[Element, Laurent]:
        return self.kl.h(x, y)

    def a_of(self, z: Element) -> int:
        if not self.certified.get(z, False):
            raise UncertifiedRegion(f"a({z}) is only a window lower bound")
        return self.a[z]

    def delta(self, z: Element) -> int:
        p = self.kl.p(self.sys.identity, z)
        if p.is_zero():
            raise ValueError("p(1, z) vanished; z outside the group?")
        return -p.max_exp

    def n_of(self, z: Element) -> int:
        p = self.kl.p(self.sys.identity, z)
        return p.coeff(p.max_exp)

    def dset(self) -> list[Element]:
        """Candidate distinguished involutions among the safe elements."""
        out = []
        for z in self.safe():
            if not self.certified.get(z, False):
                raise UncertifiedRegion(f"a({z}) not certified on the window")
            if self.a[z] == self.delta(z):
                out.append(z)
        return sorted(out)

    def gamma(self, x: Element, y: Element, z: Element) -> int:
        """Leading coefficient of h_{x,y,z^{-1}} at degree a(z^{-1})."""
        zi = self.sys.inverse(z)
        az = self.a_of(zi)
        val = self.kl.h(x, y).get(zi)
        return val.coeff(az) if val is not None else 0

    def csv(self) -> str:
        lines = ["z,a,certified,delta,n"]
        for z in sorted(self.region):
            lines.append(
                f"{z},{self.a.get(z, '')},{str(self.certified.get(z, False)).lower()},"
                f"{self.delta(z)},{self.n_of(z)}"
            )
        return "\n".join(lines) + "\n"

    def gamma_csv(self, triples) -> str:
        lines = ["x,y,z,gamma"]
        for x, y, z in triples:
            lines.append(f"{x},{y},{z},{self.gamma(x, y, z)}")
        return "\n".join(lines) + "\n"


def conjectural_bound(kl: KL) -> int:
    """max L(w0^I) over subsets I generating finite parabolics."""
    sys_ = kl.sys
    best = 0
    for mask in range(1, 1 << sys_.n):
        idx = [i for i in range(sys_.n) if mask & (1 << i)]
        if sys_.is_finite(idx):
            best = max(best, sys_.weight(sys_.longest_element(idx)))
    return best


def build(kl: KL, bound: int | None = None, margin: int = 3, threads: int = 1) -> AData:
    """Build the h-table over the region and derive certified a-values."""
    sys_ = kl.sys
    sys_.require_positive_weights()
    if bound is None:
        if not sys_.is_finite():
            raise ValueError("an infinite group needs an explicit region bound")
        region = sys_.elements()
    else:
        region = sys_.ball(bound)
    inside = set(region)
    amax: dict[Element, int] = {z: 0 for z in region}

    def sweep(x: Element) -> None:
        for y in region:
            for z, val in kl.h(x, y).items():
                if z in inside:
                    d = val.max_exp
                    if d is not None and d > amax[z]:
                        amax[z] = d

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(sweep, region))
    else:
        for x in region:
            sweep(x)

    notes: list[str] = []
    if bound is None:
        n_exact = sys_.weight(sys_.longest_element())
        certified = {z: True for z in region}
        for z, val in amax.items():
            if val > n_exact:
                raise AssertionError("a-value exceeded the finite-group bound")
        data = AData(kl, region, None, 0, amax, certified, n_exact, notes)
        return data

    n_conj = conjectural_bound(kl)
    cutoff = max(len(w.word) for w in region) - margin
    left_adj = edges(kl, region, "left")
    right_adj = edges(kl, region, "right")
    anc_left = _ancestors(left_adj)
    anc_right = _ancestors(right_adj)
    certified = {}
    used_conjecture = False
    for z in region:
        if not z.word:
            certified[z] = True  # only the unit product lands on the identity
            continue
        if amax[z] >= n_conj:
            certified[z] = True
            used_conjecture = True
            continue
        up = anc_right[z] | anc_left[z]
        certified[z] = all(len(x.word) <= cutoff for x in up)
    if used_conjecture:
        notes.append(
            "certification invoked the conjectural bound "
            f"max_I L(w0^I) = {n_conj} on this window"
        )
    return AData(kl, region, bound, margin, amax, certified, n_conj, notes)


def _ancestors(adj) -> dict[Element, set[Element]]:
    """For each node, the nodes from which it is reachable (inclusive)."""
    rev: dict[Element, set[Element]] = {w: set() for w in adj}
    for wp, outs in adj.items():
        for w in outs:
            rev[w].add(wp)
    out = {}
    for z in adj:
        seen = {z}
        frontier = [z]
        while frontier:
            u = frontier.pop()
            for x in rev[u]:
                if x not in seen:
                    seen.add(x)
                    frontier.append(x)
        out[z] = seen
    return out


def f_poly(kl: KL, x: Element, y: Element, z: Element) -> Laurent:
    """tau(T_x T_y T_{z^{-1}}): the T-basis structure constant f_{x,y,z}."""
    hk = kl.hk
    cur = hk.t_mul_support({x: Laurent.one()}, {y: Laurent.one()})
    for s in kl.sys.inverse(z).word:
        cur = hk.gen_apply(s, cur, "right")
    return cur.get(kl.sys.identity, Laurent.zero())


def fprime_poly(kl: KL, x: Element, y: Element, z: Element) -> Laurent:
    """f'_{x,y,z}: T_x T_y expanded in the KL basis at z."""
    out = Laurent.zero()
    prod = kl.hk.t_mul_support({x: Laurent.one()}, {y: Laurent.one()})
    for u, c in prod.items():
        qp = kl.qprime(z, u)
        if qp:
            out = out + qp * c
    return out
