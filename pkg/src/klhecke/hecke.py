"""The Iwahori-Hecke algebra in the standard basis.

Elements are finitely supported maps from group elements to Laurent
polynomials, tagged with the basis they are written in ("T" or "C").
The quadratic relation is (T_s - v_s)(T_s + v_s^{-1}) = 0 with
v_s = v^{L(s)}.

HeckeElt JSON form: {"basis": "T"|"C", "terms": [[element, laurent], ...]}
sorted by element.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import CoxeterSystem, Element
from .rings import Laurent

Support = dict[Element, Laurent]


@dataclass
class HeckeElt:
    """A finitely supported combination of basis elements."""

    basis: str
    terms: Support = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {w: c for w, c in self.terms.items() if c}

    def coeff(self, w: Element) -> Laurent:
        return self.terms.get(w, Laurent.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeckeElt)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        self._check(other)
        d = dict(self.terms)
        for w, c in other.terms.items():
            n = d.get(w, Laurent.zero()) + c
            if n:
                d[w] = n
            elif w in d:
                del d[w]
        return HeckeElt(self.basis, d)

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        self._check(other)
        d = dict(self.terms)
        for w, c in other.terms.items():
            n = d.get(w, Laurent.zero()) - c
            if n:
                d[w] = n
            elif w in d:
                del d[w]
        return HeckeElt(self.basis, d)

    def scale(self, a) -> "HeckeElt":
        return HeckeElt(self.basis, {w: a * c for w, c in self.terms.items()})

    def _check(self, other: "HeckeElt") -> None:
        if self.basis != other.basis:
            raise ValueError("cannot mix basis tags implicitly")

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [[str(w), c.to_json()] for w, c in sorted(self.terms.items())],
        }

    @staticmethod
    def from_json(data: dict) -> "HeckeElt":
        return HeckeElt(
            data["basis"],
            {
                Element.parse(ws): Laurent.from_json(cj)
                for ws, cj in data["terms"]
            },
        )


class Hecke:
    """Hecke-algebra operations bound to one weighted Coxeter system."""

    def __init__(self, system: CoxeterSystem):
        self.sys = system
        self._vs = [Laurent.v_power(system.weights[s]) for s in range(system.n)]
        self._xi = [
            Laurent.v_power(system.weights[s]) - Laurent.v_power(-system.weights[s])
            for s in range(system.n)
        ]
        self._r: dict[tuple[Element, Element], Laurent] = {}

    def v_s(self, s: int) -> Laurent:
        return self._vs[s]

    def xi_s(self, s: int) -> Laurent:
        """v_s - v_s^{-1}."""
        return self._xi[s]

    def unit(self) -> HeckeElt:
        return HeckeElt("T", {self.sys.identity: Laurent.one()})

    def t(self, w: Element) -> HeckeElt:
        return HeckeElt("T", {w: Laurent.one()})

    # -- multiplication ------------------------------------------------

    def gen_apply(self, s: int, terms: Support, side: str = "left") -> Support:
        """Multiply a T-basis support by T_s on the given side."""
        sys_ = self.sys
        xi = self._xi[s]
        out: Support = {}
        for w, a in terms.items():
            sw, d = sys_.mul_gen(w, s, side)
            n = out.get(sw, Laurent.zero()) + a
            if n:
                out[sw] = n
            elif sw in out:
                del out[sw]
            if d < 0 and xi:
                m = out.get(w, Laurent.zero()) + xi * a
                if m:
                    out[w] = m
                elif w in out:
                    del out[w]
        return out

    def t_mul_support(self, a: Support, b: Support) -> Support:
        """Product of two T-basis supports."""
        sys_ = self.sys
        out: Support = {}
        for u, cu in a.items():
            cur = b
            for s in reversed(u.word):
                cur = self.gen_apply(s, cur, "left")
            for w, c in cur.items():
                n = out.get(w, Laurent.zero()) + cu * c
                if n:
                    out[w] = n
                elif w in out:
                    del out[w]
        return out

    def t_mul(self, a: HeckeElt, b: HeckeElt) -> HeckeElt:
        if a.basis != "T" or b.basis != "T":
            raise ValueError("t_mul expects T-basis operands")
        return HeckeElt("T", self.t_mul_support(a.terms, b.terms))

    # -- r-polynomials and the bar involution ----------------------------

    def r(self, y: Element, w: Element) -> Laurent:
        """Coefficient polynomial of the bar involution in the T-basis."""
        if not w.word:
            return Laurent.one() if not y.word else Laurent.zero()
        if len(y.word) > len(w.word):
            return Laurent.zero()
        key = (y, w)
        got = self._r.get(key)
        if got is not None:
            return got
        s = w.word[0]
        sw = Element(w.word[1:])
        sy, d = self.sys.mul_gen(y, s, "left")
        if d < 0:
            res = self.r(sy, sw)
        else:
            res = self.r(sy, sw) + self._xi[s] * self.r(y, sw)
        self._r[key] = res
        return res

    def bar(self, h: HeckeElt) -> HeckeElt:
        """The bar involution: semilinear, T_w to the inverse of T_{w^{-1}}."""
        if h.basis != "T":
            raise ValueError("bar expects the T-basis")
        out: Support = {}
        for w, a in h.terms.items():
            abar = a.bar()
            for y in self.sys.lower(w):
                c = self.r(y, w)
                if c:
                    n = out.get(y, Laurent.zero()) + abar * c.bar()
                    if n:
                        out[y] = n
                    elif y in out:
                        del out[y]
        return HeckeElt("T", out)

    # -- involutions and the trace ---------------------------------------

    def flat(self, h: HeckeElt) -> HeckeElt:
        """The antiautomorphism sending T_w to T_{w^{-1}}."""
        sys_ = self.sys
        return HeckeElt(h.basis, {sys_.inverse(w): a for w, a in h.terms.items()})

    def dagger(self, h: HeckeElt) -> HeckeElt:
        """The linear algebra involution with T_s to -T_s^{-1}."""
        if h.basis != "T":
            raise ValueError("dagger expects the T-basis")
        out: Support = {}
        for w, a in h.terms.items():
            sign = self.sys.sign(w)
            for y in self.sys.lower(w):
                c = self.r(y, w)
                if c:
                    n = out.get(y, Laurent.zero()) + (sign * a) * c.bar()
                    if n:
                        out[y] = n
                    elif y in out:
                        del out[y]
        return HeckeElt("T", out)

    def tau(self, h: HeckeElt) -> Laurent:
        """The trace functional: the coefficient of the identity."""
        if h.basis != "T":
            raise ValueError("tau expects the T-basis")
        return h.coeff(self.sys.identity)

    def tau_product(self, a: HeckeElt, b: HeckeElt) -> Laurent:
        """tau(a b) computed through the pairing tau(T_x T_y) = [x y = 1]."""
        out = Laurent.zero()
        for x, cx in a.terms.items():
            cy = b.terms.get(self.sys.inverse(x))
            if cy:
                out = out + cx * cy
        return out
