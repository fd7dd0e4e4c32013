"""The Kazhdan-Lusztig basis and its structure constants.

Columns of the base-change matrix p are produced by the generator
recursion on c_s c_w, with the mu coefficients extracted degree by
degree from the defining almost-orthogonality condition.  A second,
independent construction of p from the r-polynomial fixed-point
equations is kept as an oracle (``p_via_r``).

Structure constants h_{x,y,z} of c_x c_y in the KL basis are computed
by a length recursion entirely inside the KL basis; the slower T-basis
product followed by triangular elimination (``h_via_t``) is retained
and cross-checked in the tests.

Table dump formats: CSV rows ``y,w,p`` with the Laurent text form, and
JSON column files keyed by w.  Disk caching writes one file per
(system-hash, basis, column).
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .coxeter import CoxeterSystem, Element
from .errors import PreconditionViolated
from .hecke import Hecke, HeckeElt, Support
from .rings import Laurent


class KL:
    """Kazhdan-Lusztig data bound to one weighted Coxeter system."""

    def __init__(self, system: CoxeterSystem, cache_dir: str | None = None):
        self.sys = system
        self.hk = Hecke(system)
        self._col: dict[Element, dict[Element, Laurent]] = {
            system.identity: {system.identity: Laurent.one()}
        }
        self._mu: dict[tuple[int, Element, Element], Laurent] = {}
        self._cs: dict[tuple[int, Element, str], dict[Element, Laurent]] = {}
        self._h: dict[tuple[Element, Element], dict[Element, Laurent]] = {}
        self._qp: dict[tuple[Element, Element], Laurent] = {}
        self.cache_dir = Path(cache_dir) if cache_dir else None

    # -- the polynomials p ------------------------------------------------

    def column(self, w: Element) -> dict[Element, Laurent]:
        """All p(y, w): the T-coordinates of c_w."""
        got = self._col.get(w)
        if got is not None:
            return got
        loaded = self._load_column(w)
        if loaded is not None:
            self._col[w] = loaded
            return loaded
        sys_ = self.sys
        s = w.word[0]
        w1 = Element(w.word[1:])
        col1 = self.column(w1)
        if sys_.weights[s] == 0:
            col = {sys_.mul_gen(y, s, "left")[0]: a for y, a in col1.items()}
        else:
            # (T_s + v_s^{-1}) c_{w1}
            col = self.hk.gen_apply(s, col1, "left")
            vsi = Laurent.v_power(-sys_.weights[s])
            for y, a in col1.items():
                n = col.get(y, Laurent.zero()) + vsi * a
                if n:
                    col[y] = n
                elif y in col:
                    del col[y]
            # strip the lower KL-basis terms
            for z in sys_.lower(w1):
                if z == w1 or s not in sys_.descents(z, "left"):
                    continue
                m = self.mu(s, z, w1)
                if not m:
                    continue
                colz = self.column(z)
                for y, a in colz.items():
                    n = col.get(y, Laurent.zero()) - m * a
                    if n:
                        col[y] = n
                    elif y in col:
                        del col[y]
        self._col[w] = col
        self._store_column(w, col)
        return col

    def p(self, y: Element, w: Element) -> Laurent:
        return self.column(w).get(y, Laurent.zero())

    def c(self, w: Element) -> HeckeElt:
        """The KL basis element, written in the T-basis."""
        return HeckeElt("T", dict(self.column(w)))

    def mu(self, s: int, y: Element, w: Element) -> Laurent:
        """The KL-basis coefficient of c_y in c_s c_w (sy < y < w < sw)."""
        sys_ = self.sys
        if sys_.weights[s] <= 0:
            raise PreconditionViolated("mu requires L(s) > 0")
        key = (s, y, w)
        got = self._mu.get(key)
        if got is not None:
            return got
        if (
            s not in sys_.descents(y, "left")
            or s in sys_.descents(w, "left")
            or not sys_.bruhat_leq(y, w)
            or y == w
        ):
            raise PreconditionViolated("mu requires sy < y < w < sw")
        g = Laurent.v_power(sys_.weights[s]) * self.p(y, w)
        for z in sys_.lower(w):
            if z == w or z == y or s not in sys_.descents(z, "left"):
                continue
            if not sys_.bruhat_leq(y, z):
                continue
            mz = self.mu(s, z, w)
            if mz:
                g = g - self.p(y, z) * mz
        # nonnegative degrees come from g, negative ones from bar symmetry
        terms: dict[int, int] = {}
        for e, cf in g.terms.items():
            if e == 0:
                terms[0] = cf
            elif e > 0:
                terms[e] = cf
                terms[-e] = cf
        res = Laurent(terms)
        self._mu[key] = res
        return res

    def cs_mul_c(self, s: int, w: Element, side: str = "left") -> dict[Element, Laurent]:
        """KL-basis expansion of c_s c_w (left) or c_w c_s (right)."""
        key = (s, w, side)
        got = self._cs.get(key)
        if got is not None:
            return got
        sys_ = self.sys
        if sys_.weights[s] == 0:
            res = {sys_.mul_gen(w, s, side)[0]: Laurent.one()}
        elif s in sys_.descents(w, side):
            res = {
                w: Laurent.v_power(sys_.weights[s])
                + Laurent.v_power(-sys_.weights[s])
            }
        else:
            sw = sys_.mul_gen(w, s, side)[0]
            res = {sw: Laurent.one()}
            if side == "left":
                for z in sys_.lower(w):
                    if z != w and s in sys_.descents(z, "left"):
                        m = self.mu(s, z, w)
                        if m:
                            res[z] = m
            else:
                winv = sys_.inverse(w)
                for z in sys_.lower(w):
                    if z != w and s in sys_.descents(z, "right"):
                        m = self.mu(s, sys_.inverse(z), winv)
                        if m:
                            res[z] = m
        self._cs[key] = res
        return res

    # -- structure constants ----------------------------------------------

    def h(self, x: Element, y: Element) -> dict[Element, Laurent]:
        """All h_{x,y,z}: the KL-basis expansion of c_x c_y."""
        key = (x, y)
        got = self._h.get(key)
        if got is not None:
            return got
        sys_ = self.sys
        if not x.word:
            res = {y: Laurent.one()}
        elif len(x.word) == 1:
            res = dict(self.cs_mul_c(x.word[0], y, "left"))
        else:
            s = x.word[0]
            x1 = Element(x.word[1:])
            res = {}
            for w, a in self.h(x1, y).items():
                for z, b in self.cs_mul_c(s, w, "left").items():
                    n = res.get(z, Laurent.zero()) + a * b
                    if n:
                        res[z] = n
                    elif z in res:
                        del res[z]
            if sys_.weights[s] > 0:
                for z in sys_.lower(x1):
                    if z == x1 or s not in sys_.descents(z, "left"):
                        continue
                    m = self.mu(s, z, x1)
                    if not m:
                        continue
                    for u, b in self.h(z, y).items():
                        n = res.get(u, Laurent.zero()) - m * b
                        if n:
                            res[u] = n
                        elif u in res:
                            del res[u]
        self._h[key] = res
        return res

    def h_via_t(self, x: Element, y: Element) -> dict[Element, Laurent]:
        """h through the T-basis product and triangular elimination."""
        sys_ = self.sys
        prod: Support = {}
        coly = self.column(y)
        for u, cu in self.column(x).items():
            cur = dict(coly)
            for s in reversed(u.word):
                cur = self.hk.gen_apply(s, cur, "left")
            for w, c in cur.items():
                n = prod.get(w, Laurent.zero()) + cu * c
                if n:
                    prod[w] = n
                elif w in prod:
                    del prod[w]
        out: dict[Element, Laurent] = {}
        while prod:
            # eliminate at maximal length, ShortLex-least among ties
            top = max(len(z.word) for z in prod)
            zmax = min(z for z in prod if len(z.word) == top)
            a = prod[zmax]
            out[zmax] = a
            for u, b in self.column(zmax).items():
                n = prod.get(u, Laurent.zero()) - a * b
                if n:
                    prod[u] = n
                elif u in prod:
                    del prod[u]
        return out

    # -- inversion ----------------------------------------------------------

    def qprime(self, y: Element, w: Element) -> Laurent:
        """Entries of the inverse of the matrix p (alternating chain sums)."""
        if y == w:
            return Laurent.one()
        if not self.sys.bruhat_leq(y, w):
            return Laurent.zero()
        key = (y, w)
        got = self._qp.get(key)
        if got is not None:
            return got
        acc = Laurent.zero()
        for z in self.sys.bruhat_interval(y, w):
            if z != w:
                qz = self.qprime(y, z)
                if qz:
                    acc = acc + qz * self.p(z, w)
        res = -acc
        self._qp[key] = res
        return res

    def q(self, y: Element, w: Element) -> Laurent:
        sgn = self.sys.sign(y) * self.sys.sign(w)
        return sgn * self.qprime(y, w)

    def d_functional(self, z: Element, h: HeckeElt) -> Laurent:
        """The functional dual to the KL basis: picks the c_z coordinate."""
        if h.basis == "C":
            return h.coeff(z)
        out = Laurent.zero()
        for y, a in h.terms.items():
            qp = self.qprime(z, y)
            if qp:
                out = out + qp * a
        return out

    # -- independent construction of p ---------------------------------------

    def p_via_r(self, y: Element, w: Element) -> Laurent:
        """p from the bar-fixed-point equations on the r-polynomials."""
        sys_ = self.sys
        if y == w:
            return Laurent.one()
        if not sys_.bruhat_leq(y, w):
            return Laurent.zero()
        lower = sys_.lower(w)
        u: dict[Element, Laurent] = {w: Laurent.one()}
        for x in sorted(lower, key=Element.key, reverse=True):
            if x == w or not sys_.bruhat_leq(x, w):
                continue
            a = Laurent.zero()
            for z in lower:
                if z == x or not sys_.bruhat_leq(x, z):
                    continue
                uz = u.get(z)
                if uz:
                    rr = self.hk.r(x, z)
                    if rr:
                        a = a + rr * uz
            if (a + a.bar()).terms:
                raise AssertionError("fixed-point equation lost bar-antisymmetry")
            u[x] = Laurent({-e: cf for e, cf in a.terms.items() if e > 0})
        return u.get(y, Laurent.zero())

    # -- disk cache -----------------------------------------------------------

    def _column_path(self, w: Element) -> Path | None:
        if self.cache_dir is None:
            return None
        d = self.cache_dir / self.sys.system_hash() / "p"
        return d / (str(w).replace(".", "_") or "e")

    def _load_column(self, w: Element) -> dict[Element, Laurent] | None:
        path = self._column_path(w)
        if path is None or not path.exists():
            return None
        data = json.loads(path.read_text())
        return {
            Element.parse(ys): Laurent.from_json(cj) for ys, cj in data["column"]
        }

    def _store_column(self, w: Element, col: dict[Element, Laurent]) -> None:
        path = self._column_path(w)
        if path is None:
            return
        os.makedirs(path.parent, exist_ok=True)
        data = {
            "w": str(w),
            "column": [[str(y), a.to_json()] for y, a in sorted(col.items())],
        }
        path.write_text(json.dumps(data))

    # -- table dumps ------------------------------------------------------------

    def column_csv(self, w: Element) -> str:
        lines = ["y,w,p"]
        for y, a in sorted(self.column(w).items()):
            lines.append(f"{y},{w},{a.to_text()}")
        return "\n".join(lines) + "\n"

    def column_json(self, w: Element) -> dict:
        return {
            "w": str(w),
            "column": {str(y): a.to_json() for y, a in sorted(self.column(w).items())},
        }
