"""Closed-form dihedral data used as independent ground truth.

Everything here is assembled directly from explicit formulas for
rank-two systems (KL basis elements, products in the KL basis, the
series expansion of the functional dual to c_{s_1}, the asymptotic-ring
multiplication table and the a-function table).  The generic engines
are never called: agreement with them is exactly what the oracle is
for.

Elements are named 1_k / 2_k for the alternating words of length k
starting with the first or second generator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import Element
from .errors import OutOfCoverage, UnsupportedWeights
from .rings import Laurent

TBasis = dict[Element, Laurent]
CBasis = dict[Element, Laurent]


def _alt_word(start: int, k: int, m: int | None) -> tuple[int, ...]:
    if k == 0:
        return ()
    if m is not None and k == m:
        start = 0  # the longest element's canonical word starts with 1
    return tuple(start if i % 2 == 0 else 1 - start for i in range(k))


@dataclass
class DihedralSpec:
    """Rank-two system: bond order m (None for infinity) and weights."""

    m: int | None
    L1: int
    L2: int

    def __post_init__(self):
        if self.L1 <= 0 or self.L2 <= 0:
            raise UnsupportedWeights("closed forms require positive weights")
        if self.m is not None and self.m % 2 == 1 and self.L1 != self.L2:
            raise UnsupportedWeights("odd bond forces equal weights")

    @property
    def split(self) -> bool:
        return self.L1 == self.L2

    def check_weight_order(self) -> None:
        if self.L1 > self.L2:
            raise UnsupportedWeights(
                "closed forms assume L2 >= L1; swap the generator roles"
            )

    # -- element coding -------------------------------------------------

    def el(self, fam: int, k: int) -> Element:
        """The alternating element fam_k (fam is 1 or 2)."""
        if k == 0:
            return Element()
        if self.m is not None and not 0 <= k <= self.m:
            raise ValueError(f"no element of length {k} for m={self.m}")
        return Element(_alt_word(fam - 1, k, self.m))

    def name(self, w: Element) -> tuple[int, int]:
        """(fam, k) for a canonical dihedral word."""
        if not w.word:
            return (1, 0)
        return (w.word[0] + 1, len(w.word))

    def inv(self, fam: int, k: int) -> tuple[int, int]:
        """Name of the inverse element."""
        if k == 0 or k % 2 == 1 or (self.m is not None and k == self.m):
            return (fam, k)
        return (3 - fam, k)

    def weight_el(self, fam: int, k: int) -> int:
        """Total weight of fam_k."""
        pattern = [self.L1, self.L2] if fam == 1 else [self.L2, self.L1]
        return sum(pattern[i % 2] for i in range(k))

    def all_elements(self, max_len: int | None = None) -> list[Element]:
        top = self.m if self.m is not None else max_len
        if top is None:
            raise ValueError("an infinite group needs a length bound")
        if self.m is not None and max_len is not None:
            top = min(top, max_len)
        out = [Element()]
        for k in range(1, top + 1):
            out.append(self.el(1, k))
            e2 = self.el(2, k)
            if e2 != out[-1]:
                out.append(e2)
        return out

    # -- ring elements ----------------------------------------------------

    @property
    def zeta(self) -> Laurent:
        return Laurent.v_power(self.L1 - self.L2) + Laurent.v_power(self.L2 - self.L1)

    def f_gen(self, fam: int) -> Laurent:
        L = self.L1 if fam == 1 else self.L2
        return Laurent.v_power(L) + Laurent.v_power(-L)

    # -- KL basis closed forms ----------------------------------------------

    def gamma_elt(self, fam: int, k: int) -> TBasis:
        """The depth-one triangular element: v^{L(y)-L(w)} on all y below."""
        lw = self.weight_el(fam, k)
        out: TBasis = {self.el(fam, k): Laurent.one()}
        for j in range(k):
            for f in (1, 2):
                y = self.el(f, j)
                if y in out:
                    continue
                out[y] = Laurent.v_power(self.weight_el(f, j) - lw)
        return out

    def gamma_prime_elt(self, fam: int, k: int) -> TBasis:
        """The corrected triangular element for L2 > L1."""
        self.check_weight_order()
        if k % 2 == 0 or (fam, k) == (1, 1):
            return self.gamma_elt(fam, k)
        if fam == 2:
            # alternating-sign telescoping combination of depth-one elements
            kk = (k - 1) // 2
            out: TBasis = {}
            for s in range(kk + 1):
                coeff = Laurent.monomial((-1) ** s, s * (self.L1 - self.L2))
                for y, a in self.gamma_elt(2, k - 2 * s).items():
                    n = out.get(y, Laurent.zero()) + coeff * a
                    if n:
                        out[y] = n
                    elif y in out:
                        del out[y]
            return out
        # fam == 1, odd length >= 3
        out = dict(self.gamma_elt(1, k))
        shift = Laurent.v_power(self.L1 - self.L2)
        for y, a in self.gamma_elt(1, k - 2).items():
            n = out.get(y, Laurent.zero()) + shift * a
            if n:
                out[y] = n
            elif y in out:
                del out[y]
        return out

    def c_closed_form(self, w: Element) -> TBasis:
        fam, k = self.name(w)
        if self.split:
            return self.gamma_elt(fam, k)
        self.check_weight_order()
        return self.gamma_prime_elt(fam, k)

    # -- products in the KL basis ---------------------------------------------

    def _pu(self, k: int, kprime: int, u: int) -> Laurent:
        """Coefficients in the mixed products of the infinite unequal case."""
        if u == 0:
            return Laurent.one()
        if u == 2 * k + 2:
            return Laurent(1 if kprime > 2 * k + 3 else 0)
        if u % 2 == 1:
            return self.zeta if kprime > u else Laurent.zero()
        return Laurent((1 if kprime > u - 1 else 0) + (1 if kprime > u + 1 else 0))

    def product_closed_form(self, x: Element, y: Element) -> CBasis:
        """c_x c_y in the KL basis, where a closed form exists."""
        fx, kx = self.name(x)
        fy, ky = self.name(y)
        if kx == 0:
            return {y: Laurent.one()}
        if ky == 0:
            return {x: Laurent.one()}
        if self.m is not None:
            raise OutOfCoverage("no finite-m closed product forms beyond the top cell")
        if self.split:
            if fx == fy and kx % 2 == 1 and ky % 2 == 1:
                k, kp = (kx - 1) // 2, (ky - 1) // 2
                f = self.f_gen(fx)
                return {
                    self.el(fx, kx + ky - 1 - 2 * u): f
                    for u in range(min(2 * k, 2 * kp) + 1)
                }
            raise OutOfCoverage("split infinite products are given for odd powers only")
        self.check_weight_order()
        zeta = self.zeta
        if (fx, kx) == (2, 1) and fy == 1:
            out = {self.el(2, ky + 1): Laurent.one()}
            if ky > 1:
                out[self.el(2, ky - 1)] = zeta
            if ky > 3:
                out[self.el(2, ky - 3)] = Laurent.one()
            return out
        if (fx, kx) == (1, 1) and fy == 2:
            return {self.el(1, ky + 1): Laurent.one()}
        if (fx, kx) == (1, 1) and fy == 1:
            return {y: self.f_gen(1)}
        if fx == 2 and kx % 2 == 1 and fy == 2:
            k = (kx - 1) // 2
            f2 = self.f_gen(2)
            return {
                self.el(2, kx - 1 + ky - 4 * u): f2
                for u in range(k + 1)
                if 2 * u <= ky - 1
            }
        if fx == 1 and kx % 2 == 0 and fy == 2:
            k = (kx - 2) // 2
            f2 = self.f_gen(2)
            return {
                self.el(1, kx + ky - 1 - 4 * u): f2
                for u in range(k + 1)
                if 2 * u <= ky - 1
            }
        if fx == 2 and kx % 2 == 1 and fy == 1:
            k = (kx - 1) // 2
            out = {}
            for u in range(2 * k + 3):
                c = self._pu(k, ky, u)
                if c:
                    out[self.el(2, ky + kx - 2 * u)] = c
            return out
        if fx == 1 and kx % 2 == 0 and fy == 1:
            k = (kx - 2) // 2
            out = {}
            for u in range(2 * k + 3):
                c = self._pu(k, ky, u)
                if c:
                    out[self.el(1, ky + kx - 2 * u)] = c
            return out
        if fx == 2 and kx % 2 == 0 and fy == 1:
            k = (kx - 2) // 2
            f1 = self.f_gen(1)
            out = {}
            for u in range(2 * k + 3):
                c = self._pu(k, ky, u) * f1
                if c:
                    out[self.el(2, ky + kx - 1 - 2 * u)] = c
            return out
        if fx == 1 and kx % 2 == 1 and fy == 1:
            k = (kx - 3) // 2
            f1 = self.f_gen(1)
            out = {}
            for u in range(2 * k + 3):
                c = self._pu(k, ky, u) * f1
                if c:
                    out[self.el(1, ky + kx - 1 - 2 * u)] = c
            return out
        # remaining rows follow from the antiautomorphism images of the
        # family-1 rows, since (1_k)^{-1} is 1_k or 2_k by parity
        if fy == 2:
            # c_{(1_kx)^{-1}} c_{2_ky} with (1_kx)^{-1} = x
            if ky % 2 == 1:
                k = (ky - 1) // 2
                out = {}
                for u in range(2 * k + 3):
                    c = self._pu(k, kx, u)
                    if c:
                        fam, kk = self.inv(2, kx + ky - 2 * u)
                        out[self.el(fam, kk)] = c
                return out
            k = (ky - 2) // 2
            out = {}
            for u in range(2 * k + 3):
                c = self._pu(k, kx, u)
                if c:
                    fam, kk = self.inv(1, kx + ky - 2 * u)
                    out[self.el(fam, kk)] = c
            return out
        raise OutOfCoverage(f"no closed form for {x} * {y}")

    def top_cell_square(self) -> tuple[Laurent, list[Element]]:
        """For finite even m and L2 > L1: the c-coefficient of c_{2_{m-1}}
        in its own square, and the allowed support of that square."""
        if self.m is None or self.split:
            raise OutOfCoverage("the top-cell square needs finite m and L2 > L1")
        self.check_weight_order()
        m = self.m
        k = (m - 2) // 2
        p0 = Laurent.zero()
        for j in range(-k, k + 1, 2):
            p0 = p0 + Laurent.v_power(j * (self.L2 - self.L1))
        p0 = ((-1) ** k) * (Laurent.v_power(self.L2) + Laurent.v_power(-self.L2)) * p0
        return p0, [self.el(2, m - 1), self.el(2, m)]

    # -- the T-basis multiplication table (infinite case) -----------------------

    def t_mul_closed(self, x: Element, y: Element) -> TBasis:
        """T_x T_y for the infinite dihedral group."""
        if self.m is not None:
            raise OutOfCoverage("the T-table closed form is for m = infinity")
        fx, kx = self.name(x)
        fy, ky = self.name(y)
        if kx == 0:
            return {y: Laurent.one()}
        if ky == 0:
            return {x: Laurent.one()}
        prod = self._group_mul(x, y)
        out: TBasis = {prod: Laurent.one()}
        lengths_add = (x.word[-1] != y.word[0])
        if not lengths_add:
            for u in range(1, min(kx, ky) + 1):
                # the dropped letter at depth u sits in family (fy + u - 1)
                n = fy + u - 1
                L = self.L1 if n % 2 == 1 else self.L2
                xi = Laurent.v_power(L) - Laurent.v_power(-L)
                out[self.el(fx, kx + ky - 2 * u + 1)] = xi
        return out

    def _group_mul(self, x: Element, y: Element) -> Element:
        a = list(x.word)
        b = list(y.word)
        while a and b and a[-1] == b[0]:
            a.pop()
            b.pop(0)
        return Element(tuple(a + b))

    # -- series expansion of the functional dual to c_{s_1} ---------------------

    def d_s1_series(self, trunc_len: int) -> dict[Element, Laurent]:
        if self.m is not None or self.split:
            raise OutOfCoverage("the series needs m = infinity and L2 > L1")
        self.check_weight_order()
        out: dict[Element, Laurent] = {}
        s = 0
        while 2 * s + 1 <= trunc_len:
            g = Laurent.zero()
            for t in range(s + 1):
                g = g + Laurent.monomial((-1) ** t, 2 * t * self.L1)
            g = g * Laurent.v_power(-s * (self.L1 + self.L2))
            entries = [
                (1, 2 * s + 1, Laurent.one()),
                (2, 2 * s + 2, -Laurent.v_power(-self.L2)),
                (1, 2 * s + 2, -Laurent.v_power(-self.L2)),
                (2, 2 * s + 3, Laurent.v_power(-2 * self.L2)),
            ]
            for fam, k, c in entries:
                if k <= trunc_len:
                    out[self.el(fam, k)] = c * g
            s += 1
        return out

    # -- a-function and asymptotic-ring fixtures ---------------------------------

    def a_table(self, max_len: int | None = None) -> dict[Element, int]:
        """Golden a-values; assumes L2 >= L1 (swap roles otherwise)."""
        self.check_weight_order()
        out = {Element(): 0}
        m = self.m
        top = m if m is not None else max_len
        if top is None:
            raise ValueError("an infinite group needs a length bound")
        for k in range(1, top + 1):
            for fam in (1, 2):
                w = self.el(fam, k)
                if m is not None and k == m:
                    out[w] = (m * (self.L1 + self.L2)) // 2
                elif k == 1:
                    out[w] = self.L1 if fam == 1 else self.L2
                elif m is not None and k == m - 1 and fam == 2:
                    out[w] = (m * self.L2 - (m - 2) * self.L1) // 2
                else:
                    out[w] = self.L2
        return out

    def delta_table(self, max_len: int) -> dict[Element, int]:
        """Golden top-degree data of p(1, z) for m = infinity, L2 > L1."""
        if self.m is not None or self.split:
            raise OutOfCoverage("delta closed forms are for m = infinity, L2 > L1")
        out = {Element(): 0}
        for k in range(1, max_len + 1):
            if k % 2 == 0:
                val = (k // 2) * (self.L1 + self.L2)
                out[self.el(1, k)] = val
                out[self.el(2, k)] = val
            else:
                kk = (k - 1) // 2
                out[self.el(2, k)] = -kk * self.L1 + (kk + 1) * self.L2
                out[self.el(1, k)] = (
                    self.L1 if k == 1 else (kk - 1) * self.L1 + kk * self.L2
                )
        return out

    def dset_fixture(self) -> list[Element]:
        if self.m is not None or self.split:
            raise OutOfCoverage("the distinguished set fixture is for m = infinity")
        return sorted(
            [Element(), self.el(2, 1), self.el(1, 1), self.el(1, 3)]
        )

    def gamma_support_fixture(self, max_len: int) -> set[tuple[Element, Element, Element]]:
        """Triples (x, y, d) with d distinguished and gamma nonzero."""
        if self.m is not None or self.split:
            raise OutOfCoverage("the gamma fixture is for m = infinity")
        out = set()
        out.add((Element(), Element(), Element()))
        out.add((self.el(1, 1), self.el(1, 1), self.el(1, 1)))
        k = 0
        while True:
            made = False
            for x, y, d in (
                (self.el(2, 2 * k + 1), self.el(2, 2 * k + 1), self.el(2, 1)),
                (self.el(1, 2 * k + 2), self.el(2, 2 * k + 2), self.el(1, 3)),
                (self.el(2, 2 * k + 2), self.el(1, 2 * k + 2), self.el(2, 1)),
                (self.el(1, 2 * k + 3), self.el(1, 2 * k + 3), self.el(1, 3)),
            ):
                if len(x.word) <= max_len and len(y.word) <= max_len:
                    out.add((x, y, d))
                    made = True
            if not made:
                return out
            k += 1

    def j_product_fixture(self, x: Element, y: Element) -> list[Element]:
        """Asymptotic-ring products for m = infinity, L2 > L1."""
        if self.m is not None or self.split:
            raise OutOfCoverage("the J fixture is for m = infinity, L2 > L1")
        fx, kx = self.name(x)
        fy, ky = self.name(y)
        if kx == 0 and ky == 0:
            return [Element()]
        if (fx, kx) == (1, 1) and (fy, ky) == (1, 1):
            return [self.el(1, 1)]

        def fam_run(fam: int, base: int, k: int, kp: int) -> list[Element]:
            return [self.el(fam, base - 4 * u) for u in range(min(k, kp) + 1)]

        if fx == 2 and kx % 2 == 1 and fy == 2 and ky % 2 == 1 and kx >= 1 and ky >= 1:
            k, kp = (kx - 1) // 2, (ky - 1) // 2
            return fam_run(2, kx + ky - 1, k, kp)
        if fx == 1 and kx % 2 == 1 and fy == 1 and ky % 2 == 1 and kx >= 3 and ky >= 3:
            k, kp = (kx - 3) // 2, (ky - 3) // 2
            return fam_run(1, kx + ky - 3, k, kp)
        if fx == 2 and kx % 2 == 1 and fy == 2 and ky % 2 == 0 and ky >= 2:
            k, kp = (kx - 1) // 2, (ky - 2) // 2
            return fam_run(2, kx + ky - 1, k, kp)
        if fx == 1 and kx % 2 == 1 and kx >= 3 and fy == 1 and ky % 2 == 0 and ky >= 2:
            k, kp = (kx - 3) // 2, (ky - 2) // 2
            return fam_run(1, kx + ky - 3, k, kp)
        if fx == 2 and kx % 2 == 0 and kx >= 2 and fy == 1 and ky % 2 == 1 and ky >= 3:
            k, kp = (kx - 2) // 2, (ky - 3) // 2
            return fam_run(2, kx + ky - 3, k, kp)
        if fx == 2 and kx % 2 == 0 and fy == 1 and ky % 2 == 0 and kx >= 2 and ky >= 2:
            k, kp = (kx - 2) // 2, (ky - 2) // 2
            return fam_run(2, kx + ky - 3, k, kp)
        if fx == 1 and kx % 2 == 0 and fy == 2 and ky % 2 == 1 and kx >= 2:
            k, kp = (kx - 2) // 2, (ky - 1) // 2
            return fam_run(1, kx + ky - 1, k, kp)
        if fx == 1 and kx % 2 == 0 and fy == 2 and ky % 2 == 0 and kx >= 2 and ky >= 2:
            k, kp = (kx - 2) // 2, (ky - 2) // 2
            return fam_run(1, kx + ky - 1, k, kp)
        return []
