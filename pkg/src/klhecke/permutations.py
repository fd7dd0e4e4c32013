"""Periodic-permutation models for affine Weyl groups.

Affine type A on n generators is realized by bijections of Z commuting
with z -> z + n and with zero displacement sum; its length counts
inversion orbits.  Type C on p + 1 generators is the subgroup of the
type-A model (period 2p) commuting with z -> 1 - z; its length splits
as l0 + l' + l'' where l' and l'' count occurrences of the two end
generators in a reduced word.  Kernels of the parity characters of l'
(and of both l', l'') give the type-B and type-D submodels.

A permutation is passed as its window, the tuple (sigma(1), ..., sigma(n)).
"""

from __future__ import annotations

from .coxeter import CoxeterMatrix, CoxeterSystem, Element, affine_a_matrix
from .errors import NonzeroChi, NotPeriodic

Window = tuple[int, ...]


def _apply(window: Window, z: int) -> int:
    n = len(window)
    i = (z - 1) % n + 1
    return window[i - 1] + (z - i)


def _compose(a: Window, b: Window) -> Window:
    return tuple(_apply(a, b[i]) for i in range(len(b)))


def _invert(window: Window) -> Window:
    n = len(window)
    out = [0] * n
    for i in range(1, n + 1):
        v = window[i - 1]
        r = (v - 1) % n + 1
        out[r - 1] = i + (r - v)
    return tuple(out)


def validate_window(n: int, window) -> Window:
    window = tuple(int(x) for x in window)
    if len(window) != n:
        raise NotPeriodic(f"expected a window of {n} images")
    residues = sorted((v - 1) % n for v in window)
    if residues != list(range(n)):
        raise NotPeriodic("images must hit every residue class exactly once")
    chi = sum(window[i - 1] - i for i in range(1, n + 1))
    if chi % n != 0:
        raise NotPeriodic("displacement sum must be divisible by the period")
    if chi != 0:
        raise NonzeroChi(f"displacement sum is {chi}, not 0")
    return window


def gen_window(n: int, m: int) -> Window:
    """The generator swapping the residue classes m and m + 1."""
    out = []
    for i in range(1, n + 1):
        r = i % n
        if r == m % n:
            out.append(i + 1)
        elif r == (m + 1) % n:
            out.append(i - 1)
        else:
            out.append(i)
    return tuple(out)


def affine_length(window: Window) -> int:
    """Number of inversion orbits of a periodic permutation."""
    n = len(window)
    total = 0
    for i in range(1, n + 1):
        si = window[i - 1]
        for j0 in range(1, n + 1):
            sj = window[j0 - 1]
            k_min = (i - j0) // n + 1
            k_max = -((sj - si) // n) - 1
            if k_max >= k_min:
                total += k_max - k_min + 1
    return total


def window_of_element(n: int, w: Element) -> Window:
    sigma = tuple(range(1, n + 1))
    for s in reversed(w.word):
        sigma = _compose(gen_window(n, s), sigma)
    return sigma


def affine_perm_roundtrip(n: int, window) -> tuple[Element, int]:
    """Convert a periodic permutation to a canonical word and its length.

    The length comes from the inversion-orbit formula and is checked
    against the word length.
    """
    sigma = validate_window(n, window)
    length = affine_length(sigma)
    word: list[int] = []
    cur = sigma
    while True:
        inv = _invert(cur)
        descents = [s for s in range(n) if _apply(inv, s) > _apply(inv, s + 1)]
        if not descents:
            break
        s = min(descents)
        word.append(s)
        cur = _compose(gen_window(n, s), cur)
    if len(word) != length:
        raise AssertionError("inversion-orbit length disagrees with word length")
    return Element(tuple(word)), length


def affine_a_system(n: int, engine: str = "affine") -> CoxeterSystem:
    return CoxeterSystem(affine_a_matrix(n), [1] * n, engine=engine)


# ---------------------------------------------------------------------------
# type C model (period 2p, commuting with z -> 1 - z)


def ctilde_matrix(p: int) -> CoxeterMatrix:
    """Coxeter matrix of affine type C with generators 0..p."""
    if p < 2:
        raise ValueError("affine type C needs p >= 2")
    k = p + 1
    rows = [[1] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            if abs(i - j) != 1:
                rows[i][j] = 2
            elif {i, j} in ({0, 1}, {p - 1, p}):
                rows[i][j] = 4
            else:
                rows[i][j] = 3
    return CoxeterMatrix(rows)


class CTildeModel:
    """Permutation model for affine type C inside the period-2p model."""

    def __init__(self, p: int):
        if p < 2:
            raise ValueError("p >= 2 required")
        self.p = p
        self.n = 2 * p
        gens = [gen_window(self.n, 0)]
        for j in range(1, p):
            gens.append(
                _compose(gen_window(self.n, j), gen_window(self.n, -j % self.n))
            )
        gens.append(gen_window(self.n, p))
        self.gens = gens

    def is_member(self, window: Window) -> bool:
        n = self.n
        return all(
            _apply(window, 1 - z) == 1 - _apply(window, z) for z in range(1, n + 1)
        )

    def _f(self, i: int, si: int) -> int:
        # number of multiples of p in [i, si)
        p = self.p
        return (si - 1) // p - (i - 1) // p

    def _in_zprime(self, z: int) -> bool:
        return (z - 1) % (2 * self.p) < self.p

    def length_parts(self, window: Window) -> tuple[int, int, int]:
        """(l0, l', l''): the weight decomposition of the type-C length."""
        p = self.p
        l_tilde = affine_length(window)
        lp = 0
        lpp = 0
        l1 = 0
        for i in range(1 - p, p + 1):
            si = _apply(window, i)
            if i >= si:
                continue
            f = self._f(i, si)
            l1 += f
            low = i <= 0  # i in [1-p, 0]
            to_prime = self._in_zprime(si)
            if low and not to_prime:
                lp += f // 2
                lpp += f // 2
            elif not low and to_prime:
                lp += f // 2
                lpp += f // 2
            elif low and to_prime:
                lp += (f + 1) // 2
                lpp += (f - 1) // 2
            else:
                lp += (f - 1) // 2
                lpp += (f + 1) // 2
        l0 = (l_tilde - l1) // 2
        return l0, lp, lpp

    def length(self, window: Window) -> int:
        l0, lp, lpp = self.length_parts(window)
        return l0 + lp + lpp

    def chi_prime(self, window: Window) -> int:
        return -1 if self.length_parts(window)[1] % 2 else 1

    def chi_double_prime(self, window: Window) -> int:
        return -1 if self.length_parts(window)[2] % 2 else 1

    def roundtrip(self, window) -> tuple[Element, int]:
        """Convert a model permutation to a canonical type-C word."""
        sigma = validate_window(self.n, window)
        if not self.is_member(sigma):
            raise NotPeriodic("permutation does not commute with z -> 1 - z")
        length = self.length(sigma)
        word: list[int] = []
        cur = sigma
        cur_len = length
        while cur_len:
            for s, g in enumerate(self.gens):
                nxt = _compose(g, cur)
                nl = self.length(nxt)
                if nl < cur_len:
                    word.append(s)
                    cur, cur_len = nxt, nl
                    break
            else:
                raise AssertionError("no descent found on a nonidentity element")
        if len(word) != length:
            raise AssertionError("length formula disagrees with word length")
        return Element(tuple(word)), length

    def window_of_word(self, word) -> Window:
        sigma = tuple(range(1, self.n + 1))
        for s in reversed(tuple(word)):
            sigma = _compose(self.gens[s], sigma)
        return sigma

    def btilde_generators(self) -> list[Window]:
        """Generators of the kernel of chi' (type B submodel, p >= 3)."""
        g = self.gens
        first = _compose(g[0], _compose(g[1], g[0]))
        return [first] + g[1:]

    def dtilde_generators(self) -> list[Window]:
        """Generators of ker chi' and chi'' (type D submodel, p >= 4)."""
        g = self.gens
        first = _compose(g[0], _compose(g[1], g[0]))
        last = _compose(g[self.p], _compose(g[self.p - 1], g[self.p]))
        return [first] + g[1 : self.p] + [last]
