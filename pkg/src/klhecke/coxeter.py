"""Weighted Coxeter systems with exact word arithmetic.

Group elements are kept in canonical form: the ShortLex-least reduced
word under the fixed generator indexing.  The generic engine solves the
word problem through the braid-move closure of a reduced word, which is
exact for every Coxeter matrix (including bonds of order 5 or infinity).
Rank-two systems get a closed-form engine, and affine type A gets a
periodic-permutation engine; all engines produce identical observables.

Plain-text system config: first line the rank n, then n matrix rows
(``inf`` allowed), then n weights.  Elements serialize as dot-joined
1-based generator indices, e.g. ``1.2.1``; the empty string is the
identity.
"""

from __future__ import annotations

import hashlib
import math
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import (
    InfiniteParabolic,
    NonPositiveWeight,
    NotPeriodic,
    NonzeroChi,
    OddBondWeightMismatch,
    OrbitNotFinite,
)

Word = tuple[int, ...]


def _alt(s: int, t: int, length: int) -> Word:
    """Alternating word s t s t ... of the given length."""
    return tuple(s if i % 2 == 0 else t for i in range(length))


class CoxeterMatrix:
    """Symmetric Coxeter matrix; infinite bonds are stored as None."""

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        mat: list[list[int | None]] = []
        for row in rows:
            if len(row) != n:
                raise ValueError("Coxeter matrix must be square")
            parsed: list[int | None] = []
            for x in row:
                if x in (None, "inf", "Inf", "INF") or x == math.inf:
                    parsed.append(None)
                else:
                    parsed.append(int(x))
            mat.append(parsed)
        for i in range(n):
            if mat[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(i + 1, n):
                if mat[i][j] != mat[j][i]:
                    raise ValueError("matrix must be symmetric")
                if mat[i][j] is not None and mat[i][j] < 2:
                    raise ValueError("off-diagonal entries must be >= 2 or inf")
        self.n = n
        self._rows = mat

    def m(self, i: int, j: int) -> int | None:
        return self._rows[i][j]

    def rows(self) -> list[list[int | None]]:
        return [list(r) for r in self._rows]

    def submatrix(self, gens: Sequence[int]) -> "CoxeterMatrix":
        return CoxeterMatrix([[self._rows[i][j] for j in gens] for i in gens])

    def __eq__(self, other) -> bool:
        return isinstance(other, CoxeterMatrix) and self._rows == other._rows

    def __repr__(self) -> str:
        return f"CoxeterMatrix({self._rows!r})"


class WeightFunction:
    """Weights L(s) per generator; validated against the matrix."""

    def __init__(self, values: Sequence[int], matrix: CoxeterMatrix | None = None):
        vals = tuple(int(v) for v in values)
        for v in vals:
            if v < 0:
                raise NonPositiveWeight(f"negative weight {v} is not supported")
        if matrix is not None:
            if len(vals) != matrix.n:
                raise ValueError("one weight per generator is required")
            for i in range(matrix.n):
                for j in range(i + 1, matrix.n):
                    m = matrix.m(i, j)
                    if m is not None and m % 2 == 1 and vals[i] != vals[j]:
                        raise OddBondWeightMismatch(
                            f"generators {i + 1},{j + 1} joined by odd bond "
                            f"m={m} must carry equal weights"
                        )
        self.values = vals

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightFunction) and self.values == other.values


@total_ordering
class Element:
    """A group element as its ShortLex-minimal reduced word (0-based)."""

    __slots__ = ("word",)

    def __init__(self, word: Word = ()):
        self.word = tuple(word)

    def key(self) -> tuple[int, Word]:
        return (len(self.word), self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self.word == other.word

    def __lt__(self, other) -> bool:
        return self.key() < other.key()

    def __hash__(self) -> int:
        return hash(self.word)

    def __str__(self) -> str:
        return ".".join(str(i + 1) for i in self.word)

    @staticmethod
    def parse(text: str) -> "Element":
        text = text.strip()
        if not text:
            return Element()
        return Element(tuple(int(tok) - 1 for tok in text.split(".")))

    def __repr__(self) -> str:
        return f"Element({str(self)!r})"


IDENTITY = Element()


# ---------------------------------------------------------------------------
# word-problem engines


class _TitsEngine:
    """Generic engine: braid-move closure of reduced words."""

    name = "generic-tits"

    def __init__(self, matrix: CoxeterMatrix):
        self.matrix = matrix
        self._cl: dict[Word, frozenset] = {}
        self._memo: dict[tuple[Word, int, bool], tuple[Word, int]] = {}

    def closure(self, word: Word) -> frozenset:
        got = self._cl.get(word)
        if got is not None:
            return got
        m = self.matrix.m
        seen = {word}
        frontier = [word]
        L = len(word)
        while frontier:
            nxt = []
            for u in frontier:
                for i in range(L - 1):
                    s, t = u[i], u[i + 1]
                    mm = m(s, t)
                    if mm is None or i + mm > L:
                        continue
                    if u[i : i + mm] == _alt(s, t, mm):
                        nb = u[:i] + _alt(t, s, mm) + u[i + mm :]
                        if nb not in seen:
                            seen.add(nb)
                            nxt.append(nb)
            frontier = nxt
        cl = frozenset(seen)
        for u in cl:
            self._cl[u] = cl
        return cl

    def mul_gen(self, word: Word, s: int, left: bool) -> tuple[Word, int]:
        key = (word, s, left)
        got = self._memo.get(key)
        if got is not None:
            return got
        cl = self.closure(word)
        if left:
            match = next((u for u in cl if u and u[0] == s), None)
            if match is not None:
                res = (min(self.closure(match[1:])), -1)
            else:
                res = (min(self.closure((s,) + word)), +1)
        else:
            match = next((u for u in cl if u and u[-1] == s), None)
            if match is not None:
                res = (min(self.closure(match[:-1])), -1)
            else:
                res = (min(self.closure(word + (s,))), +1)
        self._memo[key] = res
        return res

    def descents(self, word: Word, left: bool) -> frozenset:
        cl = self.closure(word)
        if left:
            return frozenset(u[0] for u in cl if u)
        return frozenset(u[-1] for u in cl if u)


class _DihedralEngine:
    """Closed-form engine for rank-two systems."""

    name = "dihedral"

    def __init__(self, matrix: CoxeterMatrix):
        if matrix.n != 2:
            raise ValueError("dihedral engine requires rank 2")
        self.matrix = matrix
        self.m = matrix.m(0, 1)

    def _word(self, start: int, k: int) -> Word:
        if k == 0:
            return ()
        if self.m is not None and k == self.m:
            start = 0  # the longest element canonically starts with generator 1
        return _alt(start, 1 - start, k)

    def mul_gen(self, word: Word, s: int, left: bool) -> tuple[Word, int]:
        k = len(word)
        if k == 0:
            return ((s,), +1)
        m = self.m
        at_top = m is not None and k == m
        if left:
            heads = {0, 1} if at_top else {word[0]}
            if s in heads:
                # strip the head from the reduced word that starts with s
                return (self._word(1 - s, k - 1), -1)
            return (self._word(s, k + 1), +1)
        tails = {0, 1} if at_top else {word[-1]}
        if s in tails:
            if at_top:
                # the reduced word of w ending with s starts with s iff m is odd
                start = s if m % 2 == 1 else 1 - s
            else:
                start = word[0]
            return (self._word(start, k - 1), -1)
        return (self._word(word[0], k + 1), +1)

    def descents(self, word: Word, left: bool) -> frozenset:
        k = len(word)
        if k == 0:
            return frozenset()
        if self.m is not None and k == self.m:
            return frozenset((0, 1))
        return frozenset((word[0],)) if left else frozenset((word[-1],))


class _AffineAEngine:
    """Periodic-permutation engine for affine type A."""

    name = "affine-permutation"

    def __init__(self, matrix: CoxeterMatrix):
        n = matrix.n
        if n < 2 or not _is_affine_a_matrix(matrix):
            raise ValueError("affine engine requires an affine type A matrix")
        self.n = n
        self._perm_of: dict[Word, tuple[int, ...]] = {(): tuple(range(1, n + 1))}
        self._word_of: dict[tuple[int, ...], Word] = {tuple(range(1, n + 1)): ()}
        self._memo: dict[tuple[Word, int, bool], tuple[Word, int]] = {}

    # window representation: sigma = (sigma(1), ..., sigma(n))

    def gen_perm(self, s: int) -> tuple[int, ...]:
        # generator s corresponds to the residue class m = s
        n = self.n
        out = []
        for i in range(1, n + 1):
            r = i % n
            if r == s % n:
                out.append(i + 1)
            elif r == (s + 1) % n:
                out.append(i - 1)
            else:
                out.append(i)
        return tuple(out)

    def apply(self, sigma: tuple[int, ...], z: int) -> int:
        n = self.n
        i = (z - 1) % n + 1
        return sigma[i - 1] + (z - i)

    def compose(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(self.apply(a, b[i]) for i in range(self.n))

    def invert(self, sigma: tuple[int, ...]) -> tuple[int, ...]:
        n = self.n
        out = [0] * n
        for i in range(1, n + 1):
            v = sigma[i - 1]
            r = (v - 1) % n + 1
            out[r - 1] = i + (r - v)
        return tuple(out)

    def length(self, sigma: tuple[int, ...]) -> int:
        # count inversion orbits: pairs (i, j), i in [1,n], j > i, sigma(i) > sigma(j)
        n = self.n
        total = 0
        for i in range(1, n + 1):
            si = sigma[i - 1]
            for j0 in range(1, n + 1):
                sj = sigma[j0 - 1]
                # j = j0 + k n > i  and  sigma(j) = sj + k n < si
                k_min = (i - j0) // n + 1
                k_max = -((sj - si) // n) - 1
                if k_max >= k_min:
                    total += k_max - k_min + 1
        return total

    def left_descents(self, sigma: tuple[int, ...]) -> list[int]:
        # s is a left descent iff sigma^{-1}(s) > sigma^{-1}(s + 1); the
        # comparison is shift-invariant, so plain representatives work
        inv = self.invert(sigma)
        return [
            s
            for s in range(self.n)
            if self.apply(inv, s) > self.apply(inv, s + 1)
        ]

    def canonical_word(self, sigma: tuple[int, ...]) -> Word:
        got = self._word_of.get(sigma)
        if got is not None:
            return got
        # greedy minimal left descent yields the ShortLex-least reduced word
        chain = []
        cur = sigma
        while cur not in self._word_of:
            s = min(self.left_descents(cur))
            chain.append((cur, s))
            cur = self.compose(self.gen_perm(s), cur)
        w = self._word_of[cur]
        for perm, s in reversed(chain):
            w = (s,) + w
            self._word_of[perm] = w
            self._perm_of[w] = perm
        return w

    def perm_of_word(self, word: Word) -> tuple[int, ...]:
        got = self._perm_of.get(word)
        if got is not None:
            return got
        sigma = tuple(range(1, self.n + 1))
        for s in reversed(word):
            sigma = self.compose(self.gen_perm(s), sigma)
        self._perm_of[word] = sigma
        return sigma

    def mul_gen(self, word: Word, s: int, left: bool) -> tuple[Word, int]:
        key = (word, s, left)
        got = self._memo.get(key)
        if got is not None:
            return got
        sigma = self.perm_of_word(word)
        g = self.gen_perm(s)
        sigma2 = self.compose(g, sigma) if left else self.compose(sigma, g)
        delta = self.length(sigma2) - len(word)
        res = (self.canonical_word(sigma2), delta)
        self._memo[key] = res
        return res

    def descents(self, word: Word, left: bool) -> frozenset:
        sigma = self.perm_of_word(word)
        if not left:
            sigma = self.invert(sigma)
        return frozenset(self.left_descents(sigma))


def _is_affine_a_matrix(matrix: CoxeterMatrix) -> bool:
    n = matrix.n
    if n == 2:
        return matrix.m(0, 1) is None
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = (j - i) % n in (1, n - 1)
            want = 3 if adjacent else 2
            if matrix.m(i, j) != want:
                return False
    return True


# ---------------------------------------------------------------------------


class CoxeterSystem:
    """A Coxeter matrix, a weight function, and a word-problem engine."""

    def __init__(
        self,
        matrix: CoxeterMatrix,
        weights: WeightFunction | Sequence[int],
        engine: str = "auto",
        name: str | None = None,
    ):
        if not isinstance(matrix, CoxeterMatrix):
            matrix = CoxeterMatrix(matrix)
        if not isinstance(weights, WeightFunction):
            weights = WeightFunction(weights, matrix)
        else:
            WeightFunction(weights.values, matrix)  # revalidate against matrix
        self.matrix = matrix
        self.weights = weights
        self.n = matrix.n
        self.name = name
        if engine == "auto":
            engine = "dihedral" if matrix.n == 2 else "tits"
        if engine in ("tits", "generic", "generic-tits"):
            self.engine = _TitsEngine(matrix)
        elif engine == "dihedral":
            self.engine = _DihedralEngine(matrix)
        elif engine in ("affine", "affine-permutation"):
            self.engine = _AffineAEngine(matrix)
        else:
            raise ValueError(f"unknown engine {engine!r}")
        self._bruhat: dict[tuple[Word, Word], bool] = {}
        self._inverse: dict[Word, Word] = {}
        self._ball: list[Element] = [IDENTITY]
        self._ball_len = 0
        self._finite_cache: dict[tuple[int, ...], bool] = {}

    # -- basics --------------------------------------------------------

    @property
    def identity(self) -> Element:
        return IDENTITY

    def gens(self) -> list[Element]:
        return [Element((i,)) for i in range(self.n)]

    def weight_of_gen(self, s: int) -> int:
        return self.weights[s]

    def require_positive_weights(self) -> None:
        if any(w <= 0 for w in self.weights):
            raise NonPositiveWeight("this operation requires L(s) > 0 on all generators")

    def mul_gen(self, w: Element, s: int, side: str = "left") -> tuple[Element, int]:
        word, delta = self.engine.mul_gen(w.word, s, side == "left")
        return Element(word), delta

    def mul(self, a: Element, b: Element) -> Element:
        if len(a.word) < len(b.word):
            cur = b
            for s in reversed(a.word):
                cur = Element(self.engine.mul_gen(cur.word, s, True)[0])
            return cur
        cur = a
        for s in b.word:
            cur = Element(self.engine.mul_gen(cur.word, s, False)[0])
        return cur

    def element(self, word: Iterable[int]) -> Element:
        """Normalize an arbitrary (possibly non-reduced) word."""
        cur = IDENTITY
        for s in word:
            if not 0 <= s < self.n:
                raise ValueError(f"generator index {s} out of range")
            cur = Element(self.engine.mul_gen(cur.word, s, False)[0])
        return cur

    def parse(self, text: str) -> Element:
        return self.element(Element.parse(text).word)

    def inverse(self, w: Element) -> Element:
        got = self._inverse.get(w.word)
        if got is not None:
            return Element(got)
        inv = self.element(reversed(w.word))
        self._inverse[w.word] = inv.word
        self._inverse[inv.word] = w.word
        return inv

    def length(self, w: Element) -> int:
        return len(w.word)

    def weight(self, w: Element) -> int:
        return sum(self.weights[s] for s in w.word)

    def sign(self, w: Element) -> int:
        return -1 if len(w.word) % 2 else 1

    def descents(self, w: Element, side: str = "left") -> frozenset:
        return self.engine.descents(w.word, side == "left")

    # -- Bruhat order ----------------------------------------------------

    def bruhat_leq(self, y: Element, w: Element) -> bool:
        if len(y.word) > len(w.word):
            return False
        if y.word == w.word:
            return True
        key = (y.word, w.word)
        got = self._bruhat.get(key)
        if got is not None:
            return got
        if not w.word:
            res = not y.word
        else:
            # the tail of a ShortLex-least reduced word is itself least
            s = w.word[0]
            sw = Element(w.word[1:])
            sy, d = self.mul_gen(y, s, "left")
            if d < 0:
                res = self.bruhat_leq(sy, sw)
            else:
                res = self.bruhat_leq(y, sw)
        self._bruhat[key] = res
        return res

    def ball(self, max_length: int) -> list[Element]:
        """All elements of length <= max_length, ShortLex sorted."""
        while self._ball_len < max_length:
            frontier = [w for w in self._ball if len(w.word) == self._ball_len]
            new = set()
            for w in frontier:
                for s in range(self.n):
                    nxt, d = self.mul_gen(w, s, "right")
                    if d > 0:
                        new.add(nxt)
            if not new:
                self._ball_len = max_length
                break
            self._ball.extend(sorted(new))
            self._ball_len += 1
        return [w for w in self._ball if len(w.word) <= max_length]

    def elements(self) -> list[Element]:
        """The full group; requires the system to be finite."""
        if not self.is_finite():
            raise InfiniteParabolic("the group is infinite; enumerate a ball instead")
        n = 0
        while True:
            ball = self.ball(n)
            if all(len(w.word) < n for w in ball):
                return ball
            n += 4

    def bruhat_interval(self, y: Element, w: Element) -> list[Element]:
        return [
            z
            for z in self.ball(len(w.word))
            if self.bruhat_leq(y, z) and self.bruhat_leq(z, w)
        ]

    def lower(self, w: Element) -> list[Element]:
        """All z <= w in Bruhat order."""
        return [z for z in self.ball(len(w.word)) if self.bruhat_leq(z, w)]

    # -- parabolic machinery ----------------------------------------------

    def is_finite(self, gens: Sequence[int] | None = None) -> bool:
        idx = tuple(sorted(range(self.n) if gens is None else gens))
        got = self._finite_cache.get(idx)
        if got is not None:
            return got
        res = all(
            _component_is_finite(self.matrix, comp)
            for comp in _components(self.matrix, idx)
        )
        self._finite_cache[idx] = res
        return res

    def longest_element(self, gens: Sequence[int] | None = None) -> Element:
        idx = sorted(range(self.n) if gens is None else gens)
        if not self.is_finite(idx):
            raise InfiniteParabolic(
                "parabolic subgroup on generators "
                f"{[i + 1 for i in idx]} is infinite"
            )
        cur = IDENTITY
        while True:
            for s in idx:
                nxt, d = self.mul_gen(cur, s, "left")
                if d > 0:
                    cur = nxt
                    break
            else:
                return cur

    def min_coset_rep(self, gens: Sequence[int], w: Element, side: str = "left") -> Element:
        """Minimal-length representative of W_I w (left) or w W_I (right)."""
        idx = set(gens)
        cur = w
        while True:
            ds = self.descents(cur, side) & idx
            if not ds:
                return cur
            cur = self.mul_gen(cur, min(ds), side)[0]

    def sub_system(self, gens: Sequence[int], engine: str = "auto") -> "CoxeterSystem":
        """Standalone system for the parabolic on the given generators.

        Generator i of the subsystem corresponds to gens[i] here.
        """
        gens = list(gens)
        return CoxeterSystem(
            self.matrix.submatrix(gens),
            [self.weights[i] for i in gens],
            engine=engine,
        )

    def embed_word_from(self, gens: Sequence[int], w: Element) -> Element:
        """Interpret an element of the sub_system(gens) inside this system."""
        gens = list(gens)
        return self.element(gens[i] for i in w.word)

    # -- serialization -----------------------------------------------------

    def config_text(self) -> str:
        lines = [str(self.n)]
        for row in self.matrix.rows():
            lines.append(" ".join("inf" if x is None else str(x) for x in row))
        lines.append(" ".join(str(w) for w in self.weights))
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_config_text(text: str, engine: str = "auto") -> "CoxeterSystem":
        tokens = text.split()
        if not tokens:
            raise ValueError("empty system config")
        n = int(tokens[0])
        need = 1 + n * n + n
        if len(tokens) < need:
            raise ValueError("system config is truncated")
        rows = []
        pos = 1
        for _ in range(n):
            rows.append(tokens[pos : pos + n])
            pos += n
        weights = [int(t) for t in tokens[pos : pos + n]]
        return CoxeterSystem(CoxeterMatrix(rows), weights, engine=engine)

    def system_hash(self) -> str:
        return hashlib.sha256(self.config_text().encode()).hexdigest()[:16]

    def describe(self) -> str:
        if self.name:
            return self.name
        return self.config_text().replace("\n", "; ").strip("; ")

    def __repr__(self) -> str:
        return f"CoxeterSystem({self.describe()!r}, engine={self.engine.name!r})"


def _components(matrix: CoxeterMatrix, idx: tuple[int, ...]) -> list[list[int]]:
    remaining = set(idx)
    comps = []
    while remaining:
        start = min(remaining)
        comp = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for j in list(remaining - comp):
                m = matrix.m(i, j)
                if m is None or m > 2:
                    comp.add(j)
                    frontier.append(j)
        comps.append(sorted(comp))
        remaining -= comp
    return comps


def _component_is_finite(matrix: CoxeterMatrix, comp: list[int]) -> bool:
    """Positive-definiteness of the cosine form on the component."""
    k = len(comp)
    gram = [[0.0] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            if a == b:
                gram[a][b] = 1.0
            else:
                m = matrix.m(comp[a], comp[b])
                if m is None:
                    return False
                gram[a][b] = -math.cos(math.pi / m)
    # leading principal minors via Gaussian elimination
    g = [row[:] for row in gram]
    for i in range(k):
        pivot = g[i][i]
        if pivot < 1e-9:
            return False
        for r in range(i + 1, k):
            f = g[r][i] / pivot
            for c in range(i, k):
                g[r][c] -= f * g[i][c]
    return True


# ---------------------------------------------------------------------------
# folding by a diagram automorphism


class Fold:
    """Result of folding a split system by a diagram automorphism."""

    def __init__(self, big: CoxeterSystem, folded: CoxeterSystem, orbits: list[list[int]]):
        self.big = big
        self.folded = folded
        self.orbits = orbits
        self._orbit_longest = [big.longest_element(o) for o in orbits]

    def embed(self, w: Element) -> Element:
        """The injective homomorphism from the folded group into the big one."""
        cur = self.big.identity
        for i in w.word:
            cur = self.big.mul(cur, self._orbit_longest[i])
        return cur

    def validate(self, max_length: int = 6) -> None:
        """Check that big-group length is additive along folded reduced words."""
        for w in self.folded.ball(max_length):
            expect = sum(self.folded.weights[i] for i in w.word)
            got = self.big.length(self.embed(w))
            if got != expect:
                raise AssertionError(
                    f"length additivity fails at {w}: {got} != {expect}"
                )


def fold(system: CoxeterSystem, images: Sequence[int]) -> Fold:
    """Fold a split system by the automorphism sending generator i to images[i].

    The folded generators are the longest elements of the automorphism
    orbits; the folded weight of an orbit generator is its length in the
    big group.
    """
    n = system.n
    if sorted(images) != list(range(n)):
        raise ValueError("images must be a permutation of the generators")
    if any(w != 1 for w in system.weights):
        raise ValueError("folding requires a split system (all weights 1)")
    for i in range(n):
        for j in range(n):
            if system.matrix.m(i, j) != system.matrix.m(images[i], images[j]):
                raise ValueError("the permutation does not preserve the matrix")
    # orbits, sorted by least member
    seen = set()
    orbits = []
    for i in range(n):
        if i in seen:
            continue
        orbit = [i]
        seen.add(i)
        j = images[i]
        while j != i:
            orbit.append(j)
            seen.add(j)
            j = images[j]
        orbits.append(sorted(orbit))
    orbits.sort(key=min)
    for orbit in orbits:
        if not system.is_finite(orbit):
            raise OrbitNotFinite(
                f"orbit {[i + 1 for i in orbit]} generates an infinite parabolic"
            )
    taus = [system.longest_element(o) for o in orbits]
    k = len(orbits)
    rows: list[list[int | None]] = [[1] * k for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            rows[a][b] = rows[b][a] = _product_order(system, taus[a], taus[b], orbits[a] + orbits[b])
    weights = [system.length(t) for t in taus]
    folded = CoxeterSystem(CoxeterMatrix(rows), weights)
    return Fold(system, folded, orbits)


def _product_order(
    system: CoxeterSystem, a: Element, b: Element, support: list[int]
) -> int | None:
    ab = system.mul(a, b)
    cur = ab
    order = 1
    cap = 64
    while cur != system.identity:
        cur = system.mul(cur, ab)
        order += 1
        if order > cap:
            if system.is_finite(support):
                cap = 10**6  # finite parabolic: the loop must terminate
            else:
                return None
    return order


# ---------------------------------------------------------------------------
# named presets


def affine_a_matrix(n: int) -> CoxeterMatrix:
    """Coxeter matrix of affine type A with n generators (n >= 2)."""
    if n < 2:
        raise ValueError("affine type A needs at least 2 generators")
    if n == 2:
        return CoxeterMatrix([[1, None], [None, 1]])
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(1)
            elif (i - j) % n in (1, n - 1):
                row.append(3)
            else:
                row.append(2)
        rows.append(row)
    return CoxeterMatrix(rows)


def preset(text: str, engine: str = "auto") -> CoxeterSystem:
    """Build a named system: a3, b2:L1,L2, g2:L1,L2, i2m:m,L1,L2,
    i2inf:L1,L2, affA:n."""
    name, _, args = text.partition(":")
    name = name.strip().lower()
    vals = [int(a) for a in args.split(",")] if args else []
    if name == "a3":
        sys_ = CoxeterSystem(
            CoxeterMatrix([[1, 3, 2], [3, 1, 3], [2, 3, 1]]), [1, 1, 1], engine
        )
    elif name == "b2":
        l1, l2 = vals or [1, 1]
        sys_ = CoxeterSystem(CoxeterMatrix([[1, 4], [4, 1]]), [l1, l2], engine)
    elif name == "g2":
        l1, l2 = vals or [1, 1]
        sys_ = CoxeterSystem(CoxeterMatrix([[1, 6], [6, 1]]), [l1, l2], engine)
    elif name == "i2m":
        m, l1, l2 = vals
        sys_ = CoxeterSystem(CoxeterMatrix([[1, m], [m, 1]]), [l1, l2], engine)
    elif name == "i2inf":
        l1, l2 = vals or [1, 1]
        sys_ = CoxeterSystem(CoxeterMatrix([[1, None], [None, 1]]), [l1, l2], engine)
    elif name == "affa":
        (n,) = vals
        sys_ = CoxeterSystem(affine_a_matrix(n), [1] * n, engine)
    else:
        raise ValueError(f"unknown preset {text!r}")
    sys_.name = text
    return sys_
