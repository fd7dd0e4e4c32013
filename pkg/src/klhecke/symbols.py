"""Multiset and symbol combinatorics for the classical-type a-function.

A multiset datum depends on integers a > 0, b >= 0 written b = a r + b'
with 0 <= b' < a, and a stabilization depth N; it has 2N + r entries.
Symbols split the entries into an increasing top row (congruent to b'
mod a) and bottom row (divisible by a) and biject with bipartitions.
The pairwise-min statistic of a symbol computes the a-invariant; the
single/double split drives the families of constructible characters
through admissible involutions of the singles.

Symbol text form: comma-separated rows joined by ``/``, e.g.
``0,2,5/1,3``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ParityMismatch, RankMismatch, TTooSmall
from .rings import Laurent

Partition = tuple[int, ...]


def normalize_partition(p) -> Partition:
    out = tuple(int(x) for x in p if int(x) != 0)
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)) or any(
        x < 0 for x in out
    ):
        raise ValueError(f"not a partition: {p}")
    return out


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    out = [0] * p[0]
    for part in p:
        for i in range(part):
            out[i] += 1
    return tuple(out)


def partitions(n: int) -> list[Partition]:
    if n == 0:
        return [()]
    out = []

    def rec(rest: int, biggest: int, acc: list[int]):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rest, biggest), 0, -1):
            acc.append(part)
            rec(rest - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def bipartitions(n: int) -> list[tuple[Partition, Partition]]:
    out = []
    for k in range(n + 1):
        for alpha in partitions(k):
            for beta in partitions(n - k):
                out.append((alpha, beta))
    return out


def _split_b(a: int, b: int) -> tuple[int, int]:
    if a <= 0 or b < 0:
        raise ValueError("need a > 0 and b >= 0")
    return b // a, b % a


def _base_sum(a: int, b: int, N: int) -> int:
    r, bp = _split_b(a, b)
    return a * N * N + N * (b - a) + a * (r * (r - 1) // 2) + bp * r


@dataclass(frozen=True)
class Multiset:
    """A sorted multiset datum of 2N + r nonnegative integers."""

    a: int
    b: int
    N: int
    entries: tuple[int, ...]

    def __post_init__(self):
        r, bp = _split_b(self.a, self.b)
        entries = tuple(sorted(self.entries))
        object.__setattr__(self, "entries", entries)
        if len(entries) != 2 * self.N + r:
            raise RankMismatch(f"expected {2 * self.N + r} entries")
        if any(e < 0 for e in entries):
            raise RankMismatch("entries must be nonnegative")
        if bp == 0:
            counts: dict[int, int] = {}
            for e in entries:
                counts[e] = counts.get(e, 0) + 1
                if e % self.a:
                    raise RankMismatch("entries must be divisible by a")
            if any(c > 2 for c in counts.values()):
                raise RankMismatch("no entry may repeat more than twice")
            if len(counts) < self.N + r:
                raise RankMismatch(f"need at least {self.N + r} distinct entries")
        else:
            if len(set(entries)) != len(entries):
                raise RankMismatch("entries must be strictly increasing")
            zero_class = sum(1 for e in entries if e % self.a == 0)
            bp_class = sum(1 for e in entries if e % self.a == bp)
            if zero_class != self.N or bp_class != self.N + r:
                raise RankMismatch(
                    "residue classes must split as N zeros and N+r offsets"
                )

    @property
    def r(self) -> int:
        return _split_b(self.a, self.b)[0]

    @property
    def b_prime(self) -> int:
        return _split_b(self.a, self.b)[1]

    def rank(self) -> int:
        total = sum(self.entries) - _base_sum(self.a, self.b, self.N)
        if total < 0 or total % self.a:
            raise RankMismatch("entry sum does not fit the rank formula")
        return total // self.a

    def shift(self) -> "Multiset":
        """The rank-preserving embedding at depth N + 1."""
        bp = self.b_prime
        return Multiset(
            self.a,
            self.b,
            self.N + 1,
            tuple(sorted((0, bp) + tuple(e + self.a for e in self.entries))),
        )

    def singles(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for e in self.entries:
            counts[e] = counts.get(e, 0) + 1
        return tuple(sorted(e for e, c in counts.items() if c == 1))

    def doubles(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for e in self.entries:
            counts[e] = counts.get(e, 0) + 1
        return tuple(sorted(e for e, c in counts.items() if c == 2))


@dataclass(frozen=True)
class Symbol:
    """Two increasing rows: top congruent to b' mod a, bottom to 0."""

    a: int
    b: int
    N: int
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        r, bp = _split_b(self.a, self.b)
        top = tuple(self.top)
        bottom = tuple(self.bottom)
        if len(top) != self.N + r or len(bottom) != self.N:
            raise RankMismatch("row lengths must be N+r and N")
        if any(x < 0 for x in top + bottom):
            raise RankMismatch("entries must be nonnegative")
        if any(top[i] >= top[i + 1] for i in range(len(top) - 1)):
            raise RankMismatch("top row must increase strictly")
        if any(bottom[i] >= bottom[i + 1] for i in range(len(bottom) - 1)):
            raise RankMismatch("bottom row must increase strictly")
        if any(x % self.a != bp for x in top) or any(x % self.a for x in bottom):
            raise RankMismatch("row congruences violated")

    @property
    def r(self) -> int:
        return _split_b(self.a, self.b)[0]

    @property
    def b_prime(self) -> int:
        return _split_b(self.a, self.b)[1]

    def rank(self) -> int:
        total = sum(self.top) + sum(self.bottom) - _base_sum(self.a, self.b, self.N)
        if total < 0 or total % self.a:
            raise RankMismatch("entry sum does not fit the rank formula")
        return total // self.a

    def multiset(self) -> Multiset:
        return Multiset(self.a, self.b, self.N, tuple(sorted(self.top + self.bottom)))

    def shift(self) -> "Symbol":
        bp = self.b_prime
        return Symbol(
            self.a,
            self.b,
            self.N + 1,
            (bp,) + tuple(x + self.a for x in self.top),
            (0,) + tuple(x + self.a for x in self.bottom),
        )

    def to_text(self) -> str:
        return ",".join(map(str, self.top)) + "/" + ",".join(map(str, self.bottom))

    @staticmethod
    def from_text(a: int, b: int, text: str) -> "Symbol":
        top_s, _, bot_s = text.partition("/")
        top = tuple(int(x) for x in top_s.split(",") if x != "")
        bottom = tuple(int(x) for x in bot_s.split(",") if x != "")
        r, _ = _split_b(a, b)
        N = len(bottom)
        if len(top) != N + r:
            raise RankMismatch("row lengths do not fit b = ar + b'")
        return Symbol(a, b, N, top, bottom)


# ---------------------------------------------------------------------------
# bipartition coding


def bipartition_to_symbol(
    alpha, beta, a: int, b: int, N: int | None = None
) -> Symbol:
    alpha = normalize_partition(alpha)
    beta = normalize_partition(beta)
    r, bp = _split_b(a, b)
    if N is None:
        N = max(len(alpha) - r, len(beta), 0)
    if len(alpha) > N + r or len(beta) > N:
        raise RankMismatch("N too small for the bipartition")
    al = list(alpha) + [0] * (N + r - len(alpha))
    be = list(beta) + [0] * (N - len(beta))
    top = tuple(a * (al[N + r - i] + i - 1) + bp for i in range(1, N + r + 1))
    bottom = tuple(a * (be[N - j] + j - 1) for j in range(1, N + 1))
    return Symbol(a, b, N, top, bottom)


def symbol_to_bipartition(sym: Symbol) -> tuple[Partition, Partition]:
    a, bp, r, N = sym.a, sym.b_prime, sym.r, sym.N
    alpha_rev = [(sym.top[i - 1] - bp) // a - (i - 1) for i in range(1, N + r + 1)]
    beta_rev = [sym.bottom[j - 1] // a - (j - 1) for j in range(1, N + 1)]
    if any(x < 0 for x in alpha_rev + beta_rev):
        raise RankMismatch("rows do not code a bipartition")
    alpha = tuple(x for x in reversed(alpha_rev) if x)
    beta = tuple(x for x in reversed(beta_rev) if x)
    return normalize_partition(alpha), normalize_partition(beta)


def enumerate_multisets(a: int, b: int, n: int, N: int) -> list[Multiset]:
    """All multiset data of rank n at depth N (via the symbol coding)."""
    seen = {}
    for alpha, beta in bipartitions(n):
        try:
            sym = bipartition_to_symbol(alpha, beta, a, b, N)
        except RankMismatch:
            continue
        ms = sym.multiset()
        seen[ms.entries] = ms
    return [seen[k] for k in sorted(seen)]


def enumerate_symbols(a: int, b: int, n: int, N: int) -> list[Symbol]:
    out = []
    for alpha, beta in bipartitions(n):
        try:
            out.append(bipartition_to_symbol(alpha, beta, a, b, N))
        except RankMismatch:
            continue
    return out


# ---------------------------------------------------------------------------
# complementation


def complement(ms: Multiset, t: int) -> Multiset:
    a, bp, r = ms.a, ms.b_prime, ms.r
    flipped = sorted(a * t + bp - e for e in ms.entries)
    pool: dict[int, int] = {}
    for k in range(t + 1):
        pool[a * k] = pool.get(a * k, 0) + 1
        pool[a * k + bp] = pool.get(a * k + bp, 0) + 1
    for e in flipped:
        if pool.get(e, 0) <= 0:
            raise TTooSmall(f"t={t} does not dominate the multiset")
        pool[e] -= 1
    rest = []
    for e, c in pool.items():
        rest.extend([e] * c)
    return Multiset(a, ms.b, t + 1 - ms.N - r, tuple(sorted(rest)))


def complement_symbol(sym: Symbol, t: int) -> Symbol:
    a, bp = sym.a, sym.b_prime
    if (sym.top and sym.top[-1] > a * t + bp) or (
        sym.bottom and sym.bottom[-1] > a * t
    ):
        raise TTooSmall(f"t={t} does not dominate the symbol")
    drop_top = {a * t + bp - m for m in sym.bottom}
    drop_bot = {a * t + bp - l for l in sym.top}
    top = tuple(x for x in (a * k + bp for k in range(t + 1)) if x not in drop_top)
    bottom = tuple(x for x in (a * k for k in range(t + 1)) if x not in drop_bot)
    return Symbol(a, sym.b, t + 1 - sym.N - sym.r, top, bottom)


# ---------------------------------------------------------------------------
# the a-invariant and the degree polynomial


def _pairmin(lams, mus) -> int:
    total = 0
    for i in range(len(lams)):
        for j in range(i + 1, len(lams)):
            total += min(lams[i], lams[j])
    for i in range(len(mus)):
        for j in range(i + 1, len(mus)):
            total += min(mus[i], mus[j])
    for x in lams:
        for y in mus:
            total += min(x, y)
    return total


def a_symbol(sym: Symbol) -> int:
    """The pairwise-min statistic, independent of the depth N."""

    def at(s: Symbol) -> int:
        base = bipartition_to_symbol((), (), s.a, s.b, s.N)
        return _pairmin(s.top, s.bottom) - _pairmin(base.top, base.bottom)

    val = at(sym)
    if at(sym.shift()) != val:
        raise AssertionError("a-statistic failed to stabilize in N")
    return val


def f_symbol(sym: Symbol) -> int:
    """Leading multiplicity: 2^d with 2d + r singles (b'=0), else 1."""
    if sym.b_prime > 0:
        return 1
    singles = sym.multiset().singles()
    d = (len(singles) - sym.r) // 2
    return 2**d


def a_partition(alpha, a: int) -> int:
    """Type-A a-invariant of a partition at equal parameter a."""
    alpha = normalize_partition(alpha)
    return sum(a * (c * (c - 1) // 2) for c in conjugate(alpha))


def _qint(h: int, step: int) -> Laurent:
    """1 + q + ... + q^{h-1} with q = v^step."""
    return Laurent({step * t: 1 for t in range(h)})


def _hook_product(alpha: Partition, a: int) -> tuple[Laurent, int]:
    """Product of q-integers over hook lengths; also the prefactor exponent."""
    ac = conjugate(alpha)
    out = Laurent.one()
    for i, part in enumerate(alpha, start=1):
        for j in range(1, part + 1):
            hook = part + ac[j - 1] - i - j + 1
            out = out * _qint(hook, 2 * a)
    pref = -2 * a * sum(c * (c - 1) // 2 for c in ac)
    return out, pref


def hoefsmit_f(alpha, beta, a: int, b: int) -> Laurent:
    """The generic-degree denominator polynomial, as an exact product.

    Assembled entirely from q-integer and (q^h y + 1) factors, so no
    rational function ever appears.
    """
    alpha = normalize_partition(alpha)
    beta = normalize_partition(beta)
    if a <= 0 or b <= 0:
        raise ValueError("need a > 0 and b > 0")

    def g_factor(al: Partition, be: Partition, ysign: int) -> Laurent:
        alc = conjugate(al)
        bec = conjugate(be)
        out = Laurent.one()
        for i, part in enumerate(al, start=1):
            for j in range(1, part + 1):
                bj = bec[j - 1] if j - 1 < len(bec) else 0
                e = 2 * a * (part + bj - i - j + 1) + 2 * b * ysign
                out = out * (Laurent.v_power(e) + Laurent.one())
        cross = sum(
            alc[i] * bec[i] for i in range(min(len(alc), len(bec)))
        )
        return out * Laurent.v_power(-a * cross)

    ha, pa = _hook_product(alpha, a)
    hb, pb = _hook_product(beta, a)
    out = ha * hb * Laurent.v_power(pa + pb)
    out = out * g_factor(alpha, beta, +1)
    out = out * g_factor(beta, alpha, -1)
    return out


# ---------------------------------------------------------------------------
# admissible involutions and constructible families


def admissible_involutions(Z, r: int) -> list[tuple[tuple[int, int], ...]]:
    """All r-admissible involutions of the ordered set Z, as sorted pair
    tuples (fixed points are the unpaired entries)."""
    Z = tuple(sorted(Z))
    if len(set(Z)) != len(Z):
        raise ValueError("Z must be a set")
    if (len(Z) - r) % 2 or r < 0 or r > len(Z):
        raise ParityMismatch(f"|Z|={len(Z)} and r={r} have different parities")

    def rec(zs: tuple) -> set:
        if len(zs) == r:
            return {()}
        out = set()
        for i in range(len(zs) - 1):
            pair = (zs[i], zs[i + 1])
            rest = zs[:i] + zs[i + 2 :]
            for sub in rec(rest):
                out.add(tuple(sorted(sub + (pair,))))
        return out

    return sorted(rec(Z))


def s_iota(iota) -> list[frozenset]:
    """The transversal family: one element from each nontrivial orbit."""
    pairs = list(iota)
    out = []
    for choice in itertools.product(*pairs) if pairs else [()]:
        out.append(frozenset(choice))
    return sorted(out, key=sorted)


def constructible_family(ms: Multiset, iota) -> list[Symbol]:
    """The symbols attached to one admissible involution (b' = 0 only)."""
    if ms.b_prime != 0:
        raise RankMismatch("constructible families require b' = 0")
    Z = ms.singles()
    doubles = ms.doubles()
    fixed = set(Z) - {z for pair in iota for z in pair}
    if len(fixed) != ms.r:
        raise ParityMismatch("involution does not have r fixed points")
    out = []
    for Y in s_iota(iota):
        top = tuple(sorted((set(Z) - Y) | set(doubles)))
        bottom = tuple(sorted(Y | set(doubles)))
        out.append(Symbol(ms.a, ms.b, ms.N, top, bottom))
    return out


def transversal_graph_components(Z, r: int) -> int:
    """Number of components of the graph joining transversals that share
    an admissible involution."""
    Z = tuple(sorted(Z))
    iotas = admissible_involutions(Z, r)
    nodes = set()
    adj: dict[frozenset, set[frozenset]] = {}
    for iota in iotas:
        fam = s_iota(iota)
        for y in fam:
            nodes.add(y)
            adj.setdefault(y, set()).update(set(fam) - {y})
    if not nodes:
        return 0
    comps = 0
    seen = set()
    for start in nodes:
        if start in seen:
            continue
        comps += 1
        frontier = [start]
        seen.add(start)
        while frontier:
            u = frontier.pop()
            for w in adj.get(u, ()):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return comps
