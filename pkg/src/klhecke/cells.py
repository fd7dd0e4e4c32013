"""Left, right and two-sided cells from KL-basis multiplications.

Edges w' -> w are drawn when c_w appears in some c_s c_{w'} (left) or
c_{w'} c_s (right); cells are the strongly connected components and the
block preorder is reachability in the condensation.

On an infinite group the region is a length ball and a trust margin
discards boundary-contaminated data: blocks are reported restricted to
elements at distance >= margin from the region boundary.  Edge locality
within the margin is a documented heuristic for systems beyond the
dihedral ones.

Partition JSON: {kind, blocks: [[elt, ...], ...], order: [[i, j], ...]}
with blocks sorted by ShortLex-least member and [i, j] present when
block i is strictly below block j in the preorder.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import Element
from .errors import RegionTooSmall
from .kl import KL

Edges = dict[Element, set[Element]]


def edges(kl: KL, region: list[Element], kind: str) -> Edges:
    """Directed edges of the cell preorder, restricted to the region."""
    kl.sys.require_positive_weights()
    inside = set(region)
    sides = ("left",) if kind == "left" else ("right",) if kind == "right" else ("left", "right")
    out: Edges = {w: set() for w in region}
    for wp in region:
        for side in sides:
            for s in range(kl.sys.n):
                for w in kl.cs_mul_c(s, wp, side):
                    if w in inside:
                        out[wp].add(w)
    return out


def _sccs(adj: Edges) -> list[list[Element]]:
    """Tarjan's strongly connected components, iteratively."""
    index: dict[Element, int] = {}
    low: dict[Element, int] = {}
    on_stack: set[Element] = set()
    stack: list[Element] = []
    counter = 0
    comps: list[list[Element]] = []
    for root in adj:
        if root in index:
            continue
        work = [(root, iter(adj[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(adj[nxt])))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    x = stack.pop()
                    on_stack.discard(x)
                    comp.append(x)
                    if x == node:
                        break
                comps.append(comp)
    return comps


@dataclass
class CellPartition:
    """Cells of one kind together with the block-level preorder."""

    kind: str
    blocks: list[list[Element]]
    order: list[tuple[int, int]]  # (i, j): block i strictly below block j
    block_of: dict[Element, int]

    def leq(self, w: Element, wp: Element) -> bool:
        """w <= w' in the cell preorder."""
        i, j = self.block_of[w], self.block_of[wp]
        return i == j or (i, j) in self._order_set()

    def same(self, w: Element, wp: Element) -> bool:
        return self.block_of[w] == self.block_of[wp]

    def _order_set(self) -> set[tuple[int, int]]:
        cached = getattr(self, "_oset", None)
        if cached is None:
            cached = set(self.order)
            object.__setattr__(self, "_oset", cached)
        return cached

    def block_sets(self) -> list[frozenset]:
        return [frozenset(b) for b in self.blocks]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "blocks": [[str(w) for w in b] for b in self.blocks],
            "order": [list(p) for p in self.order],
        }


def cells(
    kl: KL,
    region: list[Element],
    kind: str,
    margin: int = 0,
    full_group: bool = True,
) -> CellPartition:
    """Cell partition of the region; see module docstring for margins."""
    adj = edges(kl, region, kind)
    comps = _sccs(adj)
    if full_group:
        safe = set(region)
    else:
        bound = max(len(w.word) for w in region)
        cutoff = bound - margin
        safe = {w for w in region if len(w.word) <= cutoff}
        if not safe:
            raise RegionTooSmall(
                f"margin {margin} leaves nothing inside the length-{bound} region"
            )
    # condensation and reachability on the full window
    comp_of = {}
    for i, comp in enumerate(comps):
        for w in comp:
            comp_of[w] = i
    succ: list[set[int]] = [set() for _ in comps]
    for wp, outs in adj.items():
        i = comp_of[wp]
        for w in outs:
            j = comp_of[w]
            if i != j:
                succ[i].add(j)  # wp -> w means comp(w) below comp(wp)
    reach: list[set[int]] = [set() for _ in comps]
    for i in range(len(comps)):
        seen = set()
        frontier = [i]
        while frontier:
            k = frontier.pop()
            for j in succ[k]:
                if j not in seen:
                    seen.add(j)
                    frontier.append(j)
        reach[i] = seen
    # keep blocks that touch the safe zone, trimmed to it
    kept = []
    for i, comp in enumerate(comps):
        trimmed = sorted(w for w in comp if w in safe)
        if trimmed:
            kept.append((i, trimmed))
    kept.sort(key=lambda pair: pair[1][0].key())
    renumber = {old: new for new, (old, _) in enumerate(kept)}
    blocks = [trimmed for _, trimmed in kept]
    order = []
    for old_i, _ in kept:
        for old_j in reach[old_i]:
            if old_j in renumber:
                # old_j reachable from old_i: block old_j is below old_i
                order.append((renumber[old_j], renumber[old_i]))
    block_of = {w: idx for idx, b in enumerate(blocks) for w in b}
    return CellPartition(kind, blocks, sorted(set(order)), block_of)


def leq_cell(partition: CellPartition, w: Element, wp: Element) -> bool:
    return partition.leq(w, wp)
