"""The asymptotic ring J and the homomorphism from the Hecke algebra.

The basis t_w multiplies through the leading coefficients gamma; the
unit is the signed sum of the distinguished involutions.  J decomposes
as a direct sum of subrings indexed by two-sided cells.  The map phi
sends the dagger-twisted KL basis into J with Laurent coefficients.

J elements are plain dicts from Element to int (or Laurent, for the
image of phi); both coefficient types share the same structure
constants.

J table JSON: {region, unit: [[d, n_d], ...], products: {"x|y":
[[z, c], ...]}}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .afun import AData
from .cells import CellPartition
from .coxeter import Element
from .errors import UncertifiedRegion
from .rings import Laurent


@dataclass
class JTable:
    """Structure constants of J over a region, with unit data."""

    adata: AData
    region: list[Element]
    dset: list[Element]
    nd: dict[Element, int]
    nhat: dict[Element, int]
    left_cells: CellPartition
    two_sided: CellPartition
    _products: dict = field(default_factory=dict)

    @property
    def sys(self):
        return self.adata.sys

    def unit(self) -> dict[Element, int]:
        return {d: self.nd[d] for d in self.dset}

    def t_product(self, x: Element, y: Element) -> dict[Element, int]:
        """t_x t_y as a map z -> gamma_{x,y,z^{-1}}."""
        key = (x, y)
        got = self._products.get(key)
        if got is not None:
            return got
        adata = self.adata
        out: dict[Element, int] = {}
        for z, val in adata.kl.h(x, y).items():
            if not adata.certified.get(z, False):
                raise UncertifiedRegion(
                    f"product support reaches {z} where a is not certified"
                )
            # the coefficient of t_z is the leading term of h_{x,y,z}
            c = val.coeff(adata.a[z])
            if c:
                out[z] = c
        self._products[key] = out
        return out

    def to_json(self) -> dict:
        prods = {}
        for x in self.region:
            for y in self.region:
                entries = self.t_product(x, y)
                if entries:
                    prods[f"{x}|{y}"] = [
                        [str(z), c] for z, c in sorted(entries.items())
                    ]
        return {
            "region": [str(w) for w in self.region],
            "unit": [[str(d), self.nd[d]] for d in self.dset],
            "products": prods,
        }


def build_jtable(adata: AData, left_cells: CellPartition, two_sided: CellPartition) -> JTable:
    """Assemble J data; requires the uniqueness of the distinguished
    involution in each left cell (checked, not assumed)."""
    sys_ = adata.sys
    dset = adata.dset()
    nd = {d: adata.n_of(d) for d in dset}
    nhat: dict[Element, int] = {}
    dset_set = set(dset)
    for block in left_cells.blocks:
        ds = [d for d in block if d in dset_set]
        if len(ds) != 1:
            raise ValueError(
                f"left cell {sorted(str(w) for w in block)} contains "
                f"{len(ds)} distinguished involutions; the construction "
                "needs exactly one"
            )
    for z in adata.safe():
        zi = sys_.inverse(z)
        block = left_cells.blocks[left_cells.block_of[zi]]
        d = next(d for d in block if d in dset_set)
        nhat[z] = nd[d]
    return JTable(adata, adata.safe(), dset, nd, nhat, left_cells, two_sided)


def j_mul(jt: JTable, a: dict[Element, object], b: dict[Element, object]) -> dict:
    """Product of two J elements (integer or Laurent coefficients)."""
    out: dict[Element, object] = {}
    for x, cx in a.items():
        if not cx:
            continue
        for y, cy in b.items():
            if not cy:
                continue
            cxy = cx * cy
            for z, g in jt.t_product(x, y).items():
                n = out.get(z, 0) + g * cxy
                if n:
                    out[z] = n
                elif z in out:
                    del out[z]
    return out


def phi(jt: JTable, x: Element) -> dict[Element, Laurent]:
    """The image of the dagger-twisted KL basis element at x."""
    adata = jt.adata
    out: dict[Element, Laurent] = {}
    for d in jt.dset:
        ad = adata.a_of(d)
        for z, val in adata.kl.h(x, d).items():
            if not adata.certified.get(z, False):
                raise UncertifiedRegion(f"phi support reaches uncertified {z}")
            if adata.a[z] != ad:
                continue
            c = val * jt.nhat[z]
            n = out.get(z, Laurent.zero()) + c
            if n:
                out[z] = n
            elif z in out:
                del out[z]
    return out


def phi_elt(jt: JTable, coeffs: dict[Element, Laurent]) -> dict[Element, Laurent]:
    """phi extended linearly over dagger-twisted KL coordinates."""
    out: dict[Element, Laurent] = {}
    for x, a in coeffs.items():
        if not a:
            continue
        for z, c in phi(jt, x).items():
            n = out.get(z, Laurent.zero()) + a * c
            if n:
                out[z] = n
            elif z in out:
                del out[z]
    return out


@dataclass
class JBlock:
    elements: list[Element]
    unit: dict[Element, int]


def decomposition(jt: JTable) -> list[JBlock]:
    """Split J along two-sided cells, verifying cross-cell products vanish."""
    blocks = []
    dset_set = set(jt.dset)
    for cell in jt.two_sided.blocks:
        unit = {d: jt.nd[d] for d in cell if d in dset_set}
        blocks.append(JBlock(sorted(cell), unit))
    index = {w: i for i, b in enumerate(blocks) for w in b.elements}
    for x in jt.region:
        for y in jt.region:
            if index[x] == index[y]:
                continue
            prod = jt.t_product(x, y)
            if prod:
                raise AssertionError(
                    f"t_{x} t_{y} = {prod} crosses two-sided cells"
                )
    return blocks
