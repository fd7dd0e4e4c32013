"""Exact sparse Laurent polynomials over arbitrary-precision integers.

``Laurent`` is univariate in v; ``BiLaurent`` is bivariate in v and a
second indeterminate v'.  Terms are stored as sparse maps from exponent
to nonzero integer coefficient, normalized on every constructor exit.
Values are immutable after construction and safe to share between
threads.

Text form: ``c1*v^e1 + c2*v^e2 + ...`` with strictly increasing
exponents.  JSON form: array of ``[exponent, coefficient-string]``
pairs, exponents increasing.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def _normalized(terms: dict[int, int]) -> dict[int, int]:
    return {e: c for e, c in terms.items() if c}


class Laurent:
    """A sparse Laurent polynomial in v with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | Iterable[tuple[int, int]] | int = 0):
        if isinstance(terms, Laurent):
            d = dict(terms.terms)
        elif isinstance(terms, int):
            d = {0: terms} if terms else {}
        elif isinstance(terms, dict):
            d = _normalized(terms)
        else:
            d = {}
            for e, c in terms:
                d[e] = d.get(e, 0) + c
            d = _normalized(d)
        self.terms = d

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "Laurent":
        return Laurent(0)

    @staticmethod
    def one() -> "Laurent":
        return Laurent(1)

    @staticmethod
    def monomial(coeff: int, exp: int) -> "Laurent":
        return Laurent({exp: coeff})

    @staticmethod
    def v_power(exp: int) -> "Laurent":
        return Laurent({exp: 1})

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, n: int) -> int:
        return self.terms.get(n, 0)

    def degree_window(self) -> tuple[int, int] | None:
        """(min exponent, max exponent), or None for the zero polynomial."""
        if not self.terms:
            return None
        return (min(self.terms), max(self.terms))

    @property
    def max_exp(self) -> int | None:
        return max(self.terms) if self.terms else None

    @property
    def min_exp(self) -> int | None:
        return min(self.terms) if self.terms else None

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.terms.items()))

    # -- arithmetic --------------------------------------------------

    def __add__(self, other) -> "Laurent":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = dict(self.terms)
        for e, c in other.terms.items():
            n = d.get(e, 0) + c
            if n:
                d[e] = n
            elif e in d:
                del d[e]
        out = Laurent.__new__(Laurent)
        out.terms = d
        return out

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        out = Laurent.__new__(Laurent)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "Laurent":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = dict(self.terms)
        for e, c in other.terms.items():
            n = d.get(e, 0) - c
            if n:
                d[e] = n
            elif e in d:
                del d[e]
        out = Laurent.__new__(Laurent)
        out.terms = d
        return out

    def __rsub__(self, other) -> "Laurent":
        return (-self) + other

    def __mul__(self, other) -> "Laurent":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        d: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                n = d.get(e, 0) + c1 * c2
                if n:
                    d[e] = n
                elif e in d:
                    del d[e]
        out = Laurent.__new__(Laurent)
        out.terms = d
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            raise ValueError("negative powers are not defined for Laurent values")
        out = Laurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def bar(self) -> "Laurent":
        """The ring involution sending v^n to v^(-n)."""
        out = Laurent.__new__(Laurent)
        out.terms = {-e: c for e, c in self.terms.items()}
        return out

    # -- comparison --------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- serialization -----------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*v^{e}" for e, c in sorted(self.terms.items()))

    @staticmethod
    def from_text(text: str) -> "Laurent":
        text = text.strip()
        if text == "0" or not text:
            return Laurent.zero()
        d: dict[int, int] = {}
        for part in text.split("+"):
            part = part.strip()
            cs, _, es = part.partition("*v^")
            e = int(es)
            d[e] = d.get(e, 0) + int(cs)
        return Laurent(d)

    def to_json(self) -> list[list]:
        return [[e, str(c)] for e, c in sorted(self.terms.items())]

    @staticmethod
    def from_json(data) -> "Laurent":
        return Laurent({int(e): int(c) for e, c in data})

    def tex(self) -> str:
        """Render in the v-power notation used for printed tables."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            if e == 0:
                body = str(abs(c))
            else:
                vs = "v" if e == 1 else "v^{%d}" % e
                body = vs if abs(c) == 1 else "%d%s" % (abs(c), vs)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"Laurent({self.to_text()!r})"


def _coerce(x) -> "Laurent":
    if isinstance(x, Laurent):
        return x
    if isinstance(x, int):
        return Laurent(x)
    return NotImplemented


ZERO = Laurent.zero()
ONE = Laurent.one()
V = Laurent.v_power(1)


class BiLaurent:
    """A sparse Laurent polynomial in two indeterminates v and v'."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], int] | int = 0):
        if isinstance(terms, BiLaurent):
            self.terms = dict(terms.terms)
        elif isinstance(terms, int):
            self.terms = {(0, 0): terms} if terms else {}
        else:
            self.terms = {k: c for k, c in terms.items() if c}

    @staticmethod
    def lift(a: Laurent, variable: str = "v") -> "BiLaurent":
        """Embed a univariate value, sending v to v or to v'."""
        if variable == "v":
            return BiLaurent({(e, 0): c for e, c in a.terms.items()})
        if variable == "v'":
            return BiLaurent({(0, e): c for e, c in a.terms.items()})
        raise ValueError(f"unknown variable {variable!r}")

    @staticmethod
    def separable(a: Laurent, b: Laurent) -> "BiLaurent":
        """Product lift(a, v) * lift(b, v'); exponent pairs never collide."""
        out = BiLaurent.__new__(BiLaurent)
        out.terms = {
            (e1, e2): c1 * c2
            for e1, c1 in a.terms.items()
            for e2, c2 in b.terms.items()
        }
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other) -> "BiLaurent":
        if isinstance(other, int):
            other = BiLaurent(other)
        d = dict(self.terms)
        for k, c in other.terms.items():
            n = d.get(k, 0) + c
            if n:
                d[k] = n
            elif k in d:
                del d[k]
        out = BiLaurent.__new__(BiLaurent)
        out.terms = d
        return out

    __radd__ = __add__

    def __neg__(self) -> "BiLaurent":
        out = BiLaurent.__new__(BiLaurent)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "BiLaurent":
        return self + (-other if isinstance(other, BiLaurent) else -BiLaurent(other))

    def __mul__(self, other) -> "BiLaurent":
        if isinstance(other, int):
            other = BiLaurent(other)
        d: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                n = d.get(k, 0) + c1 * c2
                if n:
                    d[k] = n
                elif k in d:
                    del d[k]
        out = BiLaurent.__new__(BiLaurent)
        out.terms = d
        return out

    __rmul__ = __mul__

    def specialize_diagonal(self) -> Laurent:
        """Substitute v' := v."""
        d: dict[int, int] = {}
        for (e1, e2), c in self.terms.items():
            e = e1 + e2
            d[e] = d.get(e, 0) + c
        return Laurent(d)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiLaurent(other)
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}*v^{e1}*w^{e2}" for (e1, e2), c in sorted(self.terms.items())
        )

    def __repr__(self) -> str:
        return f"BiLaurent({self.to_text()!r})"


def bi_lift(a: Laurent, variable: str = "v") -> BiLaurent:
    return BiLaurent.lift(a, variable)


def bi_mul(a: BiLaurent, b: BiLaurent) -> BiLaurent:
    return a * b
