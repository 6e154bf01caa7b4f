"""Finitely supported linear combinations of forests, and their tensor powers.

Coefficients are exact: Python ``int`` when integral, otherwise
:class:`fractions.Fraction`. A Fraction with denominator 1 is always stored as
an ``int``, so equality and hashing never depend on which type produced a value.

Internally a basis key is the sorted id tuple of a :class:`~binhopf.trees.Forest`
(tensor keys are tuples of those). The public API speaks Forests.
"""
from __future__ import annotations

import json
import re
from collections.abc import Mapping
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator

from binhopf.text import _Reader
from binhopf.trees import EMPTY_FOREST, Forest, Tree, as_forest

Coef = int | Fraction


def as_coef(c) -> Coef:
    """Coerce ``c`` to an exact coefficient (int, Fraction, or "p/q" text)."""
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, (str, Rational)):
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"not an exact rational: {c!r}")


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def format_coef(c: Coef) -> str:
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def _key_sort(ids: tuple[int, ...]) -> tuple[int, str]:
    return Forest.from_ids(ids).sort_key


class _Sparse:
    """Shared vector-space arithmetic over a dict of nonzero coefficients."""

    __slots__ = ("_t",)

    @classmethod
    def _wrap(cls, raw: dict, **extra):
        obj = object.__new__(cls)
        obj._t = {k: _norm(v) for k, v in raw.items() if v}
        for name, value in extra.items():
            setattr(obj, name, value)
        return obj

    def _like(self, raw: dict):
        return type(self)._wrap(raw)

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if type(other) is type(self):
            return self._t == other._t and self._same_shape(other)
        if isinstance(other, int) and other == 0:
            return not self._t
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def _same_shape(self, other) -> bool:
        return True

    def _check(self, other):
        if type(other) is not type(self) or not self._same_shape(other):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self._t)
        for k, v in other._t.items():
            out[k] = out.get(k, 0) + v
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, _Sparse):
            return NotImplemented
        c = as_coef(c)
        return self._like({k: c * v for k, v in self._t.items()})

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(as_coef(c)))

    def mass(self) -> Coef:
        """Sum of all coefficients."""
        return _norm(sum(self._t.values()))

    def abs_mass(self) -> Coef:
        return _norm(sum(abs(v) for v in self._t.values()))


class LinComb(_Sparse):
    """An element of the forest algebra: a map Forest -> exact rational.

    >>> a = LinComb({"(a b)": 2})
    >>> str(a + LinComb({"(a b)": -2}))
    '0'
    """

    __slots__ = ()

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        raw: dict = {}
        for f, c in items:
            k = as_forest(f).ids
            raw[k] = raw.get(k, 0) + as_coef(c)
        self._t = {k: _norm(v) for k, v in raw.items() if v}

    @classmethod
    def of(cls, x, coef=1) -> LinComb:
        return cls._wrap({as_forest(x).ids: as_coef(coef)})

    @classmethod
    def one(cls) -> LinComb:
        return cls._wrap({(): 1})

    def __getitem__(self, f) -> Coef:
        return self._t.get(as_forest(f).ids, 0)

    def __iter__(self) -> Iterator[Forest]:
        return (Forest.from_ids(k) for k in self._keys())

    def _keys(self):
        return sorted(self._t, key=_key_sort)

    def items(self) -> list[tuple[Forest, Coef]]:
        return [(Forest.from_ids(k), self._t[k]) for k in self._keys()]

    def degrees(self) -> set[int]:
        return {Forest.from_ids(k).n_leaves for k in self._t}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, degree: int) -> LinComb:
        return self._wrap({k: v for k, v in self._t.items()
                           if Forest.from_ids(k).n_leaves == degree})

    def __str__(self):
        return format_terms((c, str(f)) for f, c in self.items())

    def __repr__(self):
        return f"LinComb({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"coef": format_coef(c), "forest": [str(t) for t in f.trees]}
                          for f, c in self.items()]}


class Tensor(_Sparse):
    """An element of the ``rank``-fold tensor power of the forest algebra."""

    __slots__ = ("rank",)

    def __init__(self, terms=(), rank: int = 2):
        items = terms.items() if isinstance(terms, Mapping) else terms
        raw: dict = {}
        for legs, c in items:
            if len(legs) != rank:
                raise ValueError(f"expected {rank} legs, got {len(legs)}")
            k = tuple(as_forest(f).ids for f in legs)
            raw[k] = raw.get(k, 0) + as_coef(c)
        self.rank = rank
        self._t = {k: _norm(v) for k, v in raw.items() if v}

    def _like(self, raw):
        return Tensor._wrap(raw, rank=self.rank)

    def _same_shape(self, other):
        return self.rank == other.rank

    def __getitem__(self, legs) -> Coef:
        return self._t.get(tuple(as_forest(f).ids for f in legs), 0)

    def _keys(self):
        return sorted(self._t, key=lambda k: tuple(_key_sort(f) for f in k))

    def items(self) -> list[tuple[tuple[Forest, ...], Coef]]:
        return [(tuple(Forest.from_ids(f) for f in k), self._t[k]) for k in self._keys()]

    def __iter__(self):
        return (tuple(Forest.from_ids(f) for f in k) for k in self._keys())

    def __str__(self):
        return format_terms((c, " ⨂ ".join(str(f) for f in legs)) for legs, c in self.items())

    def __repr__(self):
        return f"Tensor({str(self)!r}, rank={self.rank})"

    def to_json(self) -> dict:
        names = ("left", "right") if self.rank == 2 else tuple(f"leg{i}" for i in range(self.rank))
        return {"terms": [dict({"coef": format_coef(c)},
                               **{n: [str(t) for t in f.trees] for n, f in zip(names, legs)})
                          for legs, c in self.items()]}


def format_terms(pairs: Iterable[tuple[Coef, str]]) -> str:
    parts = []
    for c, body in pairs:
        if not parts:
            parts.append(f"{format_coef(c)} {body}")
        elif c < 0:
            parts.append(f" - {format_coef(-c)} {body}")
        else:
            parts.append(f" + {format_coef(c)} {body}")
    return "".join(parts) if parts else "0"


# -- functional API ---------------------------------------------------------


def as_lincomb(x) -> LinComb:
    if isinstance(x, LinComb):
        return x
    if isinstance(x, str):
        if x.strip() == "0" or re.match(r"\s*-?\d+(?:/\d+)?\s", x):
            return parse_lincomb(x)
    return LinComb.of(x)


def lc_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def lc_scale(c, a: LinComb) -> LinComb:
    return a * c


def coefficient_of(a, f) -> Coef:
    return as_lincomb(a)[f]


def lc_multiply(a, b) -> LinComb:
    """Bilinear extension of disjoint union of forests."""
    a, b = as_lincomb(a), as_lincomb(b)
    out: dict = {}
    for ka, ca in a._t.items():
        for kb, cb in b._t.items():
            k = tuple(sorted(ka + kb)) if ka and kb else (ka or kb)
            out[k] = out.get(k, 0) + ca * cb
    return LinComb._wrap(out)


def tensor(*factors) -> Tensor:
    """Tensor product of linear combinations (any number of legs)."""
    raw = {(): 1}
    for x in factors:
        x = as_lincomb(x)
        raw = {k + (kx,): c * cx for k, c in raw.items() for kx, cx in x._t.items()}
    return Tensor._wrap(raw, rank=len(factors))


def tensor3(a, b, c) -> Tensor:
    return tensor(a, b, c)


def apply_leg(op: Callable, t: Tensor, leg: int) -> Tensor:
    """Apply the linear map ``op`` to one leg of ``t``.

    ``op`` maps a LinComb to a LinComb (rank unchanged) or to a Tensor of rank
    r (rank grows by r - 1). Results are cached per basis forest.
    """
    cache: dict = {}
    out: dict = {}
    rank = None
    for k, c in t._t.items():
        f = k[leg]
        img = cache.get(f)
        if img is None:
            img = cache[f] = op(LinComb._wrap({f: 1}))
        if isinstance(img, LinComb):
            r, parts = 1, [((kk,), v) for kk, v in img._t.items()]
        else:
            r, parts = img.rank, list(img._t.items())
        rank = t.rank - 1 + r
        for sub, v in parts:
            nk = k[:leg] + sub + k[leg + 1:]
            out[nk] = out.get(nk, 0) + c * v
    return Tensor._wrap(out, rank=t.rank if rank is None else rank)


def t2_apply_left(op: Callable, t: Tensor) -> Tensor:
    return apply_leg(op, t, 0)


def t2_apply_right(op: Callable, t: Tensor) -> Tensor:
    return apply_leg(op, t, t.rank - 1)


def multiply_legs(t: Tensor) -> LinComb:
    """The multiplication map m: H ⊗ ... ⊗ H -> H (disjoint union of all legs)."""
    out: dict = {}
    for k, c in t._t.items():
        ids = tuple(sorted(sum(k, ())))
        out[ids] = out.get(ids, 0) + c
    return LinComb._wrap(out)


def swap_legs(t: Tensor) -> Tensor:
    if t.rank != 2:
        raise ValueError("swap needs rank 2")
    return Tensor._wrap({(k[1], k[0]): c for k, c in t._t.items()}, rank=2)


# -- parsing ----------------------------------------------------------------

_COEF_RE = re.compile(r"-?\d+(?:/\d+)?")


def parse_lincomb(text: str) -> LinComb:
    """Parse the printed form ``c1 F1 + c2 F2 - c3 F3``; ``"0"`` is zero.

    Every term carries an explicit coefficient.
    """
    if text.strip() == "0":
        return LinComb()
    r = _Reader(text)
    raw: dict = {}
    sign = 1
    first = True
    while True:
        r.skip_ws()
        if not first:
            c = r.peek()
            if c == "+":
                sign = 1
            elif c == "-":
                sign = -1
            else:
                r.fail("expected '+' or '-'")
            r.pos += 1
            r.skip_ws()
        m = _COEF_RE.match(text, r.pos)
        if not m:
            r.fail("expected a coefficient")
        if m.group(0).endswith("/0"):
            r.fail("zero denominator")
        coef = sign * Fraction(m.group(0))
        r.pos = m.end()
        if not r.peek().isspace():
            r.fail("expected space after coefficient")
        ids = r.forest()
        raw[ids] = raw.get(ids, 0) + coef
        first = False
        r.skip_ws()
        if r.pos == len(text):
            break
    return LinComb._wrap(raw)


def lincomb_to_json(a: LinComb) -> str:
    return json.dumps(a.to_json(), ensure_ascii=False)


__all__ = [
    "Coef", "EMPTY_FOREST", "LinComb", "Tensor", "Tree", "apply_leg", "as_coef", "as_lincomb",
    "coefficient_of", "format_coef", "lc_add", "lc_multiply", "lc_scale", "multiply_legs",
    "parse_lincomb", "swap_legs", "t2_apply_left", "t2_apply_right", "tensor", "tensor3",
]
