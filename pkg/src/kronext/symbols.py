"""Decomposition symbols, Segre symbols and the Hom/Ext table for Kronecker modules.

A decomposition symbol records a module ``P_c + R + I_d`` up to the choice of
the (distinct) points carrying the regular summands. It is written

    P3 P0 | (2,1)@1 (1)@2 | I4 I1

i.e. preprojective indices, Segre entries ``partition@degree``, preinjective
indices. Either side of a separator may be empty; ``||`` is the zero module.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Iterable, NamedTuple, Union

from .partitions import Partition, format_partition, strip


class SymbolSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class SegreEntry(NamedTuple):
    partition: Partition
    degree: int

    def format(self) -> str:
        return f"{format_partition(self.partition)}@{self.degree}"


def _entry_key(e: SegreEntry) -> tuple:
    return (e.degree, e.partition)


@dataclass(frozen=True)
class SegreSymbol:
    """Multiset of (partition, degree) pairs, stored sorted."""

    entries: tuple[SegreEntry, ...] = ()

    def __post_init__(self) -> None:
        clean = []
        for lam, d in self.entries:
            lam = strip(lam)
            if not lam or min(lam) < 1 or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
                raise ValueError(f"Segre entry needs a nonempty partition, got {lam}")
            if d < 1:
                raise ValueError(f"Segre entry degree must be >= 1, got {d}")
            clean.append(SegreEntry(tuple(lam), int(d)))
        object.__setattr__(self, "entries", tuple(sorted(clean, key=_entry_key)))

    @classmethod
    def of(cls, *entries: tuple[Iterable[int], int]) -> "SegreSymbol":
        return cls(tuple(SegreEntry(tuple(lam), d) for lam, d in entries))

    @property
    def weight(self) -> int:
        return sum(sum(e.partition) * e.degree for e in self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def format(self) -> str:
        return " ".join(e.format() for e in self.entries)


@dataclass(frozen=True)
class Symbol:
    """Decomposition symbol: preprojective indices, Segre symbol, preinjective indices.

    ``proj`` and ``inj`` are stored in weakly decreasing order.
    """

    proj: tuple[int, ...] = ()
    regular: SegreSymbol = field(default_factory=SegreSymbol)
    inj: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for name in ("proj", "inj"):
            vals = tuple(sorted((int(v) for v in getattr(self, name)), reverse=True))
            if vals and vals[-1] < 0:
                raise ValueError(f"negative module index in {name}: {vals}")
            object.__setattr__(self, name, vals)
        if not isinstance(self.regular, SegreSymbol):
            object.__setattr__(self, "regular", SegreSymbol(tuple(self.regular)))

    def sort_key(self) -> tuple:
        return (self.proj, self.inj, self.regular.format())

    def __lt__(self, other: "Symbol") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_symbol(self)

    def __repr__(self) -> str:
        return f"Symbol({format_symbol(self)!r})"

    @property
    def is_zero(self) -> bool:
        return not self.proj and not self.inj and not self.regular


ZERO = Symbol()


def proj_sym(*indices: int) -> Symbol:
    return Symbol(proj=indices)


def inj_sym(*indices: int) -> Symbol:
    return Symbol(inj=indices)


def reg_sym(*entries: tuple[Iterable[int], int]) -> Symbol:
    return Symbol(regular=SegreSymbol.of(*entries))


SymbolSet = frozenset  # frozenset[Symbol]; use canonical() for ordered output


def canonical(symbols: Iterable[Symbol]) -> list[Symbol]:
    return sorted(set(symbols), key=Symbol.sort_key)


def dump_symbol_set(symbols: Iterable[Symbol]) -> str:
    return json.dumps([format_symbol(s) for s in canonical(symbols)])


def load_symbol_set(text: str) -> frozenset[Symbol]:
    return frozenset(parse_symbol(s) for s in json.loads(text))


# ---------------------------------------------------------------------------
# text form


def format_symbol(sym: Symbol) -> str:
    proj = " ".join(f"P{n}" for n in sym.proj)
    reg = sym.regular.format()
    inj = " ".join(f"I{n}" for n in sym.inj)
    out = (proj + " " if proj else "") + "|"
    out += (" " + reg + " " if reg else "") + "|"
    return out + (" " + inj if inj else "")


_TOKEN = re.compile(r"\s*(?:(?P<sep>\|)|(?P<mod>[PI])\s*(?P<idx>\d+)|(?P<part>\([\d,\s]*\))\s*@\s*(?P<deg>\d+))")


def parse_symbol(text: str) -> Symbol:
    """Parse the text form; raises SymbolSyntaxError with the offending position."""
    pos = 0
    section = 0
    proj: list[int] = []
    inj: list[int] = []
    entries: list[SegreEntry] = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise SymbolSyntaxError("unexpected character", text, pos)
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group("sep"):
            section += 1
            if section > 2:
                raise SymbolSyntaxError("too many '|' separators", text, start)
        elif m.group("mod"):
            kind, idx = m.group("mod"), int(m.group("idx"))
            if kind == "P" and section == 0:
                proj.append(idx)
            elif kind == "I" and section == 2:
                inj.append(idx)
            else:
                raise SymbolSyntaxError(f"{kind}{idx} not allowed in this section", text, start)
        else:
            if section != 1:
                raise SymbolSyntaxError("Segre entry outside the middle section", text, start)
            body = m.group("part")[1:-1].strip()
            if not body:
                raise SymbolSyntaxError("empty partition in Segre entry", text, start)
            try:
                lam = tuple(int(x) for x in body.split(","))
            except ValueError:
                raise SymbolSyntaxError("malformed partition", text, start) from None
            if any(x < 1 for x in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
                raise SymbolSyntaxError("Segre partition must be weakly decreasing and positive", text, start)
            deg = int(m.group("deg"))
            if deg < 1:
                raise SymbolSyntaxError("degree must be >= 1", text, start)
            entries.append(SegreEntry(lam, deg))
        pos = m.end()
    if section != 2:
        raise SymbolSyntaxError("expected two '|' separators", text, len(text))
    return Symbol(tuple(proj), SegreSymbol(tuple(entries)), tuple(inj))


# ---------------------------------------------------------------------------
# numerical invariants


class DimVector(NamedTuple):
    a: int
    b: int

    def __add__(self, other):  # type: ignore[override]
        return DimVector(self.a + other[0], self.b + other[1])

    def __sub__(self, other):
        return DimVector(self.a - other[0], self.b - other[1])

    @property
    def defect(self) -> int:
        return self.b - self.a


def dim_vector(sym: Symbol) -> DimVector:
    a = sum(n + 1 for n in sym.proj) + sum(sym.inj)
    b = sum(sym.proj) + sum(n + 1 for n in sym.inj)
    r = sym.regular.weight
    return DimVector(a + r, b + r)


def defect(sym: Symbol) -> int:
    return dim_vector(sym).defect


# ---------------------------------------------------------------------------
# atoms


@dataclass(frozen=True)
class Proj:
    n: int


@dataclass(frozen=True)
class Inj:
    n: int


@dataclass(frozen=True)
class RegSym:
    segre: SegreSymbol


Atom = Union[Proj, RegSym, Inj]


def atoms(sym: Symbol) -> list[Atom]:
    """Factor a symbol: preprojectives ascending, the Segre block, preinjectives descending."""
    word: list[Atom] = [Proj(n) for n in reversed(sym.proj)]
    if sym.regular:
        word.append(RegSym(sym.regular))
    word.extend(Inj(n) for n in sym.inj)
    return word


def atom_dim(atom: Atom) -> DimVector:
    if isinstance(atom, Proj):
        return DimVector(atom.n + 1, atom.n)
    if isinstance(atom, Inj):
        return DimVector(atom.n, atom.n + 1)
    w = atom.segre.weight
    return DimVector(w, w)


# ---------------------------------------------------------------------------
# Hom / Ext between indecomposables


class PlacedIndecomposable(NamedTuple):
    """P_n, I_n or R_x(t); ``point`` is an opaque tag compared only for identity."""

    kind: str  # "P", "I" or "R"
    n: int = 0
    point: object = None
    degree: int = 1
    t: int = 1

    @classmethod
    def P(cls, n: int) -> "PlacedIndecomposable":
        return cls("P", n)

    @classmethod
    def I(cls, n: int) -> "PlacedIndecomposable":  # noqa: E743
        return cls("I", n)

    @classmethod
    def R(cls, point: object, degree: int, t: int) -> "PlacedIndecomposable":
        return cls("R", 0, point, degree, t)


def hom_dim(x: PlacedIndecomposable, y: PlacedIndecomposable) -> int:
    kx, ky = x.kind, y.kind
    if kx == "P" and ky == "P":
        return y.n - x.n + 1 if x.n <= y.n else 0
    if kx == "I" and ky == "I":
        return x.n - y.n + 1 if x.n >= y.n else 0
    if kx == "P" and ky == "I":
        return x.n + y.n
    if kx == "P" and ky == "R":
        return y.t * y.degree
    if kx == "R" and ky == "I":
        return x.t * x.degree
    if kx == "R" and ky == "R":
        return min(x.t, y.t) * x.degree if x.point == y.point else 0
    return 0  # Hom(R,P) = Hom(I,P) = Hom(I,R) = 0


def ext_dim(x: PlacedIndecomposable, y: PlacedIndecomposable) -> int:
    kx, ky = x.kind, y.kind
    if kx == "P" and ky == "P":
        return x.n - y.n - 1 if x.n > y.n else 0
    if kx == "I" and ky == "I":
        return y.n - x.n - 1 if x.n < y.n else 0
    if kx == "I" and ky == "P":
        return x.n + y.n + 2
    if kx == "R" and ky == "P":
        return x.t * x.degree
    if kx == "I" and ky == "R":
        return y.t * y.degree
    if kx == "R" and ky == "R":
        return min(x.t, y.t) * x.degree if x.point == y.point else 0
    return 0  # Ext(P,R) = Ext(P,I) = Ext(R,I) = 0


# ---------------------------------------------------------------------------
# point counts and class sizes


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


@lru_cache(maxsize=None)
def count_points(q: int, degree: int) -> int:
    """Closed points of the projective line over F_q with the given degree."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if degree == 1:
        return q + 1
    total = sum(_mobius(degree // d) * q**d for d in range(1, degree + 1) if degree % d == 0)
    return total // degree


def class_size(sym: Symbol, q: int) -> int:
    """Number of isomorphism classes in the decomposition class of ``sym`` over F_q."""
    by_degree: dict[int, dict[Partition, int]] = {}
    for lam, d in sym.regular:
        by_degree.setdefault(d, {}).setdefault(lam, 0)
        by_degree[d][lam] += 1
    size = 1
    for d, groups in by_degree.items():
        k = sum(groups.values())
        n_pts = count_points(q, d)
        if k > n_pts:
            return 0
        falling = factorial(n_pts) // factorial(n_pts - k)
        for mult in groups.values():
            falling //= factorial(mult)
        size *= falling
    return size


# ---------------------------------------------------------------------------
# enumeration of symbols


def _weighted_multisets(n: int) -> list[tuple[tuple[int, int], ...]]:
    """Multisets of pairs (a, d), a, d >= 1, with sum a*d == n (sorted tuples)."""
    pairs = [(a, d) for d in range(1, n + 1) for a in range(1, n // d + 1)]
    out = []

    def rec(start: int, left: int, acc: list[tuple[int, int]]) -> None:
        if left == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(pairs)):
            a, d = pairs[i]
            if a * d <= left:
                acc.append(pairs[i])
                rec(i, left - a * d, acc)
                acc.pop()

    rec(0, n, [])
    return out


def regular_full_set(n: int) -> frozenset[Symbol]:
    """Symbols of modules whose summands are R_x(a) at pairwise different points, total n."""
    return frozenset(
        Symbol(regular=SegreSymbol(tuple(SegreEntry((a,), d) for a, d in ms)))
        for ms in _weighted_multisets(n)
    )


def segre_symbols_of_weight(w: int) -> list[SegreSymbol]:
    """All Segre symbols of regular weight w."""
    from .partitions import partitions_of

    # blocks (lam, d) with |lam|*d <= w
    blocks = [
        (lam, d)
        for d in range(1, w + 1)
        for size in range(1, w // d + 1)
        for lam in partitions_of(size)
    ]
    blocks.sort(key=lambda b: (b[1], b[0]))
    out = []

    def rec(start: int, left: int, acc: list) -> None:
        if left == 0:
            out.append(SegreSymbol(tuple(SegreEntry(l, d) for l, d in acc)))
            return
        for i in range(start, len(blocks)):
            lam, d = blocks[i]
            if sum(lam) * d <= left:
                acc.append(blocks[i])
                rec(i, left - sum(lam) * d, acc)
                acc.pop()

    rec(0, w, [])
    return out


def _index_multisets(dim_budget: DimVector, kind: str) -> list[tuple[int, ...]]:
    """Multisets of P (or I) indices whose dimension fits in dim_budget."""
    out = []
    a_max, b_max = dim_budget

    def dims(n: int) -> tuple[int, int]:
        return (n + 1, n) if kind == "P" else (n, n + 1)

    def rec(max_idx: int, a: int, b: int, acc: tuple[int, ...]) -> None:
        out.append(acc)
        for n in range(max_idx, -1, -1):
            da, db = dims(n)
            if a + da <= a_max and b + db <= b_max:
                rec(n, a + da, b + db, acc + (n,))

    rec(max(a_max, b_max), 0, 0, ())
    return out


def symbols_of_dim(dim: tuple[int, int]) -> list[Symbol]:
    """All decomposition symbols with dimension vector exactly ``dim``."""
    target = DimVector(*dim)
    out = []
    for proj in _index_multisets(target, "P"):
        pd = dim_vector(Symbol(proj=proj))
        rest = target - pd
        for inj in _index_multisets(rest, "I"):
            idim = dim_vector(Symbol(inj=inj))
            left = rest - idim
            if left.a != left.b or left.a < 0:
                continue
            for seg in segre_symbols_of_weight(left.a):
                out.append(Symbol(proj, seg, inj))
    return canonical(out)


def symbols_up_to(max_dim: tuple[int, int]) -> list[Symbol]:
    """All symbols with dimension vector componentwise <= max_dim (zero included)."""
    out = []
    for a in range(max_dim[0] + 1):
        for b in range(max_dim[1] + 1):
            out.extend(symbols_of_dim((a, b)))
    return out
