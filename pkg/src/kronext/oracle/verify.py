"""Compare the combinatorial product with the brute-force oracle."""

from __future__ import annotations

import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

from ..monoid import product
from ..symbols import Symbol, canonical, class_size, dim_vector, format_symbol, parse_symbol, symbols_up_to
from .extensions import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    SubmoduleTable,
    enumerate_concrete,
    ext_middle_terms,
)


@dataclass
class ProductReport:
    alpha: str
    beta: str
    q: int
    status: str  # "match", "mismatch" or "skipped"
    method: str = ""
    missing: list[str] = field(default_factory=list)  # predicted, not realized
    extra: list[str] = field(default_factory=list)  # realized, not predicted
    seconds: float = 0.0
    observed: list[str] = field(default_factory=list)

    @property
    def match(self) -> bool:
        return self.status == "match"

    def to_json(self) -> dict:
        return asdict(self)


def expected_over(alpha: Symbol, beta: Symbol, q: int) -> frozenset[Symbol]:
    """Combinatorial product restricted to classes that are nonempty over F_q."""
    return frozenset(g for g in product(alpha, beta) if class_size(g, q) > 0)


def _compare(alpha, beta, q, observed, method, t0) -> ProductReport:
    expected = expected_over(alpha, beta, q)
    missing = [format_symbol(s) for s in canonical(expected - observed)]
    extra = [format_symbol(s) for s in canonical(observed - expected)]
    return ProductReport(
        format_symbol(alpha),
        format_symbol(beta),
        q,
        "match" if not missing and not extra else "mismatch",
        method,
        missing,
        extra,
        time.perf_counter() - t0,
        [format_symbol(s) for s in canonical(observed)],
    )


def verify_product(
    alpha: Symbol, beta: Symbol, q: int, budget: int = DEFAULT_BUDGET, table: Optional[SubmoduleTable] = None
) -> ProductReport:
    """Check product(alpha, beta) against extensions over F_q.

    Uses the gluing route when the Ext groups fit the budget, otherwise the
    submodule route (when a table is supplied); symbols whose class is empty
    over F_q are left out on both sides.
    """
    t0 = time.perf_counter()
    if class_size(alpha, q) == 0 or class_size(beta, q) == 0:
        return ProductReport(format_symbol(alpha), format_symbol(beta), q, "skipped", "empty class")
    try:
        observed = ext_middle_terms(alpha, beta, q, budget)
        method = "gluing"
    except BudgetExceeded:
        if table is None:
            return ProductReport(format_symbol(alpha), format_symbol(beta), q, "skipped", "budget")
        observed = table.symbol_product(alpha, beta)
        method = "submodules"
    return _compare(alpha, beta, q, observed, method, t0)


# ---------------------------------------------------------------------------
# sweeps


def _pairs_for_class(args):
    q, X = args
    table = SubmoduleTable(q)
    return X, table.pairs(X)


def oracle_product_table(
    q: int, max_dim: tuple[int, int], jobs: int = 1
) -> dict[tuple[Symbol, Symbol], set[Symbol]]:
    """(alpha, beta) -> symbols of middle terms, for every X of dim <= max_dim over F_q."""
    classes = []
    for sym in symbols_up_to(max_dim):
        classes.extend((q, X) for X in enumerate_concrete(sym, q))
    out: dict[tuple[Symbol, Symbol], set[Symbol]] = defaultdict(set)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_pairs_for_class, classes, chunksize=4))
    else:
        results = map(_pairs_for_class, classes)
    for X, pairs in results:
        for Q, S in pairs:
            out[(Q.symbol, S.symbol)].add(X.symbol)
    return out


def symbol_pairs(max_dim: tuple[int, int]) -> list[tuple[Symbol, Symbol]]:
    """All (alpha, beta) with dim alpha + dim beta <= max_dim componentwise."""
    syms = symbols_up_to(max_dim)
    out = []
    for alpha in syms:
        da = dim_vector(alpha)
        for beta in syms:
            db = dim_vector(beta)
            if da.a + db.a <= max_dim[0] and da.b + db.b <= max_dim[1]:
                out.append((alpha, beta))
    return out


def verify_sweep(q: int, max_dim: tuple[int, int], jobs: int = 1) -> list[ProductReport]:
    """Every symbol pair within max_dim, checked via the submodule route."""
    table = oracle_product_table(q, max_dim, jobs)
    reports = []
    for alpha, beta in symbol_pairs(max_dim):
        if class_size(alpha, q) == 0 or class_size(beta, q) == 0:
            reports.append(ProductReport(format_symbol(alpha), format_symbol(beta), q, "skipped", "empty class"))
            continue
        observed = frozenset(table.get((alpha, beta), ()))
        reports.append(_compare(alpha, beta, q, observed, "submodules", time.perf_counter()))
    return reports


def compare_fields(reports_p: Iterable[ProductReport], reports_q: Iterable[ProductReport]) -> list[str]:
    """Pairs whose oracle sets differ between two fields.

    Only pairs checked over both fields count, and each side is cut down to
    the symbols whose classes are nonempty over both fields.
    """
    rq = {(r.alpha, r.beta): r for r in reports_q}
    bad = []
    for r in reports_p:
        other = rq.get((r.alpha, r.beta))
        if other is None or r.status == "skipped" or other.status == "skipped":
            continue
        p, q = r.q, other.q

        def keep(text: str) -> bool:
            sym = parse_symbol(text)
            return class_size(sym, p) > 0 and class_size(sym, q) > 0

        if {s for s in r.observed if keep(s)} != {s for s in other.observed if keep(s)}:
            bad.append(f"{r.alpha} * {r.beta}")
    return bad
