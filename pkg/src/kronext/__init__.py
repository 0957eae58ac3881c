"""Extension monoid products of Kronecker modules via decomposition symbols."""

from .monoid import normalize_word, product, product_chain, product_sets
from .symbols import (
    ZERO,
    Symbol,
    SegreSymbol,
    class_size,
    defect,
    dim_vector,
    format_symbol,
    inj_sym,
    parse_symbol,
    proj_sym,
    reg_sym,
)

__all__ = [
    "ZERO",
    "SegreSymbol",
    "Symbol",
    "class_size",
    "defect",
    "dim_vector",
    "format_symbol",
    "inj_sym",
    "normalize_word",
    "parse_symbol",
    "product",
    "product_chain",
    "product_sets",
    "proj_sym",
    "reg_sym",
]
