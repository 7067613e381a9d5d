"""Piecewise complexity h(u) and minimality index rho(u) of words."""

from .binary import (
    ReductionTrace,
    eliminate_isolated_letter,
    extremal_binary_word,
    h_rle,
    max_binary_length,
    remove_isolated_pairs,
    rho_formula,
    rho_rle,
)
from .complexity import ComplexityReport, analyze, h, h_detail, rho, rho_detail
from .errors import (
    AlphabetError,
    CapExceeded,
    NoDistinguisher,
    ParseError,
    PatternNotFound,
    PiecewiseError,
    ReductionRequired,
)
from .oracle import (
    INF,
    OracleBudget,
    arch_factorization_k,
    delta,
    ell_oracle,
    h_oracle,
    r_oracle,
    rho_oracle,
    shortest_distinguisher,
    simon_equiv,
)
from .side import (
    SideTable,
    SideVectors,
    build_l_table,
    build_r_table,
    ell_letter,
    ell_word,
    l_vector,
    r_letter,
    r_vector,
    r_word,
    side_vectors,
)
from .words import (
    Alphabet,
    RleWord,
    Word,
    downward_closure,
    format_rle,
    is_subword,
    letter_swap,
    parse_rle,
    reverse,
    rle_decode,
    rle_encode,
    shuffle_set,
    word,
)

__version__ = "0.1.0"
