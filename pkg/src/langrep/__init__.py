"""Graphs represented by words through binary-language membership oracles."""

from .codec import (
    EncodingReport,
    decode,
    encode,
    encode_bipartite_lyndon,
    encode_bipartite_palindrome,
    encode_cluster,
    encode_copy,
    encode_detp,
    encode_dyck,
    encode_interval_union,
    encode_lyndon,
    encode_mod_scheme,
    encode_palindrome,
    encode_sparse,
    report_size,
)
from .errors import (
    ClassViolationError,
    InputFormatError,
    InvalidArgumentsError,
    LangRepError,
    OracleMisuseError,
    ResourceLimitError,
    SpecSyntaxError,
)
from .graphs import (
    ClassWitness,
    Graph,
    HostGraph,
    canonical_form,
    complement_graph,
    is_isomorphic,
    recognize,
)
from .languages import LanguageOracle, check_symmetry, make_oracle, membership, unary_shuffle_subset

__version__ = "0.1.0"
