"""Non-binary single-indel-correcting codes.

Thin string-based facade over the C++ core: differential transforms,
syndrome membership and enumeration, a logarithmic-localization decoder for
one deletion or insertion, two linear-time encoders, classic baselines, and
channel/fuzz tooling. Words are digit strings for alphabets up to 10 and
comma-separated symbol lists beyond.
"""

from ._core import (  # noqa: F401
    BudgetError,
    UncorrectableError,
    __version__,
    best_syndrome,
    binary_vt_member,
    brute_force_indel_decode,
    check_disjointness,
    decode,
    decode1,
    decode2,
    delete_at,
    diff,
    encode1,
    encode2,
    encode2_traced,
    enumerate_code,
    frame_length,
    fuzz_roundtrip,
    gamma_p,
    indel_ball,
    insert_at,
    inv_diff,
    inv_gamma_p,
    is_member,
    is_subsequence,
    mod_inverse,
    random_corrupt,
    redundancy_row,
    signature,
    syndrome,
    syndrome_histogram,
    tenengolts_member,
)

__all__ = [
    "BudgetError",
    "UncorrectableError",
    "__version__",
    "best_syndrome",
    "binary_vt_member",
    "brute_force_indel_decode",
    "check_disjointness",
    "decode",
    "decode1",
    "decode2",
    "delete_at",
    "diff",
    "encode1",
    "encode2",
    "encode2_traced",
    "enumerate_code",
    "frame_length",
    "fuzz_roundtrip",
    "gamma_p",
    "indel_ball",
    "insert_at",
    "inv_diff",
    "inv_gamma_p",
    "is_member",
    "is_subsequence",
    "mod_inverse",
    "random_corrupt",
    "redundancy_row",
    "signature",
    "syndrome",
    "syndrome_histogram",
    "tenengolts_member",
]
