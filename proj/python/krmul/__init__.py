"""Multi-precision natural-number multiplication with a space-efficient
in-place Karatsuba core, plus schoolbook and scratch-based Karatsuba
baselines for cross-checking."""

from ._core import (
    default_threshold,
    ecase_counters,
    mul_limbs,
    parse_hex,
    reset_ecase_counters,
    to_hex,
)

__all__ = [
    "default_threshold",
    "ecase_counters",
    "int_to_limbs",
    "limbs_to_int",
    "mul",
    "mul_limbs",
    "parse_hex",
    "reset_ecase_counters",
    "to_hex",
]


def int_to_limbs(x, rho=1 << 16):
    """Render a non-negative int as limbs, most significant first."""
    if x < 0:
        raise ValueError("negative values are not representable")
    limbs = []
    while x:
        x, r = divmod(x, rho)
        limbs.append(r)
    limbs.reverse()
    return limbs or [0]


def limbs_to_int(limbs, rho=1 << 16):
    v = 0
    for l in limbs:
        v = v * rho + l
    return v


def mul(a, b, algo="kr", radix_bits=16, threshold=None):
    """Multiply two non-negative ints through the limb kernels."""
    rho = 1 << radix_bits
    if threshold is None:
        threshold = default_threshold
    product = mul_limbs(
        int_to_limbs(a, rho), int_to_limbs(b, rho), rho, algo, threshold
    )
    return limbs_to_int(product, rho)
