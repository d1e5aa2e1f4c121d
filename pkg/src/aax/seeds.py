"""Deterministic seed derivation.

A single pipeline seed fans out into per-model, per-image, per-pass
sub-seeds through a keyed hash, so results are reproducible and
independent of execution order.
"""

import hashlib


def derive_seed(*parts) -> int:
    """Derive a 63-bit seed from a root seed plus any hashable context parts.

    Stable across processes and Python versions (no hash randomization).
    """
    h = hashlib.blake2b(digest_size=8)
    for part in parts:
        h.update(repr(part).encode("utf-8"))
        h.update(b"\x1f")
    return int.from_bytes(h.digest(), "big") & 0x7FFF_FFFF_FFFF_FFFF
