"""Seeded random streams.

A master seed is expanded into independent per-block streams by hashing:
the seed of block ``k`` is the first 8 bytes (little endian) of
``blake2b(f"{master}:{k}", digest_size=8)``.  Draw loops consume one block
stream per ``BLOCK_SIZE`` draws, so output does not depend on how blocks
are distributed across workers.
"""

from __future__ import annotations

import hashlib
import random

BLOCK_SIZE = 4096
DERIVATION = "blake2b-64(master:block), blocks of 4096 draws"


def derive_seed(master: int, index: int) -> int:
    digest = hashlib.blake2b(f"{master}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def block_rng(master: int, index: int) -> random.Random:
    return random.Random(derive_seed(master, index))
