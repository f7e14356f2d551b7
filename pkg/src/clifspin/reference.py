"""Slow reference routines kept independent of the fast paths they check.

Nothing here touches the precomputed product tables: products are formed by
writing blades as generator words and bubble-sorting them, and quaternions use
Hamilton's formula directly.
"""
from __future__ import annotations

import numpy as np

from .algebra import Multivector, Signature


def reduce_word(sig: Signature, word: list[int]) -> tuple[int, tuple[int, ...]]:
    """Bring a word of generator indices to ascending order.

    Each adjacent swap of distinct generators costs a sign; adjacent equal
    generators contract to their square.
    """
    w = list(word)
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(w) - 1:
            if w[i] == w[i + 1]:
                sign *= sig.square(w[i])
                del w[i : i + 2]
                changed = True
            elif w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                sign = -sign
                changed = True
                i += 1
            else:
                i += 1
    return sign, tuple(w)


def word_of(mask: int) -> list[int]:
    return [i + 1 for i in range(4) if mask >> i & 1]


def mask_of(word: tuple[int, ...]) -> int:
    return sum(1 << (i - 1) for i in word)


def slow_product(a: Multivector, b: Multivector) -> Multivector:
    sig = a.sig
    out = np.zeros(sig.dim)
    for ma, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for mb, cb in enumerate(b.coeffs):
            if cb == 0:
                continue
            s, w = reduce_word(sig, word_of(ma) + word_of(mb))
            out[mask_of(w)] += s * ca * cb
    return Multivector(sig, out)


def hamilton(q1, q2) -> np.ndarray:
    """Quaternion product of ``(w, x, y, z)`` tuples with ``ij = k``."""
    w1, x1, y1, z1 = q1
    w2, x2, y2, z2 = q2
    return np.array(
        [
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ]
    )
