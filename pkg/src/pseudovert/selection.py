"""Comparison-based selection used by the prune-and-search routines."""

from __future__ import annotations

import random
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
Less = Callable[[T, T], bool]


def _insertion_sort(items, less):
    out = []
    for it in items:
        i = len(out)
        while i > 0 and less(it, out[i - 1]):
            i -= 1
        out.insert(i, it)
    return out


def _pivot(items, less, rng):
    if rng is not None:
        return rng.choice(items)
    if len(items) <= 5:
        return _insertion_sort(items, less)[(len(items) - 1) // 2]
    medians = [
        _insertion_sort(items[i:i + 5], less)[(len(items[i:i + 5]) - 1) // 2]
        for i in range(0, len(items), 5)
    ]
    return select_kth(medians, (len(medians) + 1) // 2, less)


def split_kth(items: Sequence[T], k: int, less: Less, rng: random.Random | None = None):
    """Partition ``items`` into the ``k`` smallest and the rest.

    Expected linear comparisons with ``rng`` (quickselect), worst-case linear
    without it (median of medians).  ``less`` must be a strict total order.
    """
    items = list(items)
    if not 0 <= k <= len(items):
        raise ValueError("k out of range")
    low, high = [], []
    while items:
        if k == 0:
            high.extend(items)
            break
        if k == len(items):
            low.extend(items)
            break
        piv = _pivot(items, less, rng)
        small, large = [], []
        for it in items:
            if it is piv:
                continue
            (small if less(it, piv) else large).append(it)
        if k <= len(small):
            high.append(piv)
            high.extend(large)
            items = small
        else:
            low.extend(small)
            low.append(piv)
            k -= len(small) + 1
            items = large
    return low, high


def select_kth(items: Sequence[T], k: int, less: Less, rng: random.Random | None = None) -> T:
    """The ``k``-th smallest element (1-based)."""
    if not 1 <= k <= len(items):
        raise ValueError("k out of range")
    items = list(items)
    while True:
        if len(items) == 1:
            return items[0]
        piv = _pivot(items, less, rng)
        small, large = [], []
        for it in items:
            if it is piv:
                continue
            (small if less(it, piv) else large).append(it)
        if k <= len(small):
            items = small
        elif k == len(small) + 1:
            return piv
        else:
            k -= len(small) + 1
            items = large


def minimum(items: Sequence[T], less: Less) -> T:
    best = items[0]
    for it in items[1:]:
        if less(it, best):
            best = it
    return best
