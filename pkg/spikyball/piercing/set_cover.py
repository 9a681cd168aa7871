"""Exact minimum set cover over bitmasks by branch and bound.

Elements are bit positions; each candidate is a mask of the elements it
covers. The search branches on the uncovered element with the fewest
covering candidates and prunes with ceil(remaining / best single coverage).
"""

import logging
import math
from typing import Dict, List, Optional, Sequence

logger = logging.getLogger(__name__)


def _dedup(masks: Sequence[int]) -> Dict[int, int]:
    """Map each distinct non-empty mask to its first candidate index."""
    first: Dict[int, int] = {}
    for index, mask in enumerate(masks):
        if mask and mask not in first:
            first[mask] = index
    return first


def _undominated(first: Dict[int, int]) -> List[int]:
    """Masks that are not a subset of another kept mask, largest first."""
    ordered = sorted(first, key=lambda m: (-m.bit_count(), first[m]))
    kept: List[int] = []
    for mask in ordered:
        if not any(mask | other == other for other in kept):
            kept.append(mask)
    return kept


def greedy_set_cover(universe: int, masks: Sequence[int]) -> Optional[List[int]]:
    """Greedy max-coverage; indices into ``masks`` or None if infeasible."""
    covered = 0
    chosen: List[int] = []
    while covered != universe:
        best_index, best_gain = -1, 0
        for index, mask in enumerate(masks):
            gain = (mask & ~covered).bit_count()
            if gain > best_gain:
                best_index, best_gain = index, gain
        if best_gain == 0:
            return None
        chosen.append(best_index)
        covered |= masks[best_index]
    return chosen


def exact_set_cover(
    universe: int, masks: Sequence[int], node_limit: int = 2_000_000
) -> Optional[List[int]]:
    """Indices into ``masks`` of a minimum cover of ``universe``.

    Returns None when the candidates cannot cover the universe.

    Raises:
        RuntimeError: if the search exceeds ``node_limit`` nodes.
    """
    if universe == 0:
        return []
    first = _dedup(masks)
    kept = _undominated(first)
    greedy = greedy_set_cover(universe, kept)
    if greedy is None:
        return None

    element_to_masks: Dict[int, List[int]] = {}
    for bit in range(universe.bit_length()):
        if (universe >> bit) & 1:
            element_to_masks[bit] = [
                k for k, mask in enumerate(kept) if (mask >> bit) & 1
            ]

    best: List[int] = list(greedy)
    visited = 0

    def search(covered: int, chosen: List[int]) -> None:
        nonlocal best, visited
        visited += 1
        if visited > node_limit:
            raise RuntimeError(f"Set cover search exceeded {node_limit} nodes")
        if covered == universe:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + 1 >= len(best):
            return
        remaining = universe & ~covered
        max_gain = max((mask & remaining).bit_count() for mask in kept)
        if max_gain == 0:
            return
        if len(chosen) + math.ceil(remaining.bit_count() / max_gain) >= len(best):
            return

        options = None
        bits = remaining
        while bits:
            low = bits & -bits
            bit = low.bit_length() - 1
            candidates = element_to_masks[bit]
            if options is None or len(candidates) < len(options):
                options = candidates
            bits ^= low
        ordered = sorted(options, key=lambda k: -(kept[k] & remaining).bit_count())
        for k in ordered:
            chosen.append(k)
            search(covered | kept[k], chosen)
            chosen.pop()

    search(0, [])
    logger.debug(
        f"Set cover: {len(best)} sets (greedy {len(greedy)}), {visited} nodes"
    )
    return sorted(first[kept[k]] for k in best)
