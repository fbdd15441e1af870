"""
SP([n]) enumeration, its cardinalities, and structural domain checks.

  enumerate_sp            all 2^(n−1) single-peaked orders, via sign decoding
  count_by_top            C(n−1, i−1) orders peak at i
  is_minimally_rich       every alternative tops some order
  has_maximal_width       α = 12…n and ω = n…1 both present
  classify_triple_restriction / is_peak_pit
                          per-triple single-peaked / single-pit classification

A triple i < j < k is read on its induced axis i < j < k:
  single-peaked  — j is never ranked last in a restriction
  single-pit     — j is never ranked first, i.e. restrictions ⊆ {ijk, ikj, kij, kji}
"""

import itertools
import logging
from collections import Counter
from enum import Enum
from math import comb

from config import SP_MAX_N
from domains.model import Domain
from errors import MismatchedSize, ResourceLimit
from orders.core import LinearOrder, identity_order, restrict, reversal_order
from signs.codec import all_sign_sequences, decode

logger = logging.getLogger(__name__)

Triple = tuple[int, int, int]


class TripleKind(str, Enum):
    SINGLE_PEAKED = "SinglePeaked"
    SINGLE_PIT = "SinglePit"
    BOTH = "Both"
    NEITHER = "Neither"


def enumerate_sp(n: int, max_n: int = SP_MAX_N) -> Domain:
    """
    SP([n]), sorted lexicographically by ranking.

    Raises:
        ResourceLimit: n above max_n (default SP_MAX_N).
    """
    if n < 1:
        raise MismatchedSize(f"n must be positive, got {n}.")
    if n > max_n:
        raise ResourceLimit("SP([n]) enumeration n", n, max_n)
    orders = sorted(decode(s) for s in all_sign_sequences(n))
    logger.debug("Enumerated SP([%d]): %d orders.", n, len(orders))
    return Domain(n, tuple(orders))


def count_by_top(n: int) -> list[int]:
    """Entry i−1 = number of SP([n]) orders with peak i = C(n−1, i−1)."""
    if n < 1:
        raise MismatchedSize(f"n must be positive, got {n}.")
    return [comb(n - 1, i - 1) for i in range(1, n + 1)]


def tally_tops(domain: Domain) -> list[int]:
    """Observed peak counts of a domain, entry i−1 for alternative i."""
    tops = Counter(o.top for o in domain)
    return [tops.get(i, 0) for i in range(1, domain.n + 1)]


def is_minimally_rich(domain: Domain) -> bool:
    return {o.top for o in domain} == set(range(1, domain.n + 1))


def has_maximal_width(domain: Domain) -> bool:
    return identity_order(domain.n) in domain and reversal_order(domain.n) in domain


def _check_triple(domain: Domain, triple: Triple) -> Triple:
    i, j, k = triple
    if not 1 <= i < j < k <= domain.n:
        raise MismatchedSize(
            f"Triple {triple} must satisfy 1 ≤ i < j < k ≤ {domain.n}."
        )
    return i, j, k


def restriction_set(domain: Domain, triple: Triple) -> list[LinearOrder]:
    """Distinct restrictions of the domain's orders to the triple, sorted."""
    i, j, k = _check_triple(domain, triple)
    return sorted({restrict(o, (i, j, k)) for o in domain})


def classify_triple_restriction(domain: Domain, triple: Triple) -> TripleKind:
    _, j, _ = _check_triple(domain, triple)
    restricted = restriction_set(domain, triple)
    peaked = all(r.ranking[-1] != j for r in restricted)
    pit = all(r.ranking[0] != j for r in restricted)
    if peaked and pit:
        return TripleKind.BOTH
    if peaked:
        return TripleKind.SINGLE_PEAKED
    if pit:
        return TripleKind.SINGLE_PIT
    return TripleKind.NEITHER


def triple_classification(domain: Domain) -> dict[Triple, TripleKind]:
    """Classification of every triple, in lexicographic triple order."""
    return {
        t: classify_triple_restriction(domain, t)
        for t in itertools.combinations(range(1, domain.n + 1), 3)
    }


def is_peak_pit(domain: Domain) -> bool:
    """No triple classifies Neither.  Vacuously true for n < 3."""
    for triple in itertools.combinations(range(1, domain.n + 1), 3):
        if classify_triple_restriction(domain, triple) is TripleKind.NEITHER:
            logger.debug("Triple %s is neither single-peaked nor single-pit.", triple)
            return False
    return True
