"""Distinguished partitions and the m-special / m-good classifiers.

A partition is m-special exactly when its first part fits under m(l-1)
and the Mullineux length of the transposed restricted part is at most m.
The classifier decides by that rule; the sum-of-distinguished-partitions
witness is generated separately (constructively for restricted input,
by bounded search otherwise) and the equivalence of the two views is the
business of the special-decomposition suite, not an assumption here.

m-good is decidable for restricted partitions and, inside the reciprocity
bound, coincides with m-special.  Above the bound for non-restricted input
no combinatorial criterion is available; the verdict is an honest
"unknown" unless the restricted part already obstructs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import (
    EMPTY,
    Partition,
    _check_l,
    add,
    is_restricted,
    partitions_of,
    restricted_decompose,
    transpose,
)
from .mullineux import mullineux_components, mullineux_length

RULE_MULL_LENGTH = "restricted-mull-length"
RULE_BOUND = "bound-violation"
RULE_STEINBERG = "steinberg-reduction"

PROV_SPECIAL_BOUND = "special-within-bound"
PROV_RESTRICTED_PART = "restricted-part-obstruction"
PROV_UNDECIDED = "requires full q-Schur data"

Witness = tuple[tuple[int, Partition], ...]


@dataclass(frozen=True)
class SpecialVerdict:
    special: bool
    rule: str
    witness: Witness | None

    def to_json(self) -> dict:
        return {
            "special": self.special,
            "rule": self.rule,
            "witness": None
            if self.witness is None
            else [[q, list(eta)] for q, eta in self.witness],
        }


@dataclass(frozen=True)
class GoodVerdict:
    status: str  # "yes" | "no" | "unknown"
    provenance: str

    def to_json(self) -> dict:
        return {"status": self.status, "provenance": self.provenance}


def is_distinguished(lam: Partition, m: int, l: int) -> bool:
    """Restricted part = (l-m)^k followed by at most m parts below l-m,
    scaled part with first entry below m.  Needs 0 < m < l; the zero
    partition qualifies for every admissible m."""
    _check_l(l)
    if not 0 < m < l:
        raise ValueError("distinguished undefined")
    lam = Partition(lam)
    head, tail = restricted_decompose(lam, l)
    if tail.part(1) >= m:
        return False
    if head.part(1) > l - m:
        return False
    k = sum(1 for p in head if p == l - m)
    return len(head) - k <= m


def phi_contains(lam: Partition, m: int, l: int) -> bool:
    """At most m parts and first-minus-m-th part at most l-m."""
    _check_l(l)
    if not 0 < m < l:
        raise ValueError("parameter range: need 0 < m < l")
    lam = Partition(lam)
    primary = len(lam) <= m and lam.part(1) - lam.part(m) <= l - m
    # equivalent reading: lam = r^m + alpha with alpha_1 <= l-m, len(alpha) < m
    alt = False
    if len(lam) <= m:
        r = lam.part(m)
        alpha = Partition(lam.part(i) - r for i in range(1, m + 1))
        alt = alpha.part(1) <= l - m and len(alpha) < m
    if primary != alt:
        raise RuntimeError(f"the two membership readings disagree on {lam}")
    return primary


def restricted_part_mull_length(lam: Partition, l: int) -> int:
    """Mullineux length of the transposed restricted part; the classifier core."""
    head, _ = restricted_decompose(lam, l)
    return mullineux_length(transpose(head), l)


def _special_bool(lam: Partition, m: int, l: int) -> bool:
    return lam.part(1) <= m * (l - 1) and restricted_part_mull_length(lam, l) <= m


def is_m_special(lam: Partition, m: int, l: int) -> SpecialVerdict:
    """Classify and, when special, attach a distinguished-sum witness."""
    _check_l(l)
    lam = Partition(lam)
    if m < 0:
        raise ValueError("m must be nonnegative")
    if lam.part(1) > m * (l - 1):
        return SpecialVerdict(False, RULE_BOUND, None)
    rule = RULE_MULL_LENGTH if is_restricted(lam, l) else RULE_STEINBERG
    if restricted_part_mull_length(lam, l) > m:
        return SpecialVerdict(False, rule, None)
    witness = distinguished_decomposition(lam, m, l)
    if witness is None or not witness_is_valid(lam, m, l, witness):
        raise RuntimeError(f"classifier accepted {lam} but no valid witness was built")
    return SpecialVerdict(True, rule, witness)


# ---------------------------------------------------------------------------
# witness generation


def _zero_padding(amount: int, l: int) -> list[tuple[int, Partition]]:
    out: list[tuple[int, Partition]] = []
    while amount > 0:
        chunk = min(l - 1, amount)
        out.append((chunk, EMPTY))
        amount -= chunk
    return out


def _subtract(lam: Partition, eta: Partition) -> Partition:
    return Partition(lam.part(i) - eta.part(i) for i in range(1, len(lam) + 1))


def _fits_under(lam: Partition, eta: Partition) -> bool:
    if len(eta) > len(lam):
        return False
    prev = None
    for i in range(1, len(lam) + 1):
        d = lam.part(i) - eta.part(i)
        if d < 0 or (prev is not None and d > prev):
            return False
        prev = d
    return True


def _nonzero_distinguished_fits(lam: Partition, q: int, l: int) -> list[Partition]:
    out = []
    for d in range(lam.degree, 0, -1):
        for eta in partitions_of(d, max_len=len(lam), max_part=lam.part(1)):
            if _fits_under(lam, eta) and is_distinguished(eta, q, l):
                out.append(eta)
    return out


@lru_cache(maxsize=None)
def _assign(lam: Partition, params: tuple[int, ...], l: int) -> Witness | None:
    if not params:
        return () if lam.degree == 0 else None
    q = params[0]
    for eta in _nonzero_distinguished_fits(lam, q, l):
        tail = _assign(_subtract(lam, eta), params[1:], l)
        if tail is not None:
            return ((q, eta),) + tail
    return None


def distinguished_decomposition(lam: Partition, m: int, l: int) -> Witness | None:
    """A sum decomposition into m_i-distinguished parts with total budget m.

    Restricted input gets the constructive split: transpose, cut into
    components, transpose back, with each budget the component's Mullineux
    length.  Otherwise a bounded search runs, preferring the fewest nonzero
    summands, largest parameters and largest parts first; leftover budget
    is filled with zero summands in chunks below l.
    """
    _check_l(l)
    lam = Partition(lam)
    if m < 0:
        raise ValueError("m must be nonnegative")
    if lam.degree == 0:
        return tuple(_zero_padding(m, l))
    if m == 0:
        return None
    if lam.part(1) > m * (l - 1):
        # a q-distinguished partition has first part at most q(l-1)
        return None
    if is_restricted(lam, l):
        comps = mullineux_components(transpose(lam), l)
        pieces = [(mullineux_length(c, l), transpose(c)) for c in comps]
        used = sum(q for q, _ in pieces)
        if used > m:
            return None
        return tuple(pieces + _zero_padding(m - used, l))
    for nonzero in range(1, m + 1):
        for total in range(min(m, nonzero * (l - 1)), nonzero - 1, -1):
            for params in partitions_of(total, max_len=nonzero, max_part=l - 1):
                if len(params) != nonzero:
                    continue
                found = _assign(lam, tuple(params), l)
                if found is not None:
                    return tuple(list(found) + _zero_padding(m - total, l))
    return None


def witness_is_valid(lam: Partition, m: int, l: int, witness: Witness) -> bool:
    try:
        total = 0
        acc = EMPTY
        for q, eta in witness:
            if not 0 < q < l or not is_distinguished(eta, q, l):
                return False
            total += q
            acc = add(acc, eta)
        return total == m and acc == Partition(lam)
    except ValueError:
        return False


# ---------------------------------------------------------------------------
# m-good


def is_m_good(lam: Partition, m: int, l: int, oracle=None) -> GoodVerdict:
    """Tri-state verdict; `oracle` may carry a decomposition matrix of the
    right degree to double-check the restricted rule."""
    _check_l(l)
    lam = Partition(lam)
    if m < 1:
        raise ValueError("m must be positive")
    core_len = restricted_part_mull_length(lam, l)
    if is_restricted(lam, l):
        yes = core_len <= m
        if oracle is not None:
            _oracle_confirm(lam, m, l, oracle, yes)
        return GoodVerdict("yes" if yes else "no", RULE_MULL_LENGTH)
    if lam.part(1) <= m * (l - 1):
        return GoodVerdict("yes" if core_len <= m else "no", PROV_SPECIAL_BOUND)
    if core_len > m:
        return GoodVerdict("no", PROV_RESTRICTED_PART)
    return GoodVerdict("unknown", PROV_UNDECIDED)


def _oracle_confirm(lam: Partition, m: int, l: int, matrix, expected: bool) -> None:
    from .mullineux import mullineux

    if matrix.degree != lam.degree or matrix.l != l:
        raise ValueError("oracle matrix does not match the partition's degree and l")
    col = mullineux(transpose(lam), l)
    observed = any(len(tau) <= m and matrix.entry(tau, col) for tau in matrix.rows)
    if observed != expected:
        raise RuntimeError(
            f"decomposition-number oracle disagrees with the length rule on {lam}"
        )


def enumerate_special(
    m: int, l: int, degree: int, restricted_only: bool = False
) -> list[Partition]:
    """The m-special partitions of the degree, in enumeration (lex-descending) order."""
    _check_l(l)
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = []
    for lam in partitions_of(degree):
        if restricted_only and not is_restricted(lam, l):
            continue
        if _special_bool(lam, m, l):
            out.append(lam)
    return out
