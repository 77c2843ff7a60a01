"""Inductive terms for functions that both relabel- and filter-commute.

A term is a sequence of signed blocks.  Block ("P", n) emits every input
element n times in input order; ("N", n) emits the same but reversed.  The
empty term emits nothing.  Terms denote exactly the functions that commute
with both relabelling and filtering, and there are 2*3^(k-1) distinct terms
whose per-element output count is k.
"""

from collections import Counter
from dataclasses import dataclass

from .errors import InvalidBlockError
from .lists import as_tuple, inflate, repeat_elem, reverse
from .equivariance import PropertyReport, Scope, check_filter_equivariant

_SIGNS = ("P", "N")


@dataclass(frozen=True)
class NfeTerm:
    blocks: tuple = ()

    def __post_init__(self):
        norm = []
        for block in self.blocks:
            try:
                sign, n = block
            except (TypeError, ValueError):
                raise InvalidBlockError("block %r is not a (sign, count) pair" % (block,))
            if sign not in _SIGNS:
                raise InvalidBlockError("sign %r is not 'P' or 'N'" % (sign,))
            if not isinstance(n, int) or n < 1:
                raise InvalidBlockError("count %r is not a positive integer" % (n,))
            norm.append((sign, n))
        object.__setattr__(self, "blocks", tuple(norm))

    @property
    def weight(self):
        return sum(n for _, n in self.blocks)

    def to_json_dict(self):
        return {"blocks": [[sign, n] for sign, n in self.blocks]}


Z = NfeTerm(())


def interpret_nfe(term, xs):
    """Run a term on a list."""
    xs = as_tuple(xs)
    out = ()
    for sign, n in term.blocks:
        seg = inflate(n, xs)
        out += reverse(seg) if sign == "N" else seg
    return out


def inflation_factor(term):
    """Output elements produced per input element."""
    return term.weight


def nfe_to_blocks(term):
    return [[sign, n] for sign, n in term.blocks]


def blocks_to_nfe(obj):
    """Build a term from [[sign, n], ...] or {"blocks": [[sign, n], ...]}."""
    if isinstance(obj, dict):
        obj = obj.get("blocks", obj)
    return NfeTerm(tuple((sign, n) for sign, n in obj))


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_k_nfes(k):
    """All terms with inflation factor k, deterministically ordered."""
    if k == 0:
        return [Z]
    from itertools import product

    out = []
    for parts in range(1, k + 1):
        for sizes in _compositions(k, parts):
            for signs in product(_SIGNS, repeat=parts):
                out.append(NfeTerm(tuple(zip(signs, sizes))))
    return out


def count_k_nfes(k):
    if k == 0:
        return 1
    return 2 * 3 ** (k - 1)


@dataclass(frozen=True)
class OccurrenceFn:
    """Finite table (value, input count) -> output length, total at scope."""

    scope: Scope
    table: tuple

    def __call__(self, x, n):
        return dict(self.table)[(x, n)]

    def as_dict(self):
        return dict(self.table)


def compute_occurrence(f, scope=Scope()):
    """Tabulate output length on constant lists: (x, n) -> len(f (n copies of x))."""
    entries = []
    for x in scope.alphabet:
        for n in range(scope.max_len + 1):
            entries.append(((x, n), len(as_tuple(f(repeat_elem(n, x))))))
    return OccurrenceFn(scope, tuple(entries))


def check_multiset_profile(f, scope=Scope()):
    """Output multiset must be {x appearing occ(x, m_x) times, per distinct x}.

    Precondition: f passes filter-equivariance at scope; a violated
    precondition is reported in the result, not ignored.
    """
    if not check_filter_equivariant(f, scope).passed:
        return PropertyReport(
            "multiset_profile", scope, 0, (), {"precondition_failed": "filter"}
        )
    occ = compute_occurrence(f, scope).as_dict()
    witnesses = []
    checked = 0
    for xs in scope.lists():
        checked += 1
        fx = as_tuple(f(xs))
        counts = Counter(xs)
        expected = {x: occ[(x, m)] for x, m in counts.items() if occ[(x, m)]}
        if dict(Counter(fx)) != expected:
            witnesses.append((xs, fx, tuple(sorted(expected.items()))))
    return PropertyReport("multiset_profile", scope, checked, tuple(witnesses))
