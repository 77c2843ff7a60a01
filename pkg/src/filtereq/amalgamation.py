"""Reassembling a list function's output on long lists from sublist data.

The key maps: pi_x drops one value from a list, so a list xs with value set
X yields a keyed family {x -> filter(!= x, xs)}.  Amalgamation inverts this:
repeatedly pick the head forced by the family (the unique value that heads
every nonempty list not keyed by it), emit it, and advance the lists that
start with it.  For functions that commute with every filter, applying this
to pointwise-filtered outputs reconstructs the full output, so behaviour on
two-unique-value sublists determines behaviour everywhere (three or more
unique values needed).
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    InvalidExampleError,
    MissingSublistError,
    UniverseTooSmallError,
)
from .lists import as_tuple, enumerate_list, unenumerate, unique_values


def _key_contains(key, x):
    return x in key if isinstance(key, frozenset) else key == x


def _exclude(seq, key):
    if isinstance(key, frozenset):
        return tuple(v for v in seq if v not in key)
    return tuple(v for v in seq if v != key)


@dataclass
class Collection:
    """Lists keyed by what was removed: every value, or every value pair,
    of the universe.  A keyed list never contains its removed value(s).
    Pair keys are frozensets; any other key type is a single value."""

    universe: frozenset
    entries: dict

    def __post_init__(self):
        self.universe = frozenset(self.universe)
        entries = {}
        for key, lst in self.entries.items():
            if isinstance(key, frozenset):
                if len(key) != 2 or not key <= self.universe:
                    raise ValueError("bad pair key %r" % (sorted(key),))
            elif key not in self.universe:
                raise ValueError("key %r is outside the universe" % (key,))
            lst = as_tuple(lst)
            if any(_key_contains(key, v) for v in lst):
                raise ValueError("list for key %r contains a removed value" % (key,))
            entries[key] = lst
        self.entries = entries
        keys = set(entries)
        singles = set(self.universe)
        pairs = {frozenset(p) for p in combinations(sorted(self.universe), 2)}
        if keys == singles:
            self.kind = "element" if self.universe else "empty"
        elif keys == pairs and self.universe:
            self.kind = "pair"
        else:
            raise ValueError("keys must cover every value or every pair exactly")

    def all_empty(self):
        return all(not lst for lst in self.entries.values())


@dataclass(frozen=True)
class AmalgamationOutcome:
    ok: bool
    result: tuple = None
    reason: str = None
    detail: str = ""

    @classmethod
    def success(cls, result):
        return cls(True, as_tuple(result))

    @classmethod
    def failure(cls, reason, detail=""):
        return cls(False, None, reason, detail)

    def to_json_dict(self):
        if self.ok:
            return {"ok": True, "output": list(self.result)}
        return {"ok": False, "reason": self.reason, "detail": self.detail}


def decompose_pi(xs, universe=None):
    """Keyed family of one-value-removed sublists of xs."""
    xs = as_tuple(xs)
    if universe is None:
        universe = frozenset(xs)
    universe = frozenset(universe)
    if not set(xs) <= universe:
        raise ValueError("xs has values outside the declared universe")
    return Collection(universe, {x: _exclude(xs, x) for x in universe})


def decompose_pi_pairs(xs, universe=None):
    """Keyed family of two-value-removed sublists of xs."""
    xs = as_tuple(xs)
    if universe is None:
        universe = frozenset(xs)
    universe = frozenset(universe)
    if not set(xs) <= universe:
        raise ValueError("xs has values outside the declared universe")
    entries = {
        frozenset(p): _exclude(xs, frozenset(p))
        for p in combinations(sorted(universe), 2)
    }
    return Collection(universe, entries)


def is_amalgamable_step(chi):
    """(True, x0) when exactly one value heads every nonempty list not keyed
    by it; (False, None) when no value or several do."""
    if len(chi.universe) < 3:
        raise UniverseTooSmallError(
            "need at least 3 values, got %d" % len(chi.universe)
        )
    candidates = []
    for x in sorted(chi.universe):
        if all(
            lst[0] == x
            for key, lst in chi.entries.items()
            if lst and not _key_contains(key, x)
        ):
            candidates.append(x)
    if len(candidates) == 1:
        return True, candidates[0]
    return False, None


def delta_step(chi, x0):
    """Advance past x0: drop the head of every list that starts with it."""
    entries = {
        key: lst[1:] if lst and lst[0] == x0 else lst
        for key, lst in chi.entries.items()
    }
    return Collection(chi.universe, entries)


def amal(chi):
    """Reassemble the list that decomposes into chi, or report why not."""
    out = []
    cur = chi
    while not cur.all_empty():
        if len(cur.universe) < 3:
            return AmalgamationOutcome.failure(
                "UniverseTooSmall", "universe has %d values" % len(cur.universe)
            )
        ok, x0 = is_amalgamable_step(cur)
        if not ok:
            return AmalgamationOutcome.failure(
                "NoUniqueHead", "after emitting %r" % (out,)
            )
        if not any(lst and lst[0] == x0 for lst in cur.entries.values()):
            return AmalgamationOutcome.failure(
                "Inconsistent", "head %r advances no list" % (x0,)
            )
        out.append(x0)
        cur = delta_step(cur, x0)
    result = tuple(out)
    for key, lst in chi.entries.items():
        if _exclude(result, key) != lst:
            return AmalgamationOutcome.failure(
                "Inconsistent", "result does not re-decompose at key %r" % (key,)
            )
    return AmalgamationOutcome.success(result)


def two_unique_sublists(xs):
    """Table {frozenset({x, y}) -> the sublist of xs keeping only x and y}."""
    xs = as_tuple(xs)
    uniq = unique_values(xs)
    if len(uniq) < 3:
        raise UniverseTooSmallError(
            "need at least 3 unique values, got %d" % len(uniq)
        )
    return {
        frozenset((x, y)): tuple(v for v in xs if v == x or v == y)
        for x, y in combinations(uniq, 2)
    }


def _normalized_table(f_on_sublists, pairs):
    table = {}
    for key, lst in f_on_sublists.items():
        key = frozenset(key) if isinstance(key, (frozenset, set, tuple)) else key
        table[key] = as_tuple(lst)
    for pair in pairs:
        if pair not in table:
            raise MissingSublistError("no entry for pair %r" % (sorted(pair),))
        if not set(table[pair]) <= pair:
            return table, AmalgamationOutcome.failure(
                "Inconsistent",
                "entry for %r contains foreign values" % (sorted(pair),),
            )
    return table, None


def _majority_assembly(keys, lsts):
    """Emit, round by round, the head agreed by most non-exhausted lists."""
    pos = [0] * len(lsts)
    out = []
    while True:
        scores = Counter(
            lst[p] for lst, p in zip(lsts, pos) if p < len(lst)
        )
        if not scores:
            break
        (x0, best), *rest = scores.most_common()
        if rest and rest[0][1] == best:
            return None, AmalgamationOutcome.failure(
                "NoUniqueHead", "tied heads after emitting %r" % (out,)
            )
        out.append(x0)
        for i, lst in enumerate(lsts):
            if pos[i] < len(lst) and lst[pos[i]] == x0:
                pos[i] += 1
    result = tuple(out)
    for key, lst in zip(keys, lsts):
        if tuple(v for v in result if v in key) != lst:
            return None, AmalgamationOutcome.failure(
                "Inconsistent", "result does not restrict to the entry for %r"
                % (sorted(key),)
            )
    return result, None


def extrapolate_fe(f_on_sublists, xs):
    """Output of a filter-commuting function on xs, from its outputs on the
    two-unique-value sublists of xs.

    The table maps frozenset pairs to output lists.  Up to two unique values
    are answered from the table directly; three go through keyed
    amalgamation; four or more use one majority-vote assembly pass.
    """
    xs = as_tuple(xs)
    uniq = unique_values(xs)
    u = len(uniq)
    if u == 0:
        return AmalgamationOutcome.success(())
    if u == 1:
        return AmalgamationOutcome.failure(
            "UniverseTooSmall",
            "single-value lists are not determined by pair sublists",
        )
    pairs = [frozenset(p) for p in combinations(uniq, 2)]
    table, err = _normalized_table(f_on_sublists, pairs)
    if err is not None:
        return err
    if u == 2:
        return AmalgamationOutcome.success(table[pairs[0]])
    if u == 3:
        universe = frozenset(uniq)
        entries = {x: table[universe - {x}] for x in universe}
        try:
            chi = Collection(universe, entries)
        except ValueError as e:
            return AmalgamationOutcome.failure("Inconsistent", str(e))
        return amal(chi)
    result, err = _majority_assembly(pairs, [table[p] for p in pairs])
    if err is not None:
        return err
    return AmalgamationOutcome.success(result)


def extrapolate_nfe_from_doubleton(example_in, example_out, xs):
    """Output on xs of the relabel-and-filter-commuting function whose value
    on one two-distinct-element list is given.

    example_in is that list (two distinct values); example_out its image,
    using only those two values.  Repeated values in xs are handled by
    tagging each element with its position, extrapolating over the tagged
    (all-distinct) list, and untagging."""
    example_in = as_tuple(example_in)
    example_out = as_tuple(example_out)
    if len(example_in) != 2 or example_in[0] == example_in[1]:
        raise InvalidExampleError("example input must hold two distinct values")
    x, y = example_in
    if not set(example_out) <= {x, y}:
        raise InvalidExampleError("example output uses values not in the input")
    xs = as_tuple(xs)
    tagged = len(unique_values(xs)) != len(xs)
    work = enumerate_list(xs) if tagged else xs

    def synth(p, q):
        return tuple(p if v == x else q for v in example_out)

    u = len(work)
    if u == 0:
        res = ()
    elif u == 1:
        gone = object()
        res = tuple(v for v in synth(work[0], gone) if v is not gone)
    elif u == 2:
        res = synth(work[0], work[1])
    else:
        table = {
            frozenset((work[i], work[j])): synth(work[i], work[j])
            for i in range(u)
            for j in range(i + 1, u)
        }
        outcome = extrapolate_fe(table, work)
        if not outcome.ok:
            return outcome
        res = outcome.result
    if tagged:
        res = unenumerate(res)
    return AmalgamationOutcome.success(res)


def square_multiplicity(xs):
    """For each distinct value (first-occurrence order), emit m*m copies
    where m is its multiplicity.  Commutes with every filter, agrees with
    the identity on every two-distinct-value list, yet is not the identity:
    repeated values blow up quadratically."""
    xs = as_tuple(xs)
    counts = Counter(xs)
    return tuple(v for x in unique_values(xs) for v in (x,) * (counts[x] ** 2))
