"""Finite-scope symmetry checkers.

A scope (alphabet_size A, max_len L) fixes a finite universe: all lists of
length <= L over values 0..A-1.  Checkers evaluate a function on every list
in the universe and compare both sides of a commutation law, so a passing
verdict always means "pass at this scope", never a proof for all lists.

Checkers accept any callable from tuples to sequences, including the
descriptor objects from filtereq.functions.
"""

from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import OutOfScopeError
from .lists import as_tuple


@dataclass(frozen=True)
class Scope:
    alphabet_size: int = 3
    max_len: int = 5

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be at least 1")
        if self.max_len < 0:
            raise ValueError("max_len must be non-negative")

    @property
    def alphabet(self):
        return tuple(range(self.alphabet_size))

    def lists(self):
        """All lists at scope, ordered by (length, lexicographic)."""
        for n in range(self.max_len + 1):
            yield from product(self.alphabet, repeat=n)

    def predicates(self):
        """All value subsets as sorted tuples, ordered by (size, lexicographic)."""
        for r in range(self.alphabet_size + 1):
            yield from combinations(self.alphabet, r)

    def endo_maps(self):
        """All self-maps of the alphabet as image tables, lexicographic."""
        yield from product(self.alphabet, repeat=self.alphabet_size)

    def to_json_dict(self):
        return {"alphabet_size": self.alphabet_size, "max_len": self.max_len}


@dataclass(frozen=True)
class Witness:
    """One failing input: lhs = f(transform(xs)), rhs = transform(f(xs))."""

    xs: tuple
    transform: tuple
    lhs: tuple
    rhs: tuple

    def to_json_dict(self):
        return {
            "xs": list(self.xs),
            "transform": [self.transform[0]] + [list(a) for a in self.transform[1:]],
            "lhs": list(self.lhs),
            "rhs": list(self.rhs),
        }


@dataclass(frozen=True)
class EquivarianceReport:
    law: str
    scope: Scope
    checked: int
    witnesses: tuple

    @property
    def passed(self):
        return not self.witnesses

    @property
    def verdict(self):
        if self.passed:
            return "pass at scope (A=%d, L=%d)" % (
                self.scope.alphabet_size,
                self.scope.max_len,
            )
        return "fail"

    def to_json_dict(self):
        return {
            "law": self.law,
            "scope": self.scope.to_json_dict(),
            "checked": self.checked,
            "verdict": self.verdict,
            "witnesses": [w.to_json_dict() for w in self.witnesses],
        }


@dataclass(frozen=True)
class PropertyReport:
    """Result of a non-commutation check (counts, value sets, step laws)."""

    check: str
    scope: Scope
    checked: int
    witnesses: tuple
    details: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self):
        return not self.witnesses and "precondition_failed" not in self.details

    @property
    def verdict(self):
        if "precondition_failed" in self.details:
            return "precondition failed: %s" % self.details["precondition_failed"]
        if self.passed:
            return "pass at scope (A=%d, L=%d)" % (
                self.scope.alphabet_size,
                self.scope.max_len,
            )
        return "fail"

    def to_json_dict(self):
        return {
            "check": self.check,
            "scope": self.scope.to_json_dict(),
            "checked": self.checked,
            "verdict": self.verdict,
            "witnesses": [list(map(_jsonable, w)) for w in self.witnesses],
            "details": {k: _jsonable(v) for k, v in self.details.items()},
        }


def witness_from_json(d):
    t = d["transform"]
    transform = (t[0],) + tuple(tuple(part) for part in t[1:])
    return Witness(tuple(d["xs"]), transform, tuple(d["lhs"]), tuple(d["rhs"]))


def report_from_json(d):
    return EquivarianceReport(
        d["law"],
        Scope(d["scope"]["alphabet_size"], d["scope"]["max_len"]),
        d["checked"],
        tuple(witness_from_json(w) for w in d["witnesses"]),
    )


def _jsonable(v):
    if isinstance(v, (tuple, frozenset)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def _outputs(f, scope):
    """Evaluate f once per list at scope."""
    return {xs: as_tuple(f(xs)) for xs in scope.lists()}


def _apply_table(table, xs, alphabet_size):
    for v in xs:
        if not isinstance(v, int) or not 0 <= v < alphabet_size:
            raise OutOfScopeError(
                "value %r outside alphabet of size %d" % (v, alphabet_size)
            )
    return tuple(table[v] for v in xs)


def check_map_equivariant(f, scope=Scope()):
    """Does f commute with every relabelling of the alphabet?"""
    outs = _outputs(f, scope)
    witnesses = []
    checked = 0
    for xs in scope.lists():
        fx = outs[xs]
        for table in scope.endo_maps():
            checked += 1
            lhs = outs[tuple(table[v] for v in xs)]
            rhs = _apply_table(table, fx, scope.alphabet_size)
            if lhs != rhs:
                witnesses.append(Witness(xs, ("map", table), lhs, rhs))
    return EquivarianceReport("map", scope, checked, tuple(witnesses))


def check_filter_equivariant(f, scope=Scope()):
    """Does f commute with every filter by a value subset?"""
    outs = _outputs(f, scope)
    preds = [(keep, frozenset(keep)) for keep in scope.predicates()]
    witnesses = []
    checked = 0
    for xs in scope.lists():
        fx = outs[xs]
        for keep, keepset in preds:
            checked += 1
            lhs = outs[tuple(v for v in xs if v in keepset)]
            rhs = tuple(v for v in fx if v in keepset)
            if lhs != rhs:
                witnesses.append(Witness(xs, ("filter", keep), lhs, rhs))
    return EquivarianceReport("filter", scope, checked, tuple(witnesses))


def check_tail_equivariant(f, scope=Scope()):
    """Does f commute with tail, skipping inputs whose image is empty?"""
    outs = _outputs(f, scope)
    witnesses = []
    checked = 0
    for xs in scope.lists():
        if not xs:
            continue
        fx = outs[xs]
        if not fx:
            continue
        checked += 1
        lhs = outs[xs[1:]]
        rhs = fx[1:]
        if lhs != rhs:
            witnesses.append(Witness(xs, ("tail",), lhs, rhs))
    return EquivarianceReport("tail", scope, checked, tuple(witnesses))


def check_no_new_values(f, scope=Scope()):
    """Every output value must already occur in the input."""
    witnesses = []
    checked = 0
    for xs in scope.lists():
        checked += 1
        fx = as_tuple(f(xs))
        extras = sorted(set(fx) - set(xs))
        if extras:
            witnesses.append((xs, fx, tuple(extras)))
    return PropertyReport("no_new_values", scope, checked, tuple(witnesses))


def check_nfe_counts(f, scope=Scope()):
    """Output length k*len(xs) and per-value multiplicity k*m, for k = len(f [x]).

    Precondition: f passes both map- and filter-equivariance at scope; a
    violated precondition is reported in the result, not ignored.
    """
    failed = [
        law
        for law, chk in (("map", check_map_equivariant), ("filter", check_filter_equivariant))
        if not chk(f, scope).passed
    ]
    if failed:
        return PropertyReport(
            "nfe_counts", scope, 0, (), {"precondition_failed": "+".join(failed)}
        )
    k = len(as_tuple(f((0,)))) if scope.max_len >= 1 else 0
    witnesses = []
    checked = 0
    for xs in scope.lists():
        checked += 1
        fx = as_tuple(f(xs))
        if len(fx) != k * len(xs):
            witnesses.append((xs, fx, ("length", k * len(xs))))
            continue
        for v in set(xs):
            m = xs.count(v)
            if fx.count(v) != k * m:
                witnesses.append((xs, fx, ("count", v, k * m)))
                break
    return PropertyReport("nfe_counts", scope, checked, tuple(witnesses), {"k": k})
