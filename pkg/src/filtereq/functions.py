"""List-function descriptors: immutable values that can be applied, compared,
composed, concatenated pointwise, serialized, and fed to the checkers.

Descriptors are hashable dataclasses, so corpora can live in sets and dicts.
Anywhere the package expects a function, a plain Python callable on tuples
works too; descriptors just add equality and JSON forms.
"""

from dataclasses import dataclass, field

from . import lists
from .errors import OutOfScopeError
from .equivariance import PropertyReport, Scope
from .nfe import NfeTerm, blocks_to_nfe, interpret_nfe, nfe_to_blocks

_ALPHA_NAMES = ("cons", "snoc", "insert", "cond_cons")


@dataclass(frozen=True)
class AlphaStep:
    """A binary step x, acc -> acc' for right folds.

    Catalog: cons builds the identity, snoc builds reverse, insert builds an
    ascending sort, cond_cons keeps only values in `keep` (a filter).
    """

    name: str
    keep: frozenset = None

    def __post_init__(self):
        if self.name not in _ALPHA_NAMES:
            raise ValueError("unknown step %r" % (self.name,))
        if self.name == "cond_cons":
            if self.keep is None:
                raise ValueError("cond_cons needs a keep set")
            object.__setattr__(self, "keep", frozenset(self.keep))
        elif self.keep is not None:
            raise ValueError("%s takes no keep set" % self.name)

    def step(self, x, acc):
        if self.name == "cons":
            return (x,) + acc
        if self.name == "snoc":
            return acc + (x,)
        if self.name == "insert":
            for i, v in enumerate(acc):
                if v >= x:
                    return acc[:i] + (x,) + acc[i:]
            return acc + (x,)
        return (x,) + acc if x in self.keep else acc

    def to_json_dict(self):
        d = {"name": self.name}
        if self.keep is not None:
            d["keep"] = sorted(self.keep)
        return d


def alpha_from_json(d):
    return AlphaStep(d["name"], frozenset(d["keep"]) if "keep" in d else None)


class ListFunction:
    """Base for descriptors; calling one applies it to a list."""

    def apply(self, xs):
        raise NotImplementedError

    def __call__(self, xs):
        return self.apply(lists.as_tuple(xs))


_BUILTIN_IMPLS = {
    "identity": lambda xs: xs,
    "reverse": lists.reverse,
    "sort": lists.sort_list,
    "triangle": lists.triangle,
    "swap_pairs": lists.swap_pairs,
    "swap_blocks": lists.swap_blocks,
    "unique_values": lists.unique_values,
    "double": lambda xs: xs + xs,
    "empty_const": lambda xs: (),
}


@dataclass(frozen=True)
class Builtin(ListFunction):
    name: str

    def __post_init__(self):
        if self.name not in _BUILTIN_IMPLS:
            raise ValueError("unknown builtin %r" % (self.name,))

    def apply(self, xs):
        return _BUILTIN_IMPLS[self.name](xs)


@dataclass(frozen=True)
class Inflate(ListFunction):
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError("repeat count must be a non-negative integer")

    def apply(self, xs):
        return lists.inflate(self.n, xs)


@dataclass(frozen=True)
class FilterBy(ListFunction):
    keep: frozenset

    def __post_init__(self):
        object.__setattr__(self, "keep", frozenset(self.keep))

    def apply(self, xs):
        return tuple(x for x in xs if x in self.keep)


@dataclass(frozen=True)
class MapBy(ListFunction):
    """Relabel values through a finite image table over alphabet 0..len-1."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))

    def apply(self, xs):
        for v in xs:
            if not isinstance(v, int) or not 0 <= v < len(self.images):
                raise OutOfScopeError(
                    "value %r outside alphabet of size %d" % (v, len(self.images))
                )
        return tuple(self.images[v] for v in xs)


@dataclass(frozen=True)
class NfeFunction(ListFunction):
    term: NfeTerm

    def apply(self, xs):
        return interpret_nfe(self.term, xs)


@dataclass(frozen=True)
class FoldrAlpha(ListFunction):
    alpha: AlphaStep

    def apply(self, xs):
        acc = ()
        for x in reversed(xs):
            acc = self.alpha.step(x, acc)
        return acc


@dataclass(frozen=True)
class TableFunction(ListFunction):
    """Explicit graph of a function on every list at a declared scope."""

    entries: tuple
    alphabet_size: int
    max_len: int

    def __post_init__(self):
        mapping = {lists.as_tuple(k): lists.as_tuple(v) for k, v in self.entries}
        scope = Scope(self.alphabet_size, self.max_len)
        missing = [xs for xs in scope.lists() if xs not in mapping]
        if missing:
            raise ValueError("table lacks an entry for %r" % (missing[0],))
        object.__setattr__(self, "entries", tuple(sorted(mapping.items())))
        object.__setattr__(self, "_map", mapping)

    _map: dict = field(init=False, repr=False, compare=False, default=None)

    @classmethod
    def from_callable(cls, f, scope):
        entries = tuple((xs, lists.as_tuple(f(xs))) for xs in scope.lists())
        return cls(entries, scope.alphabet_size, scope.max_len)

    def apply(self, xs):
        try:
            return self._map[xs]
        except KeyError:
            raise OutOfScopeError("list %r is outside the table's scope" % (xs,))


@dataclass(frozen=True)
class Compose(ListFunction):
    """outer after inner."""

    outer: object
    inner: object

    def apply(self, xs):
        return lists.as_tuple(self.outer(lists.as_tuple(self.inner(xs))))


@dataclass(frozen=True)
class PointwiseConcat(ListFunction):
    left: object
    right: object

    def apply(self, xs):
        return lists.as_tuple(self.left(xs)) + lists.as_tuple(self.right(xs))


def apply(f, xs):
    return lists.as_tuple(f(lists.as_tuple(xs)))


def compose(outer, inner):
    return Compose(outer, inner)


def pointwise_concat(left, right):
    return PointwiseConcat(left, right)


def foldr_fe(alpha):
    return FoldrAlpha(alpha)


def _reachable_accumulators(step, scope):
    """Accumulator states a right fold of `step` can reach from lists at scope."""
    seen = set()
    for ys in scope.lists():
        acc = ()
        seen.add(acc)
        for y in reversed(ys):
            acc = step(y, acc)
            seen.add(acc)
    return sorted(seen, key=lambda t: (len(t), t))


def alpha_condition_check(alpha, scope=Scope()):
    """Check the two step laws that make the fold filter-commuting.

    For values the predicate drops, stepping must be invisible to the filter;
    for values it keeps, stepping must commute with it.  Accumulators range
    over the states the fold actually reaches from lists at scope.
    """
    step = alpha.step if isinstance(alpha, AlphaStep) else alpha
    accs = _reachable_accumulators(step, scope)
    preds = [(keep, frozenset(keep)) for keep in scope.predicates()]
    witnesses = []
    checked = 0
    for x in scope.alphabet:
        for keep, keepset in preds:
            for acc in accs:
                checked += 1
                stepped = step(x, acc)
                lhs = tuple(v for v in stepped if v in keepset)
                if x in keepset:
                    rhs = step(x, tuple(v for v in acc if v in keepset))
                    case = "kept"
                else:
                    rhs = tuple(v for v in acc if v in keepset)
                    case = "dropped"
                if lhs != rhs:
                    witnesses.append((case, x, keep, acc, lhs, rhs))
    return PropertyReport("alpha_conditions", scope, checked, tuple(witnesses))


def functions_equal_at_scope(f, g, scope=Scope()):
    """Extensional equality on every list at scope."""
    return all(apply(f, xs) == apply(g, xs) for xs in scope.lists())


def function_to_json(f):
    if isinstance(f, Builtin):
        return {"kind": "builtin", "name": f.name}
    if isinstance(f, Inflate):
        return {"kind": "inflate", "n": f.n}
    if isinstance(f, FilterBy):
        return {"kind": "filter_by", "keep": sorted(f.keep)}
    if isinstance(f, MapBy):
        return {"kind": "map_by", "table": list(f.images)}
    if isinstance(f, NfeFunction):
        return {"kind": "nfe", "blocks": nfe_to_blocks(f.term)}
    if isinstance(f, FoldrAlpha):
        return {"kind": "foldr", "alpha": f.alpha.to_json_dict()}
    if isinstance(f, TableFunction):
        return {
            "kind": "table",
            "alphabet_size": f.alphabet_size,
            "max_len": f.max_len,
            "entries": [[list(k), list(v)] for k, v in f.entries],
        }
    if isinstance(f, Compose):
        return {
            "kind": "compose",
            "outer": function_to_json(f.outer),
            "inner": function_to_json(f.inner),
        }
    if isinstance(f, PointwiseConcat):
        return {
            "kind": "concat",
            "left": function_to_json(f.left),
            "right": function_to_json(f.right),
        }
    raise TypeError("cannot serialize %r" % (f,))


def function_from_json(d):
    kind = d.get("kind")
    if kind == "builtin":
        return Builtin(d["name"])
    if kind == "inflate":
        return Inflate(d["n"])
    if kind == "filter_by":
        return FilterBy(frozenset(d["keep"]))
    if kind == "map_by":
        return MapBy(tuple(d["table"]))
    if kind == "nfe":
        return NfeFunction(blocks_to_nfe(d["blocks"]))
    if kind == "foldr":
        return FoldrAlpha(alpha_from_json(d["alpha"]))
    if kind == "table":
        entries = tuple((tuple(k), tuple(v)) for k, v in d["entries"])
        return TableFunction(entries, d["alphabet_size"], d["max_len"])
    if kind == "compose":
        return Compose(function_from_json(d["outer"]), function_from_json(d["inner"]))
    if kind == "concat":
        return PointwiseConcat(function_from_json(d["left"]), function_from_json(d["right"]))
    raise ValueError("unknown function kind %r" % (kind,))
