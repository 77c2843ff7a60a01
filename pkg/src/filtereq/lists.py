"""Plain combinators on lists-as-tuples.

Every function takes any iterable and returns a tuple, so results are
hashable and safe to use as dict keys.
"""

from functools import cmp_to_key

from .errors import EmptyListError


def as_tuple(xs):
    return xs if isinstance(xs, tuple) else tuple(xs)


def map_list(g, xs):
    return tuple(g(x) for x in xs)


def filter_list(pred, xs):
    return tuple(x for x in xs if pred(x))


def reverse(xs):
    return tuple(reversed(as_tuple(xs)))


def tail(xs):
    xs = as_tuple(xs)
    if not xs:
        raise EmptyListError("tail of an empty list")
    return xs[1:]


def repeat_elem(n, x):
    """n copies of x."""
    return (x,) * n


def inflate(n, xs):
    """Each element repeated n times in place: inflate 2 [1,2] = [1,1,2,2]."""
    return tuple(x for x in xs for _ in range(n))


def triangle(xs):
    """Element i (0-based) repeated i+1 times: triangle [3,7,5] = [3,7,7,5,5,5]."""
    return tuple(x for i, x in enumerate(xs) for _ in range(i + 1))


def unique_values(xs):
    """First occurrences in order of appearance."""
    seen = set()
    out = []
    for x in xs:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return tuple(out)


def enumerate_list(xs):
    """Pair every element with its position, making all entries distinct."""
    return tuple((x, i) for i, x in enumerate(xs))


def unenumerate(pairs):
    return tuple(x for x, _ in pairs)


def sort_list(xs, cmp=None):
    """Stable sort; cmp is an optional two-argument comparator."""
    xs = as_tuple(xs)
    if cmp is None:
        return tuple(sorted(xs))
    return tuple(sorted(xs, key=cmp_to_key(cmp)))


def swap_pairs(xs):
    """Swap adjacent pairs, odd trailing element stays: [1,2,3] -> [2,1,3]."""
    xs = as_tuple(xs)
    out = list(xs)
    for i in range(0, len(xs) - 1, 2):
        out[i], out[i + 1] = out[i + 1], out[i]
    return tuple(out)


def swap_blocks(xs):
    """Swap the two halves; the first block gets the extra element when odd."""
    xs = as_tuple(xs)
    cut = (len(xs) + 1) // 2
    return xs[cut:] + xs[:cut]
