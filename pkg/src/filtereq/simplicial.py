"""Families of permutations coherent under deletion.

A function that emits k relabelled copies of each input element is, on the
canonical list [0..n-1], described by a permutation of n*k points: output
slot j holds copy c of input i, i.e. point i*k + c (copies numbered by
first occurrence).  Such a family is coherent when restricting the size-m
permutation along any strictly increasing inclusion of n points into m
reproduces the size-n permutation.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidInclusionError, NotAnNfeError
from .lists import as_tuple


@dataclass(frozen=True)
class Permutation:
    """One-line notation: image[slot] = source point."""

    image: tuple

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        n = len(self.image)
        if sorted(self.image) != list(range(n)):
            raise ValueError("%r is not a permutation of 0..%d" % (self.image, n - 1))

    @property
    def size(self):
        return len(self.image)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))


def _check_inclusion(inclusion, target_size):
    inclusion = as_tuple(inclusion)
    if list(inclusion) != sorted(set(inclusion)):
        raise InvalidInclusionError("%r is not strictly increasing" % (inclusion,))
    if inclusion and not (0 <= inclusion[0] and inclusion[-1] < target_size):
        raise InvalidInclusionError(
            "%r does not land in 0..%d" % (inclusion, target_size - 1)
        )
    return inclusion


def restrict_perm(p, inclusion):
    """Delete points outside the inclusion's image, then relabel in order."""
    inclusion = _check_inclusion(inclusion, p.size)
    rank = {v: i for i, v in enumerate(inclusion)}
    return Permutation(tuple(rank[v] for v in p.image if v in rank))


def restrict_perm_k(p, inclusion, k):
    """Restrict a permutation of n*k points along an inclusion of inputs,
    expanded blockwise so each input carries its k copies."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if p.size % k:
        raise ValueError("size %d is not a multiple of k=%d" % (p.size, k))
    inclusion = _check_inclusion(inclusion, p.size // k)
    expanded = tuple(i * k + c for i in inclusion for c in range(k))
    return restrict_perm(p, expanded)


@dataclass(frozen=True)
class PermFamily:
    """members[n] acts on n*k points, for n = 0..N."""

    k: int
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if self.k < 1:
            raise ValueError("k must be at least 1")
        for n, p in enumerate(self.members):
            if p.size != n * self.k:
                raise ValueError(
                    "member %d has size %d, expected %d" % (n, p.size, n * self.k)
                )

    @property
    def top(self):
        return len(self.members) - 1


def check_cone(family):
    """Verify every restriction collapses to the smaller member.

    Returns (ok, violations); each violation is (n, m, inclusion, expected,
    got) for an inclusion of n points into m.
    """
    violations = []
    for m in range(1, family.top + 1):
        for n in range(m):
            for inclusion in combinations(range(m), n):
                got = restrict_perm_k(family.members[m], inclusion, family.k)
                if got != family.members[n]:
                    violations.append((n, m, inclusion, family.members[n], got))
    return (not violations, violations)


def family_of_function(f, k, top):
    """Extract members from f on [0..n-1] for n = 0..top.

    Copies are numbered by first occurrence in the output.  Raises
    NotAnNfeError when an output cannot be read as k relabelled copies
    of each input element.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    members = []
    for n in range(top + 1):
        xs = tuple(range(n))
        out = as_tuple(f(xs))
        if len(out) != n * k:
            raise NotAnNfeError(
                "f %r has length %d, expected %d" % (xs, len(out), n * k)
            )
        seen = {}
        image = []
        for v in out:
            if not isinstance(v, int) or not 0 <= v < n:
                raise NotAnNfeError("output value %r is not an input position" % (v,))
            c = seen.get(v, 0)
            if c >= k:
                raise NotAnNfeError("value %d occurs more than %d times" % (v, k))
            image.append(v * k + c)
            seen[v] = c + 1
        members.append(Permutation(tuple(image)))
    return PermFamily(k, tuple(members))
