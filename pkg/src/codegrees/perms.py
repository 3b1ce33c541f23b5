"""Permutations on 0-based points, stored as image tuples.

A permutation of degree n is a tuple ``p`` of length n with ``p[x]`` the
image of point x.  All functions are pure; tuples make permutations
hashable so groups can index their elements in dicts.
"""

from math import lcm

Perm = tuple[int, ...]


def identity(degree: int) -> Perm:
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    return tuple(range(degree))


def perm_from_images(images) -> Perm:
    """Validate an image list and return it as a Perm.

    Raises ValueError unless ``images`` is a bijection on {0..n-1}.
    """
    p = tuple(int(x) for x in images)
    n = len(p)
    if n < 1:
        raise ValueError("empty image list")
    seen = [False] * n
    for x in p:
        if x < 0 or x >= n or seen[x]:
            raise ValueError(f"image list {p} is not a permutation of 0..{n - 1}")
        seen[x] = True
    return p


def compose(a: Perm, b: Perm) -> Perm:
    """Product a*b acting as (a*b)(x) = a(b(x)), i.e. b is applied first."""
    if len(a) != len(b):
        raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for x, y in enumerate(a):
        inv[y] = x
    return tuple(inv)


def perm_from_cycles(degree: int, cycles) -> Perm:
    """Build a permutation from disjoint cycles, e.g. [(0, 1, 2)]."""
    images = list(range(degree))
    seen = set()
    for cycle in cycles:
        for i, x in enumerate(cycle):
            if x in seen or not 0 <= x < degree:
                raise ValueError(f"bad cycle point {x} in {cycle}")
            seen.add(x)
            images[x] = cycle[(i + 1) % len(cycle)]
    return tuple(images)


def cycle_lengths(a: Perm) -> list[int]:
    lengths = []
    seen = [False] * len(a)
    for start in range(len(a)):
        if seen[start]:
            continue
        n, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = a[x]
            n += 1
        lengths.append(n)
    return lengths


def perm_order(a: Perm) -> int:
    return lcm(*cycle_lengths(a))


def cycle_notation(a: Perm) -> str:
    """Disjoint-cycle string, fixed points omitted; identity is '()'."""
    parts = []
    seen = [False] * len(a)
    for start in range(len(a)):
        if seen[start] or a[start] == start:
            seen[start] = True
            continue
        cyc, x = [], start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = a[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"
