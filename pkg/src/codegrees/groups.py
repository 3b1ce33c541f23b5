"""Exact arithmetic on small permutation groups.

Groups cache their full element list (breadth-first closure from the
identity, generator order fixed) so every element has a stable index;
index 0 is always the identity.  All derived structures (conjugacy
classes, centre, derived and Frattini subgroups, quotients) are computed
by direct enumeration and verified, which is the point at this scale:
no structure theory is trusted that the data cannot re-check.

Everything is immutable after construction; lazily computed structures
are memoised on the owning object.
"""

from dataclasses import dataclass, field
from math import gcd, lcm

from .perms import Perm, compose, identity, inverse, perm_from_images, perm_order

DEFAULT_ORDER_CAP = 2048

# Guard for the generic Frattini fallback, which enumerates the whole
# subgroup lattice.  Prime-power groups never take that path.
SUBGROUP_ENUM_LIMIT = 20000


class CapExceededError(ValueError):
    """Raised when a closure would exceed the configured order cap."""


class Group:
    """A finite permutation group with a cached, ordered element list."""

    __slots__ = ("degree", "name", "generators", "elements", "index", "order", "_cache")

    def __init__(self, degree, generators, elements, index, name):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = list(elements)
        self.index = index
        self.order = len(elements)
        self.name = name
        self._cache = {}

    def __repr__(self):
        return f"Group({self.name!r}, order={self.order}, degree={self.degree})"

    def mul(self, i: int, j: int) -> int:
        return self.index[compose(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        table = self._cache.get("inv")
        if table is None:
            table = [self.index[inverse(p)] for p in self.elements]
            self._cache["inv"] = table
        return table[i]

    def conj(self, g: int, x: int) -> int:
        """Index of g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def order_of(self, i: int) -> int:
        return perm_order(self.elements[i])

    @property
    def generator_indices(self) -> tuple[int, ...]:
        idx = self._cache.get("gen_idx")
        if idx is None:
            idx = tuple(self.index[g] for g in self.generators)
            self._cache["gen_idx"] = idx
        return idx

    @property
    def is_abelian(self) -> bool:
        flag = self._cache.get("abelian")
        if flag is None:
            gens = self.generator_indices
            flag = all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)
            self._cache["abelian"] = flag
        return flag


def close_group(degree: int, generators, name: str | None = None,
                cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Close a generator list into a full Group.

    Elements are discovered breadth-first from the identity by right
    multiplication with the generators in the given order, so the same
    generator list always produces the same element indexing.
    """
    gens = [perm_from_images(g) for g in generators]
    for g in gens:
        if len(g) != degree:
            raise ValueError(f"generator degree {len(g)} != {degree}")
    ident = identity(degree)
    elements = [ident]
    index = {ident: 0}
    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in gens:
            y = compose(x, g)
            if y not in index:
                if len(elements) >= cap:
                    raise CapExceededError(
                        f"closure of {name or 'group'} exceeds order cap {cap}")
                index[y] = len(elements)
                elements.append(y)
    return Group(degree, gens, elements, index, name or f"group<{degree}>")


def from_multiplication(n: int, mul, name: str, gens=None,
                        cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Realise an abstract group given by a multiplication function on
    0..n-1 (0 the identity) as its left-regular permutation group.

    ``gens`` may name a generating subset; by default all elements are
    used, which is always correct but gives wide generator lists.
    """
    if gens is None:
        gens = range(1, n)
    perms = [tuple(mul(g, x) for x in range(n)) for g in gens]
    group = close_group(max(n, 1), perms, name=name, cap=cap)
    if group.order != n:
        raise ValueError(f"regular representation of {name} closed to "
                         f"order {group.order}, expected {n}")
    return group


@dataclass(frozen=True)
class Subgroup:
    """A subgroup stored as the set of member indices of its parent."""

    parent: Group
    members: frozenset[int]
    name: str = "H"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    @property
    def members_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def member_flags(self) -> tuple[bool, ...]:
        return tuple(i in self.members for i in range(self.parent.order))

    @property
    def generators_small(self) -> tuple[int, ...]:
        """A short generating list found greedily over the member set."""
        gens = self._cache.get("gens")
        if gens is None:
            gens = []
            span = {0}
            for m in self.members_sorted:
                if m not in span:
                    gens.append(m)
                    span = closure_indices(self.parent, gens)
            gens = tuple(gens)
            self._cache["gens"] = gens
        return gens

    @property
    def is_normal(self) -> bool:
        flag = self._cache.get("normal")
        if flag is None:
            G = self.parent
            flag = all(G.conj(g, s) in self.members
                       for g in G.generator_indices for s in self.members)
            self._cache["normal"] = flag
        return flag

    def as_group(self) -> Group:
        """The subgroup as a standalone Group on the same points."""
        grp = self._cache.get("group")
        if grp is None:
            G = self.parent
            gens = [G.elements[i] for i in self.generators_small] or [G.elements[0]]
            grp = close_group(G.degree, gens, name=self.name, cap=max(G.order, 1))
            if grp.order != self.order:
                raise AssertionError(f"subgroup {self.name} closure mismatch")
            self._cache["group"] = grp
        return grp


def closure_indices(G: Group, seed) -> set[int]:
    """Subgroup closure of a set of element indices (identity included)."""
    seed = [s for s in seed if s != 0]
    members = [0]
    seen = {0}
    head = 0
    while head < len(members):
        x = members[head]
        head += 1
        for t in seed:
            y = G.mul(x, t)
            if y not in seen:
                seen.add(y)
                members.append(y)
    return seen


def make_subgroup(G: Group, members, name: str = "H", verify: bool = True) -> Subgroup:
    members = frozenset(members) | {0}
    sub = Subgroup(G, members, name)
    if verify:
        if G.order % len(members) != 0:
            raise ValueError(f"{name}: size {len(members)} does not divide {G.order}")
        if closure_indices(G, sub.generators_small) != members:
            raise ValueError(f"{name}: member set is not closed")
    return sub


def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, frozenset({0}), "1")


def full_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, frozenset(range(G.order)), G.name)


@dataclass(frozen=True)
class ConjClasses:
    """Conjugacy classes of a group, identity class first.

    ``power_map(i, j)`` returns the class of g^j for g in class i; it is
    well defined because conjugation commutes with powers.
    """

    group: Group
    reps: tuple[int, ...]
    sizes: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.reps)

    @property
    def inverse_class(self) -> tuple[int, ...]:
        inv = self.group._cache.get("cc_inv")
        if inv is None:
            inv = tuple(self.class_of[self.group.inv(r)] for r in self.reps)
            self.group._cache["cc_inv"] = inv
        return inv

    def power_map(self, i: int, j: int) -> int:
        G = self.group
        j %= G.order_of(self.reps[i])
        x = 0
        g = self.reps[i]
        for _ in range(j):
            x = G.mul(x, g)
        return self.class_of[x]

    def power_table(self, e: int):
        """Array pm with pm[i][j] = class of rep_i^j, for 0 <= j < e."""
        key = ("cc_pow", e)
        pm = self.group._cache.get(key)
        if pm is None:
            G = self.group
            pm = []
            for rep in self.reps:
                row = []
                x = 0
                for _ in range(e):
                    row.append(self.class_of[x])
                    x = G.mul(x, rep)
                pm.append(row)
            self.group._cache[key] = pm
        return pm


def conjugacy_classes(G: Group) -> ConjClasses:
    cc = G._cache.get("classes")
    if cc is not None:
        return cc
    class_of = [-1] * G.order
    reps, sizes, members = [], [], []
    gens = G.generator_indices
    for start in range(G.order):
        if class_of[start] >= 0:
            continue
        cls = len(reps)
        orbit = [start]
        class_of[start] = cls
        head = 0
        while head < len(orbit):
            x = orbit[head]
            head += 1
            for g in gens:
                y = G.conj(g, x)
                if class_of[y] < 0:
                    class_of[y] = cls
                    orbit.append(y)
        reps.append(start)
        sizes.append(len(orbit))
        members.append(tuple(orbit))
    cc = ConjClasses(G, tuple(reps), tuple(sizes), tuple(members), tuple(class_of))
    G._cache["classes"] = cc
    return cc


def exponent(G: Group) -> int:
    e = G._cache.get("exponent")
    if e is None:
        e = 1
        for p in G.elements:
            e = lcm(e, perm_order(p))
        G._cache["exponent"] = e
    return e


def center(G: Group) -> Subgroup:
    sub = G._cache.get("center")
    if sub is None:
        gens = G.generator_indices
        members = [i for i in range(G.order)
                   if all(G.mul(i, g) == G.mul(g, i) for g in gens)]
        sub = make_subgroup(G, members, f"Z({G.name})")
        G._cache["center"] = sub
    return sub


def _normal_closure(G: Group, seed: set[int], name: str) -> Subgroup:
    gens = set(seed) - {0}
    while True:
        members = closure_indices(G, gens)
        new = set()
        for g in G.generator_indices:
            for x in members:
                y = G.conj(g, x)
                if y not in members:
                    new.add(y)
        if not new:
            return make_subgroup(G, members, name, verify=False)
        gens |= new


def derived_subgroup(G: Group) -> Subgroup:
    sub = G._cache.get("derived")
    if sub is None:
        gens = G.generator_indices
        comms = {G.mul(G.mul(a, b), G.inv(G.mul(b, a))) for a in gens for b in gens}
        sub = _normal_closure(G, comms, f"{G.name}'")
        G._cache["derived"] = sub
    return sub


def _prime_power(n: int) -> int | None:
    """The prime p with n = p^k, or None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        p = n
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def all_subgroups(G: Group, limit: int = SUBGROUP_ENUM_LIMIT) -> list[frozenset[int]]:
    """Every subgroup, as member sets, by closing one extra element at a
    time.  Guarded by ``limit``; meant for small mixed-order groups."""
    seen = {frozenset({0})}
    queue = [frozenset({0})]
    head = 0
    while head < len(queue):
        S = queue[head]
        head += 1
        base = sorted(S)
        for g in range(1, G.order):
            if g in S:
                continue
            T = frozenset(closure_indices(G, base + [g]))
            if T not in seen:
                if len(seen) >= limit:
                    raise RuntimeError(f"subgroup lattice of {G.name} exceeds {limit}")
                seen.add(T)
                queue.append(T)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def maximal_subgroups(G: Group) -> list[Subgroup]:
    subs = [S for S in all_subgroups(G) if len(S) < G.order]
    maximal = [S for S in subs
               if not any(S < T for T in subs if len(T) > len(S))]
    return [make_subgroup(G, S, f"max<{len(S)}>", verify=False) for S in maximal]


def frattini_subgroup(G: Group) -> Subgroup:
    """Frattini subgroup.

    For prime-power order this is the closure of the generator
    commutators and generator p-th powers (taking p-th powers of a
    generating set suffices modulo the derived subgroup).  Other orders
    fall back to intersecting the maximal subgroups.
    """
    sub = G._cache.get("frattini")
    if sub is not None:
        return sub
    p = _prime_power(G.order)
    if G.order == 1:
        sub = trivial_subgroup(G)
    elif p is not None:
        der = derived_subgroup(G)
        seed = set(der.members)
        for g in G.generator_indices:
            x = 0
            for _ in range(p):
                x = G.mul(x, g)
            seed.add(x)
        members = closure_indices(G, seed)
        sub = make_subgroup(G, members, f"Phi({G.name})", verify=False)
    else:
        members = frozenset(range(G.order))
        for M in maximal_subgroups(G):
            members &= M.members
        sub = make_subgroup(G, members, f"Phi({G.name})")
    G._cache["frattini"] = sub
    return sub


def quotient_group(G: Group, N: Subgroup, name: str | None = None) -> Group:
    """G/N as the permutation group on the cosets of a normal subgroup N."""
    if N.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if not N.is_normal:
        raise ValueError(f"{N.name} is not normal in {G.name}")
    coset_of = [-1] * G.order
    reps = []
    for i in range(G.order):
        if coset_of[i] >= 0:
            continue
        k = len(reps)
        reps.append(i)
        for n in N.members:
            coset_of[G.mul(i, n)] = k
    n_cosets = len(reps)
    gen_perms = []
    for g in G.generator_indices:
        gen_perms.append(tuple(coset_of[G.mul(g, r)] for r in reps))
    qname = name or f"{G.name}/{N.name}"
    Q = close_group(max(n_cosets, 1), gen_perms, name=qname, cap=max(n_cosets, 1))
    if Q.order != n_cosets:
        raise AssertionError(f"coset action of {qname} is not faithful")
    return Q


def maximal_subgroups_of_normal(G: Group, N: Subgroup) -> list[Subgroup]:
    """All index-p subgroups of a normal prime-power subgroup N.

    They are the preimages of the hyperplanes of N/Phi(N).  Check
    ``sub.is_normal`` on each result for its normality in G.
    """
    if not N.is_normal:
        raise ValueError(f"{N.name} is not normal in {G.name}")
    if N.order == 1:
        return []
    p = _prime_power(N.order)
    if p is None:
        raise ValueError(f"{N.name} does not have prime-power order")
    H = N.as_group()
    phi = frattini_subgroup(H)
    V = quotient_group(H, phi, name=f"{N.name}/Phi")
    # Coordinates of V's elements over a greedy basis of the F_p space.
    coords = {0: ()}
    basis = []
    for v in range(V.order):
        if v in coords:
            continue
        new_coords = {}
        for x, cx in coords.items():
            y = x
            for a in range(1, p):
                y = V.mul(y, v)
                new_coords[y] = cx + (a,)
        coords = {x: cx + (0,) for x, cx in coords.items()}
        coords.update({y: cy for y, cy in new_coords.items()})
        basis.append(v)
    rank = len(basis)
    # Map each member of N to its coordinate vector in V.
    h_index = {}  # element index in G -> coset index in V
    coset_of = [-1] * H.order
    for k, r in enumerate(_quotient_reps(H, phi)):
        for n in phi.members:
            coset_of[H.mul(r, n)] = k
    for m in N.members:
        h_index[m] = coset_of[H.index[G.elements[m]]]
    result = []
    for functional in _projective_functionals(p, rank):
        members = [m for m in N.members
                   if sum(f * c for f, c in zip(functional, coords[h_index[m]])) % p == 0]
        sub = make_subgroup(G, members, f"{N.name}:index{p}")
        result.append(sub)
    result.sort(key=lambda s: s.members_sorted)
    return result


def _quotient_reps(G: Group, N: Subgroup) -> list[int]:
    coset_of = [-1] * G.order
    reps = []
    for i in range(G.order):
        if coset_of[i] >= 0:
            continue
        reps.append(i)
        for n in N.members:
            coset_of[G.mul(i, n)] = len(reps) - 1
    return reps


def _projective_functionals(p: int, rank: int):
    """Nonzero functionals on F_p^rank, one per scalar class (first
    nonzero entry equal to 1), in lexicographic order."""
    out = []

    def rec(prefix):
        if len(prefix) == rank:
            if any(prefix):
                out.append(tuple(prefix))
            return
        leading_zero = not any(prefix)
        choices = (0, 1) if leading_zero else range(p)
        for c in choices:
            rec(prefix + [c])

    rec([])
    return out


def is_cyclic(S) -> bool:
    """Whether a Subgroup (or Group) is cyclic."""
    if isinstance(S, Group):
        return any(S.order_of(i) == S.order for i in range(S.order))
    G = S.parent
    return any(G.order_of(m) == S.order for m in S.members)


def is_metacyclic(G: Group) -> bool:
    """Search for a cyclic normal subgroup with cyclic quotient.

    Exhaustive over the cyclic subgroups; no structure-theory shortcuts,
    so the answer is trustworthy at this scale.
    """
    flag = G._cache.get("metacyclic")
    if flag is not None:
        return flag
    seen = set()
    flag = False
    for i in range(G.order):
        members = frozenset(_cyclic_members(G, i))
        if members in seen:
            continue
        seen.add(members)
        sub = Subgroup(G, members, f"<g{i}>")
        if not sub.is_normal:
            continue
        Q = quotient_group(G, sub)
        if is_cyclic(Q):
            flag = True
            break
    G._cache["metacyclic"] = flag
    return flag


def _cyclic_members(G: Group, i: int) -> list[int]:
    members = [0]
    x = G.mul(0, i)
    while x != 0:
        members.append(x)
        x = G.mul(x, i)
    return members


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def abelian_invariant_type(G: Group) -> dict[int, tuple[int, ...]]:
    """Isomorphism type {p: exponent partition} of an abelian group,
    read off the counts of solutions of x^(p^k) = 1."""
    if not G.is_abelian:
        raise ValueError(f"{G.name} is not abelian")
    orders = [G.order_of(i) for i in range(G.order)]
    out = {}
    for p in prime_factors(G.order):
        # parts_ge[k-1] = number of cyclic factors of p-exponent >= k
        parts_ge = []
        k = 1
        while True:
            f = sum(1 for o in orders if p ** k % o == 0)
            prev = sum(1 for o in orders if p ** (k - 1) % o == 0)
            if f == prev:
                break
            ratio, e = f // prev, 0
            while ratio % p == 0:
                ratio //= p
                e += 1
            if ratio != 1:
                raise AssertionError(f"{G.name}: non-p-power solution ratio")
            parts_ge.append(e)
            k += 1
        partition = tuple(sum(1 for c in parts_ge if c >= j)
                          for j in range(1, (parts_ge[0] if parts_ge else 0) + 1))
        if partition:
            out[p] = partition
    return out
