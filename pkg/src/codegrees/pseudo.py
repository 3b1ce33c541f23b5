"""Codegrees and the pseudo-algebra multiset of a finite group.

The pseudo-algebra of G collects, for each codegree d = |G : ker chi| /
chi(1), how many irreducible characters attain it.  For an abelian
group it coincides with the multiset of element orders, which gives an
analytic route (``abelian_pseudo``) that is independent of the
character-table route (``pseudo_algebra``) and can be inverted
(``reconstruct_abelian``).
"""

import re
from dataclasses import dataclass
from itertools import product

from .dixon import Character, CharTable, char_table, kernel_of
from .groups import Group, prime_factors


class NotAbelianRealizableError(ValueError):
    """The multiset is not the pseudo-algebra of any abelian group."""


@dataclass(frozen=True, order=True)
class PseudoAlgebra:
    """Sorted multiset of (codegree, multiplicity) pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 0
        for d, m in self.pairs:
            if d <= last or m < 1:
                raise ValueError(f"pairs must be ascending in d with m >= 1: {self.pairs}")
            last = d
        if not self.pairs or self.pairs[0] != (1, 1):
            raise ValueError(f"the pair (1,1) for the principal character is "
                             f"required, got {self.pairs}")

    def __str__(self):
        return " ".join(f"({d},{m})" for d, m in self.pairs)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def codegrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.pairs)

    def multiplicity(self, d: int) -> int:
        for dd, m in self.pairs:
            if dd == d:
                return m
        return 0


_PAIR_RE = re.compile(r"\((\d+),(\d+)\)")


def parse_pseudo(text: str) -> PseudoAlgebra:
    """Parse the text form '(1,1) (2,7) (4,8)'; inverse of str()."""
    tokens = text.split()
    pairs = []
    for tok in tokens:
        m = _PAIR_RE.fullmatch(tok)
        if not m:
            raise ValueError(f"bad pseudo-algebra token {tok!r}")
        pairs.append((int(m.group(1)), int(m.group(2))))
    return PseudoAlgebra(tuple(pairs))


def codegree(table: CharTable, chi: Character) -> int:
    """|G : ker chi| / chi(1), always a positive integer."""
    G = table.group
    index = G.order // kernel_of(table, chi).order
    if index % chi.degree != 0:
        raise AssertionError(f"codegree of a degree-{chi.degree} character "
                             f"of {G.name} is not integral")
    return index // chi.degree


def pseudo_algebra(G: Group) -> PseudoAlgebra:
    """The multiset C(G), computed from the exact character table."""
    table = char_table(G)
    counts: dict[int, int] = {}
    for chi in table.irreducibles:
        d = codegree(table, chi)
        counts[d] = counts.get(d, 0) + 1
    return PseudoAlgebra(tuple(sorted(counts.items())))


def pseudo_equal(P: PseudoAlgebra, Q: PseudoAlgebra) -> bool:
    return P.pairs == Q.pairs


@dataclass(frozen=True)
class AbelianType:
    """An abelian group up to isomorphism: per prime, the weakly
    decreasing partition of cyclic-factor exponents."""

    parts: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        last_p = 1
        for p, partition in self.parts:
            if p <= last_p or not _is_prime_int(p):
                raise ValueError(f"primes must be ascending primes: {self.parts}")
            last_p = p
            if not partition or any(n < 1 for n in partition) or \
                    any(partition[i] < partition[i + 1] for i in range(len(partition) - 1)):
                raise ValueError(f"partition for {p} must be nonempty weakly "
                                 f"decreasing positive: {partition}")

    def __str__(self):
        if not self.parts:
            return "1"
        return " ".join(f"{p}:[{','.join(map(str, ns))}]" for p, ns in self.parts)

    @property
    def order(self) -> int:
        total = 1
        for p, ns in self.parts:
            total *= p ** sum(ns)
        return total

    @property
    def cyclic_orders(self) -> tuple[int, ...]:
        """Cyclic factor orders, one prime at a time (not merged)."""
        out = []
        for p, ns in self.parts:
            out.extend(p ** n for n in ns)
        return tuple(out)

    def partition_for(self, p: int) -> tuple[int, ...]:
        for pp, ns in self.parts:
            if pp == p:
                return ns
        return ()


def _is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


_TYPE_RE = re.compile(r"(\d+):\[(\d+(?:,\d+)*)\]")


def parse_abelian_type(text: str) -> AbelianType:
    """Parse '2:[3,1,1]' or '2:[3,1] 3:[2]'; '1' is the trivial type."""
    text = text.strip()
    if text == "1":
        return AbelianType(())
    parts = []
    for tok in text.split():
        m = _TYPE_RE.fullmatch(tok)
        if not m:
            raise ValueError(f"bad abelian type token {tok!r}")
        p = int(m.group(1))
        ns = tuple(int(x) for x in m.group(2).split(","))
        parts.append((p, tuple(sorted(ns, reverse=True))))
    parts.sort()
    return AbelianType(tuple(parts))


def _p_part_order_counts(p: int, partition: tuple[int, ...]) -> dict[int, int]:
    """#elements of exact order p^k in the abelian p-group of the given
    type; solutions of x^(p^k) = 1 number p^(sum min(n_i, k))."""
    n1 = partition[0] if partition else 0
    counts = {}
    prev = 1
    for k in range(1, n1 + 1):
        f = p ** sum(min(n, k) for n in partition)
        counts[p ** k] = f - prev
        prev = f
    return counts


def abelian_pseudo(t: AbelianType) -> PseudoAlgebra:
    """C(A) for the abelian group A of type t: codegrees are element
    orders, multiplicities the exact-order counts."""
    per_prime = []
    for p, ns in t.parts:
        counts = _p_part_order_counts(p, ns)
        counts[1] = 1
        per_prime.append(sorted(counts.items()))
    pairs: dict[int, int] = {}
    for combo in product(*per_prime) if per_prime else [()]:
        d = 1
        m = 1
        for dk, mk in combo:
            d *= dk
            m *= mk
        pairs[d] = pairs.get(d, 0) + m
    return PseudoAlgebra(tuple(sorted(pairs.items())))


def reconstruct_abelian(P: PseudoAlgebra) -> AbelianType:
    """Invert ``abelian_pseudo``; raises NotAbelianRealizableError when
    the multiset cannot arise from an abelian group.

    For each prime p, the cumulative counts f(k) of pairs with d | p^k
    must be p-powers whose successive log ratios weakly decrease; those
    ratios count the cyclic factors of exponent >= k.
    """
    primes = sorted({p for d, _ in P.pairs if d > 1 for p in prime_factors(d)})
    parts = []
    for p in primes:
        p_pairs = [(d, m) for d, m in P.pairs if _is_p_power(d, p)]
        f = [1]
        k = 1
        max_d = max(d for d, _ in p_pairs)
        while p ** (k - 1) < max_d:
            f.append(sum(m for d, m in p_pairs if p ** k % d == 0))
            k += 1
        parts_ge = []
        for k in range(1, len(f)):
            ratio, rem = divmod(f[k], f[k - 1])
            if rem:
                raise NotAbelianRealizableError(
                    f"cumulative count {f[k]} at p={p}, k={k} is not a "
                    f"multiple of {f[k - 1]}")
            ee = 0
            while ratio % p == 0:
                ratio //= p
                ee += 1
            if ratio != 1:
                raise NotAbelianRealizableError(
                    f"cumulative count {f[k]} at p={p}, k={k} is not a "
                    f"power of {p} times {f[k - 1]}")
            parts_ge.append(ee)
        if any(parts_ge[i] < parts_ge[i + 1] for i in range(len(parts_ge) - 1)):
            raise NotAbelianRealizableError(
                f"factor counts {parts_ge} for p={p} are not weakly decreasing")
        if parts_ge and parts_ge[-1] == 0:
            parts_ge = [c for c in parts_ge if c > 0]
        partition = tuple(sum(1 for c in parts_ge if c >= j)
                          for j in range(1, (parts_ge[0] if parts_ge else 0) + 1))
        if partition:
            parts.append((p, partition))
    t = AbelianType(tuple(parts))
    if abelian_pseudo(t) != P:
        raise NotAbelianRealizableError(
            f"multiset is not realizable: nearest abelian type {t} has "
            f"pseudo-algebra {abelian_pseudo(t)}")
    return t


def _is_p_power(d: int, p: int) -> bool:
    while d % p == 0:
        d //= p
    return d == 1


def prime_power_spectrum(P: PseudoAlgebra) -> int | None:
    """The prime p if every codegree above 1 is a power of p, else None.
    The trivial multiset {(1,1)} determines no prime and returns None."""
    ds = [d for d, _ in P.pairs if d > 1]
    if not ds:
        return None
    ps = prime_factors(ds[0])
    if len(ps) != 1:
        return None
    p = ps[0]
    return p if all(_is_p_power(d, p) for d in ds) else None
