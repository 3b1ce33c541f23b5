"""Exact character tables of small permutation groups.

The table is computed the classical modular way: the class-sum
multiplication matrices act on F_q^r for a prime q = 1 (mod exponent)
with q > 2|G|; their common one-dimensional eigenspaces give the
central characters, from which degrees and character values are
recovered as exact multiplicities of roots of unity.  All consistency
checks (degree integrality, multiplicity bounds, both orthogonality
relations) run in exact integer arithmetic during construction.
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np

from . import modmat
from .cyclotomic import cyclotomic_polynomial, reduce_mod_cyclotomic
from .groups import (ConjClasses, Group, Subgroup, conjugacy_classes, exponent,
                     make_subgroup)

SparseValue = tuple[tuple[int, int], ...]  # ((root exponent, multiplicity), ...)


@dataclass(frozen=True)
class DixonContext:
    """Prime field data: q = 1 (mod e), q > 2|G|, theta of order e mod q."""

    exponent: int
    q: int
    theta: int
    theta_powers: tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def choose_dixon_prime(order: int, e: int) -> DixonContext:
    """Smallest prime q = 1 (mod e) with q > 2*order, plus a verified
    primitive e-th root of unity mod q."""
    q = 2 * order + 1
    q += (1 - q) % e
    while not (q > 2 * order and _is_prime(q)):
        q += e
    if e == 1:
        theta = 1
    else:
        prime_parts = [e // ell for ell in _prime_divisors(e)]
        theta = None
        for g in range(2, q):
            t = pow(g, (q - 1) // e, q)
            if all(pow(t, m, q) != 1 for m in prime_parts):
                theta = t
                break
        if theta is None:
            raise AssertionError(f"no element of order {e} mod {q}")
    powers = [1] * e
    for k in range(1, e):
        powers[k] = powers[k - 1] * theta % q
    return DixonContext(e, q, theta, tuple(powers))


def _prime_divisors(n: int) -> list[int]:
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


def class_constants(classes: ConjClasses, i: int, j: int, k: int) -> int:
    """Structure constant a_ijk of the class algebra: the number of
    ways a fixed element of class k factors as (x in C_i) * (y in C_j).
    Independent of the chosen element; cross-checked when assertions
    are enabled."""
    count = _count_factorisations(classes, i, j, classes.reps[k])
    if __debug__ and classes.sizes[k] > 1:
        other = classes.members[k][1]
        assert _count_factorisations(classes, i, j, other) == count
    return count


def _count_factorisations(classes: ConjClasses, i: int, j: int, z: int) -> int:
    G = classes.group
    return sum(1 for x in classes.members[i]
               if classes.class_of[G.mul(G.inv(x), z)] == j)


def class_matrix(classes: ConjClasses, i: int) -> np.ndarray:
    """Matrix M with M[j, k] = a_ijk."""
    G = classes.group
    r = classes.count
    M = np.zeros((r, r), dtype=np.int64)
    inv_members = [G.inv(x) for x in classes.members[i]]
    for k in range(r):
        z = classes.reps[k]
        for xi in inv_members:
            M[classes.class_of[G.mul(xi, z)], k] += 1
    return M


@dataclass(frozen=True)
class Character:
    """Degree plus, per class, the multiset of e-th root exponents in
    the character value, stored sparsely as (exponent, multiplicity)."""

    degree: int
    values: tuple[SparseValue, ...]

    def multiplicity_vector(self, class_index: int, e: int) -> tuple[int, ...]:
        v = [0] * e
        for k, m in self.values[class_index]:
            v[k] = m
        return tuple(v)

    def sort_key(self):
        return (self.degree, self.values)


@dataclass(frozen=True)
class CharTable:
    group: Group
    classes: ConjClasses
    context: DixonContext
    irreducibles: tuple[Character, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(ch.degree for ch in self.irreducibles)


def char_table(G: Group) -> CharTable:
    cached = G._cache.get("char_table")
    if cached is not None:
        return cached
    table = _char_table(G)
    G._cache["char_table"] = table
    return table


def _char_table(G: Group) -> CharTable:
    cc = conjugacy_classes(G)
    r = cc.count
    e = exponent(G)
    ctx = choose_dixon_prime(G.order, e)
    if G.order == 1:
        table = CharTable(G, cc, ctx, (Character(1, (((0, 1),),)),))
        _verify_table(table)
        return table
    q = ctx.q

    omegas = _central_characters(cc, q)

    sizes = np.array(cc.sizes, dtype=np.int64)
    sizes_inv = np.array([modmat.inv_mod(int(s), q) for s in cc.sizes], dtype=np.int64)
    inv_class = list(cc.inverse_class)
    e_inv = modmat.inv_mod(e, q)
    PM = np.array(cc.power_table(e), dtype=np.int64)
    ks = np.arange(e, dtype=np.int64)
    theta_pows = np.array(ctx.theta_powers, dtype=np.int64)
    W = theta_pows[(-np.outer(ks, ks)) % e]  # W[j, t] = theta^(-jt)

    chars = []
    sqrt_order = isqrt(G.order)
    for v in omegas:
        t = int(np.sum(v * v[inv_class] % q * sizes_inv % q) % q)
        d_sq = G.order * modmat.inv_mod(t, q) % q
        d = isqrt(d_sq)
        if d * d != d_sq or d > sqrt_order or d < 1:
            raise RuntimeError(f"recovered degree^2 = {d_sq} is not an "
                               f"admissible square for {G.name}")
        chi = d * v % q * sizes_inv % q      # chi[k] = chi(g_k) mod q
        mult = chi[PM] @ W % q * e_inv % q   # mult[i, t] = m_{i,t}
        if (mult > d).any():
            raise RuntimeError(f"root multiplicity exceeds degree for {G.name}")
        if (mult.sum(axis=1) != d).any():
            raise RuntimeError(f"multiplicities of a class do not sum to "
                               f"the degree for {G.name}")
        values = []
        for row in mult:
            nz = np.nonzero(row)[0]
            values.append(tuple((int(t_), int(row[t_])) for t_ in nz))
        chars.append(Character(d, tuple(values)))

    chars.sort(key=Character.sort_key)
    table = CharTable(G, cc, ctx, tuple(chars))
    _verify_table(table)
    return table


def _central_characters(cc: ConjClasses, q: int) -> list[np.ndarray]:
    """Common eigenvectors of the class matrices over F_q, normalised
    so the identity-class coordinate is 1.

    Subspaces are split against the class matrices in index order until
    every one is a line; intersections of eigenspaces of commuting
    matrices are invariant, so restrictions stay well defined.
    """
    r = cc.count
    spaces = [(np.eye(r, dtype=np.int64), list(range(r)))]
    for i in range(1, r):
        if all(B.shape[0] == 1 for B, _ in spaces):
            break
        A = class_matrix(cc, i).T % q
        new_spaces = []
        for B, pivots in spaces:
            if B.shape[0] == 1:
                new_spaces.append((B, pivots))
                continue
            BA = B @ A % q
            R = BA[:, pivots]
            if not np.array_equal(R @ B % q, BA):
                raise RuntimeError("class matrix does not preserve a "
                                   "computed invariant subspace")
            dims = 0
            for lam in modmat.poly_roots(modmat.charpoly(R, q), q):
                # coordinate action is c -> c R, so eigenvectors are the
                # left kernel of R - lam*I
                shifted = (R - lam * np.eye(R.shape[0], dtype=np.int64)) % q
                K = modmat.kernel_basis(shifted.T % q, q)
                if K.shape[0] == 0:
                    continue
                C, piv = modmat.rref(K @ B % q, q)
                new_spaces.append((C, piv))
                dims += C.shape[0]
            if dims != B.shape[0]:
                raise RuntimeError("eigenspace splitting stalled; class "
                                   "constants are inconsistent")
        spaces = new_spaces
    if any(B.shape[0] != 1 for B, _ in spaces):
        raise RuntimeError("eigenspace splitting stalled before reaching "
                           "one-dimensional common eigenspaces")
    out = []
    for B, _ in spaces:
        v = B[0] % q
        if v[0] == 0:
            raise RuntimeError("eigenvector vanishes on the identity class")
        out.append(v * modmat.inv_mod(int(v[0]), q) % q)
    return out


def kernel_of(table: CharTable, chi: Character) -> Subgroup:
    """ker chi = union of classes where the value equals the degree."""
    cc = table.classes
    members = []
    full = ((0, chi.degree),)
    for i in range(cc.count):
        if chi.values[i] == full:
            members.extend(cc.members[i])
    sub = make_subgroup(table.group, members, "ker")
    if not sub.is_normal:
        raise AssertionError("character kernel is not normal")
    return sub


def degree_set(table: CharTable) -> tuple[int, ...]:
    return tuple(sorted(set(table.degrees)))


def _verify_table(table: CharTable) -> None:
    G = table.group
    r = table.classes.count
    if len(table.irreducibles) != r:
        raise RuntimeError(f"{G.name}: {len(table.irreducibles)} irreducibles "
                           f"for {r} classes")
    if sum(ch.degree ** 2 for ch in table.irreducibles) != G.order:
        raise RuntimeError(f"{G.name}: degree squares do not sum to the order")
    for ch in table.irreducibles:
        if ch.values[0] != ((0, ch.degree),):
            raise RuntimeError(f"{G.name}: identity-class value is not the degree")
    bad = check_row_orthogonality(table) + check_column_orthogonality(table)
    if bad:
        raise RuntimeError(f"{G.name}: orthogonality failures: {bad[:3]} ...")


def _bincount_rows(idx: np.ndarray, weights: np.ndarray | None, nrows: int,
                   e: int) -> np.ndarray:
    """Row-wise histogram: idx (nrows x m) of exponents in [0, e)."""
    flat = (idx + e * np.arange(nrows, dtype=np.int64)[:, None]).ravel()
    if weights is None:
        out = np.bincount(flat, minlength=nrows * e)
    else:
        w = np.broadcast_to(weights, idx.shape).ravel()
        out = np.bincount(flat, weights=w, minlength=nrows * e)
        if out.max() >= 2 ** 53:
            raise AssertionError("orthogonality histogram exceeds exact "
                                 "float64 integer range")
    return out.reshape(nrows, e).astype(np.int64)


def check_row_orthogonality(table: CharTable) -> list[str]:
    """Exact check of sum_i |C_i| chi(g_i) conj(psi(g_i)) = |G| delta."""
    G, cc = table.group, table.classes
    e = table.context.exponent
    r = cc.count
    irr = table.irreducibles
    phi_deg = len(cyclotomic_polynomial(e)) - 1
    target0 = np.zeros(phi_deg, dtype=np.int64)
    target0[0] = G.order
    bad = []
    sizes = np.array(cc.sizes, dtype=np.int64)
    if all(ch.degree == 1 for ch in irr):
        exps = np.array([[v[0][0] for v in ch.values] for ch in irr],
                        dtype=np.int64)
        for a in range(len(irr)):
            diffs = (exps[a][None, :] - exps[a:]) % e
            red = reduce_mod_cyclotomic(
                _bincount_rows(diffs, sizes, len(irr) - a, e), e)
            for b in range(a, len(irr)):
                expect = target0 if b == a else 0
                if not np.array_equal(red[b - a], np.broadcast_to(expect, red[b - a].shape)):
                    bad.append(f"row pair ({a},{b})")
    else:
        for a in range(len(irr)):
            rows = []
            for b in range(a, len(irr)):
                acc = np.zeros(e, dtype=np.int64)
                for i in range(r):
                    s = cc.sizes[i]
                    for k1, m1 in irr[a].values[i]:
                        for k2, m2 in irr[b].values[i]:
                            acc[(k1 - k2) % e] += s * m1 * m2
                rows.append(acc)
            red = reduce_mod_cyclotomic(np.array(rows), e)
            for b in range(a, len(irr)):
                expect = target0 if b == a else 0
                if not np.array_equal(red[b - a], np.broadcast_to(expect, red[b - a].shape)):
                    bad.append(f"row pair ({a},{b})")
    return bad


def check_column_orthogonality(table: CharTable) -> list[str]:
    """Exact check of sum_chi chi(g_i) conj(chi(g_j)) = delta_ij |C_G(g_i)|."""
    G, cc = table.group, table.classes
    e = table.context.exponent
    r = cc.count
    irr = table.irreducibles
    phi_deg = len(cyclotomic_polynomial(e)) - 1
    bad = []
    if all(ch.degree == 1 for ch in irr):
        exps = np.array([[v[0][0] for v in ch.values] for ch in irr],
                        dtype=np.int64)
        for i in range(r):
            # column i against columns j >= i, summed over characters
            diffs = (exps[:, [i]] - exps[:, i:]) % e  # (chars, r-i)
            red = reduce_mod_cyclotomic(
                _bincount_rows(diffs.T, None, r - i, e), e)
            for j in range(i, r):
                expect = np.zeros(phi_deg, dtype=np.int64)
                if j == i:
                    expect[0] = G.order // cc.sizes[i]
                if not np.array_equal(red[j - i], expect):
                    bad.append(f"column pair ({i},{j})")
    else:
        for i in range(r):
            rows = []
            for j in range(i, r):
                acc = np.zeros(e, dtype=np.int64)
                for ch in irr:
                    for k1, m1 in ch.values[i]:
                        for k2, m2 in ch.values[j]:
                            acc[(k1 - k2) % e] += m1 * m2
                rows.append(acc)
            red = reduce_mod_cyclotomic(np.array(rows), e)
            for j in range(i, r):
                expect = np.zeros(phi_deg, dtype=np.int64)
                if j == i:
                    expect[0] = G.order // cc.sizes[i]
                if not np.array_equal(red[j - i], expect):
                    bad.append(f"column pair ({i},{j})")
    return bad
