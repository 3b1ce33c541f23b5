#!/usr/bin/env python3
"""Search constructible 2-groups of order 128 for witnesses whose
pseudo-algebra equals that of the abelian group of type 2:[3,1,1].

Strategy: seed a pool with wreath, semidirect, holomorph-style and
central-product constructions, then expand it with index-2 subgroups
and central quotients.  Candidates of order 128 are screened by class
count before the exact table is computed.  Matches are reported with an
invariant profile that separates non-isomorphic groups.

Run from the repository root:  python tools/search_witnesses.py
"""

import sys
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from codegrees.constructors import abelian_group, dihedral_group, direct_product
from codegrees.groups import (Group, Subgroup, center, close_group, conjugacy_classes,
                              derived_subgroup, exponent, frattini_subgroup,
                              from_multiplication, full_subgroup, make_subgroup,
                              maximal_subgroups_of_normal, quotient_group,
                              abelian_invariant_type)
from codegrees.dixon import char_table, degree_set
from codegrees.pseudo import abelian_pseudo, parse_abelian_type, pseudo_algebra

TARGET = abelian_pseudo(parse_abelian_type("2:[3,1,1]"))
TARGET_K = TARGET.total_multiplicity  # 32 classes


# ---------------------------------------------------------------------------
# constructions

def wreath_c2(G: Group, name: str) -> Group:
    """G wr C2 on twice the points of G."""
    d = G.degree
    gens = []
    for g in G.generators:
        gens.append(tuple(list(g) + [d + x for x in range(d)]))
    swap = tuple(list(range(d, 2 * d)) + list(range(d)))
    gens.append(swap)
    return close_group(2 * d, gens, name=name, cap=4096)


def abelian_tuple_group(orders):
    """Element tuples, index map and addition for a product of cyclics."""
    elems = list(product(*[range(d) for d in orders]))
    index = {v: i for i, v in enumerate(elems)}

    def add(a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, orders))

    return elems, index, add


def automorphisms_of_abelian(orders):
    """All automorphisms of prod C_d as index permutations of the
    element tuples.  The map sending generator i to a candidate image
    of compatible order is a well-defined endomorphism; it is an
    automorphism exactly when the induced index map is a bijection."""
    elems, index, add = abelian_tuple_group(orders)
    n = len(elems)
    k = len(orders)
    cands = []
    for i, d in enumerate(orders):
        cands.append([v for v in elems
                      if all((v[t] * d) % orders[t] == 0 for t in range(k))])
    auts = []
    for images in product(*cands):
        # multiples[i][a] = a * images[i]
        multiples = []
        for i, img in enumerate(images):
            row = [(0,) * k]
            for _ in range(orders[i] - 1):
                row.append(add(row[-1], img))
            multiples.append(row)
        perm = [0] * n
        for v_idx, v in enumerate(elems):
            acc = multiples[0][v[0]]
            for i in range(1, k):
                acc = add(acc, multiples[i][v[i]])
            perm[v_idx] = index[acc]
        if len(set(perm)) == n:
            auts.append(tuple(perm))
    return elems, index, add, auts


def perm_order_of(perm):
    t = 1
    cur = perm
    ident = tuple(range(len(perm)))
    while cur != ident:
        cur = tuple(perm[x] for x in cur)
        t += 1
    return t


def semidirect_cyclic(orders, alpha, t, name):
    """(prod C_d) : C_t with the cyclic factor acting by alpha."""
    elems, index, add = abelian_tuple_group(orders)
    n = len(elems)
    powers = [tuple(range(n))]
    for _ in range(t - 1):
        powers.append(tuple(alpha[x] for x in powers[-1]))

    def mul(x, y):
        nx, ix = divmod(x, t)
        ny, iy = divmod(y, t)
        moved = powers[ix][ny]
        return index[add(elems[nx], elems[moved])] * t + (ix + iy) % t

    gens = [index[v] * t for v in _basis_tuples(orders)] + [1]
    return from_multiplication(n * t, mul, name, gens=gens, cap=4096)


def semidirect_v4(orders, alpha, beta, name):
    """(prod C_d) : (C2 x C2) with commuting involutions alpha, beta."""
    elems, index, add = abelian_tuple_group(orders)
    n = len(elems)
    acts = {(0, 0): tuple(range(n)), (1, 0): alpha, (0, 1): beta,
            (1, 1): tuple(alpha[x] for x in beta)}

    def mul(x, y):
        nx, hx = divmod(x, 4)
        ny, hy = divmod(y, 4)
        i1, j1 = divmod(hx, 2)
        i2, j2 = divmod(hy, 2)
        moved = acts[(i1, j1)][ny]
        return index[add(elems[nx], elems[moved])] * 4 + ((i1 ^ i2) * 2 + (j1 ^ j2))

    gens = [index[v] * 4 for v in _basis_tuples(orders)] + [1, 2]
    return from_multiplication(n * 4, mul, name, gens=gens, cap=4096)


def _basis_tuples(orders):
    out = []
    for i in range(len(orders)):
        v = [0] * len(orders)
        v[i] = 1
        out.append(tuple(v))
    return out


def holomorph(orders, name):
    """N : Aut(N) for abelian N, with the full automorphism list."""
    elems, index, add = abelian_tuple_group(orders)
    _, _, _, auts = automorphisms_of_abelian(orders)
    auts = sorted(auts)
    aut_index = {a: i for i, a in enumerate(auts)}
    n, m = len(elems), len(auts)

    def mul(x, y):
        nx, ax = divmod(x, m)
        ny, ay = divmod(y, m)
        alpha = auts[ax]
        comp = tuple(alpha[t] for t in auts[ay])
        return index[add(elems[nx], elems[alpha[ny]])] * m + aut_index[comp]

    gens = [index[v] * m for v in _basis_tuples(orders)]
    gens += [aut_index[a] for a in auts]
    return from_multiplication(n * m, mul, name, gens=gens, cap=4096)


def central_product(G1, G2, z1, z2, name):
    """(G1 x G2)/<(z1, z2^-1)> for central involutions z1, z2."""
    P = direct_product([G1, G2], f"{G1.name}x{G2.name}", cap=4096)
    iz2 = G2.inv(z2)
    pair = tuple(list(G1.elements[z1]) + [x + G1.degree for x in G2.elements[iz2]])
    N = make_subgroup(P, [0, P.index[pair]], "antidiag")
    return quotient_group(P, N, name=name)


def quaternion_group(m):
    """Generalized quaternion of order 4m: a^(2m)=1, b^2=a^m, bab^-1=a^-1."""
    n = 4 * m

    def mul(x, y):
        i1, j1 = divmod(x, 2)
        i2, j2 = divmod(y, 2)
        i = (i1 + (i2 if j1 == 0 else -i2)) % (2 * m)
        j = j1 + j2
        if j == 2:
            i = (i + m) % (2 * m)
            j = 0
        return i * 2 + j

    return from_multiplication(n, mul, f"q{n}", gens=[2, 1])


# ---------------------------------------------------------------------------
# pool expansion

def fingerprint(G: Group):
    cc = conjugacy_classes(G)
    orders = tuple(sorted(G.order_of(i) for i in range(G.order)))
    pairs = tuple(sorted((s, G.order_of(r)) for s, r in zip(cc.sizes, cc.reps)))
    return (G.order, cc.count, tuple(sorted(cc.sizes)), orders,
            center(G).order, derived_subgroup(G).order, pairs)


def profile(G: Group):
    """Stronger isomorphism-separating profile for matches."""
    der = derived_subgroup(G)
    zen = center(G)
    table = char_table(G)
    ab = quotient_group(G, der, name="ab")
    zt = abelian_invariant_type(zen.as_group()) if zen.order > 1 else {}
    dt = (abelian_invariant_type(der.as_group())
          if der.order > 1 and der.as_group().is_abelian else None)
    return {
        "k": conjugacy_classes(G).count,
        "class_sizes": tuple(sorted(conjugacy_classes(G).sizes)),
        "element_orders": tuple(sorted(G.order_of(i) for i in range(G.order))),
        "|Z|": zen.order, "Z_type": zt.get(2),
        "|G'|": der.order, "Gp_type": (dt or {}).get(2) if dt else "nonabelian",
        "G/G'": abelian_invariant_type(ab).get(2),
        "|Phi|": frattini_subgroup(G).order,
        "exponent": exponent(G),
        "degrees": tuple(sorted(table.degrees)),
        "pseudo_GmodZ": str(pseudo_algebra(quotient_group(G, zen, name="GZ"))),
    }


def index2_subgroups(G: Group):
    for S in maximal_subgroups_of_normal(G, full_subgroup(G)):
        yield S.as_group()


def central_involution_quotients(G: Group):
    zen = center(G)
    seen = set()
    for z in sorted(zen.members):
        if z != 0 and G.order_of(z) == 2 and z not in seen:
            sub = make_subgroup(G, [0, z], f"<z{z}>")
            seen.add(z)
            yield quotient_group(G, sub, name=f"{G.name}/z{z}")


def main():
    seeds = []

    d8 = dihedral_group(4)
    q8 = quaternion_group(2)
    c2 = abelian_group([2], "c2")

    seeds.append(wreath_c2(d8, "d8wr2"))
    seeds.append(wreath_c2(q8, "q8wr2"))
    seeds.append(wreath_c2(abelian_group([8], "c8"), "c8wr2"))
    seeds.append(wreath_c2(abelian_group([4, 2], "c4xc2"), "c4xc2wr2"))
    seeds.append(direct_product([wreath_c2(abelian_group([4], "c4"), "c4wr2"),
                                 abelian_group([4], "c4")], "c4wr2xc4", cap=4096))
    seeds.append(direct_product([wreath_c2(abelian_group([4], "c4"), "c4wr2"),
                                 abelian_group([2, 2], "c2c2")], "c4wr2xc2c2", cap=4096))

    # holomorphs: C16 : Aut(C16) has order 128, (C8 x C2) : Aut order 256
    seeds.append(holomorph([16], "hol-c16"))
    seeds.append(holomorph([8, 2], "hol-c8xc2"))

    # ad hoc central products at order 128: extraspecial-of-32 circ C8
    def central_involutions(G):
        return [z for z in sorted(center(G).members) if G.order_of(z) == 2]

    c8g = abelian_group([8], "c8")
    es_plus = central_product(d8, d8, central_involutions(d8)[0],
                              central_involutions(d8)[0], "es32+")
    es_minus = central_product(d8, q8, central_involutions(d8)[0],
                               central_involutions(q8)[0], "es32-")
    for es in (es_plus, es_minus):
        seeds.append(central_product(es, c8g, central_involutions(es)[0],
                                     central_involutions(c8g)[0], f"{es.name}.c8"))

    print("seeds:", [(g.name, g.order) for g in seeds])

    # split and half-split semidirect families around abelian cores
    semis = []
    for orders in ([8, 2, 2], [8, 4], [4, 4, 2], [16, 2], [4, 2, 2, 2]):
        label = "x".join(map(str, orders))
        _, _, _, auts = automorphisms_of_abelian(orders)
        invols = [a for a in auts if perm_order_of(a) == 2]
        order4 = [a for a in auts if perm_order_of(a) == 4]
        print(f"aut({label}): {len(auts)} total, {len(invols)} involutions, "
              f"{len(order4)} of order 4")
        for i, a in enumerate(order4 + invols):
            semis.append(semidirect_cyclic(orders, a, 4, f"{label}:c4#{i}"))
        for i, a in enumerate(invols):
            for j, b in enumerate(invols):
                if j <= i:
                    continue
                ab = tuple(a[x] for x in b)
                ba = tuple(b[x] for x in a)
                if ab != ba or ab == tuple(range(len(a))):
                    continue
                semis.append(semidirect_v4(orders, a, b, f"{label}:v4#{i},{j}"))
    print("order-32-core candidates:", len(semis))

    for orders in ([16, 4], [8, 8], [8, 4, 2], [16, 2, 2], [8, 2, 2, 2]):
        label = "x".join(map(str, orders))
        _, _, _, auts = automorphisms_of_abelian(orders)
        invols = [a for a in auts if perm_order_of(a) == 2]
        print(f"aut({label}): {len(invols)} involutions")
        for i, a in enumerate(invols):
            semis.append(semidirect_cyclic(orders, a, 2, f"{label}:c2#{i}"))

    for orders in ([8, 2], [4, 4], [4, 2, 2]):
        label = "x".join(map(str, orders))
        _, _, _, auts = automorphisms_of_abelian(orders)
        usable = [a for a in auts if perm_order_of(a) in (2, 4, 8)]
        print(f"aut({label}): {len(usable)} of order dividing 8 (nontrivial)")
        for i, a in enumerate(usable):
            semis.append(semidirect_cyclic(orders, a, 8, f"{label}:c8#{i}"))

    pool = {}
    matches = {}

    def consider(G: Group, depth: int):
        if G.order > 512 or G.order < 16:
            return
        fp = fingerprint(G)
        if fp in pool:
            return
        pool[fp] = G.name
        if G.order == 128 and conjugacy_classes(G).count == TARGET_K:
            P = pseudo_algebra(G)
            if P == TARGET:
                prof = profile(G)
                key = tuple(sorted((k, str(v)) for k, v in prof.items()))
                if key not in matches:
                    matches[key] = (G, prof)
                    print(f"*** MATCH {G.name} (profiles: {len(matches)})")
                    for k, v in sorted(prof.items()):
                        print(f"      {k}: {v}")
        # only descend from above: everything of order <= 128 is a leaf
        if depth <= 0 or G.order <= 128 or G.is_abelian:
            return
        for H in index2_subgroups(G):
            consider(H, depth - 1)
        for Q in central_involution_quotients(G):
            consider(Q, depth - 1)

    for G in seeds + semis:
        consider(G, depth=2)
    print(f"pool size {len(pool)}; distinct match profiles: {len(matches)}")
    for key, (G, prof) in matches.items():
        print("witness:", G.name, "degree", G.degree)


if __name__ == "__main__":
    main()
