"""Group constructors and the text spec language that names them.

Spec grammar (atoms joined by '*' for direct products):

    cyclic:N            one N-cycle
    abelian:P:[n1,...]  abelian p-group of the given exponent partition
    abelian:[d1,...]    direct product of cycles of the given orders
    dihedral:N          symmetries of the N-gon (order 2N, N >= 3)
    ut3:P               unitriangular 3x3 matrices over F_P on P^3 vectors
    file:PATH#NAME      entry NAME of the catalog file at PATH

Parsing and printing round-trip exactly on canonical forms.
"""

from dataclasses import dataclass

from .groups import DEFAULT_ORDER_CAP, Group, close_group
from .perms import perm_from_cycles
from .pseudo import _is_prime_int

Atom = tuple


@dataclass(frozen=True)
class GroupSpec:
    atoms: tuple[Atom, ...]

    def __str__(self):
        return "*".join(_atom_text(a) for a in self.atoms)


def _atom_text(a: Atom) -> str:
    kind = a[0]
    if kind == "cyclic":
        return f"cyclic:{a[1]}"
    if kind == "abelian_p":
        return f"abelian:{a[1]}:[{','.join(map(str, a[2]))}]"
    if kind == "abelian":
        return f"abelian:[{','.join(map(str, a[1]))}]"
    if kind == "dihedral":
        return f"dihedral:{a[1]}"
    if kind == "ut3":
        return f"ut3:{a[1]}"
    if kind == "file":
        return f"file:{a[1]}#{a[2]}"
    raise AssertionError(f"unknown atom {a!r}")


def parse_group_spec(text: str) -> GroupSpec:
    text = text.strip()
    if not text:
        raise ValueError("empty group spec")
    atoms = []
    for part in text.split("*"):
        atoms.append(_parse_atom(part.strip()))
    return GroupSpec(tuple(atoms))


def _parse_atom(part: str) -> Atom:
    if part.startswith("cyclic:"):
        n = _positive_int(part[7:], part)
        return ("cyclic", n)
    if part.startswith("dihedral:"):
        n = _positive_int(part[9:], part)
        if n < 3:
            raise ValueError(f"{part!r}: dihedral needs at least 3 points")
        return ("dihedral", n)
    if part.startswith("ut3:"):
        p = _positive_int(part[4:], part)
        if not _is_prime_int(p):
            raise ValueError(f"{part!r}: {p} is not prime")
        return ("ut3", p)
    if part.startswith("abelian:"):
        rest = part[8:]
        if rest.startswith("["):
            orders = _bracket_ints(rest, part)
            if any(d < 1 for d in orders):
                raise ValueError(f"{part!r}: cyclic orders must be positive")
            return ("abelian", orders)
        if ":" not in rest:
            raise ValueError(f"bad abelian spec {part!r}")
        p_text, bracket = rest.split(":", 1)
        p = _positive_int(p_text, part)
        if not _is_prime_int(p):
            raise ValueError(f"{part!r}: {p} is not prime")
        ns = _bracket_ints(bracket, part)
        if any(n < 1 for n in ns):
            raise ValueError(f"{part!r}: exponents must be positive")
        return ("abelian_p", p, tuple(sorted(ns, reverse=True)))
    if part.startswith("file:"):
        rest = part[5:]
        if "#" not in rest:
            raise ValueError(f"{part!r}: expected file:PATH#NAME")
        path, name = rest.rsplit("#", 1)
        if not path or not name:
            raise ValueError(f"{part!r}: expected file:PATH#NAME")
        return ("file", path, name)
    raise ValueError(f"unrecognised group spec {part!r}")


def _positive_int(text: str, ctx: str) -> int:
    if not text.isdigit():
        raise ValueError(f"bad integer in group spec {ctx!r}")
    n = int(text)
    if n < 1:
        raise ValueError(f"{ctx!r}: integer must be positive")
    return n


def _bracket_ints(text: str, ctx: str) -> tuple[int, ...]:
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"{ctx!r}: expected [..] list")
    inner = text[1:-1]
    if not inner:
        raise ValueError(f"{ctx!r}: empty list")
    try:
        return tuple(int(x) for x in inner.split(","))
    except ValueError:
        raise ValueError(f"{ctx!r}: bad integer list") from None


def cyclic_group(n: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    return close_group(n, [perm_from_cycles(n, [tuple(range(n))])],
                       name=f"cyclic:{n}", cap=cap)


def abelian_group(orders, name: str, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Direct product of cycles on disjoint points; the i-th generator
    is the cycle on the i-th block, so element coordinates can be read
    off the permutation images directly."""
    degree = sum(orders)
    gens = []
    offset = 0
    for d in orders:
        gens.append(perm_from_cycles(degree, [tuple(range(offset, offset + d))]))
        offset += d
    return close_group(degree, gens, name=name, cap=cap)


def dihedral_group(n: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    rotation = perm_from_cycles(n, [tuple(range(n))])
    reflection = tuple((n - x) % n for x in range(n))
    return close_group(n, [rotation, reflection], name=f"dihedral:{n}", cap=cap)


def ut3_group(p: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Upper unitriangular 3x3 matrices over F_p acting on column
    vectors; nonabelian of order p^3, exponent p for odd p."""
    pts = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    index = {v: i for i, v in enumerate(pts)}

    def mat_perm(M):
        imgs = []
        for v in pts:
            w = tuple(sum(M[r][c] * v[c] for c in range(3)) % p for r in range(3))
            imgs.append(index[w])
        return tuple(imgs)

    shear12 = mat_perm([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    shear23 = mat_perm([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    return close_group(p ** 3, [shear12, shear23], name=f"ut3:{p}", cap=cap)


def direct_product(groups, name: str, cap: int = DEFAULT_ORDER_CAP) -> Group:
    degree = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for perm in g.generators:
            imgs = list(range(degree))
            for x, y in enumerate(perm):
                imgs[offset + x] = offset + y
            gens.append(tuple(imgs))
        offset += g.degree
    return close_group(degree, gens, name=name, cap=cap)


def build_group(spec: GroupSpec | str, cap: int = DEFAULT_ORDER_CAP) -> Group:
    from .catalog import load_catalog  # cycle: catalog entries build groups

    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    built = []
    for atom in spec.atoms:
        kind = atom[0]
        if kind == "cyclic":
            g = cyclic_group(atom[1], cap)
        elif kind == "abelian_p":
            p, ns = atom[1], atom[2]
            orders = [p ** n for n in ns]
            g = abelian_group(orders, _atom_text(atom), cap)
        elif kind == "abelian":
            g = abelian_group(atom[1], _atom_text(atom), cap)
        elif kind == "dihedral":
            g = dihedral_group(atom[1], cap)
        elif kind == "ut3":
            g = ut3_group(atom[1], cap)
        elif kind == "file":
            entries = {e.name: e for e in load_catalog(atom[1], cap=cap)}
            if atom[2] not in entries:
                raise ValueError(f"catalog {atom[1]} has no entry {atom[2]!r}")
            g = entries[atom[2]].build(cap)
        else:
            raise AssertionError(f"unknown atom {atom!r}")
        built.append(g)
    if len(built) == 1:
        return built[0]
    return direct_product(built, str(spec), cap)
