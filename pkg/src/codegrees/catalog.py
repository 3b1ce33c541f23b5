"""Line-oriented catalog files of permutation groups.

Format ('#' starts a comment, blank lines ignored):

    group NAME
    degree N
    gen a0 a1 ... a(N-1)     # image list, 0-based; repeatable
    expect order N           # optional, verified at load
    expect pseudo (1,1) ...  # optional, checked by commands/tests

Catalogs are diffable plain text so any system that can print image
lists can produce them; everything claimed in a file is re-derived from
the raw generators here.
"""

from dataclasses import dataclass, field

from .groups import DEFAULT_ORDER_CAP, Group, close_group
from .perms import perm_from_images
from .pseudo import PseudoAlgebra, parse_pseudo


class CatalogError(ValueError):
    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


@dataclass
class CatalogEntry:
    name: str
    degree: int
    generators: tuple
    expected: dict = field(default_factory=dict)
    _group: Group | None = field(default=None, repr=False)

    def build(self, cap: int = DEFAULT_ORDER_CAP) -> Group:
        if self._group is None or self._group.order > cap:
            self._group = close_group(self.degree, self.generators,
                                      name=self.name, cap=cap)
        return self._group

    @property
    def expected_order(self) -> int | None:
        return self.expected.get("order")

    @property
    def expected_pseudo(self) -> PseudoAlgebra | None:
        return self.expected.get("pseudo")


def load_catalog(path, cap: int = DEFAULT_ORDER_CAP) -> list[CatalogEntry]:
    """Parse and validate a catalog file.  Expected orders are verified
    immediately; expected pseudo-algebras are stored for later checks."""
    entries: list[CatalogEntry] = []
    names = set()
    current: dict | None = None

    def finish(line_no):
        if current is None:
            return
        if current["degree"] is None:
            raise CatalogError(path, line_no, f"group {current['name']} has no degree")
        if not current["gens"]:
            raise CatalogError(path, line_no, f"group {current['name']} has no generators")
        entry = CatalogEntry(current["name"], current["degree"],
                             tuple(current["gens"]), current["expected"])
        if entry.expected_order is not None:
            got = entry.build(cap).order
            if got != entry.expected_order:
                raise CatalogError(path, line_no,
                                   f"group {entry.name} closed to order {got}, "
                                   f"expected {entry.expected_order}")
        entries.append(entry)

    line_no = 0
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            key = fields[0]
            if key == "group":
                if len(fields) != 2:
                    raise CatalogError(path, line_no, "usage: group NAME")
                finish(line_no)
                if fields[1] in names:
                    raise CatalogError(path, line_no, f"duplicate name {fields[1]!r}")
                names.add(fields[1])
                current = {"name": fields[1], "degree": None, "gens": [],
                           "expected": {}}
            elif current is None:
                raise CatalogError(path, line_no, f"{key!r} before any group line")
            elif key == "degree":
                if len(fields) != 2 or not fields[1].isdigit():
                    raise CatalogError(path, line_no, "usage: degree N")
                current["degree"] = int(fields[1])
            elif key == "gen":
                if current["degree"] is None:
                    raise CatalogError(path, line_no, "gen before degree")
                if len(fields) - 1 != current["degree"]:
                    raise CatalogError(path, line_no,
                                       f"gen has {len(fields) - 1} images, "
                                       f"expected {current['degree']}")
                try:
                    perm = perm_from_images(int(x) for x in fields[1:])
                except ValueError as ex:
                    raise CatalogError(path, line_no, str(ex)) from None
                current["gens"].append(perm)
            elif key == "expect":
                if len(fields) >= 3 and fields[1] == "order" and fields[2].isdigit():
                    current["expected"]["order"] = int(fields[2])
                elif len(fields) >= 3 and fields[1] == "pseudo":
                    try:
                        current["expected"]["pseudo"] = parse_pseudo(" ".join(fields[2:]))
                    except ValueError as ex:
                        raise CatalogError(path, line_no, str(ex)) from None
                else:
                    raise CatalogError(path, line_no,
                                       "usage: expect order N | expect pseudo (d,m) ...")
            else:
                raise CatalogError(path, line_no, f"unknown directive {key!r}")
        finish(line_no)
    return entries


def format_catalog_entry(name: str, group: Group, expected_pseudo=None,
                         comment: str | None = None) -> str:
    """Render one entry in catalog format, for catalog generators."""
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    lines.append(f"group {name}")
    lines.append(f"degree {group.degree}")
    for g in group.generators:
        lines.append("gen " + " ".join(map(str, g)))
    lines.append(f"expect order {group.order}")
    if expected_pseudo is not None:
        lines.append(f"expect pseudo {expected_pseudo}")
    return "\n".join(lines) + "\n"
