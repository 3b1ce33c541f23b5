"""Machine checkers for the structural statements the toolkit verifies.

Each checker is hypothesis-guarded: when its preconditions fail on the
given input it reports N/A rather than a verdict.  A FAIL from any of
these on honest data is significant, since it would contradict either
the accompanying analysis or the computation itself, so reports carry
enough detail to audit.
"""

from dataclasses import dataclass, field

from .dixon import char_table, degree_set
from .groups import (Group, center, derived_subgroup, exponent, frattini_subgroup,
                     is_cyclic, is_metacyclic, maximal_subgroups_of_normal,
                     quotient_group)
from .pseudo import (AbelianType, PseudoAlgebra, abelian_pseudo, pseudo_algebra,
                     pseudo_equal, reconstruct_abelian, NotAbelianRealizableError)

PASS, FAIL, NA = "PASS", "FAIL", "N/A"


class HypothesisNotMetError(ValueError):
    """Raised by checkers whose contract treats an unmet hypothesis as
    an error rather than an N/A report."""


@dataclass(frozen=True)
class Report:
    check: str
    subject: str
    verdict: str
    detail: str
    data: dict = field(default_factory=dict, compare=False)

    def line(self) -> str:
        return f"CHECK {self.check} {self.subject} {self.verdict} — {self.detail}"

    def as_dict(self) -> dict:
        return {"check": self.check, "subject": self.subject,
                "verdict": self.verdict, "detail": self.detail, **self.data}


def _int_log(base: int, n: int) -> int | None:
    k = 0
    while n > 1 and n % base == 0:
        n //= base
        k += 1
    return k if n == 1 else None


def check_lemma21(G: Group, target: AbelianType) -> Report:
    """Nonabelian G sharing its pseudo-algebra with an abelian p-group
    must have at least three distinct character degrees; additionally,
    a two-degree set {1, p^e} is ruled out by the counting identity
    p^(n-r) - 1 = (p^(a-r) - 1) p^(2e), which has no solution."""
    if len(target.parts) != 1:
        raise ValueError("target must be an abelian p-group type")
    p = target.parts[0][0]
    a = sum(target.parts[0][1])
    name = "lemma21"
    if G.is_abelian:
        return Report(name, G.name, NA, "group is abelian")
    PG = pseudo_algebra(G)
    PA = abelian_pseudo(target)
    if not pseudo_equal(PG, PA):
        return Report(name, G.name, NA,
                      f"pseudo-algebras differ: C(G)={PG} C(A)={PA}")
    cd = degree_set(char_table(G))
    n = _int_log(p, G.order)
    r = _int_log(p, G.order // derived_subgroup(G).order)
    if n is None or r is None:
        return Report(name, G.name, FAIL,
                      f"|G| or |G:G'| is not a power of {p}")
    # no positive e solves p^(n-r) - 1 = (p^(a-r) - 1) * p^(2e)
    solvable = [e for e in range(1, n + 1)
                if p ** (n - r) - 1 == (p ** (a - r) - 1) * p ** (2 * e)]
    ok = len(cd) >= 3 and not solvable
    detail = (f"|cd(G)|={len(cd)} cd={set(cd)}; two-degree identity has "
              f"{'no solution' if not solvable else f'solutions e={solvable}'} "
              f"for n={n} r={r} a={a}")
    return Report(name, G.name, PASS if ok else FAIL, detail,
                  {"cd": list(cd), "n": n, "r": r, "a": a})


@dataclass(frozen=True)
class Lemma22Prediction:
    """Closed forms for the degree statistics when cd(G) = {1, p, p^2}
    and C(G) matches an abelian group of order p^a."""

    p: int
    a: int
    r: int
    predicted_order: int
    k1: int
    k2: int

    @classmethod
    def from_parameters(cls, p: int, a: int, r: int) -> "Lemma22Prediction":
        if r < 2:
            raise ValueError(f"r must be >= 2, got {r}")
        k1 = p ** a - p ** r - p ** (r - 2)
        k2 = p ** (r - 2)
        if k1 < 0:
            raise ValueError(f"negative k1 for p={p} a={a} r={r}")
        return cls(p, a, r, p ** (a + 2), k1, k2)


def lemma22_feasible_orders(p: int, a: int, k: int) -> list[int]:
    """Candidate orders p^(a+1..a+3) that survive the divisibility
    (p^2 - 1) | (|G| - k(G)); exactly p^(a+2) remains."""
    if k != p ** a:
        raise ValueError(f"k must equal p^a = {p ** a}, got {k}")
    return [p ** (a + j) for j in (1, 2, 3)
            if (p ** (a + j) - k) % (p * p - 1) == 0]


def check_lemma22(G: Group, target: AbelianType) -> Report:
    """With cd(G) = {1, p, p^2} and C(G) = C(A), verify p = 2,
    |G| = p^(a+2), and the predicted counts of degree-p and degree-p^2
    characters against the computed table."""
    if len(target.parts) != 1:
        raise ValueError("target must be an abelian p-group type")
    p = target.parts[0][0]
    a = sum(target.parts[0][1])
    name = "lemma22"
    if G.is_abelian:
        return Report(name, G.name, NA, "group is abelian")
    if not pseudo_equal(pseudo_algebra(G), abelian_pseudo(target)):
        return Report(name, G.name, NA, "pseudo-algebras differ")
    table = char_table(G)
    cd = degree_set(table)
    if cd != (1, p, p * p):
        return Report(name, G.name, NA, f"cd(G)={set(cd)} is not {{1,{p},{p * p}}}")
    r = _int_log(p, G.order // derived_subgroup(G).order)
    if r is None or r < 2:
        return Report(name, G.name, FAIL, f"|G:G'| is not p^r with r >= 2")
    pred = Lemma22Prediction.from_parameters(p, a, r)
    k1 = sum(1 for d in table.degrees if d == p)
    k2 = sum(1 for d in table.degrees if d == p * p)
    checks = {
        "p=2": p == 2,
        "order": G.order == pred.predicted_order,
        "k1": k1 == pred.k1,
        "k2": k2 == pred.k2,
    }
    ok = all(checks.values())
    detail = (f"p={p} |G|={G.order} expected {pred.predicted_order}; "
              f"k1={k1} expected {pred.k1}; k2={k2} expected {pred.k2}")
    return Report(name, G.name, PASS if ok else FAIL, detail,
                  {"prediction": pred.__dict__, "k1": k1, "k2": k2,
                   "failed": [k for k, v in checks.items() if not v]})


def verify_counterexample(G: Group, target: AbelianType) -> Report:
    """PASS when G has the same pseudo-algebra as the abelian group of
    the target type but a different order."""
    PG = pseudo_algebra(G)
    PA = abelian_pseudo(target)
    cd = degree_set(char_table(G))
    equal = pseudo_equal(PG, PA)
    differs = G.order != target.order
    verdict = PASS if equal and differs else FAIL
    detail = (f"C(G)={PG} C(A)={PA} {'equal' if equal else 'differ'}; "
              f"|G|={G.order} |A|={target.order}; cd(G)={set(cd)}")
    return Report("counterexample", G.name, verdict, detail,
                  {"order_g": G.order, "order_a": target.order,
                   "pseudo_g": str(PG), "pseudo_a": str(PA), "cd": list(cd)})


@dataclass(frozen=True)
class Thm12Certificate:
    """Outcome of the two-case structure test for groups whose
    pseudo-algebra matches C_{p^n} x C_p."""

    outcome: str  # isomorphic-to-A | case-2 | violated
    details: tuple[tuple[str, str], ...]

    def as_dict(self) -> dict:
        return {"outcome": self.outcome, "details": dict(self.details)}


def thm12_certificate(G: Group, p: int, n: int) -> Thm12Certificate:
    """Certify that G is (a) the abelian group C_{p^n} x C_p itself, or
    (b) satisfies every clause of the nonabelian alternative: index-p^2
    derived subgroup, p odd, noncyclic centre, and a unique maximal
    subgroup X of G' normal in G with G/X nonabelian of order p^3 and
    exponent p.  Any other configuration is reported as 'violated'."""
    if n < 3:
        raise HypothesisNotMetError(f"n must be >= 3, got {n}")
    target = AbelianType(((p, (n, 1)),))
    PG = pseudo_algebra(G)
    PA = abelian_pseudo(target)
    if not pseudo_equal(PG, PA):
        raise HypothesisNotMetError(
            f"hypothesis unmet: C(G)={PG} differs from C(A)={PA}")
    details: list[tuple[str, str]] = []
    if G.is_abelian:
        try:
            t = reconstruct_abelian(PG)
            ok = t == target
            details.append(("reconstructed-type", str(t)))
        except NotAbelianRealizableError as ex:
            ok = False
            details.append(("reconstructed-type", f"error: {ex}"))
        return Thm12Certificate("isomorphic-to-A" if ok else "violated",
                                tuple(details))
    der = derived_subgroup(G)
    index = G.order // der.order
    details.append(("index-of-derived", str(index)))
    details.append(("p", str(p)))
    z_cyclic = is_cyclic(center(G))
    details.append(("centre-cyclic", str(z_cyclic)))
    ok = index == p * p and p > 2 and not z_cyclic
    normal_maximals = [X for X in maximal_subgroups_of_normal(G, der)
                       if X.is_normal]
    details.append(("normal-maximals-of-derived", str(len(normal_maximals))))
    if len(normal_maximals) != 1:
        ok = False
    else:
        X = normal_maximals[0]
        Q = quotient_group(G, X, name=f"{G.name}/X")
        details.append(("quotient-order", str(Q.order)))
        details.append(("quotient-exponent", str(exponent(Q))))
        details.append(("quotient-abelian", str(Q.is_abelian)))
        ok = ok and Q.order == p ** 3 and exponent(Q) == p and not Q.is_abelian
    return Thm12Certificate("case-2" if ok else "violated", tuple(details))


def thm23_scan(entries, p: int, n: int) -> Report:
    """Scan catalog entries: every metacyclic group whose pseudo-algebra
    equals C(C_{p^n} x C_p) must be abelian of exactly that type."""
    target_type = AbelianType(((p, (n, 1)),))
    target = abelian_pseudo(target_type)
    checked = 0
    matched = []
    violations = []
    for name, G in entries:
        checked += 1
        if not is_metacyclic(G):
            continue
        if not pseudo_equal(pseudo_algebra(G), target):
            continue
        matched.append(name)
        if not G.is_abelian:
            violations.append(f"{name}: nonabelian")
            continue
        t = reconstruct_abelian(pseudo_algebra(G))
        if t != target_type:
            violations.append(f"{name}: reconstructs to {t}")
    verdict = PASS if not violations else FAIL
    detail = (f"target C(C_{p}^{n} x C_{p})={target}; checked {checked} "
              f"entries, matched {sorted(matched)}; "
              f"violations: {violations if violations else 'none'}")
    return Report("thm23", f"catalog[p={p},n={n}]", verdict, detail,
                  {"checked": checked, "matched": sorted(matched),
                   "violations": violations})


def counting_identity(G: Group) -> Report:
    """|G| = sum of squared degrees and #linear characters = |G:G'|."""
    table = char_table(G)
    sq = sum(d * d for d in table.degrees)
    linear = sum(1 for d in table.degrees if d == 1)
    index = G.order // derived_subgroup(G).order
    ok = sq == G.order and linear == index
    detail = f"sum deg^2 = {sq} vs |G| = {G.order}; #linear = {linear} vs |G:G'| = {index}"
    return Report("counting", G.name, PASS if ok else FAIL, detail,
                  {"sum_sq": sq, "linear": linear, "index_derived": index})


def frattini_quotient_check(G: Group, p: int) -> bool:
    """True when G/Phi(G) is elementary abelian of order exactly p^2,
    i.e. G needs exactly two generators."""
    if _int_log(p, G.order) is None:
        raise ValueError(f"|{G.name}| = {G.order} is not a power of {p}")
    Q = quotient_group(G, frattini_subgroup(G), name=f"{G.name}/Phi")
    return Q.order == p * p and exponent(Q) == p
