"""Group catalog: standard families, fixture-backed groups, and the
Frobenius groups F^2 : SL(2,5) over fields of characteristic 7.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import (
    BudgetExceeded,
    FieldLacksRoots,
    FixtureOrderMismatch,
    IdentificationFailed,
    MalformedFixture,
    MissingFixture,
    UnknownSpec,
)
from .finfield import FiniteField, make_field, prime_factors, sqrt
from .groups import (
    DEFAULT_BUDGET,
    Bsgs,
    EnumeratedGroup,
    FpfCertificate,
    MatrixElem,
    Permutation,
    bsgs_build,
    generate,
    is_fixed_point_free,
    semidirect,
)
from .spectrum import Spectrum, SpectrumFixture, compute_spectrum

# --- group specs -------------------------------------------------------------

_SPEC_RE = [
    ("S", re.compile(r"S\((\d+)\)")),
    ("A", re.compile(r"A\((\d+)\)")),
    ("PSL", re.compile(r"PSL\(2,(\d+)\)")),
    ("PGL", re.compile(r"PGL\(2,(\d+)\)")),
    ("SL", re.compile(r"SL\(2,(5)\)")),
    ("frobenius", re.compile(r"frobenius\((\d+)\)")),
]


@dataclass(frozen=True)
class GroupSpec:
    family: str
    arg: int | str

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        text = text.strip()
        if text.startswith("perm:"):
            path = text[len("perm:"):].strip()
            if not path:
                raise UnknownSpec("perm: needs a file path")
            return cls("perm", path)
        compact = re.sub(r"\s+", "", text)
        if compact.startswith("fixture:"):
            name = compact[len("fixture:"):]
            if not name:
                raise UnknownSpec("fixture: needs a group name")
            return cls("fixture", name)
        for family, rx in _SPEC_RE:
            m = rx.fullmatch(compact)
            if m:
                n = int(m.group(1))
                if family in ("S", "A", "frobenius") and n < 1:
                    raise UnknownSpec(f"{text!r}: parameter must be >= 1")
                if family in ("PSL", "PGL") and not _is_prime_power(n):
                    raise UnknownSpec(f"{text!r}: q must be a prime power")
                return cls(family, n)
        raise UnknownSpec(f"cannot parse group spec {text!r}")

    def __str__(self):
        if self.family in ("fixture", "perm"):
            return f"{self.family}:{self.arg}"
        if self.family in ("PSL", "PGL", "SL"):
            return f"{self.family}(2,{self.arg})"
        return f"{self.family}({self.arg})"


def _is_prime_power(q):
    return q > 1 and len(prime_factors(q)) == 1


def _prime_power(q):
    (p,) = prime_factors(q)
    return p, round(math.log(q, p))


# --- standard permutation families ------------------------------------------

def symmetric_generators(n: int) -> list[Permutation]:
    if n == 1:
        return [Permutation.identity(1)]
    gens = [Permutation.from_cycles(n, [[0, 1]])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [list(range(n))]))
    return gens


def alternating_generators(n: int) -> list[Permutation]:
    if n < 3:
        return [Permutation.identity(n)]
    gens = [Permutation.from_cycles(n, [[0, 1, 2]])]
    if n > 3:
        long = list(range(n)) if n % 2 else list(range(1, n))
        gens.append(Permutation.from_cycles(n, [long]))
    return gens


def _line_perm(F: FiniteField, fn) -> Permutation:
    """Permutation of the projective line: points 0..q-1 are field encodings, q is infinity."""
    q = F.q
    return Permutation([fn(x) for x in range(q)] + [fn(q)])


def pgl2_generators(q: int) -> list[Permutation]:
    """x -> x+1, x -> g x, x -> 1/x on the q+1 points of the projective line."""
    F = make_field(*_prime_power(q))
    g = F.primitive
    inf = q
    return [
        _line_perm(F, lambda x: inf if x == inf else F.add(x, 1)),
        _line_perm(F, lambda x: inf if x == inf else F.mul(g, x)),
        _line_perm(F, lambda x: 0 if x == inf else (inf if x == 0 else F.inv(x))),
    ]


def psl2_generators(q: int) -> list[Permutation]:
    """x -> x+1, x -> g^2 x, x -> -1/x."""
    F = make_field(*_prime_power(q))
    g2 = F.mul(F.primitive, F.primitive)
    inf = q
    return [
        _line_perm(F, lambda x: inf if x == inf else F.add(x, 1)),
        _line_perm(F, lambda x: inf if x == inf else F.mul(g2, x)),
        _line_perm(F, lambda x: 0 if x == inf else (inf if x == 0 else F.neg(F.inv(x)))),
    ]


def sl25_generators() -> list[MatrixElem]:
    F = make_field(5, 1)
    return [MatrixElem(F, [[1, 1], [0, 1]]), MatrixElem(F, [[1, 0], [1, 1]])]


# --- fixtures ------------------------------------------------------------------

@dataclass(frozen=True)
class GroupFixture:
    """A permutation representation shipped as data, with cited order and mu."""

    name: str
    degree: int
    order: int
    generators: tuple[tuple[int, ...], ...]
    mu: tuple[int, ...] | None
    source: str

    def permutations(self) -> list[Permutation]:
        return [Permutation(g) for g in self.generators]

    def spectrum_fixture(self) -> SpectrumFixture | None:
        if self.mu is None:
            return None
        return SpectrumFixture(self.name, self.order, self.mu, self.source)

    def to_json(self) -> str:
        data = {
            "name": self.name,
            "degree": self.degree,
            "order": self.order,
            "generators": [list(g) for g in self.generators],
            "source": self.source,
        }
        if self.mu is not None:
            data["mu"] = list(self.mu)
        return json.dumps(data, separators=(",", ":"))


def default_fixture_dir() -> Path:
    return Path(str(resources.files("gkgraph") / "fixtures"))


def parse_fixture(text: str, origin: str = "<fixture>") -> GroupFixture:
    try:
        data = json.loads(text)
        name = str(data["name"])
        degree = int(data["degree"])
        order = int(data["order"])
        gens = tuple(tuple(int(x) for x in g) for g in data["generators"])
        mu = data.get("mu")
        mu = tuple(int(x) for x in mu) if mu is not None else None
        source = str(data["source"])
    except (ValueError, KeyError, TypeError) as exc:
        raise MalformedFixture(f"{origin}: {exc}") from exc
    if not gens:
        raise MalformedFixture(f"{origin}: no generators")
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise MalformedFixture(f"{origin}: generator is not a permutation of 0..{degree - 1}")
    if order < 1:
        raise MalformedFixture(f"{origin}: order must be positive")
    fx = GroupFixture(name, degree, order, gens, mu, source)
    if mu is not None:
        fx.spectrum_fixture().validate()
    elif not source:
        raise MalformedFixture(f"{origin}: fixture data needs a source")
    return fx


def load_fixture(path) -> GroupFixture:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise MissingFixture(f"cannot read fixture {path}: {exc}") from exc
    return parse_fixture(text, str(path))


def find_fixture(name: str, fixtures_dir=None) -> GroupFixture:
    directory = Path(fixtures_dir) if fixtures_dir is not None else default_fixture_dir()
    for path in sorted(directory.glob("*.json")):
        try:
            head = json.loads(path.read_text()).get("name")
        except (OSError, ValueError, AttributeError):
            continue
        if head == name:
            return load_fixture(path)
    raise MissingFixture(f"no fixture named {name!r} in {directory}")


def list_fixtures(fixtures_dir=None) -> list[str]:
    directory = Path(fixtures_dir) if fixtures_dir is not None else default_fixture_dir()
    names = []
    for path in sorted(directory.glob("*.json")):
        try:
            names.append(json.loads(path.read_text())["name"])
        except (OSError, ValueError, KeyError, TypeError):
            continue
    return sorted(names)


# --- the SL(2,5) complement and the Frobenius family --------------------------

@dataclass(frozen=True)
class ComplementEvidence:
    """Facts that pin the complement down as SL(2,5)."""

    field: str
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    order: int
    involutions: int
    center_order: int
    quotient_order: int
    quotient_simple: bool
    spectrum: tuple[int, ...]
    generator_orders: dict = field(default_factory=dict)
    y_fifth_power: str = ""

    @property
    def identified(self) -> bool:
        return (self.order == 120 and self.involutions == 1 and self.center_order == 2
                and self.quotient_order == 60 and self.quotient_simple)

    def as_dict(self) -> dict:
        return {
            "field": self.field,
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "order": self.order,
            "involutions": self.involutions,
            "center_order": self.center_order,
            "quotient_order": self.quotient_order,
            "quotient_simple": self.quotient_simple,
            "spectrum": list(self.spectrum),
            "generator_orders": dict(self.generator_orders),
            "y_fifth_power": self.y_fifth_power,
        }


def complement_generators(F: FiniteField) -> dict[str, MatrixElem]:
    """x, y, z acting on F^2; requires square roots of -1 and 5 in F."""
    if F.p != 7:
        raise ValueError(f"the complement is built over characteristic 7, not {F.p}")
    alpha = sqrt(F(-1))
    beta = sqrt(F(5))
    if alpha is None or beta is None:
        raise FieldLacksRoots(f"{F} lacks a square root of -1 or of 5 (odd extension degree)")
    half = (beta + 1) / F(2)
    return {
        "x": MatrixElem(F, [[-1, 1], [-1, 0]]),
        "y": MatrixElem(F, [[0, alpha], [alpha, half]]),
        "z": MatrixElem(F, [[-1, 0], [0, -1]]),
    }


def _quotient_is_simple(C: EnumeratedGroup, center) -> tuple[int, bool]:
    """Size of C/Z and whether every nontrivial normal closure is everything."""
    minus = [z for z in center if not z.is_identity()]

    def cls(g):
        return min([g.key] + [(g * z).key for z in minus])

    reps = {}
    for g in C.elements:
        reps.setdefault(cls(g), g)
    quotient = list(reps.values())
    n = len(quotient)
    one = cls(C.identity)
    for g in quotient:
        if cls(g) == one:
            continue
        conj = {}
        for h in quotient:
            c = h.inverse() * g * h
            conj.setdefault(cls(c), c)
        closure = {one: C.identity}
        frontier = [C.identity]
        gens = list(conj.values())
        while frontier:
            nxt = []
            for a in frontier:
                for s in gens:
                    b = a * s
                    k = cls(b)
                    if k not in closure:
                        closure[k] = b
                        nxt.append(b)
            frontier = nxt
        if len(closure) != n:
            return n, False
    return n, True


def build_complement(F: FiniteField) -> tuple[EnumeratedGroup, ComplementEvidence]:
    gens = complement_generators(F)
    C = generate(gens.values(), budget=10_000)
    center = [g for g in C.elements if all(g * s == s * g for s in C.generators)]
    involutions = sum(1 for g in C.elements if g.order() == 2)
    qorder, simple = _quotient_is_simple(C, center)
    y = gens["y"]
    y5 = y**5
    if y5.is_identity():
        y5_desc = "identity"
    elif y5 == gens["z"]:
        y5_desc = "minus identity"
    else:
        y5_desc = "other"
    evidence = ComplementEvidence(
        field=repr(F),
        alpha=sqrt(F(-1)).coeffs,
        beta=sqrt(F(5)).coeffs,
        order=C.order,
        involutions=involutions,
        center_order=len(center),
        quotient_order=qorder,
        quotient_simple=simple,
        spectrum=compute_spectrum(C).orders,
        generator_orders={name: g.order() for name, g in gens.items()},
        y_fifth_power=y5_desc,
    )
    if not evidence.identified:
        raise IdentificationFailed(f"complement over {F} is not SL(2,5): {evidence.as_dict()}")
    return C, evidence


@dataclass(frozen=True)
class FrobeniusWitness:
    kernel_order: int
    complement_order: int
    fpf_certificate: FpfCertificate
    complement_id: ComplementEvidence

    @property
    def order(self) -> int:
        return self.kernel_order * self.complement_order


@dataclass
class FrobeniusResult:
    m: int
    field: FiniteField
    complement: EnumeratedGroup
    witness: FrobeniusWitness
    decomposition: Spectrum
    group: EnumeratedGroup | None = None
    exhaustive: Spectrum | None = None

    @property
    def spectrum(self) -> Spectrum:
        return self.exhaustive if self.exhaustive is not None else self.decomposition


def frobenius_field(m: int) -> FiniteField:
    if m < 1:
        raise ValueError("m must be >= 1")
    return make_field(7, 2 * m)


def build_frobenius(m: int, budget: int = DEFAULT_BUDGET, enumerate_group: bool = True) -> FrobeniusResult:
    """K : C with K = GF(7^(2m))^2 and C = SL(2,5).

    The group is materialized only when ``7^(4m) * 120`` fits the budget;
    otherwise the spectrum comes from the Frobenius decomposition
    {1, 7} u spectrum(C), which the fixed-point-free certificate justifies.
    """
    F = frobenius_field(m)
    C, evidence = build_complement(F)
    fpf = is_fixed_point_free(C)
    kernel_order = F.q**2
    witness = FrobeniusWitness(kernel_order, C.order, fpf, evidence)
    if not fpf:
        raise IdentificationFailed(f"complement over {F} has a fixed vector: {fpf.witness}")
    total = witness.order
    decomposition = Spectrum(tuple(set(evidence.spectrum) | {1, F.p}), "decomposition", total)
    result = FrobeniusResult(m, F, C, witness, decomposition)
    if enumerate_group and total <= budget:
        G = semidirect(F, 2, C, budget)
        result.group = G
        result.exhaustive = compute_spectrum(G)
    return result


# --- catalog -------------------------------------------------------------------

@dataclass
class CatalogEntry:
    spec: GroupSpec
    order: int
    kind: str
    generators: list
    group: EnumeratedGroup | None = None
    bsgs: Bsgs | None = None
    fixture: GroupFixture | None = None
    frobenius: FrobeniusResult | None = None
    degree: int | None = None

    @property
    def spectrum_fixture(self) -> SpectrumFixture | None:
        return self.fixture.spectrum_fixture() if self.fixture else None


def lookup(spec, budget: int = DEFAULT_BUDGET, fixtures_dir=None, materialize: bool = True) -> CatalogEntry:
    """Resolve a spec to generators, its order, and (within budget) its elements."""
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    fam, arg = spec.family, spec.arg

    if fam == "frobenius":
        res = build_frobenius(arg, budget, enumerate_group=materialize)
        return CatalogEntry(spec, res.witness.order, "affine", [], group=res.group, frobenius=res,
                            degree=2)
    if fam == "SL":
        gens = sl25_generators()
        G = generate(gens, budget)
        return CatalogEntry(spec, G.order, "matrix", gens, group=G, degree=2)

    fixture = None
    if fam == "S":
        gens = symmetric_generators(arg)
    elif fam == "A":
        gens = alternating_generators(arg)
    elif fam == "PGL":
        gens = pgl2_generators(arg)
    elif fam == "PSL":
        gens = psl2_generators(arg)
    elif fam == "fixture":
        fixture = find_fixture(arg, fixtures_dir)
        gens = fixture.permutations()
    elif fam == "perm":
        fixture = load_fixture(arg)
        gens = fixture.permutations()
    else:
        raise UnknownSpec(str(spec))

    chain = bsgs_build(gens)
    if fixture is not None and chain.order != fixture.order:
        raise FixtureOrderMismatch(
            f"{fixture.name}: generators give order {chain.order}, fixture declares {fixture.order}")
    entry = CatalogEntry(spec, chain.order, "perm", gens, bsgs=chain, fixture=fixture,
                         degree=gens[0].degree)
    if materialize and chain.order <= budget:
        entry.group = generate(gens, budget)
    return entry


def catalog(spec, budget: int = DEFAULT_BUDGET, fixtures_dir=None):
    """The group behind ``spec``: materialized when it fits the budget,
    otherwise its stabilizer chain (or, for the Frobenius family in witness
    mode, nothing enumerable at all)."""
    entry = lookup(spec, budget, fixtures_dir)
    if entry.group is not None:
        return entry.group
    if entry.bsgs is not None:
        return entry.bsgs
    if entry.spectrum_fixture is not None:
        return entry.spectrum_fixture
    raise BudgetExceeded(entry.order, budget)
