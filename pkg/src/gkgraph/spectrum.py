"""Element-order spectra, their divisibility maxima, and a small on-disk cache."""

from __future__ import annotations

import hashlib
import json
import os
import random
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .errors import MalformedFixture

STRATEGIES = ("exhaustive", "randomized", "fixture", "decomposition")

DEFAULT_SAMPLES = 50_000


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def divisor_closure(numbers) -> tuple[int, ...]:
    out = {1}
    for n in numbers:
        out.update(divisors(n))
    return tuple(sorted(out))


def maximal_elements(numbers) -> tuple[int, ...]:
    nums = sorted(set(numbers))
    return tuple(n for n in nums if not any(m != n and m % n == 0 for m in nums))


def is_antichain(numbers) -> bool:
    nums = list(numbers)
    return len(set(nums)) == len(nums) and all(
        a == b or (a % b and b % a) for a in nums for b in nums
    )


@dataclass(frozen=True)
class Spectrum:
    """The set of element orders of a group.

    With ``strategy="randomized"`` the set is only a lower bound: orders that
    were actually observed, closed under divisors.
    """

    orders: tuple[int, ...]
    strategy: str
    group_order: int

    def __post_init__(self):
        orders = tuple(sorted(set(self.orders)))
        object.__setattr__(self, "orders", orders)
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if 1 not in orders:
            raise ValueError("a spectrum always contains 1")
        members = set(orders)
        for n in orders:
            if self.group_order % n:
                raise ValueError(f"element order {n} does not divide group order {self.group_order}")
            if not members.issuperset(divisors(n)):
                raise ValueError(f"spectrum is not closed under divisors at {n}")

    def __contains__(self, n) -> bool:
        return n in self.orders

    def __iter__(self):
        return iter(self.orders)

    def __len__(self):
        return len(self.orders)

    def as_set(self) -> set[int]:
        return set(self.orders)


@dataclass(frozen=True)
class MuSet:
    maxima: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "maxima", tuple(sorted(self.maxima)))
        if not is_antichain(self.maxima):
            raise ValueError(f"{self.maxima} is not an antichain under divisibility")

    def __iter__(self):
        return iter(self.maxima)

    def as_set(self) -> set[int]:
        return set(self.maxima)


@dataclass(frozen=True)
class SpectrumFixture:
    """Literature data for a group too large to enumerate."""

    name: str
    order: int
    mu: tuple[int, ...]
    source: str

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(sorted(self.mu)))

    def validate(self) -> SpectrumFixture:
        if not self.mu:
            raise MalformedFixture(f"{self.name}: empty mu")
        if not is_antichain(self.mu):
            raise MalformedFixture(f"{self.name}: mu {list(self.mu)} is not an antichain")
        bad = [m for m in self.mu if m < 1 or self.order % m]
        if bad:
            raise MalformedFixture(f"{self.name}: mu members {bad} do not divide order {self.order}")
        if not self.source:
            raise MalformedFixture(f"{self.name}: fixture data needs a source")
        return self


def compute_spectrum(group) -> Spectrum:
    """Exact spectrum of a materialized group."""
    orders = {g.order() for g in group.elements}
    return Spectrum(tuple(orders), "exhaustive", group.order)


def randomized_spectrum(bsgs, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> Spectrum:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    seen = set()
    for _ in range(samples):
        seen.add(bsgs.random_element(rng).order())
    return Spectrum(divisor_closure(seen), "randomized", bsgs.order)


def mu(spec: Spectrum) -> MuSet:
    return MuSet(maximal_elements(spec.orders))


def spectrum_from_fixture(f: SpectrumFixture) -> Spectrum:
    f.validate()
    return Spectrum(divisor_closure(f.mu), "fixture", f.order)


class SpectrumCache:
    """One JSON record per group spec: {spec, order, mu, strategy, tool_version}.

    Only exact results belong here; a record is returned only when its order
    matches the order the caller computed independently.
    """

    def __init__(self, directory):
        self.directory = Path(directory)

    def path_for(self, spec: str) -> Path:
        digest = hashlib.sha256(spec.encode()).hexdigest()[:24]
        return self.directory / f"{digest}.json"

    def get(self, spec: str, order: int) -> dict | None:
        path = self.path_for(spec)
        try:
            record = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if record.get("spec") != spec or record.get("order") != order:
            return None
        try:
            MuSet(tuple(record["mu"]))
        except (KeyError, TypeError, ValueError):
            return None
        return record

    def put(self, spec: str, order: int, maxima, strategy: str) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        record = {
            "spec": spec,
            "order": order,
            "mu": sorted(maxima),
            "strategy": strategy,
            "tool_version": __version__,
        }
        path = self.path_for(spec)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        with os.fdopen(fd, "w") as fh:
            json.dump(record, fh, sort_keys=True)
        os.replace(tmp, path)
        return path
