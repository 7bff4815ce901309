"""Choose how to obtain a group's spectrum and derive its prime graph.

Rule: enumerate when the group fits the budget; otherwise use the Frobenius
decomposition (for the Frobenius family), or shipped literature data as the
authority on which orders are absent, with random sampling supplying
witnesses for the orders that are present.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .constructions import CatalogEntry, GroupSpec, lookup
from .groups import DEFAULT_BUDGET, generate, semidirect
from .primegraph import PrimeGraph, graph_from_spectrum
from .spectrum import (
    DEFAULT_SAMPLES,
    MuSet,
    Spectrum,
    SpectrumCache,
    compute_spectrum,
    divisor_closure,
    mu,
    randomized_spectrum,
    spectrum_from_fixture,
)

log = logging.getLogger(__name__)


@dataclass
class Analysis:
    spec: str
    order: int
    spectrum: Spectrum
    witnesses: Spectrum | None = None
    cached: bool = False
    degree: int | None = None
    notes: list[str] = field(default_factory=list)
    entry: CatalogEntry | None = field(default=None, repr=False)

    @property
    def strategy(self) -> str:
        return self.spectrum.strategy

    @property
    def certified(self) -> bool:
        """False when the spectrum is only a sampled lower bound."""
        return self.spectrum.strategy != "randomized"

    @property
    def contradictions(self) -> tuple[int, ...]:
        """Sampled orders the authoritative spectrum does not allow."""
        if self.witnesses is None:
            return ()
        return tuple(n for n in self.witnesses.orders if n not in self.spectrum)

    @property
    def mu(self) -> MuSet:
        return mu(self.spectrum)

    @property
    def graph(self) -> PrimeGraph:
        return graph_from_spectrum(self.spectrum)


_memo: dict = {}


def clear_memo():
    _memo.clear()


def analyze(
    spec,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    cache: SpectrumCache | None = None,
    fixtures_dir=None,
    force_randomized: bool = False,
) -> Analysis:
    spec = GroupSpec.parse(spec) if isinstance(spec, str) else spec
    key = str(spec)
    memo_key = (key, budget, seed, samples, str(fixtures_dir), force_randomized,
                str(cache.directory) if cache else None)
    if memo_key in _memo:
        return _memo[memo_key]

    entry = lookup(spec, budget, fixtures_dir, materialize=False)
    result = None

    if force_randomized:
        if entry.bsgs is None:
            raise ValueError(f"{key}: random sampling needs a permutation group")
        result = Analysis(key, entry.order, randomized_spectrum(entry.bsgs, samples, seed),
                          degree=entry.degree, entry=entry)
    elif cache is not None:
        record = cache.get(key, entry.order)
        if record is not None:
            spectrum = Spectrum(divisor_closure(record["mu"]), record["strategy"], entry.order)
            result = Analysis(key, entry.order, spectrum, cached=True, degree=entry.degree, entry=entry)
            log.info("cache hit for %s", key)

    if result is None:
        result = _compute(entry, budget, seed, samples)
        if cache is not None and result.certified and result.spectrum.strategy != "fixture":
            cache.put(key, result.order, result.mu.maxima, result.spectrum.strategy)

    _memo[memo_key] = result
    return result


def _compute(entry: CatalogEntry, budget, seed, samples) -> Analysis:
    key = str(entry.spec)
    if entry.frobenius is not None:
        res = entry.frobenius
        if entry.order <= budget:
            G = semidirect(res.field, 2, res.complement, budget)
            exhaustive = compute_spectrum(G)
            a = Analysis(key, entry.order, exhaustive, degree=2, entry=entry)
            if exhaustive.orders != res.decomposition.orders:
                a.notes.append(f"exhaustive spectrum {exhaustive.orders} differs from "
                               f"decomposition {res.decomposition.orders}")
            else:
                a.notes.append("exhaustive spectrum equals the Frobenius decomposition")
            return a
        a = Analysis(key, entry.order, res.decomposition, degree=2, entry=entry)
        a.notes.append(f"order {entry.order} exceeds budget {budget}; spectrum from the "
                       "Frobenius decomposition {1, 7} u spectrum(C)")
        return a

    if entry.order <= budget:
        G = entry.group if entry.group is not None else generate(entry.generators, budget)
        return Analysis(key, entry.order, compute_spectrum(G), degree=entry.degree, entry=entry)

    sampled = randomized_spectrum(entry.bsgs, samples, seed)
    fx = entry.spectrum_fixture
    if fx is not None:
        a = Analysis(key, entry.order, spectrum_from_fixture(fx), witnesses=sampled,
                     degree=entry.degree, entry=entry)
        a.notes.append(f"fixture source: {fx.source}")
        if a.contradictions:
            a.notes.append(f"sampled orders {list(a.contradictions)} are missing from the fixture")
        return a
    a = Analysis(key, entry.order, sampled, degree=entry.degree, entry=entry)
    a.notes.append(f"order {entry.order} exceeds budget {budget} and no fixture data: "
                   "spectrum is a sampled lower bound")
    return a
