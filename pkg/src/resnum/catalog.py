"""The derived catalog of res = 3 graphs beyond even cycles and the 3-star.

Order bounds confine such graphs to n <= 6 at girth 3 and, at girth 5,
to n <= 10 with maximum degree 3, so an exhaustive scan to order 7 plus a
degree/girth-constrained scan of orders 8..10 re-derives the catalog
instead of transcribing drawings.  The result is frozen as a fixture of
sorted graph6 lines; rebuilding must reproduce it byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable, Iterator

from .canon import CanonicalForm, canonical_form
from .errors import CatalogMissing, TheoremViolation
from .graphs import Graph, distance_matrix
from .invariants import girth, invariant_summary
from .resolve import resolving_number
from .serial import parse_graph6, write_graph6

FIXTURE_NAME = "res3_catalog.g6"


@dataclass(frozen=True)
class CatalogMember:
    form: CanonicalForm
    graph6: str
    n: int
    girth: int
    degree_sequence: tuple[int, ...]


@dataclass(frozen=True)
class Res3Catalog:
    """Sorted members; girth 3 and girth 5 slices partition the set."""

    members: tuple[CatalogMember, ...]

    def lookup(self, form: CanonicalForm) -> CatalogMember | None:
        for member in self.members:
            if member.form == form:
                return member
        return None

    def slice_by_girth(self, value: int) -> tuple[CatalogMember, ...]:
        return tuple(m for m in self.members if m.girth == value)


def _member_from_graph(g: Graph) -> CatalogMember:
    form = canonical_form(g)
    canonical = form.to_graph()
    gg = girth(canonical)
    if gg not in (3, 5):
        raise TheoremViolation(
            f"catalog candidate of order {g.n} has girth {gg}; "
            "only 3 and 5 can occur"
        )
    return CatalogMember(
        form=form,
        graph6=write_graph6(canonical),
        n=canonical.n,
        girth=int(gg),
        degree_sequence=tuple(sorted(canonical.degrees())),
    )


def _candidate_stream(enumerate_fn: Callable) -> Iterator[Graph]:
    from .enumeration import EnumConstraints

    for n in range(2, 8):
        yield from enumerate_fn(EnumConstraints(n))
    for n in (8, 9, 10):
        yield from enumerate_fn(EnumConstraints(n, max_degree=3, min_girth=5))


def build_res3_catalog(enumerate_fn: Callable | None = None) -> Res3Catalog:
    """Scan the bounded space and keep every res-3 class that needs cataloging.

    Even cycles and the 3-leaf star are classified structurally, so they
    stay out of the member list.
    """
    if enumerate_fn is None:
        from .enumeration import enumerate_graphs as enumerate_fn
    seen: dict[CanonicalForm, CatalogMember] = {}
    for g in _candidate_stream(enumerate_fn):
        dm = distance_matrix(g)
        if resolving_number(g, dm).res != 3:
            continue
        inv = invariant_summary(g, dm)
        if inv.is_cycle or (inv.is_star and g.n == 4):
            continue
        member = _member_from_graph(g)
        seen.setdefault(member.form, member)
    members = tuple(sorted(seen.values(), key=lambda m: m.graph6))
    return Res3Catalog(members)


def render_fixture(catalog: Res3Catalog) -> str:
    return "".join(m.graph6 + "\n" for m in catalog.members)


def load_fixture_text(text: str) -> Res3Catalog:
    """Rebuild a catalog from fixture lines, re-verifying every member."""
    members = []
    for line in text.splitlines():
        if not line.strip():
            continue
        g = parse_graph6(line)
        dm = distance_matrix(g)
        if resolving_number(g, dm).res != 3:
            raise CatalogMissing(f"fixture line {line!r} does not have res = 3")
        members.append(_member_from_graph(g))
    if not members:
        raise CatalogMissing("fixture contains no members")
    members.sort(key=lambda m: m.graph6)
    return Res3Catalog(tuple(members))


@lru_cache(maxsize=1)
def load_default_catalog() -> Res3Catalog:
    """The packaged fixture, parsed and verified once per process."""
    try:
        text = (
            resources.files("resnum").joinpath("data").joinpath(FIXTURE_NAME)
        ).read_text()
    except (FileNotFoundError, ModuleNotFoundError) as exc:
        raise CatalogMissing(
            f"packaged fixture {FIXTURE_NAME} is unavailable: {exc}"
        )
    return load_fixture_text(text)


def clique_equals_res_report(catalog: Res3Catalog) -> dict:
    """Derived omega = res = 3 set, flagging the one girth-3 member it excludes.

    The characterization of omega = res = 3 by the full girth-3 slice
    cannot be taken literally: the slice contains the complete graph on 4
    vertices, whose clique number is 4.  The report carries the derived
    set and the excluded members explicitly.
    """
    derived = []
    excluded = []
    for member in catalog.slice_by_girth(3):
        g = member.form.to_graph()
        inv = invariant_summary(g, distance_matrix(g))
        if inv.omega == 3:
            derived.append(member.graph6)
        else:
            excluded.append({"graph6": member.graph6, "omega": inv.omega})
    return {
        "derived_size": len(derived),
        "derived": derived,
        "excluded": excluded,
        "discrepancy_flagged": bool(excluded),
    }
