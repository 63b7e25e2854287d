"""Semigroups of magic labelings graded by height.

An element pairs an integral magic labeling with a height k.  For the
max-label semigroup (kind "P") the height must be at least the largest
label; for the index semigroup (kind "Q") it must equal the index.
Addition is entrywise on labels and heights.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import lcm

from . import geometry
from .errors import ConsistencyError
from .graphs import Edge, Graph, forced_max_edge, is_bipartite
from .labelings import (
    Labeling,
    enumerate_index_k,
    enumerate_magic_bounded,
    is_magic,
    max_label,
)


@dataclass(frozen=True)
class SemigroupElement:
    labeling: Labeling
    height: int

    def __post_init__(self):
        if self.height < 0:
            raise ValueError("height must be nonnegative")


def validate_element(g: Graph, kind: str, elem: SemigroupElement) -> None:
    """Raise unless ``elem`` belongs to the chosen semigroup over g."""
    if elem.labeling.graph != g:
        raise ValueError("element belongs to a different graph")
    idx = is_magic(elem.labeling)
    if idx is None:
        raise ValueError("element labeling is not magic")
    if kind == "P":
        if max_label(elem.labeling) > elem.height:
            raise ValueError("height must be at least the maximum label")
    elif kind == "Q":
        if idx != elem.height:
            raise ValueError("height must equal the index")
    else:
        raise ValueError(f"kind must be one of ('P', 'Q'), got {kind!r}")


def cf_elements(
    g: Graph, kind: str, *, budget: int = geometry.DEFAULT_VERTEX_BUDGET
) -> list[SemigroupElement]:
    """Completely fundamental elements: each polytope vertex v scaled by
    its denominator d, paired with height d.

    Sorted by height then labels for a deterministic order.
    """
    verts = geometry.polytope_vertices(g, kind, budget=budget)
    elems = []
    for v in verts:
        d = geometry.point_denominator(v)
        labels = tuple(int(c * d) for c in v)
        elems.append(SemigroupElement(Labeling(g, labels), d))
    return sorted(elems, key=lambda e: (e.height, e.labeling.labels))


@dataclass(frozen=True)
class CFVerdict:
    """Outcome of the brute-force complete-fundamentality check.

    When ``refuted``, heights and labels of ``b`` and ``c`` witness a
    decomposition b + c = m * elem whose left part is not a multiple of
    elem.  Otherwise no refutation exists for any multiplier up to
    ``m_max`` (which is not a proof beyond that bound).
    """

    refuted: bool
    m_max: int
    m: int | None = None
    b: SemigroupElement | None = None
    c: SemigroupElement | None = None


def _is_multiple(labels, height, base: SemigroupElement) -> bool:
    if base.height == 0:
        return False
    j, rem = divmod(height, base.height)
    if rem:
        return False
    return all(x == j * y for x, y in zip(labels, base.labeling.labels))


def verify_completely_fundamental(
    g: Graph,
    kind: str,
    elem: SemigroupElement,
    m_max: int = 3,
    *,
    budget: int | None = None,
) -> CFVerdict:
    """Independent oracle for complete fundamentality, bounded by ``m_max``.

    For each m up to m_max, every decomposition b + c = m * elem inside
    the semigroup is enumerated (the coordinates of b are dominated by
    those of m * elem, so there are finitely many).  A b that is not a
    nonnegative multiple of elem refutes; otherwise the element is
    unrefuted up to m_max.
    """
    validate_element(g, kind, elem)
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    if elem.height == 0 and not any(elem.labeling.labels):
        raise ValueError("the zero element is never completely fundamental")
    for m in range(1, m_max + 1):
        total = [m * x for x in elem.labeling.labels]
        total_h = m * elem.height
        for b_lab in enumerate_magic_bounded(g, total, budget=budget):
            c_labels = tuple(t - x for t, x in zip(total, b_lab.labels))
            if kind == "P":
                lo = max_label(b_lab)
                hi = total_h - max(c_labels, default=0)
                for h_b in range(lo, hi + 1):
                    if not _is_multiple(b_lab.labels, h_b, elem):
                        return CFVerdict(
                            refuted=True,
                            m_max=m_max,
                            m=m,
                            b=SemigroupElement(b_lab, h_b),
                            c=SemigroupElement(
                                Labeling(g, c_labels), total_h - h_b
                            ),
                        )
            else:
                h_b = is_magic(b_lab)
                if h_b > total_h:
                    continue
                if not _is_multiple(b_lab.labels, h_b, elem):
                    return CFVerdict(
                        refuted=True,
                        m_max=m_max,
                        m=m,
                        b=SemigroupElement(b_lab, h_b),
                        c=SemigroupElement(Labeling(g, c_labels), total_h - h_b),
                    )
    return CFVerdict(refuted=False, m_max=m_max)


def decompose_over_generators(
    elem: SemigroupElement, generators
) -> Counter | None:
    """Nonnegative integer combination of ``generators`` equal to ``elem``.

    Labels and heights must both match.  Search is depth first over
    generators sorted by descending height, pruning any generator not
    coordinate-dominated by the remainder.  Returns a Counter of
    generators, or None when no combination exists.
    """
    gens = sorted(
        generators, key=lambda e: (e.height, e.labeling.labels), reverse=True
    )
    for gen in gens:
        if gen.labeling.graph != elem.labeling.graph:
            raise ValueError("generators must live on the element's graph")
    target = list(elem.labeling.labels) + [elem.height]
    vecs = [list(gen.labeling.labels) + [gen.height] for gen in gens]

    def search(rem: list[int], gi: int) -> Counter | None:
        if not any(rem):
            return Counter()
        if gi == len(vecs):
            return None
        vec = vecs[gi]
        top = min(
            (r // v for r, v in zip(rem, vec) if v > 0), default=0
        )
        for count in range(top, -1, -1):
            nxt = [r - count * v for r, v in zip(rem, vec)]
            sub = search(nxt, gi + 1)
            if sub is not None:
                if count:
                    sub[gens[gi]] = count
                return sub
        return None

    return search(target, 0)


def stanley_decompose(lab: Labeling) -> list[Labeling]:
    """Split a magic labeling into magic pieces of index 1 or 2.

    Pieces sum to the input entrywise.  On bipartite graphs every piece
    has index exactly 1 (it is then a perfect-matching indicator).  The
    zero labeling decomposes into the empty list.  Search is a full
    backtracking extraction, so a greedy dead end cannot cause a bogus
    failure; an actual failure is a ConsistencyError because such a
    decomposition always exists.
    """
    idx = is_magic(lab)
    if idx is None:
        raise ValueError("labeling is not magic")
    if idx == 0:
        return []
    g = lab.graph
    bipartite = is_bipartite(g) is not None
    allowed = (1,) if bipartite else (1, 2)
    caps = [min(x, 2) for x in lab.labels]
    pool = [
        p
        for p in enumerate_magic_bounded(g, caps)
        if is_magic(p) in allowed
    ]
    pool.sort(key=lambda p: (is_magic(p), p.labels))
    dead: set[tuple[int, ...]] = set()

    def extract(rem: tuple[int, ...], rem_idx: int) -> list[Labeling] | None:
        if rem_idx == 0:
            return []
        if rem in dead:
            return None
        for piece in pool:
            pidx = is_magic(piece)
            if pidx > rem_idx:
                continue
            if any(p > r for p, r in zip(piece.labels, rem)):
                continue
            rest = extract(
                tuple(r - p for r, p in zip(rem, piece.labels)), rem_idx - pidx
            )
            if rest is not None:
                return [piece] + rest
        dead.add(rem)
        return None

    pieces = extract(lab.labels, idx)
    if pieces is None:
        raise ConsistencyError(
            "no decomposition into index-1 and index-2 magic labelings exists; "
            "this contradicts a guaranteed invariant"
        )
    return sorted(pieces, key=lambda p: p.labels)


@dataclass(frozen=True)
class QuasiperiodCertificate:
    """Structural certificate that the counting function has a small period.

    ``verdict`` is "polynomial", "quasiperiod_le_2", or "no_certificate".
    ``forced_edge`` is the edge attaining the maximum label in every
    index-2 magic labeling when one exists; ``vacuous`` records that the
    index-2 list was empty (only the zero labeling is magic, so the
    hypothesis holds trivially).
    """

    verdict: str
    bipartite: bool
    forced_edge: Edge | None = None
    vacuous: bool = False


def certify_small_quasiperiod(
    g: Graph, *, budget: int | None = None
) -> QuasiperiodCertificate:
    """Sufficient-condition certifier for a small counting quasiperiod.

    When some edge attains the maximum label in every index-2 magic
    labeling (or no such labeling exists), the count of magic
    k-labelings has quasiperiod at most 2, and is a polynomial when the
    graph is also bipartite.  Returns "no_certificate" when the
    structural test fails; that is not a proof of a large quasiperiod.
    """
    index2 = enumerate_index_k(g, 2, budget=budget)
    verdict = forced_max_edge(g, index2)
    bipartite = is_bipartite(g) is not None
    if verdict is None:
        return QuasiperiodCertificate("no_certificate", bipartite)
    vacuous = verdict == "vacuous"
    edge = None if vacuous else verdict
    return QuasiperiodCertificate(
        "polynomial" if bipartite else "quasiperiod_le_2",
        bipartite,
        forced_edge=edge,
        vacuous=vacuous,
    )


def element_to_json(elem: SemigroupElement) -> str:
    import json

    return json.dumps(
        {"labels": list(elem.labeling.labels), "height": elem.height},
        separators=(",", ":"),
    )


def heights_lcm(elements) -> int:
    """Least common multiple of element heights (1 for an empty list)."""
    return lcm(*(e.height for e in elements)) if elements else 1
