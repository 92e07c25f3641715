"""Simplicial machinery for local obstructions.

The simplicial complex of a code is the downward closure of its words; a
missing face is a face of the complex that is not a word.  For each missing
face we inspect the link: nonzero reduced GF(2) homology certifies a
non-contractible link (an obstruction of the first kind), collapsibility
certifies a contractible one, and a collapsibility failure with trivial
homology is an obstruction of the second kind with contractibility left
open.  A code whose missing-face links are all collapsible is locally great.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .codes import Code, mask_members, word_mask
from .exceptions import ResourceCapError

DEFAULT_FACE_CAP = 1 << 20


@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex held by its facets (maximal faces).

    Vertices are 1..n.  facets is an antichain of bitmasks; {0} encodes the
    complex whose only face is the empty face, and an empty facet set is the
    void complex with no faces at all.
    """

    n: int
    facets: frozenset[int]

    @classmethod
    def from_masks(cls, n: int, face_masks: Iterable[int]) -> "SimplicialComplex":
        faces = set(face_masks)
        maximal = {f for f in faces
                   if not any(o != f and o & f == f for o in faces)}
        return cls(n, frozenset(maximal))

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls.from_masks(n, (word_mask(f, n) for f in faces))

    @property
    def facet_words(self) -> tuple[frozenset[int], ...]:
        ordered = sorted(self.facets, key=lambda m: (-m.bit_count(), mask_members(m)))
        return tuple(frozenset(mask_members(m)) for m in ordered)

    def face_masks(self, cap: int = DEFAULT_FACE_CAP) -> frozenset[int]:
        """Every face, the empty face included (for a nonvoid complex)."""
        faces: set[int] = set()
        for f in self.facets:
            sub = f
            while True:
                faces.add(sub)
                if len(faces) > cap:
                    raise ResourceCapError(
                        f"complex has more than {cap} faces")
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return frozenset(faces)

    def has_face(self, sigma: Iterable[int]) -> bool:
        smask = sigma if isinstance(sigma, int) else word_mask(sigma, self.n)
        return any(f & smask == smask for f in self.facets)

    def dim(self) -> int:
        """Dimension; -1 for the empty-face-only complex, -2 for the void one."""
        if not self.facets:
            return -2
        return max(f.bit_count() for f in self.facets) - 1


def simplicial_complex(code: Code) -> SimplicialComplex:
    """Downward closure of the codewords; the facets are the maximal words."""
    return SimplicialComplex.from_masks(code.n, code.mask_set)


def link(k: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Faces disjoint from sigma whose union with sigma is a face.

    The facets are the maximal F - sigma over facets F containing sigma.
    link(k, empty) is k itself.
    """
    smask = sigma if isinstance(sigma, int) else word_mask(sigma, k.n)
    if not k.has_face(smask):
        raise ValueError(f"{set(mask_members(smask))} is not a face of the complex")
    candidates = {f & ~smask for f in k.facets if f & smask == smask}
    return SimplicialComplex.from_masks(k.n, candidates)


def _is_simplex(faces: frozenset[int]) -> bool:
    top = max(faces, key=int.bit_count)
    return len(faces) == 1 << top.bit_count() and top.bit_count() >= 1


def _free_pairs(faces: frozenset[int]) -> list[tuple[int, int]]:
    """(tau, F) with tau nonempty and properly contained in exactly the one
    face F; ordered lowest dimension first, then lexicographically."""
    out = []
    for tau in faces:
        if tau == 0:
            continue
        over = [f for f in faces if f != tau and f & tau == tau]
        if len(over) == 1:
            out.append((tau, over[0]))
    out.sort(key=lambda p: (p[0].bit_count(), mask_members(p[0])))
    return out


def _collapses_to_point(faces: frozenset[int], memo: dict[frozenset[int], bool],
                        budget: list[int]) -> bool:
    hit = memo.get(faces)
    if hit is not None:
        return hit
    budget[0] -= 1
    if budget[0] < 0:
        raise ResourceCapError("collapsibility search exceeded its state "
                               "budget; raise the face cap to keep going")
    if len(faces) == 2 and 0 in faces:
        (v,) = [f for f in faces if f]
        result = v.bit_count() == 1
    elif _is_simplex(faces):
        result = True  # any simplex collapses to a vertex
    else:
        result = False
        for tau, top in _free_pairs(faces):
            if _collapses_to_point(faces - {tau, top}, memo, budget):
                result = True
                break
    memo[faces] = result
    return result


def is_collapsible(k: SimplicialComplex, cap: int = DEFAULT_FACE_CAP) -> bool:
    """Can free-face removals shrink the complex to a single vertex?

    Exhaustive backtracking over collapse orders (greedy collapsing can dead
    end), memoized on the intermediate face sets.  The cap bounds both the
    face count and the number of search states visited.
    """
    if not k.facets:
        return False
    faces = k.face_masks(cap)
    return _collapses_to_point(faces, {}, [cap])


def _gf2_rank(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            hb = row.bit_length() - 1
            p = pivots.get(hb)
            if p is None:
                pivots[hb] = row
                rank += 1
                break
            row ^= p
    return rank


def f2_reduced_homology(k: SimplicialComplex, cap: int = DEFAULT_FACE_CAP) -> dict[int, int]:
    """Reduced Betti numbers over GF(2), by boundary-matrix ranks.

    Keys run from dimension -1 (the augmentation; rank 1 exactly for the
    empty-face-only complex) to the dimension of the complex.  The void
    complex gives {}.
    """
    if not k.facets:
        return {}
    by_dim: dict[int, list[int]] = {}
    for f in k.face_masks(cap):
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    top = max(by_dim)
    index: dict[int, dict[int, int]] = {}
    for d, fs in by_dim.items():
        fs.sort(key=mask_members)
        index[d] = {f: i for i, f in enumerate(fs)}
    ranks: dict[int, int] = {}
    for d in range(0, top + 1):
        rows = []
        for f in by_dim[d]:
            row = 0
            for i in mask_members(f):
                sub = f & ~(1 << (i - 1))
                row |= 1 << index[d - 1][sub]
            rows.append(row)
        ranks[d] = _gf2_rank(rows)
    betti: dict[int, int] = {}
    for d in range(-1, top + 1):
        betti[d] = len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return betti


@dataclass(frozen=True)
class ObstructionEntry:
    sigma: frozenset[int]
    link_facets: tuple[frozenset[int], ...]
    betti: tuple[tuple[int, int], ...]  # (dimension, reduced rank) pairs
    collapsible: bool | None  # None when the face cap refused the search
    verdict: str  # no_obstruction | obstruction_first_kind |
                  # obstruction_second_kind_only | contractibility_unknown


@dataclass(frozen=True)
class ObstructionReport:
    code: Code
    entries: tuple[ObstructionEntry, ...]
    locally_good: str  # "yes" | "no" | "unknown"
    locally_great: bool | None


def local_obstruction_report(code: Code, cap: int = DEFAULT_FACE_CAP) -> ObstructionReport:
    """Classify the link of every missing face of the code's complex.

    The empty face counts as missing when the empty word is absent.  A code
    equal to its own complex has no missing faces and is trivially locally
    great.
    """
    k = simplicial_complex(code)
    missing = sorted(k.face_masks(cap) - code.mask_set,
                     key=lambda m: (m.bit_count(), mask_members(m)))
    entries = []
    for smask in missing:
        lk = link(k, smask)
        betti = f2_reduced_homology(lk, cap)
        if any(betti.values()):
            entries.append(ObstructionEntry(
                sigma=frozenset(mask_members(smask)),
                link_facets=lk.facet_words,
                betti=tuple(sorted(betti.items())),
                collapsible=False,  # nonzero homology rules collapsibility out
                verdict="obstruction_first_kind"))
            continue
        try:
            coll = is_collapsible(lk, cap)
        except ResourceCapError:
            coll = None
        if coll:
            verdict = "no_obstruction"
        elif coll is None:
            verdict = "contractibility_unknown"
        else:
            verdict = "obstruction_second_kind_only"
        entries.append(ObstructionEntry(
            sigma=frozenset(mask_members(smask)),
            link_facets=lk.facet_words,
            betti=tuple(sorted(betti.items())),
            collapsible=coll,
            verdict=verdict))
    verdicts = [e.verdict for e in entries]
    if any(v == "obstruction_first_kind" for v in verdicts):
        good = "no"
    elif all(v == "no_obstruction" for v in verdicts):
        good = "yes"
    else:
        good = "unknown"
    if all(e.collapsible for e in entries):
        great: bool | None = True
    elif any(e.collapsible is False for e in entries):
        great = False
    else:
        great = None
    return ObstructionReport(code, tuple(entries), good, great)
