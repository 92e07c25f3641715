"""Exhaustive enumeration of the reduced images of a code.

Every image of a morphism, once reduced, is the image of the morphism
defined by an irredundant set of nonempty proper trunks (no member equal to
an intersection of the others): such images have no trivial neurons (no
empty trunk), no neuron redundant to the empty set (no whole-code trunk),
and no neuron redundant to a nonempty set (irredundancy), while the
reduction of an arbitrary image is the image under the preimages of its
irreducible trunks, which form exactly such a family.  Irredundancy is
downward closed, so a fixed-order depth-first subset walk with an
incremental irredundancy check visits every family exactly once.

Trunks are handled as word-index bitmasks of the source code, images are
canonicalized (they are already reduced) and deduplicated by canonical form.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .codes import Code, code_to_obj, format_code, parse_code
from .exceptions import ResourceCapError
from .morphisms import Morphism
from .reduction import CanonicalForm, _min_relabeling, canonical_form
from .trunks import Trunk

DEFAULT_TRUNK_CAP = 24


@dataclass(frozen=True)
class EnumerationStats:
    explored: int   # irredundant subsets visited (images computed)
    pruned: int     # rejected subset extensions
    wall_time: float


@dataclass(frozen=True)
class ImageSet:
    """All reduced images of a code, up to isomorphism.

    images holds canonical codes sorted by the package's total order; it
    always contains the canonical form of the source itself and the one-word
    code {empty} on zero neurons (the image of the empty trunk list).
    """

    source: CanonicalForm
    images: tuple[Code, ...]
    stats: EnumerationStats

    def canonical_keys(self) -> frozenset[tuple]:
        return frozenset(_code_key(c) for c in self.images)


def _code_key(code: Code) -> tuple:
    words = tuple((m.bit_count(), m) for m in code.masks)
    return (len(words), words, code.n)


def _index_pool(code: Code, max_trunks: int):
    """Distinct nonempty proper trunks as word-index masks, in a fixed order.

    Also enforces the cap on the total trunk count (the whole code and the
    empty trunk included).
    """
    words = code.masks
    w = len(words)
    full = (1 << w) - 1
    family = {full} if w else set()
    for i in range(1, code.n + 1):
        bit = 1 << (i - 1)
        t = 0
        for k, mask in enumerate(words):
            if mask & bit:
                t |= 1 << k
        if t:
            family.add(t)
    frontier = list(family)
    while frontier:
        fresh = []
        for a in frontier:
            for b in family:
                x = a & b
                if x and x not in family and x not in fresh:
                    fresh.append(x)
        family.update(fresh)
        frontier = fresh
    total = len(family) + (0 if 0 in family else 1)  # the empty trunk counts
    if max_trunks is not None and total > max_trunks:
        raise ResourceCapError(
            f"code has {total} trunks, over the cap of {max_trunks}; raise "
            "max_trunks to enumerate anyway")
    pool = sorted((t for t in family if t != full and t != 0),
                  key=lambda t: (-t.bit_count(), t))
    return words, pool


def _stays_irredundant(chosen: list[int], t: int) -> bool:
    """Would chosen + [t] still have no member equal to an intersection of
    the others?  A member x is such an intersection iff the intersection of
    its strict supersets in the family equals x."""
    fam = chosen + [t]
    for x in fam:
        acc = None
        for y in fam:
            if y != x and y & x == x:
                acc = y if acc is None else acc & y
        if acc == x:
            return False
    return True


def _image_signature(words_count: int, chosen: list[int]) -> frozenset[int]:
    """Image words of the morphism defined by the chosen trunks, as masks on
    the new neurons 1..len(chosen)."""
    out = set()
    for k in range(words_count):
        bit = 1 << k
        img = 0
        for j, t in enumerate(chosen):
            if t & bit:
                img |= 1 << j
        out.add(img)
    return frozenset(out)


def _canonical_of_reduced_masks(m: int, masks: frozenset[int],
                                cache: dict) -> Code:
    """Canonical form of an already-reduced code given by masks on 1..m."""
    hit = cache.get((m, masks))
    if hit is not None:
        return hit
    member_tuples = []
    for mask in masks:
        members = []
        x, i = mask, 1
        while x:
            if x & 1:
                members.append(i)
            x >>= 1
            i += 1
        member_tuples.append(tuple(members))
    key, _ = _min_relabeling(member_tuples, m)
    canon = Code(m, [members for _, members in key])
    cache[(m, masks)] = canon
    return canon


def _walk(words_count: int, pool: list[int], chosen: list[int], start: int,
          found: dict, canon_cache: dict, counters: list[int]):
    sig = _image_signature(words_count, chosen)
    canon = _canonical_of_reduced_masks(len(chosen), sig, canon_cache)
    found.setdefault(_code_key(canon), canon)
    counters[0] += 1
    for i in range(start, len(pool)):
        if _stays_irredundant(chosen, pool[i]):
            chosen.append(pool[i])
            _walk(words_count, pool, chosen, i + 1, found, canon_cache, counters)
            chosen.pop()
        else:
            counters[1] += 1


def _subtree_job(args):
    words_count, pool, first = args
    found: dict = {}
    canon_cache: dict = {}
    counters = [0, 0]
    _walk(words_count, pool, [pool[first]], first + 1, found, canon_cache, counters)
    return counters[0], counters[1], [(c.n, c.masks) for c in found.values()]


def enumerate_reduced_images(code: Code, *, jobs: int = 1,
                             max_trunks: int | None = DEFAULT_TRUNK_CAP) -> ImageSet:
    """The set {canonical_form(image(f)) : f a morphism out of code}.

    Deterministic for a given input regardless of jobs; refuses codes whose
    trunk family exceeds max_trunks.
    """
    t0 = time.monotonic()
    words, pool = _index_pool(code, max_trunks)
    found: dict = {}
    canon_cache: dict = {}
    counters = [0, 0]
    w = len(words)
    if jobs <= 1 or len(pool) < 2:
        _walk(w, pool, [], 0, found, canon_cache, counters)
    else:
        # The root (empty subset) runs here; first-element subtrees fan out.
        root_sig = _image_signature(w, [])
        root = _canonical_of_reduced_masks(0, root_sig, canon_cache)
        found[_code_key(root)] = root
        counters[0] += 1
        tasks = [(w, pool, i) for i in range(len(pool))]
        with ProcessPoolExecutor(max_workers=jobs) as pex:
            for explored, pruned, codes in pex.map(_subtree_job, tasks):
                counters[0] += explored
                counters[1] += pruned
                for n, masks in codes:
                    c = Code(n, masks)
                    found.setdefault(_code_key(c), c)
    images = tuple(c for _, c in sorted(found.items()))
    stats = EnumerationStats(counters[0], counters[1], time.monotonic() - t0)
    return ImageSet(canonical_form(code), images, stats)


def verify_image_membership(source: Code, target: Code,
                            max_trunks: int | None = DEFAULT_TRUNK_CAP) -> Morphism | None:
    """A morphism out of source whose image is isomorphic to target, if one
    exists; None otherwise.  The witness is the first hit in the fixed
    enumeration order."""
    target_key = _code_key(canonical_form(target).code)
    words, pool = _index_pool(source, max_trunks)
    w = len(words)
    canon_cache: dict = {}

    def build(chosen: list[int]) -> Morphism:
        trunks = []
        for t in chosen:
            members = frozenset(words[k] for k in range(w) if t & (1 << k))
            trunks.append(Trunk(members))
        return Morphism(source, tuple(trunks))

    def walk(chosen: list[int], start: int) -> Morphism | None:
        sig = _image_signature(w, chosen)
        canon = _canonical_of_reduced_masks(len(chosen), sig, canon_cache)
        if _code_key(canon) == target_key:
            return build(chosen)
        for i in range(start, len(pool)):
            if _stays_irredundant(chosen, pool[i]):
                chosen.append(pool[i])
                hit = walk(chosen, i + 1)
                if hit is not None:
                    return hit
                chosen.pop()
        return None

    return walk([], 0)


def image_set_difference(target: Code, baselines: list[Code], *, jobs: int = 1,
                         max_trunks: int | None = DEFAULT_TRUNK_CAP,
                         cache_dir: Path | str | None = None) -> tuple[Code, ...]:
    """Reduced images of target that are images of no baseline code."""
    mine = _enumerate_maybe_cached(target, cache_dir, jobs=jobs, max_trunks=max_trunks)
    covered: set[tuple] = set()
    for b in baselines:
        other = _enumerate_maybe_cached(b, cache_dir, jobs=jobs, max_trunks=max_trunks)
        covered |= other.canonical_keys()
    return tuple(c for c in mine.images if _code_key(c) not in covered)


# ---------------------------------------------------------------------------
# on-disk cache

def default_cache_dir() -> Path:
    env = os.environ.get("CODECAT_CACHE_DIR")
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "codecat"


def image_set_to_obj(s: ImageSet) -> dict:
    return {
        "source": code_to_obj(s.source.code),
        "source_witness": list(s.source.witness),
        "images": [code_to_obj(c) for c in s.images],
        "stats": {"explored": s.stats.explored, "pruned": s.stats.pruned,
                  "wall_time": s.stats.wall_time},
    }


def image_set_from_obj(obj: dict) -> ImageSet:
    source = CanonicalForm(parse_code(json.dumps(obj["source"])),
                           tuple(obj["source_witness"]))
    images = tuple(parse_code(json.dumps(o)) for o in obj["images"])
    st = obj["stats"]
    return ImageSet(source, images,
                    EnumerationStats(st["explored"], st["pruned"], st["wall_time"]))


def cached_enumerate(code: Code, cache_dir: Path | str, *, jobs: int = 1,
                     max_trunks: int | None = DEFAULT_TRUNK_CAP) -> ImageSet:
    """enumerate_reduced_images backed by a directory of JSON results keyed
    by the canonical form of the source, so isomorphic inputs share work."""
    cdir = Path(cache_dir)
    key = format_code(canonical_form(code).code, "json")
    digest = hashlib.sha256(key.encode()).hexdigest()[:32]
    path = cdir / f"images-{digest}.json"
    if path.exists():
        try:
            return image_set_from_obj(json.loads(path.read_text()))
        except (ValueError, KeyError):
            pass  # unreadable entry; recompute and overwrite
    result = enumerate_reduced_images(code, jobs=jobs, max_trunks=max_trunks)
    cdir.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(image_set_to_obj(result)))
    tmp.replace(path)
    return result


def _enumerate_maybe_cached(code: Code, cache_dir, **kw) -> ImageSet:
    if cache_dir is None:
        return enumerate_reduced_images(code, **kw)
    return cached_enumerate(code, cache_dir, **kw)
