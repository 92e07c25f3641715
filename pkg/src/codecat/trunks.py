"""Trunks of a code: the sets Tk(sigma) = {c in C : sigma is a subset of c}.

Trunks are the structure morphisms must preserve under preimage.  The family
of all trunks of a code is closed under intersection and is generated by the
simple trunks Tk(i) together with the whole code Tk(empty); the empty set is a
trunk of every code.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .codes import Code, mask_members, word_mask


@dataclass(frozen=True)
class Trunk:
    """A trunk as a value: its member codewords plus the canonical generator.

    The generator is the intersection of all members, which is the unique
    maximal sigma with Tk(sigma) equal to this member set.  The empty trunk
    has no generator.
    """

    member_masks: frozenset[int]
    generator_mask: int | None = field(default=None)

    def __post_init__(self):
        if self.member_masks:
            gen = _intersect_all(self.member_masks)
            if self.generator_mask is None:
                object.__setattr__(self, "generator_mask", gen)
            elif self.generator_mask != gen:
                raise ValueError("generator is not the intersection of the members")
        elif self.generator_mask is not None:
            raise ValueError("the empty trunk has no generator")

    @property
    def members(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(mask_members(m)) for m in self.member_masks)

    @property
    def generator(self) -> frozenset[int] | None:
        if self.generator_mask is None:
            return None
        return frozenset(mask_members(self.generator_mask))

    def __len__(self) -> int:
        return len(self.member_masks)

    def __contains__(self, word) -> bool:
        mask = word if isinstance(word, int) else word_mask(word)
        return mask in self.member_masks

    def sort_key(self):
        return (len(self.member_masks),
                sorted((m.bit_count(), mask_members(m)) for m in self.member_masks))

    def __repr__(self) -> str:
        if not self.member_masks:
            return "Trunk(empty)"
        members = ",".join(
            "".join(map(str, mask_members(m))) or "0"
            for m in sorted(self.member_masks, key=lambda m: (-m.bit_count(), mask_members(m)))
        )
        gen = "".join(map(str, mask_members(self.generator_mask))) or "{}"
        return f"Trunk(Tk({gen}) = {{{members}}})"


def _intersect_all(masks: Iterable[int]) -> int:
    it = iter(masks)
    acc = next(it)
    for m in it:
        acc &= m
    return acc


def trunk_to_obj(trunk: Trunk) -> dict:
    gen = None if trunk.generator_mask is None else list(mask_members(trunk.generator_mask))
    members = [list(mask_members(m))
               for m in sorted(trunk.member_masks,
                               key=lambda m: (-m.bit_count(), mask_members(m)))]
    return {"generator": gen, "members": members}


def trunk_of(code: Code, sigma: Iterable[int]) -> Trunk:
    """Tk_C(sigma): all codewords containing sigma.  sigma must fit in 1..n."""
    smask = sigma if isinstance(sigma, int) else word_mask(sigma, code.n)
    if smask >= 1 << code.n:
        raise ValueError(f"sigma {set(mask_members(smask))} does not fit in n={code.n}")
    members = frozenset(m for m in code.mask_set if m & smask == smask)
    if not members:
        return Trunk(frozenset())
    return Trunk(members)


def simple_trunks(code: Code) -> list[tuple[int, Trunk]]:
    """[(i, Tk(i)) for each neuron i], including empty trunks of trivial neurons."""
    return [(i, trunk_of(code, 1 << (i - 1))) for i in range(1, code.n + 1)]


def _trunk_family_masksets(code: Code) -> set[frozenset[int]]:
    """All distinct trunks as member-mask sets: intersection closure of the
    simple trunks and the whole code, plus the empty trunk."""
    family: set[frozenset[int]] = {code.mask_set}
    for i in range(1, code.n + 1):
        bit = 1 << (i - 1)
        t = frozenset(m for m in code.mask_set if m & bit)
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
        for x in fresh:
            family.add(x)
        frontier = fresh
    family.add(frozenset())
    return family


def all_trunks(code: Code) -> list[Trunk]:
    """Every distinct trunk of the code, the whole code and the empty trunk
    included, in a deterministic (size, member list) order."""
    fam = _trunk_family_masksets(code)
    out = [Trunk(ms) if ms else Trunk(frozenset()) for ms in fam]
    out.sort(key=Trunk.sort_key)
    return out


def is_trunk(code: Code, subset: Iterable) -> bool:
    """Is this set of codewords empty or equal to Tk(sigma) for some sigma?

    Every element of subset must be a word of the code.
    """
    masks = set()
    for w in subset:
        mask = w if isinstance(w, int) else word_mask(w)
        if mask not in code.mask_set:
            raise ValueError(
                f"{set(mask_members(mask))} is not a codeword of the code")
        masks.add(mask)
    if not masks:
        return True
    gen = _intersect_all(masks)
    return all(m & gen != gen for m in code.mask_set - masks)


def irreducible_trunks(code: Code) -> list[Trunk]:
    """Nonempty proper trunks that are not intersections of strictly larger
    trunks, ordered by generator (lexicographic on sorted members).

    The trunk family is intersection-closed, so meet-irreducibility (the
    intersection of all strict supersets in the family is strictly larger)
    is the right test.
    """
    fam = _trunk_family_masksets(code)
    out = []
    for t in fam:
        if not t or t == code.mask_set:
            continue
        supersets = [s for s in fam if s > t]
        acc = code.mask_set
        for s in supersets:
            acc &= s
        if acc != t:
            out.append(Trunk(t))
    out.sort(key=lambda tr: mask_members(tr.generator_mask))
    return out
