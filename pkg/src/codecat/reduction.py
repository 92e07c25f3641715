"""Reduction and isomorphism of codes.

A neuron is trivial when its simple trunk is empty and redundant when its
simple trunk equals Tk(sigma) for some sigma not containing it.  A reduced
code has neither.  Reducing factors out exactly that: the morphism defined by
the irreducible trunks is an isomorphism onto a reduced code, and the number
of irreducible trunks is the fewest neurons any isomorphic copy can use.

Isomorphism testing goes through a canonical form: reduce, then pick the
lexicographically least neuron relabeling under the fixed total order on
codes (words sorted by cardinality then members; word lists compared
lexicographically).  Two codes are isomorphic iff their canonical forms are
equal codes.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .codes import Code, mask_members
from .morphisms import Morphism
from .trunks import irreducible_trunks, simple_trunks, trunk_of


def trivial_neurons(code: Code) -> set[int]:
    """Neurons appearing in no codeword."""
    return {i for i, t in simple_trunks(code) if not t.member_masks}


def redundant_neurons(code: Code) -> list[tuple[int, frozenset[int]]]:
    """Nontrivial neurons i with Tk(i) = Tk(sigma) for some sigma not
    containing i, each with the canonical witness generator-minus-i.

    If any sigma avoiding i works then so does the generator of Tk(i) with i
    removed, by maximality of the generator.
    """
    out = []
    for i, t in simple_trunks(code):
        if not t.member_masks:
            continue
        bit = 1 << (i - 1)
        witness = t.generator_mask & ~bit
        if trunk_of(code, witness).member_masks == t.member_masks:
            out.append((i, frozenset(mask_members(witness))))
    return out


def is_reduced(code: Code) -> bool:
    """No trivial neurons, no redundant neurons: equivalently, i -> Tk(i) is
    injective onto exactly the irreducible trunks."""
    st = [t.member_masks for _, t in simple_trunks(code)]
    if any(not t for t in st) or len(set(st)) != len(st):
        return False
    irr = {t.member_masks for t in irreducible_trunks(code)}
    return set(st) == irr


@dataclass(frozen=True)
class ReductionResult:
    reduced: Code
    iso: Morphism
    neuron_origin: tuple[frozenset[int], ...]  # generator behind each new neuron


def reduce_code(code: Code) -> ReductionResult:
    """Image of the code under its irreducible trunks.

    The result is reduced and reachable from the input by an isomorphism;
    neuron j of the result remembers the generator of the j-th irreducible
    trunk (ordered by generator).  An already-reduced code comes back
    unchanged, so reducing is idempotent.
    """
    if is_reduced(code):
        iso = Morphism(code, tuple(t for _, t in simple_trunks(code)))
        origins = tuple(frozenset(mask_members(t.generator_mask))
                        for t in iso.trunks)
        return ReductionResult(code, iso, origins)
    irr = irreducible_trunks(code)
    iso = Morphism(code, tuple(irr))
    origins = tuple(frozenset(mask_members(t.generator_mask)) for t in irr)
    return ReductionResult(iso.image(), iso, origins)


def minimum_neuron_number(code: Code) -> int:
    """Fewest neurons among codes isomorphic to this one."""
    return len(irreducible_trunks(code))


# ---------------------------------------------------------------------------
# canonical form

@dataclass(frozen=True)
class CanonicalForm:
    """A reduced, permutation-minimal code plus the relabeling that got there.

    witness[i-1] is the canonical label given to neuron i of reduce(x).
    """

    code: Code
    witness: tuple[int, ...]


def _relabel_words(words, perm: dict[int, int]):
    return sorted((len(w), tuple(sorted(perm[i] for i in w))) for w in words)


def _interchangeable(word_sets, a: int, b: int) -> bool:
    """Does swapping neurons a and b fix the code?  (An automorphism check:
    such candidates generate mirror-image search subtrees.)"""
    swapped = set()
    for w in word_sets:
        swapped.add(frozenset(b if i == a else a if i == b else i for i in w))
    return swapped == set(word_sets)


def _min_relabeling(member_tuples: Sequence[tuple[int, ...]], n: int):
    """Lexicographically least relabeling of a code on neurons 1..n.

    Returns (sorted canonical word list, perm) where perm[i-1] is the new
    label of neuron i.  Branch and bound over which old neuron gets each new
    label in turn.  A branch is cut only when the partial word list already
    beats or loses to the incumbent on a fully-determined prefix; comparing
    sorted projections alone is not sound because list slots that tie on the
    assigned labels can still flip on the unassigned ones.
    """
    words = [frozenset(w) for w in member_tuples]
    lens = [len(w) for w in member_tuples]
    inf = n + 1

    if n == 0:
        return sorted((l, ()) for l in lens), ()

    assigned: dict[int, int] = {}
    best_key: list | None = None
    best_perm: dict[int, int] | None = None

    def signature() -> list[tuple[int, tuple[int, ...]]]:
        sig = []
        for w, l in zip(words, lens):
            lab = sorted(assigned[o] for o in w if o in assigned)
            sig.append((l, tuple(lab) + (inf,) * (l - len(lab))))
        sig.sort()
        return sig

    def project_best(q: int) -> list[tuple[int, tuple[int, ...]]]:
        out = []
        for l, mem in best_key:
            lab = tuple(x for x in mem if x <= q)
            out.append((l, lab + (inf,) * (l - len(lab))))
        out.sort()
        return out

    def provably_worse(sig, proj) -> bool:
        # True only when every completion of the current assignment compares
        # greater than the incumbent.
        for s, b in zip(sig, proj):
            if s == b:
                if inf in s[1]:
                    return False  # equal but undetermined; later slots unprovable
                continue
            return s > b
        return False

    def rec(q: int):
        nonlocal best_key, best_perm
        if q == n:
            key = signature()
            if best_key is None or key < best_key:
                best_key = key
                best_perm = dict(assigned)
            return
        cands = []
        for o in range(1, n + 1):
            if o in assigned:
                continue
            assigned[o] = q + 1
            sig = signature()
            del assigned[o]
            cands.append((sig, o))
        cands.sort()
        kept: list[tuple[list, int]] = []
        for sig, o in cands:
            if any(sig == ksig and _interchangeable(words, ko, o)
                   for ksig, ko in kept):
                continue
            kept.append((sig, o))
        for sig, o in kept:
            if best_key is not None and provably_worse(sig, project_best(q + 1)):
                continue
            assigned[o] = q + 1
            rec(q + 1)
            del assigned[o]

    rec(0)
    perm = tuple(best_perm[i] for i in range(1, n + 1))
    return best_key, perm


def canonical_form(code: Code) -> CanonicalForm:
    """Reduce, then permutation-minimize under the fixed total order."""
    red = reduce_code(code).reduced
    member_tuples = [mask_members(m) for m in red.masks]
    key, perm = _min_relabeling(member_tuples, red.n)
    canon = Code(red.n, [members for _, members in key])
    return CanonicalForm(canon, perm)


def is_isomorphic(a: Code, b: Code) -> bool:
    """Equality of canonical forms."""
    return canonical_form(a).code == canonical_form(b).code
