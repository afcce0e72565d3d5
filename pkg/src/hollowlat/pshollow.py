"""Pseudo strongly hollow submodules, their profiles, and representation theory.

A nonzero submodule N is pseudo strongly hollow (ps-hollow) when N <= IM + L
forces N <= IM or N <= L, for every ideal I and submodule L.  Its profile
records the covering ideals (those with N <= IM), the inclusion-minimal ones,
and the hull: the intersection of the minimal ideal multiples of the module.

A hollow representation writes the module as a finite sum of ps-hollow
submodules; it is minimal when the summand hulls are pairwise incomparable
and no summand is contained in the sum of the others.

The check_* functions verify the structural laws of this theory on concrete
modules.  Each one first decides its hypotheses by brute force and reports
hypothesis-unmet findings when they fail; mathematical failures become fail
verdicts with witnesses, never exceptions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .modules import (
    Ideal,
    ModuleError,
    Submodule,
    ZeroSubmodule,
    annihilator,
    distinct_ideal_images,
    enumerate_submodules,
    find_minimal_second_representations,
    find_second_submodules,
    ideal_image,
    ideal_set_names,
    intersect,
    is_comultiplication_module,
    is_distributive_module,
    is_multiplication_module,
    is_second_submodule,
    is_semisimple_module,
    is_simple,
    is_small,
    small_within,
    submodules_within,
    sum_all,
    sum_of,
    whole_module,
)
from .report import Report

NONSMALL_READING_FLAG = (
    "non-small inheritance reads smallness of K inside N; the moreover clause "
    "is checked as equality of the full covering-ideal sets of K and N"
)
FAMILY_ORDER_FLAG = (
    "minimality between minimal-cover families is set inclusion of the ideal sets"
)
INNER_IRREDUCIBLE_FLAG = (
    "the summand-submodule alternative evaluates strong irreducibility inside "
    "the submodule lattice of the summand itself"
)


class HypothesisUnmet(ModuleError):
    """Inputs violate a checker's stated preconditions."""


class StepFailed(ModuleError):
    """A minimization step could not be completed; carries step and witnesses."""

    def __init__(self, step: str, *witnesses: str):
        super().__init__(f"step {step} failed: {' '.join(witnesses)}")
        self.step = step
        self.witnesses = witnesses


@dataclass(frozen=True)
class HollowProfile:
    """Covering data of a submodule N: ideals I with N <= IM.

    min_covers are the inclusion-minimal covering ideals; hull is the
    intersection of their images IM (the whole module when there are none,
    which cannot happen over Z/nZ).  ps_hollow records whether N passed the
    ps-hollow test; profiles of other submodules are diagnostic only.
    """

    submodule: Submodule
    covers: tuple[Ideal, ...]
    min_covers: tuple[Ideal, ...]
    hull: Submodule
    ps_hollow: bool

    @property
    def family(self) -> frozenset[int]:
        return frozenset(i.d for i in self.min_covers)

    @property
    def family_name(self) -> str:
        return ideal_set_names(self.min_covers)

    def describe(self) -> str:
        return (f"covers={ideal_set_names(self.covers)} min={self.family_name} "
                f"hull={self.hull.name}")


def is_ps_hollow(sub: Submodule) -> bool:
    """Exhaustive test of: sub <= IM + L implies sub <= IM or sub <= L."""
    if sub.is_zero:
        raise ZeroSubmodule("ps-hollow is undefined on the zero submodule")
    module = sub.module
    cache = module._cache.setdefault("ps_hollow", {})
    got = cache.get(sub.members)
    if got is None:
        got = True
        for img in distinct_ideal_images(module):
            if sub.le(img):
                continue
            for other in enumerate_submodules(module):
                if not sub.le(other) and sub.le(sum_of(img, other)):
                    got = False
                    break
            if not got:
                break
        cache[sub.members] = got
    return got


def profile(sub: Submodule) -> HollowProfile:
    if sub.is_zero:
        raise ZeroSubmodule("profiles are undefined on the zero submodule")
    module = sub.module
    cache = module._cache.setdefault("profiles", {})
    got = cache.get(sub.members)
    if got is None:
        covers = tuple(i for i in module.ring.ideals()
                       if sub.le(ideal_image(module, i)))
        min_covers = tuple(i for i in covers
                           if not any(j != i and j.le(i) for j in covers))
        hull = whole_module(module)
        for i in min_covers:
            hull = intersect(hull, ideal_image(module, i))
        got = HollowProfile(sub, covers, min_covers, hull, is_ps_hollow(sub))
        cache[sub.members] = got
    return got


def find_ps_hollow_submodules(module) -> tuple[tuple[Submodule, HollowProfile], ...]:
    """All ps-hollow submodules with their profiles, in canonical order."""
    return tuple((s, profile(s)) for s in enumerate_submodules(module)
                 if not s.is_zero and is_ps_hollow(s))


def is_hollow_ideal(ideal: Ideal) -> bool:
    """No two proper sub-sums: (a) + (b) = (d) forces (a) = (d) or (b) = (d)."""
    divs = ideal.ring.divisors
    return all(a == ideal.d or b == ideal.d
               for a, b in itertools.product(divs, divs)
               if math.gcd(a, b) == ideal.d)


def check_min_cover_ideals(module) -> Report:
    """Minimal covering ideals of ps-hollow submodules must be hollow ideals."""
    rep = Report(subject=f"{module.describe()}: minimal covers hollow")
    found = find_ps_hollow_submodules(module)
    if not found:
        rep.gate("min_covers_hollow", "no-ps-hollow-submodules")
        return rep
    for sub, prof in found:
        bad = [i.name for i in prof.min_covers if not is_hollow_ideal(i)]
        rep.check(f"min_covers_hollow.{sub.name}", not bad,
                  prof.family_name, *(f"not-hollow:{n}" for n in bad))
    return rep


def check_profile_of_sum(n: Submodule, k: Submodule, family: frozenset[int]) -> Report:
    """N + K carries the covering family exactly when both summands do.

    Requires incomparable ps-hollow inputs and a family drawn from the
    associated hollow ideals of the module; raises HypothesisUnmet otherwise.
    """
    if n.module is not k.module:
        raise HypothesisUnmet("submodules live in different modules")
    if n.le(k) or k.le(n):
        raise HypothesisUnmet(f"{n.name} and {k.name} are comparable")
    if not (is_ps_hollow(n) and is_ps_hollow(k)):
        raise HypothesisUnmet("both submodules must be ps-hollow")
    associated = set()
    for _, prof in find_ps_hollow_submodules(n.module):
        associated |= prof.family
    if not family <= associated:
        raise HypothesisUnmet("family is not drawn from the associated hollow ideals")

    def is_family(sub: Submodule) -> bool:
        return is_ps_hollow(sub) and profile(sub).family == family

    total = sum_of(n, k)
    lhs = is_family(total)
    rhs = is_family(n) and is_family(k)
    name = ideal_set_names(Ideal(n.module.ring, d) for d in sorted(family))
    rep = Report(subject=f"{n.module.describe()}: profile of sum")
    rep.check(f"profile_sum.{n.name}+{k.name}.{name}", lhs == rhs,
              f"sum_matches={lhs}", f"parts_match={rhs}")
    return rep


# -- representations -----------------------------------------------------------

@dataclass(frozen=True)
class Representation:
    """An ordered hollow representation with profiles and minimality verdict."""

    module: object
    summands: tuple[Submodule, ...]
    profiles: tuple[HollowProfile, ...]
    minimal: bool

    def names(self) -> str:
        return "+".join(s.name for s in self.summands)


def minimality_witnesses(module, summands) -> tuple[str, ...]:
    """Violations of the two minimality conditions, empty when minimal."""
    out = []
    profs = [profile(s) for s in summands]
    for i, j in itertools.combinations(range(len(summands)), 2):
        hi, hj = profs[i].hull, profs[j].hull
        if hi.le(hj) or hj.le(hi):
            out.append(f"hull({summands[i].name})~hull({summands[j].name})")
    for j in range(len(summands)):
        rest = sum_all(module, summands[:j] + summands[j + 1:])
        if summands[j].le(rest):
            out.append(f"{summands[j].name}<=rest")
    return tuple(out)


def is_minimal(rep: Representation) -> tuple[bool, tuple[str, ...]]:
    witnesses = minimality_witnesses(rep.module, rep.summands)
    return not witnesses, witnesses


def make_representation(module, summands) -> Representation:
    summands = tuple(summands)
    if not summands:
        raise ValueError("a representation needs at least one summand")
    for s in summands:
        if s.module is not module:
            raise ValueError("summand lives in a different module")
        if s.is_zero:
            raise ZeroSubmodule("zero cannot be a summand")
        if not is_ps_hollow(s):
            raise ValueError(f"summand {s.name} is not ps-hollow")
    if sum_all(module, summands).order != module.size:
        raise ValueError("summands do not sum to the whole module")
    profs = tuple(profile(s) for s in summands)
    minimal = not minimality_witnesses(module, summands)
    return Representation(module, summands, profs, minimal)


def minimize(rep: Representation) -> Representation:
    """Reduce a hollow representation to a minimal one.

    Repeatedly drops redundant summands, merges summands sharing a covering
    family into their sum, and collapses a pair with comparable hulls into the
    larger hull.  Merge and collapse must preserve ps-hollowness and the
    family, which over an Artinian ring they always do; a violation raises
    StepFailed naming the step and witnesses.
    """
    module = rep.module
    parts = sorted(rep.summands, key=Submodule.sort_key)
    while True:
        parts.sort(key=Submodule.sort_key)

        redundant = None
        for j in range(len(parts)):
            if parts[j].le(sum_all(module, parts[:j] + parts[j + 1:])):
                redundant = j
                break
        if redundant is not None:
            del parts[redundant]
            continue

        groups: dict[frozenset[int], list[Submodule]] = {}
        for s in parts:
            groups.setdefault(profile(s).family, []).append(s)
        merged_any = False
        for family, group in groups.items():
            if len(group) < 2:
                continue
            merged = sum_all(module, group)
            if not is_ps_hollow(merged) or profile(merged).family != family:
                raise StepFailed("merge", *(s.name for s in group),
                                 f"sum={merged.name}")
            parts = [s for s in parts if s not in group] + [merged]
            merged_any = True
            break
        if merged_any:
            continue

        collapsed = False
        for i, j in itertools.permutations(range(len(parts)), 2):
            hi, hj = profile(parts[i]).hull, profile(parts[j]).hull
            if hi.le(hj):
                if not is_ps_hollow(hj):
                    raise StepFailed("collapse", f"hull({parts[j].name})={hj.name}",
                                     "not-ps-hollow")
                if profile(hj).family != profile(parts[j]).family:
                    raise StepFailed("collapse", f"hull({parts[j].name})={hj.name}",
                                     "family-changed")
                keep = [parts[m] for m in range(len(parts)) if m not in (i, j)]
                parts = keep + [hj]
                collapsed = True
                break
        if collapsed:
            continue
        break

    out = make_representation(module, tuple(parts))
    if not out.minimal:
        raise StepFailed("fixpoint", *minimality_witnesses(module, out.summands))
    return out


def enumerate_minimal_representations(module, max_terms: int | None = None
                                      ) -> tuple[Representation, ...]:
    """All minimal hollow representations with at most max_terms summands."""
    hollows = [s for s, _ in find_ps_hollow_submodules(module)]
    cap = len(hollows) if max_terms is None else max(1, min(max_terms, len(hollows)))
    whole = whole_module(module)
    out = []
    for size in range(1, cap + 1):
        for combo in itertools.combinations(hollows, size):
            if sum_all(module, combo).members != whole.members:
                continue
            if minimality_witnesses(module, combo):
                continue
            out.append(make_representation(module, combo))
    return tuple(out)


# -- uniqueness ----------------------------------------------------------------

def _require_minimal_pair(r1: Representation, r2: Representation) -> None:
    if r1.module is not r2.module:
        raise HypothesisUnmet("representations are of different modules")
    if not (r1.minimal and r2.minimal):
        raise HypothesisUnmet("both representations must be minimal")


def verify_first_uniqueness(r1: Representation, r2: Representation) -> Report:
    """Minimal representations agree in length, families, and matching hulls."""
    _require_minimal_pair(r1, r2)
    rep = Report(subject=f"{r1.module.describe()}: first uniqueness "
                         f"[{r1.names()}] vs [{r2.names()}]")
    rep.check("first_uniqueness.count", len(r1.summands) == len(r2.summands),
              str(len(r1.summands)), str(len(r2.summands)))
    fams1 = sorted(sorted(p.family) for p in r1.profiles)
    fams2 = sorted(sorted(p.family) for p in r2.profiles)
    rep.check("first_uniqueness.families", fams1 == fams2,
              *(ideal_set_names(Ideal(r1.module.ring, d) for d in f) for f in fams1))
    bad = []
    for p1 in r1.profiles:
        for p2 in r2.profiles:
            if p1.family == p2.family and p1.hull.members != p2.hull.members:
                bad.append(f"{p1.family_name}:{p1.hull.name}!={p2.hull.name}")
    rep.check("first_uniqueness.hulls_match", not bad, *bad)
    return rep


def _align_by_family(r1: Representation, r2: Representation
                     ) -> list[tuple[HollowProfile, HollowProfile]]:
    by_family = {p.family: p for p in r2.profiles}
    if len(by_family) != len(r2.profiles):
        raise HypothesisUnmet("duplicate families in a minimal representation")
    pairs = []
    for p1 in r1.profiles:
        p2 = by_family.get(p1.family)
        if p2 is None:
            raise HypothesisUnmet("families do not match; first uniqueness fails")
        pairs.append((p1, p2))
    return pairs


def verify_second_uniqueness(r1: Representation, r2: Representation) -> Report:
    """At family-minimal positions, summands coincide or the hull is not ps-hollow.

    The two representations are aligned by their covering families first;
    minimality between families is set inclusion of the ideal sets.
    """
    _require_minimal_pair(r1, r2)
    if len(r1.summands) != len(r2.summands):
        raise HypothesisUnmet("representations have different lengths")
    pairs = _align_by_family(r1, r2)
    families = [p1.family for p1, _ in pairs]
    rep = Report(subject=f"{r1.module.describe()}: second uniqueness "
                         f"[{r1.names()}] vs [{r2.names()}]")
    rep.flag(FAMILY_ORDER_FLAG)
    for p1, p2 in pairs:
        if any(other < p1.family for other in families):
            continue
        same = p1.submodule.members == p2.submodule.members
        hull_ps = is_ps_hollow(p1.hull) if not p1.hull.is_zero else False
        rep.check(f"second_uniqueness.{p1.family_name}", same or not hull_ps,
                  f"left={p1.submodule.name}", f"right={p2.submodule.name}",
                  f"hull_ps_hollow={hull_ps}")
    return rep


def check_aligned_equality(r1: Representation, r2: Representation) -> Report:
    """When every summand hull is ps-hollow, aligned summands are identical."""
    _require_minimal_pair(r1, r2)
    rep = Report(subject=f"{r1.module.describe()}: aligned equality "
                         f"[{r1.names()}] vs [{r2.names()}]")
    hulls = [p.hull for p in r1.profiles + r2.profiles]
    not_ps = [h.name for h in hulls if h.is_zero or not is_ps_hollow(h)]
    if len(r1.summands) != len(r2.summands):
        rep.gate("aligned_equality", "lengths-differ")
        return rep
    if not_ps:
        rep.gate("aligned_equality", *(f"hull-not-ps-hollow:{n}" for n in not_ps))
        return rep
    try:
        pairs = _align_by_family(r1, r2)
    except HypothesisUnmet as exc:
        rep.gate("aligned_equality", str(exc))
        return rep
    bad = [f"{p1.submodule.name}!={p2.submodule.name}"
           for p1, p2 in pairs if p1.submodule.members != p2.submodule.members]
    rep.check("aligned_equality", not bad, *bad)
    return rep


# -- structural theorem checkers ------------------------------------------------

def check_nonsmall_inheritance(module, sub: Submodule) -> Report:
    """Non-small submodules of a ps-hollow submodule inherit its profile.

    Hypotheses: sub is ps-hollow, and every non-small submodule of the module
    is an ideal multiple of it.  Conclusion, for every K <= sub that is not
    small inside sub: K is ps-hollow with the same covering family, and its
    full covering-ideal set agrees with that of sub.
    """
    rep = Report(subject=f"{module.describe()}: non-small inheritance in {sub.name}")
    rep.flag(NONSMALL_READING_FLAG)
    claim = f"nonsmall_inheritance.{sub.name}"
    unmet = []
    if sub.is_zero or not is_ps_hollow(sub):
        unmet.append(f"{sub.name}-not-ps-hollow")
    images = {img.members for img in distinct_ideal_images(module)}
    outside = [k.name for k in enumerate_submodules(module)
               if not is_small(k) and k.members not in images]
    if outside:
        unmet.append("non-small-not-ideal-multiple:" + ",".join(outside))
    if unmet:
        rep.gate(claim, *unmet)
        return rep
    prof = profile(sub)
    for k in submodules_within(sub):
        if small_within(k, sub):
            continue
        kp = profile(k)
        ok = kp.ps_hollow and kp.family == prof.family and kp.covers == prof.covers
        rep.check(f"{claim}.{k.name}", ok,
                  f"ps_hollow={kp.ps_hollow}", f"family={kp.family_name}",
                  f"covers={ideal_set_names(kp.covers)}")
    return rep


def _maximal_seconds(module) -> list[Submodule]:
    seconds = find_second_submodules(module)
    return [k for k in seconds
            if not any(k.members < other.members for other in seconds)]


def _four_equivalents(module) -> dict[str, bool]:
    return {
        "multiplication": is_multiplication_module(module),
        "ps_hollow_all_simple": all(is_simple(s)
                                    for s, _ in find_ps_hollow_submodules(module)),
        "second_all_simple": all(is_simple(k) for k in find_second_submodules(module)),
        "comultiplication": is_comultiplication_module(module),
    }


def check_semisimple_equivalences(module) -> Report:
    """For semisimple modules with separating annihilators, four conditions agree.

    The conditions: the module is multiplication; every ps-hollow submodule is
    simple; every second submodule is simple; the module is comultiplication.
    Separation means no maximal second submodule is redundant in the
    intersection of their annihilators.
    """
    rep = Report(subject=f"{module.describe()}: semisimple equivalences")
    unmet = []
    if not is_semisimple_module(module):
        unmet.append("not-semisimple")
    maximal = _maximal_seconds(module)
    ann_whole = annihilator(whole_module(module))
    for n in maximal:
        rest = module.ring.unit_ideal()
        for k in maximal:
            if k.members != n.members:
                rest = rest.intersect(annihilator(k))
        if rest.d == ann_whole.d:
            unmet.append(f"annihilator-separation-fails-at:{n.name}")
    if unmet:
        rep.gate("semisimple_equivalences", *unmet)
        return rep
    values = _four_equivalents(module)
    rep.check("semisimple_equivalences", len(set(values.values())) == 1,
              *(f"{k}={v}" for k, v in values.items()))
    return rep


def check_second_rep_equivalences(module) -> Report:
    """Same four-way agreement for semisimple second representable modules.

    Requires the attached annihilators to be pairwise incomparable; also
    verifies that every irredundant second representation yields the same
    attached set.
    """
    rep = Report(subject=f"{module.describe()}: second representation equivalences")
    unmet = []
    if not is_semisimple_module(module):
        unmet.append("not-semisimple")
    reps = find_minimal_second_representations(module)
    if not reps:
        unmet.append("not-second-representable")
        rep.gate("second_rep_equivalences", *unmet)
        return rep
    att_sets = [frozenset(annihilator(k).d for k in r) for r in reps]
    rep.check("second_rep_attached_consistent", len(set(att_sets)) == 1,
              *(ideal_set_names(Ideal(module.ring, d) for d in s)
                for s in sorted(set(att_sets), key=sorted)))
    att = sorted(att_sets[0])
    incomparable = all(a == b or (a % b and b % a)
                       for a, b in itertools.product(att, att))
    if not incomparable:
        unmet.append("attached-annihilators-comparable")
    if unmet:
        rep.gate("second_rep_equivalences", *unmet)
        return rep
    values = _four_equivalents(module)
    rep.check("second_rep_equivalences", len(set(values.values())) == 1,
              *(f"{k}={v}" for k, v in values.items()))
    return rep


def _is_direct(module, summands) -> bool:
    return math.prod(s.order for s in summands) == module.size


def _strongly_irreducible_within(x: Submodule, ambient: Submodule) -> bool:
    inside = submodules_within(ambient)
    return all(a.le(x) or b.le(x)
               for a, b in itertools.product(inside, inside)
               if intersect(a, b).le(x))


def check_direct_sum_criteria(module, summands, part: int) -> Report:
    """Two sufficient criteria for a representation to be a direct sum.

    Part 1 applies to an irredundant second representation with incomparable
    attached annihilators whose summand-vs-rest intersections are zero or
    ps-hollow; it checks that directness is equivalent to pairwise zero
    intersections.  Part 2 applies to a minimal hollow representation of a
    distributive module in which every submodule of a summand is zero,
    strongly irreducible inside the summand, or shares the summand's covering
    family; it checks that the sum is direct.
    """
    summands = tuple(summands)
    rep = Report(subject=f"{module.describe()}: direct sum criterion {part} "
                         f"[{'+'.join(s.name for s in summands)}]")
    if part not in (1, 2):
        raise ValueError("part must be 1 or 2")
    unmet = []
    if not summands or sum_all(module, summands).order != module.size:
        unmet.append("summands-do-not-sum-to-module")
    if any(s.is_zero for s in summands):
        unmet.append("zero-summand")

    if part == 1:
        claim = "direct_sum.second_route"
        if not unmet:
            if not all(is_second_submodule(s) for s in summands):
                unmet.append("summands-not-all-second")
            if any(summands[j].le(sum_all(module, summands[:j] + summands[j + 1:]))
                   for j in range(len(summands))):
                unmet.append("redundant-summand")
            att = [annihilator(k).d for k in summands]
            if not all(a == b or (a % b and b % a)
                       for a, b in itertools.combinations(att, 2)):
                unmet.append("attached-annihilators-comparable")
        if not unmet:
            for j in range(len(summands)):
                inter = intersect(summands[j],
                                  sum_all(module, summands[:j] + summands[j + 1:]))
                if not inter.is_zero and not is_ps_hollow(inter):
                    unmet.append(f"rest-intersection-not-ps-hollow:{summands[j].name}")
        if unmet:
            rep.gate(claim, *unmet)
            return rep
        direct = _is_direct(module, summands)
        pairwise = all(intersect(a, b).is_zero
                       for a, b in itertools.combinations(summands, 2))
        rep.check(claim, direct == pairwise,
                  f"direct={direct}", f"pairwise_zero={pairwise}")
        return rep

    claim = "direct_sum.distributive_route"
    rep.flag(INNER_IRREDUCIBLE_FLAG)
    if not unmet:
        if not is_distributive_module(module):
            unmet.append("not-distributive")
        if any(not is_ps_hollow(s) for s in summands):
            unmet.append("summand-not-ps-hollow")
        elif minimality_witnesses(module, summands):
            unmet.append("representation-not-minimal")
    if not unmet:
        for s in summands:
            fam = profile(s).family
            for x in submodules_within(s):
                if x.is_zero:
                    continue
                if x.members != s.members and _strongly_irreducible_within(x, s):
                    continue
                if is_ps_hollow(x) and profile(x).family == fam:
                    continue
                unmet.append(f"submodule-alternative-fails:{x.name}-in-{s.name}")
    if unmet:
        rep.gate(claim, *unmet)
        return rep
    rep.check(claim, _is_direct(module, summands),
              f"orders={'x'.join(str(s.order) for s in summands)}",
              f"module={module.size}")
    return rep


def check_hull_disjoint_directness(module, representation: Representation) -> Report:
    """Minimal representation with hereditary ps-hollow summands and disjoint hulls
    is a direct sum."""
    rep = Report(subject=f"{module.describe()}: hull-disjoint directness "
                         f"[{representation.names()}]")
    claim = "hull_disjoint_direct"
    unmet = []
    if not representation.minimal:
        unmet.append("representation-not-minimal")
    for s in representation.summands:
        bad = [x.name for x in submodules_within(s)
               if not x.is_zero and not is_ps_hollow(x)]
        if bad:
            unmet.append(f"submodules-of-{s.name}-not-all-ps-hollow:" + ",".join(bad))
    for p, q in itertools.combinations(representation.profiles, 2):
        if not intersect(p.hull, q.hull).is_zero:
            unmet.append(f"hulls-overlap:{p.hull.name}&{q.hull.name}")
    if unmet:
        rep.gate(claim, *unmet)
        return rep
    rep.check(claim, _is_direct(module, representation.summands),
              f"orders={'x'.join(str(s.order) for s in representation.summands)}",
              f"module={module.size}")
    return rep


def check_hull_inheritance_directness(module, representation: Representation) -> Report:
    """Minimal representation whose hulls pass their family to all nonzero
    submodules is a direct sum."""
    rep = Report(subject=f"{module.describe()}: hull-inheritance directness "
                         f"[{representation.names()}]")
    claim = "hull_inheritance_direct"
    unmet = []
    if not representation.minimal:
        unmet.append("representation-not-minimal")
    for prof in representation.profiles:
        for x in submodules_within(prof.hull):
            if x.is_zero:
                continue
            if not is_ps_hollow(x) or profile(x).family != prof.family:
                unmet.append(f"hull-submodule-breaks-family:{x.name}-in-{prof.hull.name}")
    if unmet:
        rep.gate(claim, *unmet)
        return rep
    rep.check(claim, _is_direct(module, representation.summands),
              f"orders={'x'.join(str(s.order) for s in representation.summands)}",
              f"module={module.size}")
    return rep
