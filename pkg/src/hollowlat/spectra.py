"""Primeness and coprimeness predicates for lattice elements under a poset action.

Ten element kinds are supported.  Five live on L minus the top element:

  irreducible            a meet b = x      implies a = x or b = x
  strongly_irreducible   a meet b <= x     implies a <= x or b <= x
  ps_irreducible         (s.top) meet y <= x  implies s.top <= x or y <= x
  prime                  s.y <= x          implies s.top <= x or y <= x
  coprime                s.top <= x  or  (s.top) join x = top

and five on L minus the bottom element:

  hollow                 x = a join b      implies x = a or x = b
  strongly_hollow        x <= a join b     implies x <= a or x <= b
  ps_hollow              x <= (s.top) join y  implies x <= s.top or x <= y
  second                 s.x = x  or  s.x = bottom
  first                  s.y = bottom and y <= x  implies s.x = bottom or y = bottom

The ps_ prefix abbreviates "pseudo strongly".  Every predicate is decided by
exhausting the quantifiers, so the functions double as brute-force oracles.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .lattice import (
    FiniteLattice,
    FinitePoset,
    MeetOrJoinMissing,
    PosetAction,
    build_lattice,
    build_poset,
    chain,
    dual_action,
    is_join_distributive,
    is_multiplication,
    lower_interval,
    make_action,
    quotient,
    star_action,
    _bits,
)
from .report import Report

UPPER_KINDS = ("irreducible", "strongly_irreducible", "ps_irreducible", "prime", "coprime")
LOWER_KINDS = ("hollow", "strongly_hollow", "ps_hollow", "second", "first")
KINDS = UPPER_KINDS + LOWER_KINDS

PS_HOLLOW_FLAG = (
    "ps_hollow evaluated as: x <= (s.top) join y implies x <= s.top or x <= y, "
    "for all s and y"
)
COPRIME_DOMAIN_FLAG = "coprime domain is every element except top; the bottom element is admitted"
MULTIPLICATION_COLLAPSE_FLAG = (
    "multiplication collapse compares the ps_hollow spectrum (not ps_irreducible, "
    "whose domain excludes the wrong endpoint) with strongly hollow and dual prime"
)


def _ids(xs) -> str:
    return "[" + ",".join(str(x) for x in xs) + "]"


class DomainError(Exception):
    """Element outside the domain of the requested kind."""


def is_kind(action: PosetAction, x: int, kind: str) -> bool:
    """Decide whether element x has the given kind under the action."""
    lat = action.lattice
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if kind in UPPER_KINDS and x == lat.top:
        raise DomainError(f"{kind} is undefined on the top element")
    if kind in LOWER_KINDS and x == lat.bottom:
        raise DomainError(f"{kind} is undefined on the bottom element")
    rng = range(lat.size)
    srange = range(action.poset.size)

    if kind == "irreducible":
        return all(a == x or b == x
                   for a, b in itertools.product(rng, rng) if lat.meet(a, b) == x)
    if kind == "strongly_irreducible":
        return all(lat.le(a, x) or lat.le(b, x)
                   for a, b in itertools.product(rng, rng) if lat.le(lat.meet(a, b), x))
    if kind == "ps_irreducible":
        return all(lat.le(action.top_image(s), x) or lat.le(y, x)
                   for s, y in itertools.product(srange, rng)
                   if lat.le(lat.meet(action.top_image(s), y), x))
    if kind == "prime":
        return all(lat.le(action.top_image(s), x) or lat.le(y, x)
                   for s, y in itertools.product(srange, rng)
                   if lat.le(action.apply(s, y), x))
    if kind == "coprime":
        return all(lat.le(action.top_image(s), x) or lat.join(action.top_image(s), x) == lat.top
                   for s in srange)
    if kind == "hollow":
        return all(a == x or b == x
                   for a, b in itertools.product(rng, rng) if lat.join(a, b) == x)
    if kind == "strongly_hollow":
        return all(lat.le(x, a) or lat.le(x, b)
                   for a, b in itertools.product(rng, rng) if lat.le(x, lat.join(a, b)))
    if kind == "ps_hollow":
        return all(lat.le(x, action.top_image(s)) or lat.le(x, y)
                   for s, y in itertools.product(srange, rng)
                   if lat.le(x, lat.join(action.top_image(s), y)))
    if kind == "second":
        return all(action.apply(s, x) in (x, lat.bottom) for s in srange)
    # first
    return all(action.apply(s, x) == lat.bottom or y == lat.bottom
               for s, y in itertools.product(srange, rng)
               if action.apply(s, y) == lat.bottom and lat.le(y, x))


def spectrum(action: PosetAction, kind: str) -> tuple[int, ...]:
    """Sorted identifiers of all elements of the given kind."""
    lat = action.lattice
    excluded = lat.top if kind in UPPER_KINDS else lat.bottom
    return tuple(x for x in range(lat.size) if x != excluded and is_kind(action, x, kind))


@dataclass(frozen=True)
class Variety:
    base: int
    members: frozenset[int]


def variety(lattice: FiniteLattice, designated: frozenset[int] | set[int], a: int) -> Variety:
    """Elements of the designated set lying above a."""
    if lattice.top in designated:
        raise DomainError("designated set may not contain the top element")
    return Variety(a, frozenset(p for p in designated if lattice.le(a, p)))


def is_topological(lattice: FiniteLattice, designated: frozenset[int] | set[int]) -> bool:
    """Whether the varieties over the designated set are closed under pairwise union."""
    varieties = [variety(lattice, designated, a).members for a in range(lattice.size)]
    distinct = set(varieties)
    return all(u | v in distinct for u, v in itertools.combinations_with_replacement(distinct, 2))


# -- duality theorem and identity checkers ----------------------------------

def check_duality_theorem(action: PosetAction, part: int) -> Report:
    """Verify one part of the coprime/second duality law suite.

    1: coprime spectrum equals the second spectrum of the dual action.
    2: coprime spectrum of the dual equals the second spectrum of the star action.
    3: for every prime x, all classes of the quotient at x except the class
       of x itself are first.
    4: under join distributivity, part 3 becomes an equivalence for every
       non-top x; gated when join distributivity fails.
    """
    lat = action.lattice
    rep = Report(subject=f"duality part {part}")
    if part == 1:
        lhs = spectrum(action, "coprime")
        rhs = spectrum(dual_action(action), "second")
        rep.check("duality.coprime_equals_dual_second", lhs == rhs,
                  f"coprime={_ids(lhs)}", f"dual_second={_ids(rhs)}")
    elif part == 2:
        lhs = spectrum(dual_action(action), "coprime")
        rhs = spectrum(star_action(action), "second")
        rep.check("duality.dual_coprime_equals_star_second", lhs == rhs,
                  f"dual_coprime={_ids(lhs)}", f"star_second={_ids(rhs)}")
    elif part == 3:
        primes = spectrum(action, "prime")
        if not primes:
            rep.gate("duality.prime_quotient_all_first", "no-prime-elements")
        for x in primes:
            sub, qact, cmap = quotient(action, x)
            firsts = set(spectrum(qact, "first"))
            expected = set(range(sub.size)) - {cmap[x]}
            rep.check(f"duality.prime_quotient_all_first.x{x}", firsts == expected,
                      f"first={_ids(sorted(firsts))}", f"expected={_ids(sorted(expected))}")
    elif part == 4:
        if not is_join_distributive(action):
            rep.gate("duality.prime_iff_quotient_first", "join-distributivity-fails")
            return rep
        for x in range(lat.size):
            if x == lat.top:
                continue
            sub, qact, cmap = quotient(action, x)
            all_first = set(spectrum(qact, "first")) == set(range(sub.size)) - {cmap[x]}
            rep.check(f"duality.prime_iff_quotient_first.x{x}",
                      is_kind(action, x, "prime") == all_first)
    else:
        raise ValueError("part must be 1, 2, 3 or 4")
    return rep


def check_spectrum_identities(action: PosetAction) -> Report:
    """Verify the small identity suite tying the spectra together.

    1: bottom prime iff top first
    2: strongly hollow elements are prime in the dual
    3: under multiplication, ps_irreducible = strongly hollow = dual prime
    4: prime under the star action iff ps_irreducible
    5: coprime iff coprime under the star action
    6: x first iff bottom is prime in the interval below x
    7: x second iff bottom is coprime in the interval below x
    """
    lat = action.lattice
    rep = Report(subject="spectrum identities")
    rep.flag(PS_HOLLOW_FLAG)
    rep.flag(COPRIME_DOMAIN_FLAG)
    degenerate = lat.bottom == lat.top

    if degenerate:
        rep.add("identity.bottom_prime_iff_top_first", "pass", "degenerate")
    else:
        rep.check("identity.bottom_prime_iff_top_first",
                  is_kind(action, lat.bottom, "prime") == is_kind(action, lat.top, "first"))

    dual = dual_action(action)
    sh = set(spectrum(action, "strongly_hollow"))
    dual_prime = set(spectrum(dual, "prime"))
    rep.check("identity.strongly_hollow_subset_dual_prime", sh <= dual_prime,
              f"strongly_hollow={_ids(sorted(sh))}", f"dual_prime={_ids(sorted(dual_prime))}")

    if is_multiplication(action):
        psh = set(spectrum(action, "ps_hollow"))
        rep.check("identity.multiplication_collapse", psh == sh == dual_prime,
                  f"ps_hollow={_ids(sorted(psh))}", f"strongly_hollow={_ids(sorted(sh))}",
                  f"dual_prime={_ids(sorted(dual_prime))}")
        rep.flag(MULTIPLICATION_COLLAPSE_FLAG)
    else:
        rep.gate("identity.multiplication_collapse", "not-multiplication")

    star = star_action(action)
    rep.check("identity.star_prime_iff_ps_irreducible",
              spectrum(star, "prime") == spectrum(action, "ps_irreducible"))
    rep.check("identity.coprime_star_invariant",
              spectrum(star, "coprime") == spectrum(action, "coprime"))

    first_ok = True
    second_ok = True
    for x in range(lat.size):
        if x == lat.bottom:
            continue
        sub, sub_action = lower_interval(action, x)
        below = sorted(_bits(lat.down[x]))
        sub_bottom = below.index(lat.bottom)
        first_ok &= is_kind(action, x, "first") == is_kind(sub_action, sub_bottom, "prime")
        second_ok &= is_kind(action, x, "second") == is_kind(sub_action, sub_bottom, "coprime")
    rep.check("identity.first_iff_interval_bottom_prime", first_ok)
    rep.check("identity.second_iff_interval_bottom_coprime", second_ok)
    return rep


def check_double_dual(action: PosetAction) -> Report:
    """The dual action applied twice must coincide with the star action."""
    rep = Report(subject="double dual")
    twice = dual_action(dual_action(action))
    star = star_action(action)
    rep.check("duality.double_dual_equals_star",
              twice.table == star.table
              and twice.lattice.up == star.lattice.up
              and twice.poset.up == star.poset.up)
    return rep


# -- seeded random instances -------------------------------------------------

def random_poset(rng: random.Random, max_size: int = 4) -> FinitePoset:
    n = rng.randint(1, max_size)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    return build_poset(n, pairs)


def random_lattice(rng: random.Random, max_size: int = 8) -> FiniteLattice:
    """A random bounded lattice; rejection-samples orders until one is a lattice."""
    while True:
        n = rng.randint(1, max_size)
        if n <= 2:
            return chain(n)
        density = rng.uniform(0.15, 0.7)
        pairs = [(0, i) for i in range(n)] + [(i, n - 1) for i in range(n)]
        pairs += [(i, j) for i in range(1, n - 1) for j in range(i + 1, n - 1)
                  if rng.random() < density]
        try:
            return build_lattice(n, pairs)
        except MeetOrJoinMissing:
            continue


def random_action(rng: random.Random, lattice: FiniteLattice, poset: FinitePoset,
                  star_shaped: bool = False) -> PosetAction:
    """A random valid action.

    The star-shaped generator picks a monotone choice of s.top and sets
    s.x = (s.top) meet x.  The general generator fills the whole table
    elementwise, sampling each entry uniformly from the interval of values
    permitted by the axioms given the entries fixed so far.
    """
    sorder = poset.linear_extension()
    lorder = sorted(range(lattice.size),
                    key=lambda x: (bin(lattice.down[x]).count("1"), x))
    if star_shaped:
        tops: dict[int, int] = {}
        for s in sorder:
            lower = lattice.bottom
            for t in sorder:
                if t == s:
                    break
                if poset.le(t, s):
                    lower = lattice.join(lower, tops[t])
            choices = sorted(_bits(lattice.up[lower]))
            tops[s] = rng.choice(choices)
        table = [[lattice.meet(tops[s], x) for x in range(lattice.size)]
                 for s in range(poset.size)]
        return make_action(lattice, poset, table)

    table = [[0] * lattice.size for _ in range(poset.size)]
    assigned = [[False] * lattice.size for _ in range(poset.size)]
    for s in sorder:
        for x in lorder:
            lower = lattice.bottom
            for xp in _bits(lattice.down[x]):
                if assigned[s][xp]:
                    lower = lattice.join(lower, table[s][xp])
            for t in sorder:
                if t == s:
                    break
                if poset.le(t, s) and assigned[t][x]:
                    lower = lattice.join(lower, table[t][x])
            choices = sorted(m for m in _bits(lattice.up[lower]) if lattice.le(m, x))
            table[s][x] = rng.choice(choices)
            assigned[s][x] = True
    return make_action(lattice, poset, table)


def random_instance(seed: int, max_lattice: int = 8, max_poset: int = 4) -> PosetAction:
    """Deterministic random (lattice, action) pair for property suites."""
    rng = random.Random(seed)
    lattice = random_lattice(rng, max_lattice)
    poset = random_poset(rng, max_poset)
    return random_action(rng, lattice, poset, star_shaped=rng.random() < 0.4)
