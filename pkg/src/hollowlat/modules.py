"""Finite modules over Z/nZ: arithmetic, submodules, and module-class predicates.

A module is a direct sum of cyclic groups Z/d_iZ with every d_i dividing the
ring modulus n, so scalars act as integer multiples and submodules coincide
with subgroups.  Everything downstream (ideal action, annihilators, class
predicates, second representations) is decided by exhaustive quantification
over the enumerated submodules and the divisor-indexed ideals, which keeps
each predicate usable as its own brute-force oracle.

The same machinery runs on quotient structures (CosetModule), which is what
the lifting and smallness predicates need.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache, reduce

from .lattice import FiniteLattice, PosetAction, build_lattice, build_poset, make_action

DEFAULT_ORDER_BOUND = 4096
ORDER_BOUND_ENV = "HOLLOWLAT_BOUND"


class ModuleError(Exception):
    pass


class BoundExceeded(ModuleError):
    pass


class ZeroSubmodule(ModuleError):
    """A nonzero submodule was required."""


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@dataclass(frozen=True)
class Ring:
    """The ring Z/nZ.  Its ideals are (d) for the divisors d of n."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("modulus must be at least 2")

    @property
    def divisors(self) -> tuple[int, ...]:
        return _divisors(self.n)

    def ideal(self, generator: int) -> "Ideal":
        return Ideal(self, math.gcd(generator, self.n) or self.n)

    def ideals(self) -> tuple["Ideal", ...]:
        return tuple(Ideal(self, d) for d in self.divisors)

    def unit_ideal(self) -> "Ideal":
        return Ideal(self, 1)

    def zero_ideal(self) -> "Ideal":
        return Ideal(self, self.n)


@dataclass(frozen=True)
class Ideal:
    """The ideal dZ/nZ for a divisor d of n; d = n is the zero ideal."""

    ring: Ring
    d: int

    def __post_init__(self):
        if not (1 <= self.d <= self.ring.n and self.ring.n % self.d == 0):
            raise ValueError(f"{self.d} is not a divisor of {self.ring.n}")

    def le(self, other: "Ideal") -> bool:
        """Inclusion: (d) is contained in (e) exactly when e divides d."""
        return self.d % other.d == 0

    def add(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, math.gcd(self.d, other.d))

    def intersect(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.d * other.d // math.gcd(self.d, other.d))

    def mul(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, math.gcd(self.d * other.d, self.ring.n))

    @property
    def is_zero(self) -> bool:
        return self.d == self.ring.n

    @property
    def name(self) -> str:
        return "(0)" if self.is_zero else f"({self.d})"


def ideal_set_names(ideals) -> str:
    return "{" + ",".join(i.name for i in sorted(ideals, key=lambda i: i.d)) + "}"


class FiniteModule:
    """A finite Z/nZ-module given as a direct sum of cyclic groups.

    Elements are residue tuples, identified by their index in the lexicographic
    enumeration; index 0 is the zero element.
    """

    def __init__(self, ring: Ring, factors, bound: int = DEFAULT_ORDER_BOUND):
        factors = tuple(int(d) for d in factors)
        if not factors:
            raise ValueError("at least one cyclic factor is required")
        for d in factors:
            if d < 2:
                raise ValueError(f"cyclic factor {d} must be at least 2")
            if ring.n % d != 0:
                raise ValueError(f"cyclic factor {d} does not divide the modulus {ring.n}")
        order = math.prod(factors)
        if order > bound:
            raise BoundExceeded(f"module order {order} exceeds bound {bound}")
        self.ring = ring
        self.factors = factors
        self.size = order
        self.elements = tuple(itertools.product(*(range(d) for d in factors)))
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._cache: dict = {}

    zero = 0

    def add(self, i: int, j: int) -> int:
        a, b = self.elements[i], self.elements[j]
        return self._index[tuple((x + y) % d for x, y, d in zip(a, b, self.factors))]

    def smul(self, r: int, i: int) -> int:
        a = self.elements[i]
        return self._index[tuple((r * x) % d for x, d in zip(a, self.factors))]

    def element_name(self, i: int) -> str:
        if len(self.factors) == 1:
            return str(self.elements[i][0])
        return "(" + ",".join(str(x) for x in self.elements[i]) + ")"

    def describe(self) -> str:
        return f"ring {self.ring.n} module {' '.join(str(d) for d in self.factors)}"

    def __repr__(self):
        return f"FiniteModule({self.describe()!r})"


class CosetModule:
    """Quotient of a module by a submodule, as an explicit coset structure.

    Cosets are numbered by ascending least member of the base module, so the
    zero coset has index 0.  The structure quacks like a FiniteModule for all
    the submodule machinery.
    """

    def __init__(self, base, kernel: "Submodule"):
        if kernel.module is not base:
            raise ValueError("kernel does not live in the given module")
        proj = [-1] * base.size
        reps = []
        for x in range(base.size):
            if proj[x] >= 0:
                continue
            idx = len(reps)
            reps.append(x)
            for k in kernel.members:
                proj[base.add(x, k)] = idx
        self.base = base
        self.kernel = kernel
        self.ring = base.ring
        self.size = len(reps)
        self.reps = tuple(reps)
        self._proj = tuple(proj)
        self._cache: dict = {}

    zero = 0

    def add(self, i: int, j: int) -> int:
        return self._proj[self.base.add(self.reps[i], self.reps[j])]

    def smul(self, r: int, i: int) -> int:
        return self._proj[self.base.smul(r, self.reps[i])]

    def project(self, x: int) -> int:
        return self._proj[x]

    def element_name(self, i: int) -> str:
        return self.base.element_name(self.reps[i]) + "~"

    def describe(self) -> str:
        return f"{self.base.describe()} / {self.kernel.name}"

    def __repr__(self):
        return f"CosetModule({self.describe()!r})"


@dataclass(frozen=True)
class Submodule:
    """A submodule as a canonical member set with a greedy generator list."""

    module: object
    members: frozenset[int]
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def is_zero(self) -> bool:
        return self.order == 1

    def le(self, other: "Submodule") -> bool:
        return self.members <= other.members

    def sort_key(self):
        return (self.order, tuple(sorted(self.members)))

    @property
    def name(self) -> str:
        mod = self.module
        if isinstance(mod, FiniteModule) and len(mod.factors) == 1:
            return "(0)" if self.is_zero else f"({min(m for m in self.members if m)})"
        if self.is_zero:
            return "0"
        return "<" + ",".join(mod.element_name(g) for g in self.generators) + ">"

    def __repr__(self):
        return f"Submodule({self.name})"


def _closure(module, seed, gens) -> set[int]:
    members = set(seed)
    queue = list(members)
    while queue:
        x = queue.pop()
        for g in gens:
            y = module.add(x, g)
            if y not in members:
                members.add(y)
                queue.append(y)
    return members


def _canonical_generators(module, members: frozenset[int]) -> tuple[int, ...]:
    gens: list[int] = []
    current = {module.zero}
    for m in sorted(members):
        if m not in current:
            gens.append(m)
            current = _closure(module, current, (m,))
    return tuple(gens)


def _as_submodule(module, members: frozenset[int]) -> Submodule:
    index = module._cache.get("sub_index")
    if index is not None:
        return module._cache["submodules"][index[members]]
    return Submodule(module, members, _canonical_generators(module, members))


def span(module, gens) -> Submodule:
    """Least submodule containing the given elements (additive closure)."""
    return _as_submodule(module, frozenset(_closure(module, {module.zero}, tuple(gens))))


def zero_submodule(module) -> Submodule:
    return _as_submodule(module, frozenset({module.zero}))


def whole_module(module) -> Submodule:
    return _as_submodule(module, frozenset(range(module.size)))


def enumerate_submodules(module) -> tuple[Submodule, ...]:
    """All submodules, sorted by (order, member set).

    Computed as the closure of the cyclic submodules under pairwise sum.
    """
    cached = module._cache.get("submodules")
    if cached is not None:
        return cached
    found: dict[frozenset[int], Submodule] = {}

    def record(members: frozenset[int]) -> Submodule:
        sub = found.get(members)
        if sub is None:
            sub = Submodule(module, members, _canonical_generators(module, members))
            found[sub.members] = sub
        return sub

    record(frozenset({module.zero}))
    for g in range(module.size):
        record(frozenset(_closure(module, {module.zero}, (g,))))
    work = list(found.values())
    while work:
        a = work.pop()
        for b in list(found.values()):
            members = frozenset(_closure(module, a.members, b.generators))
            if members not in found:
                work.append(record(members))
    subs = tuple(sorted(found.values(), key=Submodule.sort_key))
    module._cache["submodules"] = subs
    module._cache["sub_index"] = {s.members: i for i, s in enumerate(subs)}
    return subs


def submodule_index(sub: Submodule) -> int:
    enumerate_submodules(sub.module)
    return sub.module._cache["sub_index"][sub.members]


def submodules_within(bound_sub: Submodule) -> tuple[Submodule, ...]:
    """All submodules of the ambient module contained in the given one."""
    cache = bound_sub.module._cache.setdefault("within", {})
    got = cache.get(bound_sub.members)
    if got is None:
        got = tuple(s for s in enumerate_submodules(bound_sub.module)
                    if s.members <= bound_sub.members)
        cache[bound_sub.members] = got
    return got


def sum_of(a: Submodule, b: Submodule) -> Submodule:
    if a.module is not b.module:
        raise ValueError("submodules live in different modules")
    cache = a.module._cache.setdefault("sums", {})
    key = frozenset((a.members, b.members))
    got = cache.get(key)
    if got is None:
        got = _as_submodule(a.module, frozenset(_closure(a.module, a.members, b.generators)))
        cache[key] = got
    return got


def sum_all(module, subs) -> Submodule:
    return reduce(sum_of, subs, zero_submodule(module))


def intersect(a: Submodule, b: Submodule) -> Submodule:
    if a.module is not b.module:
        raise ValueError("submodules live in different modules")
    return _as_submodule(a.module, a.members & b.members)


def ideal_apply(ideal: Ideal, sub: Submodule) -> Submodule:
    """The product (d)N = span of {d x : x in N}."""
    module = sub.module
    if ideal.ring != module.ring:
        raise ValueError("ideal and submodule have different rings")
    return _as_submodule(module, frozenset(module.smul(ideal.d, x) for x in sub.members))


def ideal_image(module, ideal: Ideal) -> Submodule:
    """The submodule (d)M."""
    cache = module._cache.setdefault("ideal_images", {})
    got = cache.get(ideal.d)
    if got is None:
        got = ideal_apply(ideal, whole_module(module))
        cache[ideal.d] = got
    return got


def distinct_ideal_images(module) -> tuple[Submodule, ...]:
    seen: dict[frozenset[int], Submodule] = {}
    for ideal in module.ring.ideals():
        img = ideal_image(module, ideal)
        seen.setdefault(img.members, img)
    return tuple(sorted(seen.values(), key=Submodule.sort_key))


def annihilator(sub: Submodule) -> Ideal:
    """The ideal of scalars killing the submodule, generated by the least one."""
    ring = sub.module.ring
    for d in ring.divisors:
        if all(sub.module.smul(d, x) == sub.module.zero for x in sub.members):
            return Ideal(ring, d)
    raise AssertionError("the zero ideal always annihilates after n steps")


def kernel_of_ideal(module, ideal: Ideal) -> Submodule:
    """The submodule {m : dm = 0} annihilated by the ideal."""
    return _as_submodule(module, frozenset(
        x for x in range(module.size) if module.smul(ideal.d, x) == module.zero))


def quotient_module(module, kernel: Submodule) -> CosetModule:
    cache = module._cache.setdefault("quotients", {})
    got = cache.get(kernel.members)
    if got is None:
        got = CosetModule(module, kernel)
        cache[kernel.members] = got
    return got


def image_in_quotient(quot: CosetModule, sub: Submodule) -> Submodule:
    if sub.module is not quot.base:
        raise ValueError("submodule does not live in the quotient's base module")
    return _as_submodule(quot, frozenset(quot.project(x) for x in sub.members))


# -- smallness ----------------------------------------------------------------

def is_small(sub: Submodule) -> bool:
    """N is small when N + L = M forces L = M."""
    module = sub.module
    for other in enumerate_submodules(module):
        if other.order != module.size and sum_of(sub, other).order == module.size:
            return False
    return True


def small_within(sub: Submodule, ambient: Submodule) -> bool:
    """Smallness of sub inside the submodule ambient (both inside one module)."""
    for other in submodules_within(ambient):
        if other.members != ambient.members and sum_of(sub, other).members == ambient.members:
            return False
    return True


# -- module class predicates --------------------------------------------------

def is_second_submodule(sub: Submodule) -> bool:
    """Every ideal acts on the submodule as identity or as zero."""
    if sub.is_zero:
        raise ZeroSubmodule("second is undefined on the zero submodule")
    for ideal in sub.module.ring.ideals():
        image = ideal_apply(ideal, sub)
        if image.members != sub.members and not image.is_zero:
            return False
    return True


def is_simple(sub: Submodule) -> bool:
    return sub.order > 1 and len(submodules_within(sub)) == 2


def is_semisimple_module(module) -> bool:
    """The sum of all simple submodules is everything."""
    simples = [s for s in enumerate_submodules(module) if is_simple(s)]
    return sum_all(module, simples).order == module.size


def is_multiplication_module(module) -> bool:
    """Every submodule is an ideal multiple of the whole module."""
    images = {img.members for img in distinct_ideal_images(module)}
    return all(s.members in images for s in enumerate_submodules(module))


def is_comultiplication_module(module) -> bool:
    """Every submodule K equals the kernel of its own annihilator."""
    return all(kernel_of_ideal(module, annihilator(k)).members == k.members
               for k in enumerate_submodules(module))


def is_distributive_module(module) -> bool:
    """Intersection distributes over sums, for all submodule triples."""
    subs = enumerate_submodules(module)
    for k, n in itertools.combinations_with_replacement(subs, 2):
        kn = sum_of(k, n)
        for low in subs:
            if intersect(low, kn).members != sum_of(intersect(low, k), intersect(low, n)).members:
                return False
    return True


def is_pseudo_distributive_module(module) -> bool:
    """Intersection distributes over sums whose first term is an ideal multiple."""
    subs = enumerate_submodules(module)
    for img in distinct_ideal_images(module):
        for n in subs:
            imn = sum_of(img, n)
            for low in subs:
                if intersect(low, imn).members != sum_of(intersect(low, img),
                                                         intersect(low, n)).members:
                    return False
    return True


def is_hollow_module(sub: Submodule) -> bool:
    """No two proper submodules of sub add up to sub."""
    if sub.is_zero:
        raise ZeroSubmodule("hollow is undefined on the zero submodule")
    inside = submodules_within(sub)
    for a, b in itertools.combinations_with_replacement(inside, 2):
        if sum_of(a, b).members == sub.members:
            if a.members != sub.members and b.members != sub.members:
                return False
    return True


def is_direct_summand(sub: Submodule) -> bool:
    module = sub.module
    for other in enumerate_submodules(module):
        if intersect(sub, other).is_zero and sum_of(sub, other).order == module.size:
            return True
    return False


def is_lifting_module(module) -> bool:
    """Every submodule contains a direct summand with small quotient remainder."""
    for sub in enumerate_submodules(module):
        ok = False
        for part in submodules_within(sub):
            if not is_direct_summand(part):
                continue
            quot = quotient_module(module, part)
            if is_small(image_in_quotient(quot, sub)):
                ok = True
                break
        if not ok:
            return False
    return True


def maximal_hollow_submodules(module) -> tuple[Submodule, ...]:
    hollows = [s for s in enumerate_submodules(module) if not s.is_zero and is_hollow_module(s)]
    return tuple(h for h in hollows
                 if not any(h.members < other.members for other in hollows))


def is_s_lifting_module(module) -> bool:
    """Lifting, with every maximal hollow submodule second."""
    if not is_lifting_module(module):
        return False
    return all(is_second_submodule(h) for h in maximal_hollow_submodules(module))


# -- second representations ---------------------------------------------------

def find_second_submodules(module) -> tuple[Submodule, ...]:
    return tuple(s for s in enumerate_submodules(module)
                 if not s.is_zero and is_second_submodule(s))


def find_minimal_second_representations(module) -> tuple[tuple[Submodule, ...], ...]:
    """All irredundant families of second submodules summing to the module."""
    seconds = find_second_submodules(module)
    whole = whole_module(module)
    out = []
    for size in range(1, len(seconds) + 1):
        for combo in itertools.combinations(seconds, size):
            if sum_all(module, combo).members != whole.members:
                continue
            if any(combo[j].le(sum_all(module, combo[:j] + combo[j + 1:]))
                   for j in range(size)):
                continue
            out.append(combo)
    return tuple(out)


def attached_annihilators(module) -> tuple[Ideal, ...]:
    """Annihilators of the summands of the first minimal second representation.

    Empty when the module is not second representable.
    """
    reps = find_minimal_second_representations(module)
    if not reps:
        return ()
    ideals = {annihilator(k) for k in reps[0]}
    return tuple(sorted(ideals, key=lambda i: i.d))


# -- bridge to the lattice layer ----------------------------------------------

def submodule_lattice(module) -> tuple[FiniteLattice, PosetAction]:
    """The submodule lattice under inclusion with its ideal action.

    Lattice element i is the i-th entry of enumerate_submodules(module); poset
    element j is the j-th divisor of n in ascending order, standing for the
    ideal it generates.
    """
    cached = module._cache.get("lattice")
    if cached is not None:
        return cached
    subs = enumerate_submodules(module)
    pairs = [(i, j) for i, a in enumerate(subs) for j, b in enumerate(subs)
             if a.members <= b.members]
    lat = build_lattice(len(subs), pairs)
    divs = module.ring.divisors
    poset = build_poset(len(divs), [(i, j) for i, di in enumerate(divs)
                                    for j, dj in enumerate(divs) if di % dj == 0])
    index = module._cache["sub_index"]
    table = [
        [index[ideal_apply(Ideal(module.ring, d), s).members] for s in subs]
        for d in divs
    ]
    action = make_action(lat, poset, table)
    module._cache["lattice"] = (lat, action)
    return lat, action
