"""Command line front end.

Input files come in two shapes.  A module file:

    ring 12
    module 12

and a generic lattice file:

    lattice 4
    leq 0 1
    ...
    poset 2
    sleq 0 1
    act 0 0 0
    ...

``leq``/``sleq`` lines are closed reflexively and transitively; every
``act s x y`` entry (meaning s.x = y) must be present exactly once.  Blank
lines and ``#`` comments are ignored.

Commands: submodules, spectra, pshollow, represent, minimize, verify, hasse.
Exit codes: 0 all pass, 1 any failing claim, 2 only hypothesis-unmet claims,
3 unusable input.
"""

from __future__ import annotations

import argparse
import itertools
import os
import sys

from . import pshollow as ph
from . import spectra
from .lattice import (
    FiniteLattice,
    LatticeError,
    PosetAction,
    build_lattice,
    build_poset,
    is_join_distributive,
    is_multiplication,
    make_action,
)
from .modules import (
    DEFAULT_ORDER_BOUND,
    ORDER_BOUND_ENV,
    FiniteModule,
    ModuleError,
    Ring,
    enumerate_submodules,
    find_minimal_second_representations,
    is_second_submodule,
    span,
    submodule_lattice,
)
from .report import Report

COMMANDS = ("submodules", "spectra", "pshollow", "represent", "minimize", "verify", "hasse")


class ParseError(Exception):
    def __init__(self, line: int | None, message: str):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class ValidationError(Exception):
    """Structurally parsed input that fails a mathematical validation."""


def _tokenize(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_spec(path: str, bound: int = DEFAULT_ORDER_BOUND):
    """Parse a module or lattice spec file.

    Returns a FiniteModule, or a (FiniteLattice, PosetAction) pair.
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(None, f"cannot read {path}: {exc}") from exc
    rows = list(_tokenize(text))
    if not rows:
        raise ParseError(None, "empty spec file")
    head = rows[0][1][0]
    if head == "ring":
        return _parse_module(rows, bound)
    if head == "lattice":
        return _parse_lattice(rows)
    raise ParseError(rows[0][0], f"expected 'ring' or 'lattice', got {head!r}")


def _ints(lineno, words, count=None):
    try:
        values = [int(w) for w in words]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(words)}") from None
    if count is not None and len(values) != count:
        raise ParseError(lineno, f"expected {count} integers, got {len(values)}")
    return values


def _parse_module(rows, bound) -> FiniteModule:
    ring = None
    factors = None
    for lineno, words in rows:
        key, rest = words[0], words[1:]
        if key == "ring":
            if ring is not None:
                raise ParseError(lineno, "duplicate ring directive")
            (n,) = _ints(lineno, rest, 1)
            ring = n
        elif key == "module":
            if factors is not None:
                raise ParseError(lineno, "duplicate module directive")
            if not rest:
                raise ParseError(lineno, "module directive needs at least one factor")
            factors = _ints(lineno, rest)
        else:
            raise ParseError(lineno, f"unknown directive {key!r} in module spec")
    if ring is None or factors is None:
        raise ParseError(None, "module spec needs both 'ring' and 'module' directives")
    try:
        return FiniteModule(Ring(ring), factors, bound=bound)
    except (ValueError, ModuleError) as exc:
        raise ValidationError(str(exc)) from exc


def _parse_lattice(rows) -> tuple[FiniteLattice, PosetAction]:
    lat_size = pos_size = None
    leq, sleq = [], []
    acts: dict[tuple[int, int], int] = {}
    for lineno, words in rows:
        key, rest = words[0], words[1:]
        if key == "lattice":
            if lat_size is not None:
                raise ParseError(lineno, "duplicate lattice directive")
            (lat_size,) = _ints(lineno, rest, 1)
        elif key == "leq":
            leq.append(tuple(_ints(lineno, rest, 2)))
        elif key == "poset":
            if pos_size is not None:
                raise ParseError(lineno, "duplicate poset directive")
            (pos_size,) = _ints(lineno, rest, 1)
        elif key == "sleq":
            sleq.append(tuple(_ints(lineno, rest, 2)))
        elif key == "act":
            s, x, y = _ints(lineno, rest, 3)
            if (s, x) in acts:
                raise ParseError(lineno, f"duplicate act entry for ({s}, {x})")
            acts[(s, x)] = y
        else:
            raise ParseError(lineno, f"unknown directive {key!r} in lattice spec")
    if lat_size is None or pos_size is None:
        raise ParseError(None, "lattice spec needs 'lattice' and 'poset' directives")
    try:
        lattice = build_lattice(lat_size, leq)
        poset = build_poset(pos_size, sleq)
    except LatticeError as exc:
        raise ValidationError(str(exc)) from exc
    missing = [(s, x) for s in range(pos_size) for x in range(lat_size)
               if (s, x) not in acts]
    if missing:
        raise ParseError(None, f"action table incomplete; first missing entry act "
                               f"{missing[0][0]} {missing[0][1]}")
    table = [[acts[(s, x)] for x in range(lat_size)] for s in range(pos_size)]
    try:
        action = make_action(lattice, poset, table)
    except LatticeError as exc:
        raise ValidationError(str(exc)) from exc
    return lattice, action


def emit_module_spec(module: FiniteModule) -> str:
    return (f"ring {module.ring.n}\n"
            f"module {' '.join(str(d) for d in module.factors)}\n")


def emit_lattice_spec(action: PosetAction) -> str:
    lat, pos = action.lattice, action.poset
    lines = [f"lattice {lat.size}"]
    lines += [f"leq {i} {j}" for i, j in lat.pairs() if i != j]
    lines.append(f"poset {pos.size}")
    lines += [f"sleq {i} {j}" for i, j in pos.pairs() if i != j]
    for s in range(pos.size):
        for x in range(lat.size):
            lines.append(f"act {s} {x} {action.apply(s, x)}")
    return "\n".join(lines) + "\n"


def emit_dot(lattice: FiniteLattice, labels, highlights=None) -> str:
    """DOT digraph of the covering relation, bottom-up, byte-stable."""
    highlights = highlights or {}
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box];"]
    for i in range(lattice.size):
        attrs = [f'label="{labels[i]}"']
        tags = highlights.get(i)
        if tags:
            attrs.append(f'tooltip="{" ".join(tags)}"')
            attrs.append("style=filled")
            attrs.append('fillcolor="lightblue"')
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for x, y in sorted(lattice.covers()):
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- theorem batteries ---------------------------------------------------------

def lattice_battery(action: PosetAction, report: Report) -> None:
    for part in (1, 2, 3, 4):
        report.extend(spectra.check_duality_theorem(action, part))
    report.extend(spectra.check_double_dual(action))
    report.extend(spectra.check_spectrum_identities(action))
    if is_multiplication(action):
        primes = set(spectra.spectrum(action, "prime"))
        report.check("variety.prime_union_closed",
                     spectra.is_topological(action.lattice, primes))
    else:
        report.gate("variety.prime_union_closed", "not-multiplication")


def module_battery(module: FiniteModule) -> Report:
    report = Report(subject=module.describe())
    subs = enumerate_submodules(module)
    lat, act = submodule_lattice(module)
    report.check("bridge.action_axioms", True)
    report.check("bridge.join_distributive", is_join_distributive(act))
    lattice_seconds = set(spectra.spectrum(act, "second"))
    module_seconds = {i for i, s in enumerate(subs)
                      if not s.is_zero and is_second_submodule(s)}
    report.check("bridge.second_consistency", lattice_seconds == module_seconds,
                 "lattice=[" + ",".join(map(str, sorted(lattice_seconds))) + "]",
                 "module=[" + ",".join(map(str, sorted(module_seconds))) + "]")
    lattice_battery(act, report)

    report.extend(ph.check_min_cover_ideals(module))
    found = ph.find_ps_hollow_submodules(module)
    for (n, pn), (k, pk) in itertools.combinations(found, 2):
        if n.le(k) or k.le(n):
            continue
        for family in sorted({pn.family, pk.family}, key=sorted):
            report.extend(ph.check_profile_of_sum(n, k, family))

    reps = ph.enumerate_minimal_representations(module)
    report.add("representations.count", "pass", str(len(reps)),
               *(r.names() for r in reps))
    for r1, r2 in itertools.combinations_with_replacement(reps, 2):
        report.extend(ph.verify_first_uniqueness(r1, r2))
        report.extend(ph.verify_second_uniqueness(r1, r2))
        report.extend(ph.check_aligned_equality(r1, r2))

    for sub, _ in found:
        report.extend(ph.check_nonsmall_inheritance(module, sub))
    report.extend(ph.check_semisimple_equivalences(module))
    report.extend(ph.check_second_rep_equivalences(module))

    second_reps = find_minimal_second_representations(module)
    if second_reps:
        for sr in second_reps:
            report.extend(ph.check_direct_sum_criteria(module, sr, 1))
    else:
        report.gate("direct_sum.second_route", "not-second-representable")
    for rep in reps:
        report.extend(ph.check_direct_sum_criteria(module, rep.summands, 2))
        report.extend(ph.check_hull_disjoint_directness(module, rep))
        report.extend(ph.check_hull_inheritance_directness(module, rep))
    return report


# -- commands -------------------------------------------------------------------

def _require_module(parsed, command: str) -> FiniteModule:
    if not isinstance(parsed, FiniteModule):
        raise ValidationError(f"command {command!r} needs a module spec file")
    return parsed


def _parse_summand_token(module: FiniteModule, token: str):
    token = token.strip()
    if not token:
        raise ValidationError("empty summand token")
    if token.startswith("(") and token.endswith(")") and len(module.factors) == 1:
        gen = int(token[1:-1]) % module.ring.n
        return span(module, (gen,) if gen else ())
    gens = []
    for part in token.split("+"):
        coords = tuple(int(c) for c in part.split(":"))
        if len(coords) != len(module.factors):
            raise ValidationError(f"element {part!r} has wrong arity")
        coords = tuple(c % d for c, d in zip(coords, module.factors))
        gens.append(module._index[coords])
    return span(module, gens)


def _expected_names(option: str) -> list[str]:
    return [tok.strip() for tok in option.split(",") if tok.strip()]


def cmd_submodules(module: FiniteModule, args) -> Report:
    report = Report(subject=module.describe())
    subs = enumerate_submodules(module)
    report.add("submodules.count", "pass", str(len(subs)))
    report.add("submodules.list", "pass", *(s.name for s in subs))
    for s in subs:
        report.add(f"submodules.order.{s.name}", "pass", str(s.order))
    return report


def cmd_spectra(parsed, args) -> Report:
    if isinstance(parsed, FiniteModule):
        subs = enumerate_submodules(parsed)
        _, action = submodule_lattice(parsed)
        labels = [s.name for s in subs]
        subject = parsed.describe()
    else:
        _, action = parsed
        labels = [str(i) for i in range(action.lattice.size)]
        subject = f"lattice size {action.lattice.size} poset size {action.poset.size}"
    report = Report(subject=subject)
    report.flag(spectra.PS_HOLLOW_FLAG)
    report.flag(spectra.COPRIME_DOMAIN_FLAG)
    kinds = [args.kind] if args.kind else list(spectra.KINDS)
    for kind in kinds:
        members = spectra.spectrum(action, kind)
        report.add(f"spectrum.{kind}", "pass", *(labels[i] for i in members))
    report.add("lattice.multiplication", "pass", str(is_multiplication(action)))
    report.add("lattice.join_distributive", "pass", str(is_join_distributive(action)))
    return report


def cmd_pshollow(module: FiniteModule, args) -> Report:
    report = Report(subject=module.describe())
    report.flag(spectra.PS_HOLLOW_FLAG)
    found = ph.find_ps_hollow_submodules(module)
    report.add("ps_hollow.list", "pass", *(s.name for s, _ in found))
    for s, prof in found:
        report.add(f"ps_hollow.profile.{s.name}", "pass",
                   f"covers={len(prof.covers)}", f"min={prof.family_name}",
                   f"hull={prof.hull.name}")
    if args.expect:
        expected = set(_expected_names(args.expect))
        got = {s.name for s, _ in found}
        report.check("ps_hollow.expected", expected == got,
                     "expected=" + ",".join(sorted(expected)),
                     "got=" + ",".join(sorted(got)))
    return report


def cmd_represent(module: FiniteModule, args) -> Report:
    report = Report(subject=module.describe())
    reps = ph.enumerate_minimal_representations(module, args.max_terms)
    report.add("representations.count", "pass", str(len(reps)))
    for i, rep in enumerate(reps):
        report.add(f"representation.{i}", "pass", rep.names(),
                   *(f"{p.submodule.name}:min={p.family_name}:hull={p.hull.name}"
                     for p in rep.profiles))
    if args.expect:
        expected = sorted(_expected_names(args.expect))
        ok = any(sorted(s.name for s in rep.summands) == expected for rep in reps)
        report.check("representation.expected", ok, *expected)
    return report


def cmd_minimize(module: FiniteModule, args) -> Report:
    if not args.summands:
        raise ValidationError("minimize needs --summands")
    summands = tuple(_parse_summand_token(module, tok)
                     for tok in args.summands.split(","))
    try:
        rep = ph.make_representation(module, summands)
    except (ValueError, ModuleError) as exc:
        raise ValidationError(str(exc)) from exc
    report = Report(subject=module.describe())
    report.add("minimize.input", "pass", rep.names())
    try:
        reduced = ph.minimize(rep)
    except ph.StepFailed as exc:
        report.add("minimize.step", "fail", exc.step, *exc.witnesses)
        return report
    report.add("minimize.result", "pass", reduced.names())
    report.check("minimize.minimal", reduced.minimal)
    return report


def cmd_verify(parsed, args) -> Report:
    if isinstance(parsed, FiniteModule):
        report = module_battery(parsed)
    else:
        _, action = parsed
        report = Report(subject=f"lattice size {action.lattice.size} "
                                f"poset size {action.poset.size}")
        lattice_battery(action, report)
    if args.claim:
        kept = [f for f in report.findings if f.claim.startswith(args.claim)]
        if not kept:
            raise ValidationError(f"no battery claim starts with {args.claim!r}")
        report.findings = kept
    return report


def cmd_hasse(parsed, args) -> Report:
    if isinstance(parsed, FiniteModule):
        subs = enumerate_submodules(parsed)
        lat, action = submodule_lattice(parsed)
        labels = [s.name for s in subs]
        subject = parsed.describe()
    else:
        lat, action = parsed
        labels = [str(i) for i in range(lat.size)]
        subject = f"lattice size {lat.size} poset size {action.poset.size}"
    highlights: dict[int, tuple[str, ...]] = {}
    if args.highlight:
        for kind in _expected_names(args.highlight):
            for i in spectra.spectrum(action, kind):
                highlights[i] = highlights.get(i, ()) + (kind,)
    dot = emit_dot(lat, labels, highlights)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(dot)
    else:
        sys.stdout.write(dot)
    report = Report(subject=subject)
    report.add("hasse.nodes", "pass", str(lat.size))
    report.add("hasse.edges", "pass", str(len(lat.covers())))
    return report


def run(args) -> tuple[Report, int]:
    bound = args.bound
    if bound is None:
        bound = int(os.environ.get(ORDER_BOUND_ENV, DEFAULT_ORDER_BOUND))
    parsed = parse_spec(args.input, bound=bound)
    if args.command == "submodules":
        report = cmd_submodules(_require_module(parsed, args.command), args)
    elif args.command == "spectra":
        report = cmd_spectra(parsed, args)
    elif args.command == "pshollow":
        report = cmd_pshollow(_require_module(parsed, args.command), args)
    elif args.command == "represent":
        report = cmd_represent(_require_module(parsed, args.command), args)
    elif args.command == "minimize":
        report = cmd_minimize(_require_module(parsed, args.command), args)
    elif args.command == "verify":
        report = cmd_verify(parsed, args)
    else:
        report = cmd_hasse(parsed, args)
    return report, report.exit_code()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hollowlat",
        description="Spectra and hollow representation analysis for finite "
                    "lattices with poset actions and modules over Z/nZ.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--in", dest="input", required=True, metavar="PATH",
                        help="module or lattice spec file")
    parser.add_argument("--max-terms", type=int, default=None,
                        help="cap on representation length (represent)")
    parser.add_argument("--bound", type=int, default=None,
                        help=f"module order bound (default {DEFAULT_ORDER_BOUND}, "
                             f"env {ORDER_BOUND_ENV})")
    parser.add_argument("--dot", metavar="PATH", help="write the Hasse diagram here")
    parser.add_argument("--report", metavar="PATH",
                        help="write the machine-readable report here")
    parser.add_argument("--kind", choices=spectra.KINDS, default=None,
                        help="restrict the spectra command to one kind")
    parser.add_argument("--highlight", default=None,
                        help="comma-separated kinds to mark in the Hasse diagram")
    parser.add_argument("--summands", default=None,
                        help="comma-separated summands for minimize, "
                             "e.g. \"(3),(4),(6)\" or \"1:0+0:1\"")
    parser.add_argument("--expect", default=None,
                        help="comma-separated expected names (pshollow, represent)")
    parser.add_argument("--claim", default=None,
                        help="keep only battery claims with this prefix (verify)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code = run(args)
    except (ParseError, ValidationError, ModuleError, LatticeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(report.render_text())
    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            handle.write(report.render_machine())
    return report.exit_code()


if __name__ == "__main__":
    raise SystemExit(main())
