"""``finchar`` command line.

Exit status: 0 when the check holds or a witness was found, 1 when it
fails or no witness exists, and 2 on errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Sequence

from . import _bits, closures, dsl, gdc, maximality, partial_functions, zorn
from ._config import FincharError, universe_cap
from .fuzz import run_fuzz
from .model_core import ListPredicate, Subset, SubsetPredicate

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2
_EXIT = {"holds": EXIT_OK, "witness": EXIT_OK, "fails": EXIT_FAIL, "no-witness": EXIT_FAIL, "error": EXIT_ERROR}


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    status: str
    witness: Any = None
    counterexample: Any = None
    stats: dict[str, int] = field(default_factory=lambda: {"elapsed_ms": 0, "states": 0})
    seed: int | None = None

    @property
    def exit_code(self) -> int:
        return _EXIT[self.status]

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.status}"]
        for key in ("witness", "counterexample"):
            value = getattr(self, key)
            if value is None:
                continue
            if isinstance(value, list):
                lines.append(f"{key}:")
                lines.extend(f"  {v}" for v in value)
            elif isinstance(value, str) and "\n" in value:
                lines.append(f"{key}:")
                lines.extend(f"  {v}" for v in value.rstrip("\n").split("\n"))
            else:
                lines.append(f"{key}: {value}")
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        lines.append(f"states: {self.stats['states']}  elapsed: {self.stats['elapsed_ms']} ms")
        return "\n".join(lines)


class _Outcome:
    """What a subcommand handler hands back to ``run``."""

    def __init__(self, status: str, witness: Any = None, counterexample: Any = None, states: int = 0) -> None:
        self.status = status
        self.witness = witness
        self.counterexample = counterexample
        self.states = states


def _lists_literal(T: ListPredicate) -> str:
    return "{" + ", ".join(u.render() for u in T.members()) + "}"


def _as_subset_predicate(T: ListPredicate) -> SubsetPredicate:
    # a list predicate under set semantics names the finite subsets it admits
    return SubsetPredicate(T.universe, T.table)


def _pred(spec: dsl.ModelSpec, name: str) -> ListPredicate:
    return spec.get(name, ListPredicate)  # type: ignore[return-value]


# ---------------------------------------------------------------- handlers


def _fc_like(args, spec, decide: Callable, lift: Callable) -> _Outcome:
    T = _pred(spec, args.pred)
    P = _as_subset_predicate(T)
    ok, witness = decide(P)
    states = 1 << T.universe.size
    if ok:
        return _Outcome("holds", _lists_literal(witness), states=states)
    diff = P.table ^ lift(closures.restrict(P)).table
    first = Subset(P.universe, (diff & -diff).bit_length() - 1)
    return _Outcome("fails", counterexample=first.render(), states=states)


def cmd_check_fc(args, spec) -> _Outcome:
    return _fc_like(args, spec, closures.is_finite_character, closures.eng)


def cmd_check_open(args, spec) -> _Outcome:
    return _fc_like(args, spec, closures.is_open, closures.eng_exists)


def cmd_ttl(args, spec) -> _Outcome:
    T = _pred(spec, args.pred)
    states = 1 << T.universe.size
    w = maximality.ttl_witness(T)
    if w is None:
        return _Outcome("no-witness", counterexample="ε is not in the predicate", states=states)
    if args.enumerate:
        return _Outcome("witness", [a.render() for a in maximality.max_elements(closures.eng(T))], states=states)
    return _Outcome("witness", w.render(), states=states)


def cmd_principle(args, spec) -> _Outcome:
    T = _pred(spec, args.pred)
    holds = maximality.evaluate_principle(T, args.kind)
    return _Outcome("holds" if holds else "fails", states=1 << T.universe.size)


def cmd_zorn(args, spec) -> _Outcome:
    order = spec.get(args.order, zorn.OrderedModel)
    E = spec.get(args.set, Subset)
    M = order.with_carrier(E)  # type: ignore[union-attr]
    states = 1 << M.universe.size
    a = zorn.zorn_witness(M)
    if a is None:
        bounds = [M.down_set(x) for x in M.carrier]
        for F in _bits.submasks(M.carrier.mask):
            if M.is_chain_mask(F) and not any(F & ~d == 0 for d in bounds):
                return _Outcome("no-witness", counterexample=Subset(M.universe, F).render(), states=states)
    return _Outcome("witness", str(a), states=states)


def cmd_chains(args, spec) -> _Outcome:
    G = spec.get(args.grammar, zorn.ChainGrammar)
    problem = zorn.grammar_violation(G)  # type: ignore[arg-type]
    states = len(G.core)  # type: ignore[union-attr]
    if problem is not None:
        return _Outcome("fails", counterexample=problem, states=states)
    if args.to_order:
        M = zorn.order_of_grammar(G)  # type: ignore[arg-type]
        U = M.universe.name
        text = (
            f"order {args.grammar}_order on {U} = {{" + ", ".join(f"({a},{b})" for a, b in sorted(M.lt)) + "}\n"
            f"subset {args.grammar}_carrier of {U} = {M.carrier.render()}\n"
        )
        return _Outcome("witness", text, states=states)
    return _Outcome("holds", states=states)


def cmd_empcf(args, spec) -> _Outcome:
    T = _pred(spec, args.pred)
    f = partial_functions.empcf_witness(T)
    states = len(partial_functions.functional_masks(T.universe))
    if f is None:
        return _Outcome("no-witness", counterexample="ε is not in the predicate", states=states)
    return _Outcome("witness", f.render(), states=states)


def cmd_gdc(args, spec) -> _Outcome:
    T = _pred(spec, args.pred)
    lists, approximable = gdc.approximation(T)
    states = len(partial_functions.functional_masks(T.universe))
    if not approximable:
        return _Outcome("no-witness", counterexample="ε is not in the approximation", states=states)
    if args.approx_only:
        ordered = sorted(lists, key=lambda u: u.items)
        return _Outcome("witness", "{" + ", ".join(u.render() for u in ordered) + "}", states=states)
    f = gdc.choice_witness(T)
    return _Outcome("witness", f.render(), states=states)  # type: ignore[union-attr]


def cmd_align(args, spec) -> _Outcome:
    R = spec.get(args.rel, gdc.Relation)
    Ra = gdc.positive_alignment(R)  # type: ignore[arg-type]
    states = 1 << Ra.universe.size
    if args.prime_check:
        return _Outcome("holds" if gdc.is_downward_prime(Ra) else "fails", states=states)
    back = gdc.relation_of(Ra)
    if back == R:
        return _Outcome("holds", back.render(), states=states)
    return _Outcome("fails", counterexample=back.render(), states=states)


def cmd_lift(args, spec) -> _Outcome:
    T = _pred(spec, args.pred)
    lifted = gdc.lift_bottom(T)
    states = len(lifted.lists)
    if not T.member_mask(0):
        return _Outcome("no-witness", counterexample="ε is not in the predicate", states=states)
    f = gdc.lift_choice(T)
    if f is None:
        return _Outcome("no-witness", counterexample="lifted predicate is not approximable", states=states)
    return _Outcome("witness", f.render(), states=states)


# ------------------------------------------------------------------- parser


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # accepted before or after the subcommand; the subparser copy must not clobber the outer value
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json"), default=default("text"))
    parser.add_argument("--max-universe", type=int, default=default(None), metavar="K",
                        help="exhaustive cap (default: $FINCHAR_MAX_UNIVERSE or 16)")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    parser = argparse.ArgumentParser(
        prog="finchar", description="Finite-model checks for finite-character and choice principles."
    )
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    for name, handler, help_text in (
        ("check-fc", cmd_check_fc, "is the predicate of finite character"),
        ("check-open", cmd_check_open, "is the predicate open"),
    ):
        p = command(name, handler, help_text)
        p.add_argument("file")
        p.add_argument("--pred", required=True)

    p = command("ttl", cmd_ttl, "maximal element of eng(T)")
    p.add_argument("file")
    p.add_argument("--pred", required=True)
    p.add_argument("--enumerate", action="store_true", help="list every maximal element")

    p = command("principle", cmd_principle, "evaluate one maximality principle at T")
    p.add_argument("file")
    p.add_argument("--pred", required=True)
    p.add_argument("--kind", required=True, choices=[k.value for k in maximality.Principle])

    p = command("zorn", cmd_zorn, "maximal element of an inductive carrier")
    p.add_argument("file")
    p.add_argument("--order", required=True)
    p.add_argument("--set", required=True)

    p = command("chains", cmd_chains, "check a chain grammar or read its order")
    p.add_argument("file")
    p.add_argument("--grammar", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--to-order", action="store_true")
    mode.add_argument("--check", action="store_true")

    p = command("empcf", cmd_empcf, "maximal partial choice function")
    p.add_argument("file")
    p.add_argument("--pred", required=True)

    p = command("gdc", cmd_gdc, "approximation and total choice function")
    p.add_argument("file")
    p.add_argument("--pred", required=True)
    p.add_argument("--approx-only", action="store_true")

    p = command("align", cmd_align, "positive alignment round trip")
    p.add_argument("file")
    p.add_argument("--rel", required=True)
    p.add_argument("--prime-check", action="store_true")

    p = command("lift", cmd_lift, "maximal partial function through the bottom lifting")
    p.add_argument("file")
    p.add_argument("--pred", required=True)

    p = command("fuzz", None, "random invariant battery")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--iters", type=int, required=True)
    return parser


_ECHO_SKIP = {"handler", "command", "format", "max_universe"}


def _inputs(args: argparse.Namespace) -> dict[str, Any]:
    out = {k: v for k, v in vars(args).items() if k not in _ECHO_SKIP}
    out["max_universe"] = args.max_universe
    return out


def _execute(args: argparse.Namespace) -> Report:
    if args.command == "fuzz":
        result = run_fuzz(args.seed, args.size, args.iters)
        if result.ok:
            return Report("fuzz", _inputs(args), "holds", stats={"elapsed_ms": 0, "states": result.checks}, seed=args.seed)
        return Report("fuzz", _inputs(args), "fails", counterexample=result.reproduction,
                      stats={"elapsed_ms": 0, "states": result.checks}, seed=args.seed)
    spec = dsl.load(args.file)
    out = args.handler(args, spec)
    return Report(args.command, _inputs(args), out.status, out.witness, out.counterexample,
                  {"elapsed_ms": 0, "states": out.states})


def _run_args(args: argparse.Namespace) -> Report:
    start = time.perf_counter()
    try:
        if args.max_universe is not None:
            with universe_cap(args.max_universe):
                report = _execute(args)
        else:
            report = _execute(args)
    except (FincharError, KeyError, TypeError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        report = Report(args.command, _inputs(args), "error", counterexample=message)
    report.stats["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
    return report


def run(argv: Sequence[str] | None = None) -> tuple[int, Report]:
    """Parse ``argv`` and run one subcommand; usage errors raise ``SystemExit(2)``."""
    report = _run_args(_build_parser().parse_args(argv))
    return report.exit_code, report


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    report = _run_args(args)
    text = report.to_json() if args.format == "json" else report.to_text()
    print(text, file=sys.stderr if report.status == "error" else sys.stdout)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
