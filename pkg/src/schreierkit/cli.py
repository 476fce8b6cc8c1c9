"""Command-line interface.

Exit codes: 0 success, 1 computation or input error, 2 usage error,
3 a ``verify`` check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field

from . import __version__
from .abelian import abelian_invariants
from .errors import InvalidArgument, SchreierError
from .graphs import structure_report
from .presentation import Presentation, twin_group
from .racg import RacgContext, is_identity, normal_form
from .rschreier import DEFAULT_MAX_INDEX, derived_subgroup_presentation
from .tietze import SimplificationBudget, simplify
from .twin import minimal_presentation, theorem1_presentation, verify_paper_claims
from .words import format_word, parse_word

EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_CLAIM = 0, 1, 2, 3

log = logging.getLogger("schreierkit")


@dataclass
class Config:
    max_index: int = DEFAULT_MAX_INDEX
    budget: SimplificationBudget = field(default_factory=SimplificationBudget)
    fmt: str = "json"

    def __post_init__(self):
        if self.max_index < 2:
            raise InvalidArgument("max_index must be >= 2")


def _read_presentation(path):
    if path in (None, "-"):
        text = sys.stdin.read()
        where = "<stdin>"
    else:
        with open(path) as fh:
            text = fh.read()
        where = path
    try:
        return Presentation.from_json(text)
    except SchreierError as exc:
        raise type(exc)(f"{where}: {exc}") from exc


def _write_presentation(p: Presentation, path):
    text = p.to_json() + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit(obj, cfg: Config, text: str):
    if cfg.fmt == "text":
        print(text)
    else:
        print(json.dumps(obj, indent=2))


def _cmd_twin(args, cfg):
    _write_presentation(twin_group(args.n), args.output)


def _cmd_theorem1(args, cfg):
    _write_presentation(theorem1_presentation(args.m), args.output)


def _cmd_minimal(args, cfg):
    _write_presentation(minimal_presentation(args.m), args.output)


def _cmd_derived(args, cfg):
    p = derived_subgroup_presentation(_read_presentation(args.input), max_index=cfg.max_index)
    if not args.raw:
        p = simplify(p, cfg.budget).presentation
    _write_presentation(p, args.output)


def _cmd_simplify(args, cfg):
    budget = SimplificationBudget(
        max_passes=cfg.budget.max_passes if args.max_passes is None else args.max_passes,
        max_relator_length=cfg.budget.max_relator_length if args.max_len is None else args.max_len,
    )
    res = simplify(_read_presentation(args.input), budget)
    if res.exhausted:
        log.warning("simplification budget exhausted; writing the current presentation")
    _write_presentation(res.presentation, args.output)


def _cmd_abelianize(args, cfg):
    inv = abelian_invariants(_read_presentation(args.input))
    _emit(inv.to_dict(), cfg, str(inv))


def _cmd_analyze(args, cfg):
    p = _read_presentation(args.input)
    if args.word is not None:
        ctx = RacgContext.from_presentation(p)
        names = p.generator_names
        w = parse_word(args.word, names)
        if any(abs(x) > len(names) for x in w):
            raise InvalidArgument(f"word uses a generator beyond {len(names)}")
        nf = normal_form(ctx, w)
        out = {
            "word": format_word(w, names),
            "normal_form": format_word(nf, names),
            "is_identity": is_identity(ctx, w),
        }
        _emit(out, cfg, f"{out['normal_form']}  identity={out['is_identity']}")
        return
    rep = structure_report(p)
    d = rep.to_dict()
    _emit(d, cfg, "\n".join(f"{k}: {v}" for k, v in d.items() if k != "notes"))


def _cmd_verify(args, cfg):
    rep = verify_paper_claims(args.m, cfg.budget)
    if args.json or cfg.fmt == "json":
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        for c in rep.checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name:40s} {c.detail}")
    return EXIT_OK if rep.passed else EXIT_CLAIM


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="schreierkit", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")
    ap.add_argument("--max-index", type=int, default=None, help="cap on coset count (env SCHREIERKIT_MAX_INDEX)")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("twin", help="twin group presentation")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--output", "-o")
    s.set_defaults(func=_cmd_twin)

    for name, func, helptext in (
        ("theorem1", _cmd_theorem1, "beta_p(j) presentation of the commutator subgroup of TW_{m+2}"),
        ("minimal", _cmd_minimal, "(2m-1)-generator presentation of the commutator subgroup of TW_{m+2}"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--m", type=int, required=True)
        s.add_argument("--output", "-o")
        s.set_defaults(func=func)

    s = sub.add_parser("derived", help="Reidemeister-Schreier presentation of the parity kernel")
    s.add_argument("--input", "-i")
    s.add_argument("--output", "-o")
    s.add_argument("--raw", action="store_true", help="skip Tietze simplification")
    s.set_defaults(func=_cmd_derived)

    s = sub.add_parser("simplify", help="Tietze simplification")
    s.add_argument("--input", "-i")
    s.add_argument("--output", "-o")
    s.add_argument("--max-passes", type=int)
    s.add_argument("--max-len", type=int)
    s.set_defaults(func=_cmd_simplify)

    s = sub.add_parser("abelianize", help="abelian invariants")
    s.add_argument("--input", "-i")
    s.set_defaults(func=_cmd_abelianize)

    s = sub.add_parser("analyze", help="chordality / hyperbolicity report, or word normal form")
    s.add_argument("--input", "-i")
    s.add_argument("--word", help='word such as "t1 t3" or "g1 g3^-1"; "1" is the identity')
    s.set_defaults(func=_cmd_analyze)

    s = sub.add_parser("verify", help="check the twin-group claims for TW_{m+2}")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_verify)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        max_index = args.max_index
        if max_index is None:
            max_index = int(os.environ.get("SCHREIERKIT_MAX_INDEX", DEFAULT_MAX_INDEX))
        cfg = Config(max_index=max_index, fmt=args.fmt)
        return args.func(args, cfg) or EXIT_OK
    except (SchreierError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(run())
