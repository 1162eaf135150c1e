"""Command-line interface.

Usage::

    relchern <command> [--config FILE] [--class EXPR] [--format text|latex|json] [--trunc N]

Commands: ``push`` (pushforward of a class expression), ``qclass`` (the
multiplier class of a hypersurface), ``euler`` (Euler characteristic or its
symbolic top class), ``svw`` (all graded pieces of the pushed-down Chern
class), ``csm-check`` (stratified route versus pushforward route for the
Fermat-type family) and ``epoly`` (Euler characteristic of a smooth
hypersurface of the configured degree and fiber dimension).

The job is a JSON object (``--config FILE``, or ``-`` for stdin) with keys
``base``, ``bundle``, ``hypersurface``, ``command``, ``format``, ``class``,
``trunc`` and ``integrate``; command-line flags override config values.
Exit codes: 0 success, 2 parse or validation failure, 3 mode error (an
output mode the chosen base cannot provide).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bases import FormalBase, ModeError, ProjectiveSpaceBase
from .expressions import evaluate, parse_class_expr
from .fibration import (FermatFamily, HypersurfaceSpec, UnsupportedDegreeError,
                        euler_characteristic, q_class, relative_chern_class,
                        smooth_hypersurface_euler, svw_components)
from .pushforward import ProjClass, normalize_twist, pushforward_series
from .render import class_to_json, to_latex, to_text
from .ring import ChowError

COMMANDS = ("push", "euler", "svw", "qclass", "csm-check", "epoly")


class ValidationError(ChowError):
    """Malformed job configuration."""


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="relchern",
        description="exact pushforwards and Euler characteristics for "
                    "hypersurface fibrations in projective bundles")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--config", default=None,
                         help="JSON job file, or - for stdin")
        cmd.add_argument("--class", dest="class_expr", default=None,
                         help="class expression (push command)")
        cmd.add_argument("--format", choices=("text", "latex", "json"),
                         default=None)
        cmd.add_argument("--trunc", type=int, default=None,
                         help="override the truncation bound (base dimension)")
    return parser


def _require(condition, message):
    if not condition:
        raise ValidationError(message)


def _as_int(value, what, minimum=None):
    _require(isinstance(value, int) and not isinstance(value, bool),
             f"{what} must be an integer")
    if minimum is not None:
        _require(value >= minimum, f"{what} must be at least {minimum}")
    return value


def _load_config(args):
    if args.config is None:
        raw = {}
    elif args.config == "-":
        raw = json.load(sys.stdin)
    else:
        with open(args.config, "r", encoding="utf-8") as handle:
            raw = json.load(handle)
    _require(isinstance(raw, dict), "config must be a JSON object")
    if "command" in raw:
        _require(raw["command"] in COMMANDS,
                 f"config command {raw['command']!r} is not a command")
    fmt = args.format if args.format is not None else raw.get("format", "text")
    _require(fmt in ("text", "latex", "json"),
             "format must be text, latex or json")
    trunc = args.trunc if args.trunc is not None else raw.get("trunc")
    if trunc is not None:
        trunc = _as_int(trunc, "trunc", 0)
    class_expr = (args.class_expr if args.class_expr is not None
                  else raw.get("class"))
    return {
        "command": args.command,
        "format": fmt,
        "trunc": trunc,
        "class": class_expr,
        "integrate": bool(raw.get("integrate", False)),
        "base": raw.get("base"),
        "bundle": raw.get("bundle"),
        "hypersurface": raw.get("hypersurface"),
    }


def _build_base(cfg):
    desc = cfg["base"]
    _require(isinstance(desc, dict), "config key 'base' must be an object")
    dim = cfg["trunc"] if cfg["trunc"] is not None else desc.get("dim")
    dim = _as_int(dim, "base dimension", 0)
    kind = desc.get("kind")
    if kind == "formal":
        divisors = desc.get("divisors", ["L"])
        _require(isinstance(divisors, list) and
                 all(isinstance(d, str) for d in divisors),
                 "base.divisors must be a list of symbol names")
        _require("H" not in divisors, "the divisor name H is reserved")
        return FormalBase(dim, tuple(divisors), bool(desc.get("fano", False)))
    if kind == "projective":
        bind = desc.get("bind", {})
        _require(isinstance(bind, dict) and len(bind) <= 1,
                 "base.bind must map at most one divisor name to an integer")
        divisor, multiple = "L", None
        for name, value in bind.items():
            _require(name != "H", "the divisor name H is reserved")
            divisor, multiple = name, _as_int(value, f"binding of {name}")
        return ProjectiveSpaceBase(dim, multiple, divisor)
    raise ValidationError("base.kind must be 'formal' or 'projective'")


def _form(mapping, base):
    _require(isinstance(mapping, dict), "a linear form must be an object")
    ring = base.ring
    out = ring.zero
    for name, coeff in mapping.items():
        coeff = _as_int(coeff, f"coefficient of {name}")
        if name in ring._degrees:
            out = out + coeff * ring.sym(name)
        elif isinstance(base, ProjectiveSpaceBase) and name == base.divisor:
            out = out + coeff * base.divisor_class()
        else:
            raise ValidationError(f"unknown symbol {name!r} in a form")
    return out


def _build_roots(cfg, base):
    desc = cfg["bundle"]
    _require(isinstance(desc, dict) and isinstance(desc.get("roots"), list)
             and desc["roots"], "config key 'bundle' needs a nonempty 'roots' list")
    entries = []
    for item in desc["roots"]:
        _require(isinstance(item, dict) and "form" in item,
                 "each root is an object with a 'form'")
        mult = _as_int(item.get("mult", 1), "root multiplicity", 1)
        entries.append((_form(item["form"], base), mult))
    return entries


def _build_hypersurface(cfg, base, entries):
    desc = cfg["hypersurface"]
    _require(isinstance(desc, dict), "config key 'hypersurface' must be an object")
    degree = _as_int(desc.get("degree"), "hypersurface degree", 0)
    beta = _form(desc.get("beta", {}), base)
    return HypersurfaceSpec.from_roots(degree, beta, entries)


def _family_from(hyp, base):
    _require(isinstance(base, FormalBase),
             "csm-check needs a formal base (free Chern symbols)")
    roots = hyp.bundle.roots
    _require(len(roots) == 2 and roots[0][1] == 1,
             "csm-check needs a bundle of shape O + L^n")
    form, mult = roots[1]
    names = form.symbols_used()
    _require(len(names) == 1, "the twisting root must be a single divisor")
    name = names.pop()
    _require(form == base.ring.sym(name),
             "the twisting root must be a divisor with coefficient 1")
    _require(hyp.beta == hyp.degree * form,
             "the hypersurface class must be d*(H + L)")
    if hyp.degree < 2:
        raise UnsupportedDegreeError("csm-check needs degree at least 2")
    return FermatFamily(mult, hyp.degree, base.dim, name)


def _bound_output(base, cls):
    return base.apply_binding(cls) if isinstance(base, FormalBase) else cls


def _render_class(cls, fmt):
    if fmt == "latex":
        return to_latex(cls)
    return to_text(cls)


def _run(cfg):
    command = cfg["command"]
    fmt = cfg["format"]
    base = _build_base(cfg)
    doc = {"command": command}

    if command == "epoly":
        entries = _build_roots(cfg, base)
        hyp = _build_hypersurface(cfg, base, entries)
        value = smooth_hypersurface_euler(hyp.bundle.fiber_dim, hyp.degree)
        doc["result"] = {"value": str(value)}
        return doc, str(value)

    if command == "push":
        _require(isinstance(cfg["class"], str) and cfg["class"].strip(),
                 "push needs a class expression (--class or config 'class')")
        entries = _build_roots(cfg, base)
        m0 = entries[0][0]
        bundle, _ = normalize_twist(entries)
        env = {s.name: ProjClass.from_base(bundle, base.ring.sym(s.name))
               for s in base.ring.symbols}
        if (isinstance(base, ProjectiveSpaceBase) and base.multiple is not None
                and base.divisor not in env):
            env[base.divisor] = ProjClass.from_base(bundle, base.divisor_class())
        # the expression is written in the untwisted hyperplane class
        env["H"] = ProjClass.hyperplane(bundle) - ProjClass.from_base(bundle, m0)
        tree = parse_class_expr(cfg["class"])
        value = evaluate(tree, env, lambda v: ProjClass.constant(bundle, v))
        pushed = _bound_output(base, pushforward_series(value))
        doc["result"] = {"class": class_to_json(pushed)}
        return doc, _render_class(pushed, fmt)

    entries = _build_roots(cfg, base)
    hyp = _build_hypersurface(cfg, base, entries)

    if command == "qclass":
        out = _bound_output(base, q_class(hyp))
        doc["result"] = {"class": class_to_json(out)}
        return doc, _render_class(out, fmt)

    if command == "euler":
        value = euler_characteristic(hyp, base,
                                     as_integer=True if cfg["integrate"] else None)
        if isinstance(value, int):
            doc["result"] = {"euler_characteristic": str(value)}
            return doc, str(value)
        out = _bound_output(base, value)
        doc["result"] = {"class": class_to_json(out)}
        return doc, _render_class(out, fmt)

    if command == "svw":
        pieces = [_bound_output(base, c) for c in svw_components(hyp, base)]
        entries_json = []
        lines = []
        for j, piece in enumerate(pieces, start=1):
            parts = class_to_json(piece)
            entries_json.append(parts[0] if parts else {"codim": j, "terms": []})
            lines.append(f"codim {j}: {_render_class(piece, fmt)}")
        doc["result"] = {"components": entries_json}
        return doc, "\n".join(lines)

    if command == "csm-check":
        family = _family_from(hyp, base)
        left = family.chern_by_strata(base)
        right = relative_chern_class(family.hypersurface(base), base)
        equal = left == right
        doc["result"] = {"equal": equal}
        if equal:
            return doc, "EQUAL"
        shown = [_bound_output(base, c) for c in (left, right, left - right)]
        doc["result"].update({
            "stratified": class_to_json(shown[0]),
            "pushforward": class_to_json(shown[1]),
            "difference": class_to_json(shown[2]),
        })
        text = ("NOT EQUAL\n"
                f"stratified:  {_render_class(shown[0], fmt)}\n"
                f"pushforward: {_render_class(shown[1], fmt)}\n"
                f"difference:  {_render_class(shown[2], fmt)}")
        return doc, text

    raise ValidationError(f"unknown command {command!r}")


def _fail(fmt, exc, code):
    print(f"error: {exc}", file=sys.stderr)
    if fmt == "json":
        payload = {"error": {"exit_code": code, "type": type(exc).__name__,
                             "message": str(exc)}}
        print(json.dumps(payload, indent=2))
    return code


def main(argv=None):
    args = _build_parser().parse_args(argv)
    fmt = args.format or "text"
    try:
        cfg = _load_config(args)
        fmt = cfg["format"]
        doc, text = _run(cfg)
    except ModeError as exc:
        return _fail(fmt, exc, 3)
    except (ChowError, ValueError, OSError) as exc:
        return _fail(fmt, exc, 2)
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
