"""Command line surface.

Objects are written as `f<i>` with an optional shift prefix `s<k>:`
(`s-1:f4` is the vertex one period to the left of f4); the raw position
form `p<int>` is also accepted.  Output is canonical one-line JSON by
default, `--format text` for a human rendering, and `--format dot` on the
`quiver` subcommand.  Domain errors exit 1 with an error document on
stderr; usage and configuration errors exit 2.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from . import artheory, verify, wide
from .angles import (
    Angle,
    FLevelChain,
    check_hom_exactness,
    d_cokernel,
    d_exact_seq,
    d_kernel,
    min_angle,
)
from .core import (
    BadDistance,
    DomainError,
    FamilyParams,
    Morphism,
    SumObject,
    basis_mor,
    compose,
    hom_dim,
    indec,
    join_pos,
    pos_label,
    shift_obj,
    split_pos,
    validate_params,
)

_OBJ_RE = re.compile(r"^(?:s(-?\d+):)?f(\d+)$")
_POS_RE = re.compile(r"^p(-?\d+)$")


def parse_object(params: FamilyParams, text: str) -> int:
    """Position of a vertex written as f<i>, s<k>:f<i> or p<pos>."""
    m = _OBJ_RE.match(text)
    if m:
        shift = int(m.group(1)) if m.group(1) else 0
        index = int(m.group(2))
        if not 1 <= index <= params.period:
            raise BadDistance(
                f"index {index} outside [1, {params.period}] in {text!r}"
            )
        return join_pos(params, shift, index)
    m = _POS_RE.match(text)
    if m:
        return int(m.group(1))
    raise UsageError(f"cannot parse object {text!r} (want f4, s-1:f4 or p-8)")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# document builders (canonical field order keeps JSON round-trips byte equal)
# ---------------------------------------------------------------------------

def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_frac(text: str) -> Fraction:
    return Fraction(text)


def params_doc(params: FamilyParams) -> dict:
    return {"d": params.d, "l": params.l, "m": params.m, "period": params.period}


def obj_doc(params: FamilyParams, obj: SumObject) -> list:
    out = []
    for pos in obj.summands:
        s, i = split_pos(params, pos)
        out.append({"shift": s, "index": i})
    return out


def mor_doc(params: FamilyParams, mor: Morphism) -> dict:
    return {
        "source": obj_doc(params, mor.source),
        "target": obj_doc(params, mor.target),
        "entries": [[frac_str(e) for e in row] for row in mor.entries],
    }


def angle_doc(a: Angle) -> dict:
    return {
        "params": params_doc(a.params),
        "objects": [obj_doc(a.params, o) for o in a.objects],
        "maps": [{"entries": [[frac_str(e) for e in row] for row in m.entries]}
                 for m in a.maps],
    }


def doc_to_angle(doc: dict) -> Angle:
    """Inverse of `angle_doc`; validates the angle on reconstruction."""
    p = validate_params(doc["params"]["d"], doc["params"]["l"], doc["params"]["m"])
    objects = [
        SumObject(tuple(join_pos(p, s["shift"], s["index"]) for s in o))
        for o in doc["objects"]
    ]
    targets = objects[1:] + [shift_obj(p, objects[0], 1)]
    maps = []
    for k, mdoc in enumerate(doc["maps"]):
        ents = tuple(tuple(parse_frac(e) for e in row) for row in mdoc["entries"])
        maps.append(Morphism(p, objects[k], targets[k], ents))
    return Angle(p, tuple(objects), tuple(maps))


def chain_doc(chain: FLevelChain) -> dict:
    return {
        "params": params_doc(chain.params),
        "kind": chain.kind,
        "objects": [obj_doc(chain.params, o) for o in chain.objects],
        "maps": [{"entries": [[frac_str(e) for e in row] for row in m.entries]}
                 for m in chain.maps],
    }


# ---------------------------------------------------------------------------
# text renderings
# ---------------------------------------------------------------------------

def obj_text(params: FamilyParams, obj: SumObject) -> str:
    if obj.is_zero:
        return "0"
    return "+".join(pos_label(params, pos) for pos in obj.summands)


def angle_text(a: Angle) -> str:
    names = [obj_text(a.params, o) for o in a.objects]
    names.append(obj_text(a.params, shift_obj(a.params, a.objects[0], 1)))
    return " -> ".join(names)


def chain_text(chain: FLevelChain) -> str:
    return " -> ".join(obj_text(chain.params, o) for o in chain.objects)


def quiver_dot(params: FamilyParams, lo: int, hi: int, spec=None) -> str:
    lines = ["digraph quiver {", "  rankdir=LR;"]
    for pos in range(lo, hi + 1):
        s, i = split_pos(params, pos)
        name = f"s{s}_f{i}"
        attrs = f' [label="{pos_label(params, pos)}"'
        if spec is not None and spec.contains_pos(pos):
            attrs += ", style=filled"
        attrs += "];"
        lines.append(f"  {name}{attrs}")
    for pos in range(lo, hi):
        s, i = split_pos(params, pos)
        s2, i2 = split_pos(params, pos + 1)
        lines.append(f"  s{s}_f{i} -> s{s2}_f{i2};")
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

def _read_config(path: str) -> dict:
    out = {}
    try:
        with open(path) as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise UsageError(f"bad config line {line!r} (want key=value)")
                key, value = (part.strip() for part in line.split("=", 1))
                out[key] = value
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}")
    for key in out:
        if key not in {"d", "l", "m", "format", "sub"}:
            raise UsageError(f"unknown config key {key!r}")
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="angulated",
        description="Calculator for the higher-angulated categories of "
        "truncated linear Nakayama algebras.",
    )
    parser.add_argument("--d", type=int, default=None)
    parser.add_argument("--l", type=int, default=None)
    parser.add_argument("--m", type=int, default=None)
    parser.add_argument("--config", default=None, help="key=value file with the same keys as the flags")
    parser.add_argument("--format", choices=["text", "json", "dot"], default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("params")
    p = sub.add_parser("hom")
    p.add_argument("x")
    p.add_argument("y")
    p = sub.add_parser("compose")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("z")
    p = sub.add_parser("angle")
    p.add_argument("x")
    p.add_argument("y")
    for name in ("dkernel", "dcokernel", "dexact"):
        p = sub.add_parser(name)
        p.add_argument("i", type=int)
        p.add_argument("j", type=int)
    p = sub.add_parser("ar")
    p.add_argument("x")
    p.add_argument("--sub", default=None)
    p = sub.add_parser("cover")
    p.add_argument("x")
    p.add_argument("--sub", required=True)
    p = sub.add_parser("wide")
    p.add_argument("action", choices=["list", "check"])
    p.add_argument("spec", nargs="?", default=None)
    p = sub.add_parser("verify")
    p.add_argument("target", choices=sorted(verify.SUITES))
    p = sub.add_parser("quiver")
    p.add_argument("--from", dest="lo", default=None)
    p.add_argument("--to", dest="hi", default=None)
    p.add_argument("--sub", default=None)
    return parser


def _parse_sub(params: FamilyParams, text: str) -> wide.SubcatSpec:
    if text.strip() == "":
        return wide.empty_spec(params)
    try:
        indices = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse subcategory spec {text!r}")
    try:
        return wide.SubcatSpec(params, indices)
    except ValueError as exc:
        raise UsageError(str(exc))


def _emit(doc: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc))
    else:
        print(text)


def _run(args) -> int:
    config = _read_config(args.config) if args.config else {}

    def setting(name, flag):
        if flag is not None:
            return flag
        if name in config:
            if name in {"d", "l", "m"}:
                try:
                    return int(config[name])
                except ValueError:
                    raise UsageError(f"config key {name} must be an integer")
            return config[name]
        return None

    d, l, m = setting("d", args.d), setting("l", args.l), setting("m", args.m)
    fmt = setting("format", args.format) or "json"
    if fmt not in {"text", "json", "dot"}:
        raise UsageError(f"unknown format {fmt!r}")
    if fmt == "dot" and args.command != "quiver":
        raise UsageError("dot output is only available for the quiver command")
    if d is None or l is None or m is None:
        raise UsageError("parameters --d, --l, --m are required (flags or config)")
    params = validate_params(d, l, m)

    cmd = args.command
    if cmd == "params":
        _emit(
            params_doc(params),
            f"d={params.d} l={params.l} m={params.m} period={params.period}",
            fmt,
        )
        return 0

    if cmd == "hom":
        x = parse_object(params, args.x)
        y = parse_object(params, args.y)
        dim = hom_dim(params, x, y)
        doc = {
            "params": params_doc(params),
            "source": obj_doc(params, indec(x)),
            "target": obj_doc(params, indec(y)),
            "dim": dim,
        }
        _emit(doc, f"dim Hom({args.x} -> {args.y}) = {dim}", fmt)
        return 0

    if cmd == "compose":
        x = parse_object(params, args.x)
        y = parse_object(params, args.y)
        z = parse_object(params, args.z)
        out = compose(basis_mor(params, y, z), basis_mor(params, x, y))
        doc = {"params": params_doc(params), **mor_doc(params, out)}
        entry = out.entries[0][0]
        _emit(
            doc,
            f"u({args.y} -> {args.z}) o u({args.x} -> {args.y}) = "
            + (f"{frac_str(entry)} * u({args.x} -> {args.z})" if entry else "0"),
            fmt,
        )
        return 0

    if cmd == "angle":
        x = parse_object(params, args.x)
        y = parse_object(params, args.y)
        a = min_angle(basis_mor(params, x, y))
        _emit(angle_doc(a), angle_text(a), fmt)
        return 0

    if cmd in {"dkernel", "dcokernel", "dexact"}:
        builder = {"dkernel": d_kernel, "dcokernel": d_cokernel, "dexact": d_exact_seq}
        chain = builder[cmd](params, args.i, args.j)
        _emit(chain_doc(chain), chain_text(chain), fmt)
        return 0

    if cmd == "ar":
        x = parse_object(params, args.x)
        if args.sub is None:
            a = artheory.ar_angle(params, x)
        else:
            a = artheory.ar_angle_in(_parse_sub(params, args.sub), x)
        _emit(angle_doc(a), angle_text(a), fmt)
        return 0

    if cmd == "cover":
        x = parse_object(params, args.x)
        spec = _parse_sub(params, args.sub)
        result = artheory.cover(spec, x)
        doc = {
            "params": params_doc(params),
            "sub": list(spec.indices),
            "source": obj_doc(params, result.source),
            "morphism": mor_doc(params, result.mor),
        }
        _emit(
            doc,
            f"cover of {args.x}: {obj_text(params, result.source)} -> "
            f"{obj_text(params, result.mor.target)}",
            fmt,
        )
        return 0

    if cmd == "wide":
        if args.action == "list":
            specs = wide.enumerate_wide(params)
            doc = {
                "params": params_doc(params),
                "count": len(specs),
                "specs": [list(s.indices) for s in specs],
            }
            _emit(doc, "\n".join(str(list(s.indices)) for s in specs), fmt)
            return 0
        if args.spec is None:
            raise UsageError("wide check needs a spec argument")
        spec = _parse_sub(params, args.spec)
        semis = wide.is_semisimple_wide(spec)
        periodic = wide.is_l_periodic(spec)
        classified = wide.is_wide(spec)
        oracle = wide.is_wide_oracle(spec)
        doc = {
            "params": params_doc(params),
            "indices": list(spec.indices),
            "semisimple": semis,
            "periodic": periodic,
            "wide": classified,
            "oracle": oracle,
            "agree": classified == oracle,
        }
        _emit(
            doc,
            f"{list(spec.indices)}: wide={classified} "
            f"(semisimple={semis}, periodic={periodic}, oracle={oracle})",
            fmt,
        )
        return 0

    if cmd == "verify":
        checks = verify.SUITES[args.target](params)
        ok = all(c.ok for c in checks)
        doc = {
            "params": params_doc(params),
            "target": args.target,
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks
            ],
            "ok": ok,
        }
        text = "\n".join(
            f"[{'PASS' if c.ok else 'FAIL'}] {c.name}" for c in checks
        ) + f"\noverall: {'PASS' if ok else 'FAIL'}"
        _emit(doc, text, fmt)
        return 0 if ok else 1

    if cmd == "quiver":
        lo = parse_object(params, args.lo) if args.lo else 1
        hi = parse_object(params, args.hi) if args.hi else params.period
        if hi < lo:
            raise UsageError("--to must not precede --from")
        spec = _parse_sub(params, args.sub) if args.sub else None
        if fmt == "dot":
            print(quiver_dot(params, lo, hi, spec))
            return 0
        doc = {
            "params": params_doc(params),
            "window": [lo, hi],
            "nodes": obj_doc(params, SumObject(tuple(range(lo, hi + 1)))),
            "members": [
                pos for pos in range(lo, hi + 1)
                if spec is not None and spec.contains_pos(pos)
            ],
        }
        _emit(
            doc,
            " -> ".join(pos_label(params, q) for q in range(lo, hi + 1)),
            fmt,
        )
        return 0

    raise UsageError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        doc = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(doc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
