"""Command-line front end: JSON requests in, deterministic JSON or text out."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Optional

from .classgroup import canonical_form, group_structure, lattice_point, torsion_order
from .cohomology import betti, region
from .cover import (
    CoverSpec,
    connected_components,
    eigen_report,
    restrict_to,
    split_general,
)
from .errors import FakeQuadricError, SchemaError
from .fixtures import ANCHORS, run_fixtures
from .leyomdin import LYInput, build_surface, primitive_vertical
from .p1cover import P1Cover, alexander, components, cover_holomorphic_eigenvalues, eigen_dims, genus
from .surface import Divisor, FakeQuadric, genus_G

COMMANDS = ("classgroup", "cohomology", "cover", "p1cover", "leyomdin", "fixtures")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def to_plain(value: Any) -> Any:
    """Convert library values to JSON-ready data; rationals become ``"p/q"`` strings."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if hasattr(value, "to_json"):
        return to_plain(value.to_json())
    raise TypeError(f"cannot serialize {type(value).__name__}")


# --- payload parsing ---------------------------------------------------------


def _require(payload: dict, key: str, kind: type | tuple[type, ...]) -> Any:
    if key not in payload:
        raise SchemaError(f"missing field {key!r}")
    value = payload[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise SchemaError(f"field {key!r} has the wrong type")
    return value


def _surface(payload: dict) -> FakeQuadric:
    pairs = _require(payload, "pairs", list)
    try:
        parsed = tuple((int(d), int(q)) for d, q in pairs)
    except (TypeError, ValueError) as exc:
        raise SchemaError("pairs must be a list of [d, q] integer pairs") from exc
    return FakeQuadric(parsed, allow_smooth=bool(payload.get("allow_smooth", False)))


def _divisor(payload: dict, key: str, default: Optional[dict] = None) -> Divisor:
    raw = payload.get(key, default)
    if raw is None:
        raise SchemaError(f"missing field {key!r}")
    if not isinstance(raw, dict) or not all(isinstance(v, int) and not isinstance(v, bool) for v in raw.values()):
        raise SchemaError(f"field {key!r} must map curve names to integers")
    return Divisor.from_json(raw)


def _cmd_classgroup(payload: dict) -> dict:
    S = _surface(payload)
    out = to_plain(group_structure(S))
    if "divisor" in payload:
        D = _divisor(payload, "divisor")
        lp = lattice_point(S, D)
        out["canonical"] = to_plain(canonical_form(S, D))
        out["lattice_point"] = {"phi": str(lp.phi), "c": lp.c}
        out["torsion_order"] = torsion_order(S, D)
    if payload.get("details"):
        out.update({"alpha": S.alpha, "kappa": S.kappa, "chi_orb": str(S.chi_orb), "genus_G": genus_G(S)})
    return out


def _cmd_cohomology(payload: dict) -> dict:
    S = _surface(payload)
    D = _divisor(payload, "divisor")
    out = to_plain(betti(S, D))
    if payload.get("details"):
        out["region"] = region(S, D).value
        out["canonical"] = to_plain(canonical_form(S, D))
    return out


def _cover_spec(payload: dict) -> CoverSpec:
    S = _surface(payload)
    d = _require(payload, "d", int)
    return CoverSpec(
        S,
        d,
        _divisor(payload, "D"),
        _divisor(payload, "H", {}),
        bool(payload.get("qnc_asserted", True)),
    )


def _cmd_cover(payload: dict) -> dict:
    spec = _cover_spec(payload)
    out: dict = {
        "eigen": to_plain(eigen_report(spec)),
        "components": connected_components(spec),
        "split": to_plain(split_general(spec)),
    }
    restrictions = payload.get("restrict", [])
    if not isinstance(restrictions, list):
        raise SchemaError("field 'restrict' must be a list of curve names")
    out["restrictions"] = {str(name): _p1_summary(restrict_to(spec, name)) for name in restrictions}
    return out


def _p1_summary(cov: P1Cover) -> dict:
    out = {
        "cover": to_plain(cov),
        "components": components(cov),
        "dims": eigen_dims(cov),
        "genus": genus(cov),
        "holomorphic_eigenvalues": to_plain(cover_holomorphic_eigenvalues(cov)),
    }
    if cov.branch:
        poly = alexander(cov)
        out["charpoly"] = to_plain(poly)["factors"]
        out["cyclotomic"] = to_plain(poly)["cyclotomic"]
        out["coefficients"] = poly.coefficients()
    return out


def _cmd_p1cover(payload: dict) -> dict:
    d = _require(payload, "d", int)
    if "branch" in payload:
        branch = _require(payload, "branch", list)
        try:
            cov = P1Cover(d, tuple((b["label"], int(b["m"])) for b in branch))
        except (KeyError, TypeError) as exc:
            raise SchemaError("branch entries need 'label' and 'm'") from exc
    else:
        mults = _require(payload, "mults", list)
        if not all(isinstance(m, int) and not isinstance(m, bool) for m in mults):
            raise SchemaError("mults must be integers")
        cov = P1Cover.from_mults(d, mults)
    return _p1_summary(cov)


def _cmd_leyomdin(payload: dict) -> dict:
    try:
        inp = LYInput.from_json(payload)
    except TypeError as exc:
        raise SchemaError(str(exc)) from exc
    out = to_plain(build_surface(inp))
    out["primitive_vertical"] = _p1_summary(primitive_vertical(inp))
    return out


HANDLERS: dict[str, Callable[[dict], dict]] = {
    "classgroup": _cmd_classgroup,
    "cohomology": _cmd_cohomology,
    "cover": _cmd_cover,
    "p1cover": _cmd_p1cover,
    "leyomdin": _cmd_leyomdin,
}


def _error(code: str, message: str) -> dict:
    return {"status": "error", "result": {"code": code, "message": message}, "diagnostics": [f"{code}: {message}"]}


def run(command: str, payload: Any) -> dict:
    """Route one request; batch payloads (JSON lists) produce a list of responses."""
    if isinstance(payload, list):
        items = [run(command, p) for p in payload]
        ok = all(item["status"] == "ok" for item in items)
        return {"status": "ok" if ok else "error", "result": items, "diagnostics": []}
    if command == "fixtures":
        return run_fixture_request(payload if isinstance(payload, dict) else {})
    if not isinstance(payload, dict):
        return _error(SchemaError.code, "payload must be a JSON object")
    try:
        result = HANDLERS[command](payload)
    except FakeQuadricError as exc:
        return _error(exc.code, str(exc))
    return {"status": "ok", "result": result, "diagnostics": []}


def run_fixture_request(payload: dict) -> dict:
    anchor = payload.get("anchor")
    if anchor is not None and anchor not in ANCHORS:
        available = ", ".join(ANCHORS)
        return _error("UnknownAnchor", f"unknown anchor {anchor!r}; available: {available}")
    checks = run_fixtures(anchor)
    failed = [c for c in checks if not c.passed]
    diagnostics = [f"FAIL {c.anchor}: {c.name} expected {c.expected!r} got {c.actual!r}" for c in failed]
    result = {
        "checks": [to_plain(c) for c in checks],
        "passed": len(checks) - len(failed),
        "failed": len(failed),
    }
    return {"status": "ok" if not failed else "error", "result": result, "diagnostics": diagnostics}


# --- rendering --------------------------------------------------------------


def render_json(response: dict) -> str:
    return json.dumps(response, sort_keys=True, indent=2)


def _text_lines(value: Any, prefix: str) -> list[str]:
    if isinstance(value, dict):
        if not value:
            return [f"{prefix}: {{}}"]
        lines = []
        for key in sorted(value):
            lines.extend(_text_lines(value[key], f"{prefix}.{key}" if prefix else str(key)))
        return lines
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        lines = []
        for i, item in enumerate(value):
            lines.extend(_text_lines(item, f"{prefix}[{i}]"))
        return lines or [f"{prefix}: []"]
    return [f"{prefix}: {json.dumps(value, sort_keys=True)}"]


def render_text(response: dict) -> str:
    lines = [f"status: {response['status']}"]
    lines.extend(_text_lines(response["result"], "result"))
    lines.extend(f"diagnostic: {d}" for d in response["diagnostics"])
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fakequadric",
        description="Cohomology of Weil divisors and cyclic covers of reducible normal fake quadrics.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", metavar="PATH", help="JSON request file (default: standard input)")
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--anchor", help="fixtures only: replay a single anchor")
    return parser


def _read_payload(args: argparse.Namespace) -> Any:
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    elif args.command == "fixtures":
        # fixture replay needs no request; never block on an open stdin
        text = ""
    else:
        text = sys.stdin.read()
    if not text.strip():
        if args.command == "fixtures":
            return {}
        raise SchemaError("empty request")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = _read_payload(args)
    except (SchemaError, OSError) as exc:
        code = exc.code if isinstance(exc, SchemaError) else "IOError"
        response = _error(code, str(exc))
        print(render_json(response) if args.format == "json" else render_text(response))
        return EXIT_USAGE
    if args.command == "fixtures" and args.anchor:
        payload = {**(payload if isinstance(payload, dict) else {}), "anchor": args.anchor}
    response = run(args.command, payload)
    print(render_json(response) if args.format == "json" else render_text(response))
    return EXIT_OK if response["status"] == "ok" else EXIT_FAILED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
