"""Command-line frontend: decompose, knit, dims, intersect, resolve,
presentation, and the paper-anchored verification suites.

Exit codes: 0 success, 1 domain/verification failure, 2 usage error.
JSON output is canonical (sorted keys, fixed separators) so that parsing
and re-serialising a result is byte-identical.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path as FsPath

from . import fixtures
from .dynkin import DynkinType, ExtDynkinType, parse_type
from .errors import DomainError
from .intersection import intersection_matrix, smooth_resolution
from .knitting import extract_maps, knit, render_pattern
from .pathalg import (MembershipCertificate, check_certificate, format_element,
                      graded_dims_pi, hom_matrix, verify_zero_product)
from .singularity import descriptor, q_lambda_decompose, translation_permutation
from .typea import presentation
from .weights import (Weight, classify_weight, format_field_elem,
                      format_weight, parse_weight)


def to_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _cert_record(cert: MembershipCertificate) -> dict:
    """Structured record: element and (coef, left, vertex, right) terms."""
    return {
        "element": format_element(cert.element),
        "weight": format_weight(cert.weight),
        "terms": [{"coef": format_field_elem(c), "left": str(u),
                   "vertex": v, "right": str(w)}
                  for c, u, v, w in cert.terms],
    }


def _require_extended(t) -> ExtDynkinType:
    if not isinstance(t, ExtDynkinType):
        raise DomainError(f"an extended type like ~{t} is required here")
    return t


def _weight_for(t: ExtDynkinType, text: str | None) -> Weight:
    if text is None:
        raise DomainError("--weights is required for this command")
    return parse_weight(text, t.n + 1)


# ---------------------------------------------------------------------------
# subcommands


def cmd_decompose(args) -> tuple[int, str]:
    t = _require_extended(parse_type(args.type))
    w = _weight_for(t, args.weights)
    wc = classify_weight(t, w)
    d = q_lambda_decompose(t, w)
    pi = translation_permutation(d).permutation.as_dict()
    data = {
        "type": str(t),
        "weights": format_weight(w),
        "class": {"commutative": wc.commutative, "quasi_dominant": wc.quasi_dominant,
                  "dominant": wc.dominant, "singular": wc.singular, "smooth": wc.smooth},
        "i_lambda": list(d.i_lambda),
        "components": [{"type": str(dt), "vertices": list(vs),
                        "canonical": {str(v): c for v, c in sorted(m.items())}}
                       for dt, vs, m in d.components],
        "descriptor": list(descriptor(d).types),
        "translation": {str(v): img for v, img in sorted(pi.items())},
    }
    if args.format == "json":
        return 0, to_json(data)
    lines = [f"type {t}  weights {format_weight(w)}",
             "class: " + ", ".join(k for k, v in data["class"].items() if v),
             f"I_lambda = {data['i_lambda']}"]
    for comp in data["components"]:
        lines.append(f"  component {comp['type']} on vertices {comp['vertices']}")
    lines.append("descriptor " + "[" + ",".join(data["descriptor"]) + "]")
    lines.append("translation " + " ".join(f"{v}->{img}" for v, img in sorted(pi.items())))
    return 0, "\n".join(lines)


def cmd_knit(args) -> tuple[int, str]:
    t = _require_extended(parse_type(args.type))
    s = frozenset(int(x) for x in args.S.split(","))
    r = knit(t, s, args.target)
    data = {
        "type": str(t),
        "S": sorted(s),
        "target": r.target,
        "kernel": r.kernel,
        "multiplicities": {str(j): a for j, a in sorted(r.multiplicities.items())},
        "pattern": [list(cell) for cell in r.pattern.sparse()],
    }
    extracted = None
    if args.maps:
        extracted = extract_maps(r)
        data["maps"] = {
            "resolved": extracted.resolved,
            "psi": [format_element(x) for x in extracted.psi] if extracted.resolved else None,
            "phi": [format_element(x) for x in extracted.phi] if extracted.resolved else None,
            "certificates": [_cert_record(c) for c in extracted.report.certificates]
                            if extracted.resolved and extracted.report else None,
        }
    if args.format == "json":
        return 0, to_json(data)
    lines = [f"type {t}  S {sorted(s)}  target {r.target}",
             f"kernel vertex {r.kernel}",
             "multiplicities " + " ".join(f"V{j}^{a}" for j, a in sorted(r.multiplicities.items()) if a)]
    if args.ascii:
        lines.append(render_pattern(r.pattern))
    if extracted is not None:
        if extracted.resolved:
            lines.append("psi: " + " | ".join(format_element(x) for x in extracted.psi))
            lines.append("phi: " + " | ".join(format_element(x) for x in extracted.phi))
        else:
            lines.append("maps unresolved within the search budget")
    return 0, "\n".join(lines)


def cmd_dims(args) -> tuple[int, str]:
    t = parse_type(args.type)
    if isinstance(t, ExtDynkinType):
        raise DomainError("dims expects a Dynkin type like D4 (no ~ prefix)")
    cache_file = None
    if args.cache_dir:
        key = hashlib.sha256(f"dims:v1:{t}".encode()).hexdigest()[:24]
        cache_file = FsPath(args.cache_dir) / f"{key}.json"
        if cache_file.exists():
            data = json.loads(cache_file.read_text())
            return 0, to_json(data) if args.format == "json" else _dims_text(t, data)
    dims, total = graded_dims_pi(t)
    h = hom_matrix(t)
    data = {"type": str(t), "graded_dims": list(dims), "total": total,
            "hom_matrix": [list(r) for r in h],
            "vertex_dims": [sum(r) for r in h]}
    if cache_file is not None:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        cache_file.write_text(to_json(data))
    if args.format == "json":
        return 0, to_json(data)
    return 0, _dims_text(t, data)


def _dims_text(t, data) -> str:
    lines = [f"dim Pi({t}) = {data['total']}",
             "graded dims " + " ".join(str(d) for d in data["graded_dims"]),
             "dim U_i     " + " ".join(str(d) for d in data["vertex_dims"]),
             "hom matrix:"]
    for row in data["hom_matrix"]:
        lines.append("  " + " ".join(f"{x:4d}" for x in row))
    return "\n".join(lines)


def cmd_intersect(args) -> tuple[int, str]:
    t = _require_extended(parse_type(args.type))
    g = intersection_matrix(t)
    data = {"type": str(t), "vertices": list(g.vertices),
            "gamma": [list(r) for r in g.entries]}
    if args.format == "json":
        return 0, to_json(data)
    lines = [f"intersection matrix of {t} on vertices {list(g.vertices)} (equals -C):"]
    for row in g.entries:
        lines.append("  " + " ".join(f"{x:3d}" for x in row))
    return 0, "\n".join(lines)


def cmd_resolve(args) -> tuple[int, str]:
    t = _require_extended(parse_type(args.type))
    res = smooth_resolution(t)
    data = {"type": str(t), "mu": format_weight(res.mu),
            "reflections": list(res.reflections),
            "gamma": [list(r) for r in res.gamma.entries]}
    if args.format == "json":
        return 0, to_json(data)
    return 0, (f"mu = {format_weight(res.mu)}\n"
               f"reflections (apply left to right from eps_0): {list(res.reflections)}\n"
               f"gamma = -C confirmed on vertices {list(res.gamma.vertices)}")


def cmd_presentation(args) -> tuple[int, str]:
    t = _require_extended(parse_type(args.type))
    if t.family != "A":
        raise DomainError("presentation is defined for type ~A only")
    w = _weight_for(t, args.weights)
    p = presentation(t.n, w)
    data = {"n": p.n, "shift": format_field_elem(p.shift),
            "xy": [format_field_elem(c) for c in p.xy],
            "yx": [format_field_elem(c) for c in p.yx]}
    if args.format == "json":
        return 0, to_json(data)
    return 0, "\n".join([
        f"xz = (z + {data['shift']}) x,  yz = (z - {data['shift']}) y",
        "xy coefficients (ascending): " + " ".join(data["xy"]),
        "yx coefficients (ascending): " + " ".join(data["yx"])])


# ---------------------------------------------------------------------------
# verification suites


def _suite_dims() -> list[tuple[str, bool, str]]:
    out = []
    for n in range(1, 9):
        t = DynkinType("A", n)
        dims, total = graded_dims_pi(t)
        h = hom_matrix(t)
        ok = (total == fixtures.dim_pi_total(t)
              and all(sum(h[i - 1]) == fixtures.dim_vertex_module(t, i)
                      for i in range(1, n + 1))
              and all(h[i - 1][j - 1] == fixtures.erdmann_a_entry(n, i, j)
                      for i in range(1, n + 1) for j in range(1, n + 1)))
        out.append((f"dims-A{n}", ok, f"total {total}"))
    for n in range(4, 9):
        t = DynkinType("D", n)
        _, total = graded_dims_pi(t)
        h = hom_matrix(t)
        ok = (total == fixtures.dim_pi_total(t)
              and all(sum(h[i - 1]) == fixtures.dim_vertex_module(t, i)
                      for i in range(1, n + 1)))
        out.append((f"dims-D{n}", ok, f"total {total}"))
    for n in (6, 7, 8):
        t = DynkinType("E", n)
        _, total = graded_dims_pi(t)
        h = hom_matrix(t)
        ok = total == fixtures.dim_pi_total(t) and h == fixtures.H_E[n]
        out.append((f"dims-E{n}", ok, f"total {total}"))
    return out


def _suite_knitting() -> list[tuple[str, bool, str]]:
    from collections import Counter
    out = []
    for f in fixtures.worked_example_fixtures() + fixtures.golden_knit_fixtures():
        try:
            r = knit(f.type, f.s_vertices, f.target)
            ok = (r.kernel == f.kernel
                  and Counter(r.middle_multiset()) == Counter(f.middle))
            msg = f"kernel {r.kernel} middle {list(r.middle_multiset())}"
        except DomainError as exc:
            ok, msg = False, str(exc)
        out.append((f"knit-{f.fixture_id}", ok, msg))
    return out


def _suite_maps(cap: int | None) -> list[tuple[str, bool, str]]:
    out = []
    for fx in fixtures.MAP_FIXTURES:
        psi, phi = fx.matrices()
        for label, w in (("zero", fx.zero_weight()), ("component", fx.component_weight())):
            rep = verify_zero_product(fx.type, w, psi, phi, degree_cap=cap)
            ok = rep.ok and all(check_certificate(fx.type, c) for c in rep.certificates)
            nterms = sum(len(c.terms) for c in rep.certificates) if rep.ok else 0
            out.append((f"maps-{fx.fixture_id}-{label}", ok,
                        f"{nterms} certificate terms" if ok else "no certificate"))
    return out


def _suite_intersection() -> list[tuple[str, bool, str]]:
    out = []
    types = ([ExtDynkinType("A", n) for n in range(2, 9)]
             + [ExtDynkinType("D", n) for n in range(4, 9)]
             + [ExtDynkinType("E", n) for n in (6, 7, 8)])
    for t in types:
        try:
            intersection_matrix(t)
            out.append((f"intersection-{str(t)[1:]}", True, "gamma = -C"))
        except Exception as exc:
            out.append((f"intersection-{str(t)[1:]}", False, str(exc)))
    return out


def cmd_verify(args) -> tuple[int, str]:
    suites = {"dims": lambda: _suite_dims(),
              "knitting": lambda: _suite_knitting(),
              "maps": lambda: _suite_maps(args.cap),
              "intersection": lambda: _suite_intersection()}
    scopes = list(suites) if args.suite == "all" else [args.suite]
    results: list[tuple[str, bool, str]] = []
    for scope in scopes:
        results.extend(suites[scope]())
    results.sort(key=lambda r: r[0])
    lines = [f"{'PASS' if ok else 'FAIL'} {fid}: {msg}" for fid, ok, msg in results]
    failures = sum(1 for _, ok, _ in results if not ok)
    lines.append(f"{len(results) - failures}/{len(results)} fixtures passed")
    if args.format == "json":
        data = {"results": [{"id": fid, "ok": ok, "detail": msg}
                            for fid, ok, msg in results],
                "passed": len(results) - failures, "failed": failures}
        return (0 if failures == 0 else 1), to_json(data)
    return (0 if failures == 0 else 1), "\n".join(lines)


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="preproj",
        description="Exact computation with deformed preprojective algebras "
                    "of extended Dynkin quivers.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, weights=False):
        p.add_argument("--type", required=True, help='e.g. "~D5" (extended) or "D5"')
        p.add_argument("--format", choices=("text", "json"), default="text")
        if weights:
            p.add_argument("--weights", help='comma-separated entries, e.g. "0,1/2,0,1"')

    p = sub.add_parser("decompose", help="Q_lambda components, descriptor, translation")
    common(p, weights=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("knit", help="run the knitting algorithm")
    common(p)
    p.add_argument("--S", required=True, help='comma-separated S vertices, e.g. "0,5"')
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--ascii", action="store_true", help="render the pattern grid")
    p.add_argument("--maps", action="store_true", help="extract and certify the maps")
    p.set_defaults(func=cmd_knit)

    p = sub.add_parser("dims", help="graded dimensions and Hom matrix of Pi(Q)")
    common(p)
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("intersect", help="noncommutative intersection matrix")
    common(p)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("resolve", help="reflection word to a smooth deformation")
    common(p)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("presentation", help="type-A generators and relations")
    common(p, weights=True)
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("verify", help="run the paper-anchored fixture suites")
    p.add_argument("--suite", choices=("dims", "knitting", "maps", "intersection", "all"),
                   default="all")
    p.add_argument("--cap", type=int, default=24, help="degree cap for map certificates")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized property runs")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return ap


def dispatch(argv: list[str]) -> tuple[int, str]:
    """Parse and run; returns (exit code, output)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (int(exc.code) if exc.code else 0), ""
    try:
        return args.func(args)
    except DomainError as exc:
        return 1, f"error: {exc}"


def main(argv: list[str] | None = None) -> int:
    code, output = dispatch(sys.argv[1:] if argv is None else argv)
    if output:
        print(output, file=sys.stderr if code == 1 and output.startswith("error:") else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
