"""Command line surface: jacobi-spectra <jost|spectrum|region|verify> [flags]."""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import verify as verify_mod
from .jost import jost_function
from .operator_core import ComplexJacobiOperator, build_operator, InvalidOperatorError
from .regions import region_grid, region_report
from .spectrum import reconcile

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_SCHEMA = 2
EXIT_IO = 3


class SpecFileError(ValueError):
    """Operator spec file violates the JSON schema."""


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_complex(z) -> str:
    z = complex(z)
    return f"{_fmt(z.real)}{'+' if z.imag >= 0 else '-'}{_fmt(abs(z.imag))}j"


def load_operator_spec(path) -> tuple:
    """Parse an operator spec file; returns (operator, name)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise SpecFileError("spec document must be a JSON object")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise SpecFileError("key 'name' must be a string")
    unknown = set(doc) - {"a", "b", "c", "name"}
    if unknown:
        raise SpecFileError(f"unknown keys {sorted(unknown)} in spec document")
    lists = {}
    for key in ("a", "b", "c"):
        entries = doc.get(key, [])
        if not isinstance(entries, list):
            raise SpecFileError(f"key '{key}' must be a list of records")
        pairs = []
        for rec in entries:
            if not isinstance(rec, dict) or set(rec) - {"n", "re", "im"} or "n" not in rec:
                raise SpecFileError(f"key '{key}': records need fields n, re, im")
            n = rec["n"]
            if not isinstance(n, int) or n < 1:
                raise SpecFileError(f"key '{key}': index n must be an integer >= 1")
            try:
                value = complex(float(rec.get("re", 0.0)), float(rec.get("im", 0.0)))
            except (TypeError, ValueError) as exc:
                raise SpecFileError(f"key '{key}': re/im must be numbers") from exc
            pairs.append((n, value))
        lists[key] = pairs
    try:
        op = build_operator(lists["a"], lists["b"], lists["c"])
    except InvalidOperatorError as exc:
        raise SpecFileError(str(exc)) from exc
    return op, name


def dump_operator_spec(op: ComplexJacobiOperator, name: str = "") -> dict:
    doc = {}
    if name:
        doc["name"] = name
    for key, entries in (("a", op.a_entries), ("b", op.b_entries), ("c", op.c_entries)):
        if entries:
            doc[key] = [
                {"n": n, "re": v.real, "im": v.imag} for n, v in sorted(entries.items())
            ]
    return doc


def _parse_grid_flag(flag: str):
    parts = flag.split(":")
    if len(parts) != 5:
        raise SpecFileError("--grid expects RE0:RE1:IM0:IM1:RES")
    try:
        re0, re1, im0, im1 = map(float, parts[:4])
        res = int(parts[4])
    except ValueError as exc:
        raise SpecFileError("--grid expects numeric RE0:RE1:IM0:IM1:RES") from exc
    if res < 2:
        raise SpecFileError("--grid resolution must be >= 2")
    return re0, re1, im0, im1, res


def _out_path(args, filename: str) -> str:
    out_dir = args.out or "."
    os.makedirs(out_dir, exist_ok=True)
    return os.path.join(out_dir, filename)


def cmd_jost(args) -> int:
    op, name = load_operator_spec(args.spec)
    poly = jost_function(op)
    print(f"operator: {name or args.spec}")
    print(f"support bound M = {op.support_bound}")
    print(f"jost polynomial degree = {poly.degree}")
    print("coefficients (lowest degree first):")
    for k, c in enumerate(poly.coeffs):
        print(f"  z^{k}: {_fmt_complex(c)}")
    if args.grid:
        re0, re1, im0, im1, res = _parse_grid_flag(args.grid)
        path = _out_path(args, "jost_grid.csv")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("re,im,abs_v0\n")
            for j in range(res):
                im = im0 + (im1 - im0) * j / (res - 1)
                for i in range(res):
                    re = re0 + (re1 - re0) * i / (res - 1)
                    val = abs(poly(complex(re, im)))
                    fh.write(f"{_fmt(re)},{_fmt(im)},{_fmt(val)}\n")
        print(f"grid written to {path}")
    return EXIT_OK


def cmd_spectrum(args) -> int:
    op, name = load_operator_spec(args.spec)
    result = reconcile(op, N=args.n, band_margin=args.band_margin, match_tol=args.match_tol)
    print(f"operator: {name or args.spec}")
    if not result.eigenvalues_from_zeros:
        print("no discrete spectrum")
    else:
        print("discrete spectrum (lambda = z + 1/z over jost zeros):")
        from .spectrum import discrete_spectrum

        for ev in discrete_spectrum(op):
            print(f"  lambda = {_fmt_complex(ev.lam)}  z = {_fmt_complex(ev.z)}"
                  f"  multiplicity = {ev.multiplicity}")
    print(f"oracle: N = {args.n}, {len(result.oracle_eigenvalues)} eigenvalues, "
          f"{result.band_artifact_count} classified as band artifacts")
    for lam, oracle_lam, dist in result.matches:
        print(f"  matched {_fmt_complex(lam)} <-> {_fmt_complex(oracle_lam)} (distance {_fmt(dist)})")
    for lam, dist in result.near_boundary:
        print(f"  near-boundary {_fmt_complex(lam)} (oracle distance {_fmt(dist)}), not counted")
    for lam, dist in result.failures:
        print(f"  MISMATCH {_fmt_complex(lam)} (oracle distance {_fmt(dist)})")
    return EXIT_OK if result.ok else EXIT_MISMATCH


def _svg_map(lam, width=800.0, height=400.0):
    # fixed viewBox mapping lambda in [-4, 4] x [-2, 2]
    x = (lam.real + 4.0) / 8.0 * width
    y = (2.0 - lam.imag) / 4.0 * height
    return x, y


def write_region_svg(op, path, eigenvalues=()):
    from .regions import omega_constant, spectral_rectangles, sigma0

    t = omega_constant()
    thr = 2.0 * sigma0(op, 0) / t
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'viewBox="0 0 800 400" width="800" height="400">',
        '<rect x="0" y="0" width="800" height="400" fill="white"/>',
    ]
    x0, y0 = _svg_map(complex(-2, 0))
    x1, y1 = _svg_map(complex(2, 0))
    parts.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}" '
                 'stroke="black" stroke-width="3"/>')
    if thr > 0:
        # boundary of the spectrum-free image: lambda^2 = 4 + thr^2 e^{2 i theta}
        pts = []
        for k in range(241):
            theta = 2.0 * np.pi * k / 240
            w = np.sqrt(4.0 + (thr ** 2) * np.exp(2j * theta))
            pts.append(_svg_map(complex(w)))
        for sign in (1.0, -1.0):
            d = "M " + " L ".join(f"{sign * (x - 400) + 400:.2f} {y:.2f}" for x, y in pts)
            parts.append(f'<path d="{d}" fill="none" stroke="blue" stroke-width="1"/>')
    rect = spectral_rectangles(op, t)
    if rect is not None:
        for sign in (1.0, -1.0):
            xa, ya = _svg_map(complex(sign * rect.re_hi, rect.im_bound))
            xb, yb = _svg_map(complex(sign * rect.re_lo, -rect.im_bound))
            x_lo, x_hi = min(xa, xb), max(xa, xb)
            parts.append(f'<rect x="{x_lo:.2f}" y="{ya:.2f}" width="{x_hi - x_lo:.2f}" '
                         f'height="{yb - ya:.2f}" fill="none" stroke="green" stroke-width="1"/>')
    for lam in eigenvalues:
        x, y = _svg_map(complex(lam))
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="red"/>')
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")


def cmd_region(args) -> int:
    op, name = load_operator_spec(args.spec)
    report = region_report(op)
    print(f"operator: {name or args.spec}")
    print(f"t (root of t e^t = 1) = {_fmt(report.t)}")
    print(f"sigma0(0) = {_fmt(report.d0)}")
    print(f"sigma1(0) = {_fmt(report.d1)}")
    print(f"omega threshold 2 sigma0 / t = {_fmt(report.omega_threshold)}")
    print(f"no-spectrum verdict (sigma1 < t): {report.no_spectrum}")
    if report.rectangles is None:
        print(f"rectangle enclosure: not applicable (c = {_fmt(report.c)} >= 2)")
    else:
        r = report.rectangles
        print(f"rectangle enclosure: {_fmt(r.re_lo)} < |Re w| < {_fmt(r.re_hi)}, "
              f"|Im w| < {_fmt(r.im_bound)}")
    if args.grid:
        re0, re1, im0, im1, res = _parse_grid_flag(args.grid)
        path = _out_path(args, "region_grid.csv")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("re,im,label\n")
            for re, im, label in region_grid(op, (re0, re1), (im0, im1), res):
                fh.write(f"{_fmt(re)},{_fmt(im)},{label}\n")
        print(f"grid written to {path}")
    if args.svg:
        from .spectrum import discrete_spectrum

        eigenvalues = [ev.lam for ev in discrete_spectrum(op)]
        write_region_svg(op, args.svg, eigenvalues)
        print(f"svg written to {args.svg}")
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify_mod.run_all(seed=args.seed, corpus_size=args.corpus_size)
    sys.stdout.write(verify_mod.format_report(results, args.seed, args.corpus_size))
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobi-spectra",
        description="Jost functions, spectrum-free regions and discrete spectra "
        "of complex Jacobi matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_jost = sub.add_parser("jost", help="print the Jost polynomial, optionally a |v0| grid")
    p_jost.add_argument("spec")
    p_jost.add_argument("--grid", help="RE0:RE1:IM0:IM1:RES grid of |v0(z)|")
    p_jost.add_argument("--out", help="artifact directory")
    p_jost.set_defaults(func=cmd_jost)

    p_spec = sub.add_parser("spectrum", help="discrete spectrum and oracle reconciliation")
    p_spec.add_argument("spec")
    p_spec.add_argument("--n", type=int, default=400, help="truncation size")
    p_spec.add_argument("--match-tol", type=float, default=1e-4)
    p_spec.add_argument("--band-margin", type=float, default=0.05)
    p_spec.add_argument("--out", help="artifact directory")
    p_spec.set_defaults(func=cmd_spectrum)

    p_reg = sub.add_parser("region", help="spectrum-free regions and rectangle enclosure")
    p_reg.add_argument("spec")
    p_reg.add_argument("--grid", help="RE0:RE1:IM0:IM1:RES lambda-plane grid")
    p_reg.add_argument("--svg", help="write a schematic SVG to this path")
    p_reg.add_argument("--out", help="artifact directory")
    p_reg.set_defaults(func=cmd_region)

    p_ver = sub.add_parser("verify", help="run the randomized verification suites")
    p_ver.add_argument("--seed", type=int,
                       default=int(os.environ.get("JACOBI_SPECTRA_SEED", "0")))
    p_ver.add_argument("--corpus-size", type=int, default=None)
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
