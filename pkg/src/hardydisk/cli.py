"""Command-line front door.

Subcommands run the library's verifiers and emit plain tables (6
significant digits), CSV (17 significant digits, LF line endings) or
JSON.  Exit status: 0 on success, 1 when a verification report fails, 2
on usage or domain errors.  Identical arguments and spec files produce
byte-identical machine output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import acceptance
from .circle import sample
from .density import FitOptions, fit_span
from .extend import bidisk_extend, poisson_extend, reproduce_interior
from .grids import BidiskSpectrum, SpectralFunction
from .kernel import DiskPoint, verify_kernel_properties
from .specs import SpecError, TrigSpec, is_holo_spec, parse_spec
from .trace import approx_identity_curve, isometry_report, product_trace_residual, radial_trace

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_FORMATS = ("plain", "csv", "json")


@dataclass
class RunConfig:
    """Validated run parameters shared by the subcommands."""

    subcommand: str
    spec: object | None
    n: int
    radii: tuple
    tol: float | None
    out: str | None
    fmt: str

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"grid size must be >= 2, got {self.n}")
        if self.fmt not in _FORMATS:
            raise ValueError(f"format must be one of {_FORMATS}, got {self.fmt!r}")
        if any(not 0.0 < r < 1.0 for r in self.radii):
            raise ValueError("radii must lie in (0, 1)")
        if any(b <= a for a, b in zip(self.radii, self.radii[1:])):
            raise ValueError("radii must be strictly increasing")


class UsageError(ValueError):
    pass


def _parse_radii(text: str) -> tuple:
    if text.startswith("geometric:"):
        count = int(text.split(":", 1)[1])
        return tuple(1.0 - 0.5**k for k in range(1, count + 1))
    return tuple(float(part) for part in text.split(","))


def _parse_point(text: str) -> DiskPoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"point must look like 'r,sigma', got {text!r}")
    return DiskPoint(float(parts[0]), float(parts[1]))


def _load_spec(ns) -> object:
    inline = getattr(ns, "spec", None)
    path = getattr(ns, "spec_file", None)
    if inline and path:
        raise UsageError("give either --spec or --spec-file, not both")
    if not inline and not path:
        raise UsageError("a function spec is required (--spec or --spec-file)")
    if path:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read spec file {path!r}: {exc}") from exc
    else:
        text = inline
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"spec is not valid JSON: {exc}") from exc
    return parse_spec(data)


def _machine(x) -> str:
    return f"{float(x):.17g}"


def _plain(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    s = f"{float(x):.6g}"
    if s.lstrip("+-").isdigit():
        s += ".0"
    return s


def _cell_csv(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return _machine(x)


def _cell_json(x):
    if isinstance(x, (bool, str)):
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    return float(x)


def _emit(columns, rows, cfg: RunConfig, header_lines=()) -> None:
    if cfg.fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_cell_csv(row[c]) for c in columns) for row in rows]
        text = "\n".join(lines) + "\n"
    elif cfg.fmt == "json":
        payload = {
            "subcommand": cfg.subcommand,
            "rows": [{c: _cell_json(row[c]) for c in columns} for row in rows],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        widths = [max(len(c), *(len(_plain(row[c])) for row in rows)) if rows else len(c) for c in columns]
        lines = list(header_lines)
        lines.append("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
        for row in rows:
            lines.append("  ".join(_plain(row[c]).ljust(w) for c, w in zip(columns, widths)))
        text = "\n".join(lines) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def _config(ns, spec=None, default_n=4096, default_radii=()) -> RunConfig:
    radii = _parse_radii(ns.radii) if getattr(ns, "radii", None) else tuple(default_radii)
    return RunConfig(
        subcommand=ns.command,
        spec=spec,
        n=int(getattr(ns, "n", default_n) or default_n),
        radii=radii,
        tol=getattr(ns, "tol", None),
        out=getattr(ns, "out", None),
        fmt=getattr(ns, "format", "plain"),
    )


def _cmd_kernel_verify(ns) -> int:
    cfg = _config(ns)
    reports = verify_kernel_properties(ns.r, ns.delta, cfg.n, tol=cfg.tol)
    rows = []
    for rep in reports:
        value = rep.metadata.get("sup_value", rep.metadata.get("mean", ""))
        rows.append(
            {
                "property": rep.property_id,
                "max_violation": rep.max_violation,
                "tolerance": rep.metadata["tolerance"],
                "passed": rep.passed,
                "value": value,
            }
        )
    _emit(
        ["property", "max_violation", "tolerance", "passed", "value"],
        rows,
        cfg,
        header_lines=[f"kernel properties at r={_plain(ns.r)}, delta={_plain(ns.delta)}, n={cfg.n}"],
    )
    return EXIT_OK if all(rep.passed for rep in reports) else EXIT_FAIL


def _boundary_or_spectrum(spec, n: int):
    """Trig specs become exact spectra; everything else is sampled."""
    if isinstance(spec, TrigSpec):
        return SpectralFunction.from_dict(spec.coeffs)
    return sample(spec, n)


def _cmd_extend(ns) -> int:
    spec = _load_spec(ns)
    if isinstance(spec, BidiskSpectrum):
        raise UsageError("extend expects a one-variable spec; use the bidisk subcommand")
    cfg = _config(ns)
    z = _parse_point(ns.z)
    boundary = _boundary_or_spectrum(spec, cfg.n)
    value = poisson_extend(boundary, z)
    rows = [{"r": z.r, "sigma": z.sigma, "re": value.real, "im": value.imag}]
    if cfg.fmt == "plain" and not cfg.out:
        im = _plain(value.imag)
        text = _plain(value.real) if im in ("0.0", "-0.0") else f"{_plain(value.real)} + {im}i"
        sys.stdout.write(text + "\n")
    else:
        _emit(["r", "sigma", "re", "im"], rows, cfg)
    return EXIT_OK


def _cmd_reproduce(ns) -> int:
    spec = _load_spec(ns)
    if not is_holo_spec(spec):
        raise UsageError("reproduce expects a holomorphic spec (taylor/blaschke/product/scaled)")
    cfg = _config(ns)
    z = _parse_point(ns.z)
    tol = cfg.tol if cfg.tol is not None else 1e-9
    residual = reproduce_interior(spec, z, ns.rho, cfg.n)
    rows = [
        {
            "r": z.r,
            "sigma": z.sigma,
            "rho": ns.rho,
            "n": cfg.n,
            "residual": residual,
            "tolerance": tol,
            "passed": residual <= tol,
        }
    ]
    _emit(["r", "sigma", "rho", "n", "residual", "tolerance", "passed"], rows, cfg)
    return EXIT_OK if residual <= tol else EXIT_FAIL


def _cmd_trace(ns) -> int:
    spec = _load_spec(ns)
    cfg = _config(ns, default_radii=tuple(1.0 - 0.5**k for k in range(1, 15)))
    if isinstance(spec, TrigSpec):
        f = SpectralFunction.from_dict(spec.coeffs)
    elif is_holo_spec(spec):
        f = spec
    else:
        raise UsageError("trace expects a holomorphic or trig spec")
    result = radial_trace(f, cfg.radii, cfg.n)
    sup_disk, sup_circle = isometry_report(f, result.trace)
    rows = []
    for i, r in enumerate(result.radii):
        rows.append(
            {
                "radius": r,
                "sup_norm": result.sup_norms[i],
                "cauchy_gap": result.cauchy_gaps[i - 1] if i > 0 else 0.0,
            }
        )
    header = [
        f"radial trace at n={cfg.n}",
        f"sup over disk = {_plain(sup_disk)}, sup over circle = {_plain(sup_circle)}",
    ]
    if cfg.fmt == "json":
        payload = {
            "subcommand": cfg.subcommand,
            "sup_disk": sup_disk,
            "sup_circle": sup_circle,
            "rows": [{k: _cell_json(v) for k, v in row.items()} for row in rows],
        }
        text = json.dumps(payload, indent=2) + "\n"
        if cfg.out:
            Path(cfg.out).write_text(text)
        else:
            sys.stdout.write(text)
    else:
        _emit(["radius", "sup_norm", "cauchy_gap"], rows, cfg, header_lines=header)
    return EXIT_OK


def _cmd_homomorphism(ns) -> int:
    cfg = _config(ns, default_n=1024)
    tol = cfg.tol if cfg.tol is not None else 1e-12
    rows = []
    for label, f, g in acceptance.homomorphism_catalogue():
        residual = product_trace_residual(f, g, cfg.n)
        rows.append({"pair": label, "residual": residual, "tolerance": tol, "passed": residual <= tol})
    _emit(["pair", "residual", "tolerance", "passed"], rows, cfg)
    return EXIT_OK if all(row["passed"] for row in rows) else EXIT_FAIL


def _cmd_approx_identity(ns) -> int:
    spec = _load_spec(ns)
    if isinstance(spec, BidiskSpectrum):
        raise UsageError("approx-identity expects a one-variable spec")
    cfg = _config(ns, default_radii=(0.5, 0.9, 0.99))
    g = sample(spec, cfg.n)
    errors = approx_identity_curve(g, cfg.radii)
    rows = [{"radius": r, "l1_error": e} for r, e in zip(cfg.radii, errors)]
    _emit(["radius", "l1_error"], rows, cfg)
    return EXIT_OK


def _cmd_density_fit(ns) -> int:
    spec = _load_spec(ns)
    if isinstance(spec, BidiskSpectrum):
        raise UsageError("density-fit expects a one-variable spec")
    cfg = _config(ns)
    target = sample(spec, cfg.n)
    nodes = [
        DiskPoint(ns.r_node, -np.pi + 2.0 * np.pi * j / ns.nodes) for j in range(ns.nodes)
    ]
    opts = FitOptions(tol=cfg.tol) if cfg.tol is not None else FitOptions()
    fit = fit_span(target, nodes, opts)
    rows = []
    for node, w in zip(fit.nodes, fit.coefficients):
        rows.append(
            {
                "node_r": node.r,
                "node_sigma": node.sigma,
                "coef_re": w.real,
                "coef_im": w.imag,
                "residual_l1": fit.residual_l1,
                "iterations": fit.iterations,
                "converged": fit.converged,
            }
        )
    _emit(
        ["node_r", "node_sigma", "coef_re", "coef_im", "residual_l1", "iterations", "converged"],
        rows,
        cfg,
        header_lines=[
            f"L1 fit with {ns.nodes} nodes at r={_plain(ns.r_node)}: "
            f"residual {_plain(fit.residual_l1)} after {fit.iterations} iterations"
        ],
    )
    return EXIT_OK if fit.converged else EXIT_FAIL


def _cmd_bidisk(ns) -> int:
    spec = _load_spec(ns)
    if not isinstance(spec, BidiskSpectrum):
        raise UsageError("bidisk expects a trig2d spec")
    cfg = _config(ns)
    z1 = _parse_point(ns.z1)
    z2 = _parse_point(ns.z2)
    value = bidisk_extend(spec, z1, z2)
    rows = [
        {
            "r1": z1.r,
            "sigma1": z1.sigma,
            "r2": z2.r,
            "sigma2": z2.sigma,
            "re": value.real,
            "im": value.imag,
        }
    ]
    _emit(["r1", "sigma1", "r2", "sigma2", "re", "im"], rows, cfg)
    return EXIT_OK


def _cmd_selftest(ns) -> int:
    cfg = _config(ns)
    results = acceptance.run_all()
    rows = []
    for res in results:
        line = f"[{res.index:2d}] {'PASS' if res.passed else 'FAIL'}  {res.name}: {res.detail}"
        if cfg.fmt == "plain":
            sys.stdout.write(line + "\n")
        rows.append({"criterion": res.index, "name": res.name, "passed": res.passed, "detail": res.detail})
    passed = sum(res.passed for res in results)
    if cfg.fmt == "plain":
        sys.stdout.write(f"selftest: {passed}/{len(results)} criteria passed\n")
        if cfg.out:
            _emit(["criterion", "name", "passed", "detail"], rows, cfg)
    else:
        _emit(["criterion", "name", "passed", "detail"], rows, cfg)
    if passed < len(results):
        failing = ", ".join(res.name for res in results if not res.passed)
        sys.stderr.write(f"failed criteria: {failing}\n")
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardydisk",
        description="Poisson extensions, boundary traces and kernel-span fits on the unit disk.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, spec=False, radii_default=None, n_default=4096):
        if spec:
            p.add_argument("--spec", help="inline JSON function spec")
            p.add_argument("--spec-file", help="path to a JSON function spec")
        p.add_argument("--n", type=int, default=n_default, help=f"grid size (default {n_default})")
        if radii_default is not None:
            p.add_argument(
                "--radii",
                default=radii_default,
                help=f"comma list or 'geometric:<count>' (default {radii_default})",
            )
        p.add_argument("--tol", type=float, default=None, help="override the default tolerance")
        p.add_argument("--out", default=None, help="write output to this path instead of stdout")
        p.add_argument("--format", choices=_FORMATS, default="plain", help="output format (default plain)")

    p = sub.add_parser("kernel-verify", help="check the five kernel properties")
    p.add_argument("--r", type=float, required=True, help="kernel radius in [0, 1)")
    p.add_argument("--delta", type=float, default=0.5, help="tail angle (default 0.5)")
    add_common(p)
    p.set_defaults(handler=_cmd_kernel_verify)

    p = sub.add_parser("extend", help="evaluate the harmonic extension at a point")
    p.add_argument("--z", required=True, help="interior point as 'r,sigma'")
    add_common(p, spec=True)
    p.set_defaults(handler=_cmd_extend)

    p = sub.add_parser("reproduce", help="interior reproduction residual for holomorphic data")
    p.add_argument("--z", required=True, help="interior point as 'r,sigma'")
    p.add_argument("--rho", type=float, default=1.0, help="dilation radius in (z.r, 1] (default 1)")
    add_common(p, spec=True)
    p.set_defaults(handler=_cmd_reproduce)

    p = sub.add_parser("trace", help="radial trace diagnostics and isometry report")
    add_common(p, spec=True, radii_default="geometric:14")
    p.set_defaults(handler=_cmd_trace)

    p = sub.add_parser("homomorphism", help="trace multiplicativity over the pair catalogue")
    add_common(p, n_default=1024)
    p.set_defaults(handler=_cmd_homomorphism)

    p = sub.add_parser("approx-identity", help="L1 smoothing error per radius")
    add_common(p, spec=True, radii_default="0.5,0.9,0.99")
    p.set_defaults(handler=_cmd_approx_identity)

    p = sub.add_parser("density-fit", help="L1 fit by a span of Poisson kernels")
    p.add_argument("--nodes", type=int, default=32, help="number of equiangular nodes (default 32)")
    p.add_argument("--r-node", type=float, default=0.9, help="node radius (default 0.9)")
    add_common(p, spec=True)
    p.set_defaults(handler=_cmd_density_fit)

    p = sub.add_parser("bidisk", help="tensor extension on the bidisk")
    p.add_argument("--z1", required=True, help="first point as 'r,sigma'")
    p.add_argument("--z2", required=True, help="second point as 'r,sigma'")
    add_common(p, spec=True)
    p.set_defaults(handler=_cmd_bidisk)

    p = sub.add_parser("selftest", help="run the full acceptance suite")
    add_common(p)
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.handler(ns)
    except (UsageError, SpecError, ValueError, TypeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
