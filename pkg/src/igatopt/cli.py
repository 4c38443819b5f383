"""Command line front end.

    igatopt 2d NELX NELY VOLFRAC PENAL RMIN [options]
    igatopt 3d NELX NELY NELZ VOLFRAC PENAL RMIN [options]
    igatopt run FILE.cfg

The subcommand may be dropped: five numbers mean 2D, six mean 3D.
Exit status: 0 converged, 1 usage or configuration error, 2 iteration cap
reached, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import io
from .assembly import SingularSystemError
from .element import REFERENCE_SHEAR_SCALE_3D
from .mesh import PRESETS, BoundaryCase, IgaMesh
from .optimize import OptimizationConfig, run_optimization

EXIT_CONVERGED, EXIT_USAGE, EXIT_MAX_ITER, EXIT_NUMERICAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    problem: str
    nel: tuple[int, ...]
    volfrac: float
    penal: float
    rmin: float
    E0: float = 1.0
    Emin: float = 1e-3
    nu: float = 0.3
    max_iter: int = 1000
    out_dir: Path = Path(".")
    csv: bool = False
    pgm: bool = False
    vtk: bool = False
    threshold: float = 0.5
    binarize: bool = False
    solver: str = "auto"
    shear_scale: float = REFERENCE_SHEAR_SCALE_3D
    quiet: bool = False
    fixed: list[int] = field(default_factory=list)
    loads: dict[int, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.problem not in ("mbb2d", "cantilever3d", "custom"):
            raise UsageError(f"unknown problem {self.problem!r}")
        want = {"mbb2d": 2, "cantilever3d": 3}.get(self.problem)
        if want is not None and len(self.nel) != want:
            raise UsageError(f"{self.problem} needs {want} element counts, got {len(self.nel)}")
        if self.problem == "custom" and not (self.fixed and self.loads):
            raise UsageError("custom problem needs both 'fixed' and 'load' entries")
        if not 0.0 < self.threshold < 1.0:
            raise UsageError(f"threshold must lie in (0, 1), got {self.threshold}")
        if not (self.csv or self.pgm or self.vtk):
            if len(self.nel) == 2:
                self.csv = self.pgm = True
            else:
                self.vtk = True
        try:
            self.optimization_config()
            IgaMesh(len(self.nel), self.nel)
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    @property
    def dim(self) -> int:
        return len(self.nel)

    def optimization_config(self) -> OptimizationConfig:
        return OptimizationConfig(self.nel, self.volfrac, self.penal, self.rmin, E0=self.E0,
                                  Emin=self.Emin, nu=self.nu, max_iter=self.max_iter,
                                  shear_scale=self.shear_scale, solver=self.solver)

    def boundary(self) -> BoundaryCase:
        mesh = IgaMesh(self.dim, self.nel)
        if self.problem == "custom":
            return BoundaryCase.from_one_based(mesh.n_dofs, self.fixed, self.loads)
        return PRESETS[self.problem](mesh)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", type=Path, default=Path("."), help="output directory")
    p.add_argument("--e0", type=float, default=1.0, help="solid Young's modulus")
    p.add_argument("--emin", type=float, default=1e-3, help="void Young's modulus")
    p.add_argument("--nu", type=float, default=0.3, help="Poisson ratio")
    p.add_argument("--max-iter", type=int, default=1000)
    p.add_argument("--solver", choices=("auto", "direct", "amg"), default="auto")
    p.add_argument("--quiet", action="store_true", help="do not echo the iteration log")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="igatopt", description="Isogeometric topology optimization")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p2 = sub.add_parser("2d", help="half MBB beam")
    for name in ("nelx", "nely"):
        p2.add_argument(name, type=int)
    for name in ("volfrac", "penal", "rmin"):
        p2.add_argument(name, type=float)
    _add_common(p2)
    p2.add_argument("--csv", action="store_true")
    p2.add_argument("--pgm", action="store_true")

    p3 = sub.add_parser("3d", help="cantilever")
    for name in ("nelx", "nely", "nelz"):
        p3.add_argument(name, type=int)
    for name in ("volfrac", "penal", "rmin"):
        p3.add_argument(name, type=float)
    _add_common(p3)
    p3.add_argument("--vtk", action="store_true")
    p3.add_argument("--threshold", type=float, default=0.5)
    p3.add_argument("--binarize", action="store_true",
                    help="add a thresholded 0/1 field to the VTK file")
    p3.add_argument("--shear-scale", type=float, default=REFERENCE_SHEAR_SCALE_3D,
                    help="multiplier on the isotropic shear modulus (1 = textbook isotropic)")

    pr = sub.add_parser("run", help="run a key = value configuration file")
    pr.add_argument("file", type=Path)
    return parser


def _is_number(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True


def _parse_int_list(text: str) -> list[int]:
    out = []
    for item in text.replace(";", ",").split(","):
        item = item.strip()
        if not item:
            continue
        parts = [int(p) for p in item.split(":")]
        if len(parts) == 1:
            out.append(parts[0])
        elif len(parts) == 2:
            out.extend(range(parts[0], parts[1] + 1))
        elif len(parts) == 3:
            out.extend(range(parts[0], parts[2] + 1, parts[1]))
        else:
            raise ValueError(f"bad index range {item!r}")
    return out


def _parse_loads(text: str) -> dict[int, float]:
    loads = {}
    for item in text.replace(";", ",").split(","):
        if item.strip():
            dof, value = item.split(":")
            loads[int(dof)] = loads.get(int(dof), 0.0) + float(value)
    return loads


_TRUE = {"1", "true", "yes", "on"}


def config_from_file(path) -> RunConfig:
    try:
        kv = io.read_key_values(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        nel = tuple(int(kv.pop(k)) for k in ("nelx", "nely", "nelz") if k in kv)
        problem = kv.pop("problem", "mbb2d" if len(nel) == 2 else "cantilever3d")
        args = dict(problem=problem, nel=nel, volfrac=float(kv.pop("volfrac")),
                    penal=float(kv.pop("penal", 3.0)), rmin=float(kv.pop("rmin")))
        conv = {"e0": ("E0", float), "emin": ("Emin", float), "nu": ("nu", float),
                "max_iter": ("max_iter", int), "out": ("out_dir", Path),
                "threshold": ("threshold", float), "solver": ("solver", str),
                "shear_scale": ("shear_scale", float), "fixed": ("fixed", _parse_int_list),
                "load": ("loads", _parse_loads)}
        for key in list(kv):
            if key in conv:
                name, fn = conv[key]
                args[name] = fn(kv.pop(key))
            elif key in ("csv", "pgm", "vtk", "binarize", "quiet"):
                args[key] = kv.pop(key).lower() in _TRUE
    except KeyError as exc:
        raise UsageError(f"{path}: missing required key {exc}") from None
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None
    if kv:
        raise UsageError(f"{path}: unknown keys {sorted(kv)}")
    return RunConfig(**args)


def parse_cli(argv: list[str]) -> RunConfig:
    argv = list(argv)
    if argv and _is_number(argv[0]):
        count = next((i for i, t in enumerate(argv) if not _is_number(t)), len(argv))
        if count not in (5, 6):
            raise UsageError("expected NELX NELY [NELZ] VOLFRAC PENAL RMIN")
        argv.insert(0, "2d" if count == 5 else "3d")
    ns = _build_parser().parse_args(argv)
    if ns.command == "run":
        return config_from_file(ns.file)
    nel = (ns.nelx, ns.nely) if ns.command == "2d" else (ns.nelx, ns.nely, ns.nelz)
    return RunConfig(
        problem="mbb2d" if ns.command == "2d" else "cantilever3d",
        nel=nel, volfrac=ns.volfrac, penal=ns.penal, rmin=ns.rmin, E0=ns.e0,
        Emin=ns.emin, nu=ns.nu, max_iter=ns.max_iter, out_dir=ns.out, solver=ns.solver,
        quiet=ns.quiet, csv=getattr(ns, "csv", False), pgm=getattr(ns, "pgm", False),
        vtk=getattr(ns, "vtk", False), threshold=getattr(ns, "threshold", 0.5),
        binarize=getattr(ns, "binarize", False),
        shear_scale=getattr(ns, "shear_scale", REFERENCE_SHEAR_SCALE_3D))


def execute(cfg: RunConfig) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    log_path = cfg.out_dir / "iterations.log"
    with open(log_path, "w") as log_file:
        def on_iteration(state):
            line = io.log_iteration(state.record)
            log_file.write(line + "\n")
            log_file.flush()
            if not cfg.quiet:
                print(line, flush=True)

        result = run_optimization(cfg.optimization_config(), cfg.boundary(), on_iteration)

    base = cfg.out_dir / "density"
    if cfg.dim == 2:
        io.export_density_2d(result.x, cfg.nel, base, pgm=cfg.pgm, csv=cfg.csv)
    else:
        if cfg.vtk:
            io.export_density_3d(result.x, cfg.nel, base.with_suffix(".vtk"),
                                 cfg.threshold, cfg.binarize)
        if cfg.csv:
            with open(base.with_suffix(".csv"), "w") as fh:
                fh.writelines(f"{float(v)!r}\n" for v in result.x)
    return EXIT_CONVERGED if result.converged else EXIT_MAX_ITER


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        cfg = parse_cli(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"igatopt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return execute(cfg)
    except SingularSystemError as exc:
        print(f"igatopt: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"igatopt: I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
