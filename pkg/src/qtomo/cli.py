"""Command-line front end.

Exit status: 0 success, 1 I/O failure, 2 invalid arguments, 3 math-domain
error (e.g. amplitude outside the convergence disk), 4 failed self-check.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .checks import format_table, run_checks
from .errors import QDomainError
from .qcore import DeformationParams
from .quadrature_measure import compute_measure, psi_matrix, write_measure_csv
from .tomography import make_coherent, tomogram_grid

MODES = ("tomogram-coherent", "tomogram-fock", "wavefunction", "measure-dump", "check")

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_DOMAIN, EXIT_CHECK = 0, 1, 2, 3, 4


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    mode: str
    q: float
    alpha_re: float = 0.0
    alpha_im: float = 0.0
    fock_n: int | None = None
    truncation: int = 64
    theta_start: float = 0.0
    theta_end: float = 2 * math.pi
    theta_steps: int = 64
    tol: float = 1e-10
    output: str | None = None
    format: str = "csv"

    @property
    def alpha(self) -> complex:
        return complex(self.alpha_re, self.alpha_im)

    def validate(self):
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if not (0.0 < self.q <= 1.0):
            raise ConfigError(f"--q must lie in (0, 1], got {self.q}")
        if self.truncation < 1:
            raise ConfigError("--truncation must be >= 1")
        if self.theta_steps < 1:
            raise ConfigError("--theta-steps must be >= 1")
        if not self.tol > 0:
            raise ConfigError("--tol must be positive")
        if self.format not in ("csv", "json"):
            raise ConfigError("--format must be csv or json")
        if self.mode in ("tomogram-fock", "wavefunction"):
            if self.fock_n is None:
                raise ConfigError(f"--fock-n is required for mode {self.mode}")
            if not 0 <= self.fock_n < self.truncation:
                raise ConfigError("--fock-n must satisfy 0 <= n < truncation")
        for name in ("alpha_re", "alpha_im", "theta_start", "theta_end"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(f"--{name.replace('_', '-')} must be finite")

    def theta_grid(self) -> np.ndarray:
        return np.linspace(self.theta_start, self.theta_end, self.theta_steps)


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _meta(cfg: RunConfig, tail_bound: float) -> dict:
    return {
        "mode": cfg.mode,
        "q": cfg.q,
        "alpha": [cfg.alpha_re, cfg.alpha_im],
        "fock_n": cfg.fock_n,
        "N": cfg.truncation,
        "theta": {"start": cfg.theta_start, "end": cfg.theta_end, "steps": cfg.theta_steps},
        "tail_bound": tail_bound,
        "version": __version__,
    }


def _render(cfg: RunConfig, columns: dict[str, np.ndarray], tail_bound: float) -> str:
    if cfg.format == "json":
        data = {k: [float(v) if k != "k" else int(v) for v in col] for k, col in columns.items()}
        return json.dumps({"meta": _meta(cfg, tail_bound), "data": data}) + "\n"
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(list(columns))
    for row in zip(*columns.values()):
        writer.writerow([str(int(v)) if k == "k" else _fmt(v) for k, v in zip(columns, row)])
    return out.getvalue()


def produce(cfg: RunConfig) -> str:
    """Compute the data for a non-check mode and return it serialized."""
    p = DeformationParams(cfg.q)
    if cfg.mode == "tomogram-coherent":
        # validate the amplitude before paying for the eigensolve
        state = make_coherent(cfg.alpha, p, cfg.truncation, cfg.tol)
    m = compute_measure(cfg.truncation, p)
    if cfg.mode == "measure-dump":
        if cfg.format == "csv":
            return write_measure_csv(m)
        return _render(cfg, {"k": np.arange(m.N), "x": m.nodes, "w": m.weights}, 0.0)

    thetas = cfg.theta_grid()
    n_theta, N = thetas.size, m.N
    base = {"theta": np.repeat(thetas, N), "x": np.tile(m.nodes, n_theta)}
    weights = np.tile(m.weights, n_theta)
    if cfg.mode == "wavefunction":
        psi = np.array([psi_matrix(m, t)[cfg.fock_n] for t in thetas]).ravel()
        cols = {**base, "psi_re": psi.real, "psi_im": psi.imag, "w": weights}
        return _render(cfg, cols, 0.0)

    if cfg.mode == "tomogram-coherent":
        grid = tomogram_grid(thetas, m, state=state)
    else:
        grid = tomogram_grid(thetas, m, fock_n=cfg.fock_n)
    cols = {**base, "p": grid.probabilities.ravel(), "w": weights,
            "omega_density": grid.densities.ravel()}
    return _render(cfg, cols, grid.tail_bound)


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        cfg.validate()
    except ConfigError as exc:
        print(f"qtomo: error: {exc}", file=stderr)
        return EXIT_USAGE

    try:
        if cfg.mode == "check":
            results = run_checks(cfg.q, cfg.truncation)
            text = format_table(results) + "\n"
            status = EXIT_OK if all(r.passed for r in results) else EXIT_CHECK
            stdout.write(text)
        else:
            text = produce(cfg)
            status = EXIT_OK
    except QDomainError as exc:
        print(f"qtomo: math domain error: {exc}", file=stderr)
        return EXIT_DOMAIN

    if cfg.output and cfg.output != "-":
        try:
            with open(cfg.output, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"qtomo: cannot write {cfg.output}: {exc}", file=stderr)
            return EXIT_IO
    elif cfg.mode != "check":
        stdout.write(text)
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qtomo",
        description="Optical tomograms of q-deformed Fock and coherent states.",
    )
    ap.add_argument("--mode", required=True, choices=MODES)
    ap.add_argument("--q", type=float, required=True, help="deformation parameter in (0, 1]")
    ap.add_argument("--alpha-re", type=float, default=0.0)
    ap.add_argument("--alpha-im", type=float, default=0.0)
    ap.add_argument("--fock-n", type=int, default=None)
    ap.add_argument("--truncation", type=int, default=64, help="Fock-space cutoff N")
    ap.add_argument("--theta-start", type=float, default=0.0)
    ap.add_argument("--theta-end", type=float, default=2 * math.pi)
    ap.add_argument("--theta-steps", type=int, default=64, help="grid points, endpoints included")
    ap.add_argument("--tol", type=float, default=1e-10, help="max certified truncation tail")
    ap.add_argument("--output", default=None, help="output file (default stdout)")
    ap.add_argument("--format", choices=("csv", "json"), default="csv")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        mode=args.mode, q=args.q, alpha_re=args.alpha_re, alpha_im=args.alpha_im,
        fock_n=args.fock_n, truncation=args.truncation, theta_start=args.theta_start,
        theta_end=args.theta_end, theta_steps=args.theta_steps, tol=args.tol,
        output=args.output, format=args.format,
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
