"""Iteration log lines, density exports and key=value run files."""
from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .optimize import IterationRecord

LOG_PATTERN = re.compile(
    r"^ It\.:(?P<loop>\d+) Obj\.:\s*(?P<c>\S+) Vol\.:\s*(?P<vol>\S+) ch\.:\s*(?P<change>\S+)$")


def log_iteration(record: IterationRecord) -> str:
    return (f" It.:{record.loop:d} Obj.:{record.compliance:11.4f}"
            f" Vol.:{record.volume:7.3f} ch.:{record.change:7.3f}")


def parse_log_line(line: str) -> IterationRecord:
    m = LOG_PATTERN.match(line.rstrip("\n"))
    if m is None:
        raise ValueError(f"not an iteration log line: {line!r}")
    return IterationRecord(int(m["loop"]), float(m["c"]), float(m["vol"]), float(m["change"]))


def _image_rows(x: np.ndarray, shape: tuple[int, int]) -> np.ndarray:
    # first image row is the top of the domain
    nelx, nely = shape
    x = np.asarray(x, dtype=float)
    if x.size != nelx * nely:
        raise ValueError(f"{x.size} densities do not fit a {nelx}x{nely} grid")
    return x.reshape(nely, nelx)[::-1]


def write_pgm(x: np.ndarray, shape: tuple[int, int], path) -> Path:
    """8-bit binary PGM, black = solid, white = void."""
    rows = _image_rows(x, shape)
    pixels = np.rint(255.0 * (1.0 - np.clip(rows, 0.0, 1.0))).astype(np.uint8)
    path = Path(path)
    with open(path, "wb") as fh:
        fh.write(f"P5\n{shape[0]} {shape[1]}\n255\n".encode("ascii"))
        fh.write(pixels.tobytes())
    return path


def read_pgm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    magic, w, h, maxval, rest = data.split(maxsplit=4)
    if magic != b"P5" or int(maxval) != 255:
        raise ValueError(f"{path}: not an 8-bit binary PGM")
    return np.frombuffer(rest, dtype=np.uint8).reshape(int(h), int(w))


def write_density_csv(x: np.ndarray, shape: tuple[int, int], path) -> Path:
    rows = _image_rows(x, shape)
    path = Path(path)
    with open(path, "w", newline="") as fh:
        for row in rows:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")
    return path


def read_density_csv(path) -> np.ndarray:
    """Densities in element order (x fastest, bottom row first)."""
    lines = Path(path).read_text().splitlines()
    rows = np.array([[float(v) for v in line.split(",")] for line in lines if line])
    return rows[::-1].reshape(-1)


def export_density_2d(x: np.ndarray, shape: tuple[int, int], path, pgm: bool = True,
                      csv: bool = True) -> list[Path]:
    """Write ``<path>.pgm`` and/or ``<path>.csv`` for a 2D density field."""
    if len(shape) != 2:
        raise ValueError(f"2D export needs a 2D grid, got shape {shape}")
    base = Path(path)
    written = []
    if pgm:
        written.append(write_pgm(x, shape, base.with_suffix(".pgm")))
    if csv:
        written.append(write_density_csv(x, shape, base.with_suffix(".csv")))
    return written


def export_density_3d(x: np.ndarray, shape: tuple[int, int, int], path,
                      threshold: float = 0.5, binarize: bool = False) -> Path:
    """Legacy ASCII VTK structured points, one value per element.

    The raw densities are written; ``threshold`` is only recorded in the
    header unless ``binarize`` adds a second 0/1 field ``solid``.
    """
    if len(shape) != 3:
        raise ValueError(f"3D export needs a 3D grid, got shape {shape}")
    x = np.asarray(x, dtype=float).reshape(-1)
    n = int(np.prod(shape))
    if x.size != n:
        raise ValueError(f"{x.size} densities do not fit a {shape} grid")
    lines = [
        "# vtk DataFile Version 3.0",
        f"igatopt element densities, display threshold {threshold!r}",
        "ASCII",
        "DATASET STRUCTURED_POINTS",
        "DIMENSIONS {} {} {}".format(*shape),
        "ORIGIN 0.5 0.5 0.5",
        "SPACING 1 1 1",
        f"POINT_DATA {n}",
        "SCALARS density double 1",
        "LOOKUP_TABLE default",
        *(repr(float(v)) for v in x),
    ]
    if binarize:
        lines += ["SCALARS solid int 1", "LOOKUP_TABLE default",
                  *("1" if v > threshold else "0" for v in x)]
    path = Path(path)
    path.write_text("\n".join(lines) + "\n")
    return path


def read_vtk_scalars(path, name: str = "density") -> np.ndarray:
    lines = Path(path).read_text().splitlines()
    n = next(int(line.split()[1]) for line in lines if line.startswith("POINT_DATA"))
    start = next(i for i, line in enumerate(lines) if line.startswith(f"SCALARS {name} "))
    return np.array([float(v) for v in lines[start + 2:start + 2 + n]])


def read_key_values(path) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for num, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{num}: expected key = value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.lower()] = value
    return out
