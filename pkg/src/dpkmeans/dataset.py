"""Tabular dataset loading, normalization, and label-matching accuracy."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.optimize import linear_sum_assignment

from .distance import PairwiseDistances
from .errors import DataError


@dataclass(frozen=True)
class Dataset:
    """N x D feature matrix with optional ground-truth labels."""

    points: np.ndarray
    labels: np.ndarray | None = None
    feature_names: tuple[str, ...] = ()
    name: str = "dataset"

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise DataError("points must form a non-empty N x D matrix")
        if not np.isfinite(pts).all():
            raise DataError("points contain NaN or Inf")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        if not self.feature_names:
            names = tuple(f"f{i}" for i in range(pts.shape[1]))
            object.__setattr__(self, "feature_names", names)
        elif len(self.feature_names) != pts.shape[1]:
            raise DataError(
                f"{len(self.feature_names)} feature names for {pts.shape[1]} columns"
            )
        else:
            object.__setattr__(self, "feature_names", tuple(self.feature_names))
        if self.labels is not None:
            labels = np.asarray(self.labels)
            if labels.shape != (pts.shape[0],):
                raise DataError(
                    f"labels have length {labels.shape[0] if labels.ndim else 'scalar'}, "
                    f"expected {pts.shape[0]}"
                )
            labels.setflags(write=False)
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class LabelMatching:
    """Optimal one-to-one cluster-to-class mapping and the resulting accuracy."""

    cluster_to_label: dict
    accuracy: float


def _parse_float(cell: str):
    try:
        return float(cell)
    except ValueError:
        return None


def load_csv(
    path,
    label_column=None,
    delimiter: str = ",",
    exclude_columns=(),
    name: str | None = None,
) -> Dataset:
    """Load a UCI-style CSV into a Dataset.

    Header rows are detected by comparing the first two rows: a column whose
    first cell is non-numeric but whose second is numeric marks a header.
    `label_column` and `exclude_columns` accept header names or 0-based
    positions. Missing or non-numeric feature cells are hard errors that name
    the offending 1-based row and column.
    """
    path = Path(path)
    try:
        with open(path, newline="") as f:
            rows = [row for row in csv.reader(f, delimiter=delimiter) if row]
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise DataError(f"{path} contains no rows")

    width = len(rows[0])
    header: list[str] | None = None
    if len(rows) > 1 and any(
        _parse_float(rows[0][c]) is None and c < len(rows[1]) and _parse_float(rows[1][c]) is not None
        for c in range(width)
    ):
        header = [cell.strip() for cell in rows[0]]
        rows = rows[1:]

    def resolve(col, what: str) -> int:
        if isinstance(col, int) or (isinstance(col, str) and col.lstrip("-").isdigit()):
            idx = int(col)
            if not 0 <= idx < width:
                raise DataError(f"{what} {idx} out of range for {width} columns")
            return idx
        if header is None:
            raise DataError(f"{what} {col!r} given by name but the file has no header row")
        try:
            return header.index(col)
        except ValueError:
            raise DataError(f"{what} {col!r} not found in header {header}") from None

    label_idx = None if label_column is None else resolve(label_column, "label column")
    dropped = {resolve(c, "excluded column") for c in exclude_columns}
    if label_idx in dropped:
        raise DataError("label column listed in excluded columns")
    feature_idx = [c for c in range(width) if c != label_idx and c not in dropped]
    if not feature_idx:
        raise DataError("no feature columns left after exclusions")

    points = np.empty((len(rows), len(feature_idx)))
    labels = [] if label_idx is not None else None
    for r, row in enumerate(rows):
        if len(row) != width:
            raise DataError(f"row {r + 1} has {len(row)} cells, expected {width}")
        for out_c, c in enumerate(feature_idx):
            value = _parse_float(row[c].strip()) if row[c].strip() else None
            if value is None or not np.isfinite(value):
                raise DataError(
                    f"row {r + 1}, column {c + 1}: {row[c]!r} is not a finite number"
                )
            points[r, out_c] = value
        if labels is not None:
            labels.append(row[label_idx].strip())

    if header is not None:
        feature_names = tuple(header[c] for c in feature_idx)
    else:
        feature_names = tuple(f"f{c}" for c in feature_idx)
    return Dataset(
        points=points,
        labels=np.array(labels) if labels is not None else None,
        feature_names=feature_names,
        name=name if name is not None else path.stem,
    )


LABEL_COLUMN_NAMES = ("class", "label", "target")


def detect_label_column(path, delimiter: str = ","):
    """Guess the label column of a CSV: a header named class/label/target,
    else a trailing non-numeric column. Returns a 0-based index or None."""
    path = Path(path)
    try:
        with open(path, newline="") as f:
            rows = [row for row in csv.reader(f, delimiter=delimiter) if row]
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    if not rows:
        return None
    width = len(rows[0])
    header = None
    if len(rows) > 1 and any(
        _parse_float(rows[0][c]) is None and c < len(rows[1]) and _parse_float(rows[1][c]) is not None
        for c in range(width)
    ):
        header = [cell.strip().lower() for cell in rows[0]]
        rows = rows[1:]
    if header is not None:
        for candidate in LABEL_COLUMN_NAMES:
            if candidate in header:
                return header.index(candidate)
    last = width - 1
    if rows and all(len(r) == width and _parse_float(r[last]) is None for r in rows):
        return last
    return None


NORMALIZE_METHODS = ("none", "min_max", "z_score")


def normalize(data: Dataset, method: str = "none") -> Dataset:
    """Columnwise rescaling: none (identity), min_max to [0,1], or z_score
    to mean 0 / population sd 1."""
    if method not in NORMALIZE_METHODS:
        raise ValueError(f"unknown normalization {method!r}, expected one of {NORMALIZE_METHODS}")
    if method == "none":
        return data
    pts = data.points
    if method == "min_max":
        lo, hi = pts.min(axis=0), pts.max(axis=0)
        flat = np.flatnonzero(hi <= lo)
        if flat.size:
            raise DataError(
                f"column {data.feature_names[flat[0]]!r} is constant; min_max undefined"
            )
        scaled = (pts - lo) / (hi - lo)
    else:
        mean, sd = pts.mean(axis=0), pts.std(axis=0)
        flat = np.flatnonzero(sd == 0)
        if flat.size:
            raise DataError(
                f"column {data.feature_names[flat[0]]!r} has zero variance; z_score undefined"
            )
        scaled = (pts - mean) / sd
    return Dataset(scaled, data.labels, data.feature_names, data.name)


def load_distance_file(path) -> PairwiseDistances:
    """Read a three-column (i, j, d) distance file into a full matrix.

    Indices are 1-based; the upper triangle is sufficient. N is the largest
    index observed; every unordered pair must be covered exactly once (repeats
    with the same value are tolerated, conflicting values are not).
    """
    path = Path(path)
    try:
        with open(path) as f:
            lines = [ln.strip() for ln in f if ln.strip()]
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc

    entries = []
    n = 0
    for lineno, line in enumerate(lines, start=1):
        parts = line.replace(",", " ").split()
        if len(parts) != 3:
            raise DataError(f"{path}:{lineno}: expected 3 columns (i, j, d), got {len(parts)}")
        try:
            i, j, d = int(float(parts[0])), int(float(parts[1])), float(parts[2])
        except ValueError:
            raise DataError(f"{path}:{lineno}: unparsable entry {line!r}") from None
        if i < 1 or j < 1:
            raise DataError(f"{path}:{lineno}: indices are 1-based, got ({i}, {j})")
        if not np.isfinite(d) or d < 0:
            raise DataError(f"{path}:{lineno}: distance {parts[2]} must be finite and >= 0")
        entries.append((i, j, d, lineno))
        n = max(n, i, j)

    if n == 0:
        raise DataError(f"{path} contains no distance entries")
    matrix = np.zeros((n, n))
    seen: dict[tuple[int, int], float] = {}
    for i, j, d, lineno in entries:
        if i == j:
            if d != 0:
                raise DataError(f"{path}:{lineno}: nonzero self-distance for point {i}")
            continue
        key = (min(i, j), max(i, j))
        if key in seen and seen[key] != d:
            raise DataError(
                f"{path}:{lineno}: pair {key} already has distance {seen[key]:g}, got {d:g}"
            )
        seen[key] = d
        matrix[i - 1, j - 1] = d
        matrix[j - 1, i - 1] = d

    missing = [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if (i + 1, j + 1) not in seen
    ]
    if missing:
        raise DataError(
            f"{path}: {len(missing)} missing pair(s), first {missing[0]} (N inferred as {n})"
        )
    return PairwiseDistances(matrix)


def accuracy(assignment, labels) -> LabelMatching:
    """Clustering accuracy under the optimal one-to-one cluster/class mapping.

    The mapping maximizes the matched count on the contingency table; with
    k != c clusters/classes the unmatched side contributes only errors.
    """
    assignment = np.asarray(assignment)
    labels = np.asarray(labels)
    if assignment.shape != labels.shape or assignment.ndim != 1:
        raise DataError(
            f"assignment has shape {assignment.shape}, labels {labels.shape}"
        )
    n = assignment.shape[0]
    if n < 1:
        raise DataError("empty assignment")

    clusters, cluster_inv = np.unique(assignment, return_inverse=True)
    classes, class_inv = np.unique(labels, return_inverse=True)
    table = np.zeros((clusters.size, classes.size), dtype=np.int64)
    np.add.at(table, (cluster_inv, class_inv), 1)

    rows, cols = linear_sum_assignment(table, maximize=True)
    matched = int(table[rows, cols].sum())
    mapping = {clusters[r].item(): classes[c].item() for r, c in zip(rows, cols)}
    return LabelMatching(cluster_to_label=mapping, accuracy=matched / n)
