"""Regenerate the bundled UCI CSV files from scikit-learn's canonical copies.

Run from the repository root:

    python3 scripts/make_datasets.py

Hayes-Roth is not bundled with scikit-learn; see README for how to add it.
"""

import csv
from pathlib import Path

from sklearn.datasets import load_iris, load_wine

OUT = Path(__file__).resolve().parents[1] / "data"

IRIS_LABELS = {0: "Iris-setosa", 1: "Iris-versicolor", 2: "Iris-virginica"}
IRIS_COLUMNS = ["sepal_length", "sepal_width", "petal_length", "petal_width", "class"]


def write_iris() -> None:
    iris = load_iris()
    with open(OUT / "iris.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(IRIS_COLUMNS)
        for row, target in zip(iris.data, iris.target):
            w.writerow([f"{v:g}" for v in row] + [IRIS_LABELS[int(target)]])


def write_wine() -> None:
    wine = load_wine()
    names = [n.replace("/", "_") for n in wine.feature_names]
    with open(OUT / "wine.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(names + ["class"])
        for row, target in zip(wine.data, wine.target):
            w.writerow([f"{v:g}" for v in row] + [int(target) + 1])


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    write_iris()
    write_wine()
    print("wrote", OUT / "iris.csv", "and", OUT / "wine.csv")
