"""Early time-series classification algorithms and benchmark harness."""

import json
import os

from . import _etsc
from ._etsc import DataError, Dataset, ParseError, harmonic_mean, load_dataset, stratified_folds

__all__ = [
    "DataError",
    "Dataset",
    "Model",
    "ParseError",
    "algorithms",
    "dataset_stats",
    "harmonic_mean",
    "load_dataset",
    "run_experiment",
    "stratified_folds",
]


def algorithms():
    return list(_etsc.algorithms())


def dataset_stats(dataset):
    return json.loads(_etsc.dataset_stats(dataset))


def _rows(series):
    # Accept a flat sequence for univariate data, or one sequence per variable.
    rows = [list(map(float, r)) if hasattr(r, "__len__") else None for r in series]
    if any(r is None for r in rows):
        return [[float(v) for v in series]]
    return rows


class Model:
    """A trained early classifier; classify() streams one series and returns (label, trigger)."""

    def __init__(self, algorithm, train, params=None, seed=0, multivariate="auto"):
        self._model = _etsc.Model(algorithm, train, json.dumps(params or {}), seed, multivariate)
        self.class_names = list(train.class_names)

    @property
    def name(self):
        return self._model.name

    @property
    def length(self):
        return self._model.length

    def classify(self, series):
        label, trigger = self._model.classify(_rows(series))
        return self.class_names[label], trigger


def run_experiment(config, base_dir=None):
    """Runs a benchmark configuration (dict or path to a JSON file) and returns its records."""
    if isinstance(config, (str, os.PathLike)):
        base_dir = base_dir or os.path.dirname(os.path.abspath(config))
        with open(config) as f:
            config = json.load(f)
    return json.loads(_etsc.run_experiment(json.dumps(config), str(base_dir or "")))
