"""Additive-energy uncertainty certificates and sparse spectral recovery on Z_N^d."""

from ._aeup import *  # noqa: F401,F403
from ._aeup import __version__, run_experiment as _run_experiment


def run_experiment(scenario, seed=0, trials=None, include_wall_time=True, **params):
    """Run a harness scenario; keyword arguments become string-valued scenario parameters."""
    opts = {k: ",".join(map(str, v)) if isinstance(v, (list, tuple)) else str(v) for k, v in params.items()}
    return _run_experiment(scenario, seed, trials, opts, include_wall_time)
