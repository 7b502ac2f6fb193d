from .harness import BenchSweep, measure_run, sweep, time_run

__all__ = ["BenchSweep", "measure_run", "sweep", "time_run"]
