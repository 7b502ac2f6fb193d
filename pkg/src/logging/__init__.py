from .sim_logger import get_sim_logger, SimulationLogger, RunOutcome

__all__ = ["get_sim_logger", "SimulationLogger", "RunOutcome"]
