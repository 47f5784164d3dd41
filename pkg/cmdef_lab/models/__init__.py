"""
Shared Models - cmdef_lab
Pydantic schemas used across the CLI and the pipelines
"""

from .job_spec import CLI_ORDERS, Command, JobSpec, PARAMETRIZED

__all__ = ["CLI_ORDERS", "Command", "JobSpec", "PARAMETRIZED"]
