from typing import Any, Optional

from package import key
from package.core.rng import RngSpec


class RunConfig:
    """Everything needed to reproduce a run; echoed into every metadata file."""

    def __init__(
        self,
        command: str,
        rng: RngSpec,
        params: Optional[dict[str, Any]] = None,
        replicas: int = 1,
        output: str = "",
        jobs: int = 1,
    ):
        self.command = command
        self.rng = rng
        self.params = params or {}
        self.replicas = replicas
        self.output = output
        self.jobs = jobs

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            key.SEED_KEY: self.rng.seed,
            "stream": self.rng.stream,
            key.RNG_KEY: str(self.rng),
            "params": self.params,
            "replicas": self.replicas,
            "output": self.output,
            "jobs": self.jobs,
        }

    def __repr__(self) -> str:
        return f"RunConfig({self.to_dict()})"
