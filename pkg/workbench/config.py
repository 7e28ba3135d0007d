"""
Run configuration: command-line flags first, then environment (optionally from
a .env file), then defaults.
"""

import os
from typing import List, Literal, Optional

from dotenv import find_dotenv, load_dotenv
from pydantic import BaseModel, Field, field_validator, model_validator

from recursion.Partitions import is_stable

DEFAULT_CACHE_DIR = ".rgrec_cache"
CACHE_DIR_ENV = "RGREC_CACHE_DIR"
DB_PATH_ENV = "RGREC_DB_PATH"

Suite = Literal["all", "euler", "laplace", "oracle", "intersection", "invariants", "diagonal"]
OutputFormat = Literal["json", "tsv", "latex", "pretty"]


class RunConfig(BaseModel):
    """Validated settings for one CLI invocation."""
    command: str
    g: Optional[int] = Field(default=None, ge=0)
    n: Optional[int] = Field(default=None, ge=1)
    p: Optional[List[int]] = None
    box: Optional[int] = Field(default=None, ge=1)
    truncation: int = Field(default=10, ge=1)
    max_sum: int = Field(default=20, ge=2)
    max_level: int = Field(default=3, ge=1)
    limit: int = Field(default=10, ge=1)
    suite: Suite = "all"
    output_format: OutputFormat = "json"
    cache_dir: str = DEFAULT_CACHE_DIR
    db_path: str = os.path.join(DEFAULT_CACHE_DIR, "results.db")
    log_file: Optional[str] = None
    guard_e: int = Field(default=6, ge=1)
    workers: int = Field(default=1, ge=1)
    verbose: bool = False

    @field_validator("p", mode="before")
    @classmethod
    def parse_perimeters(cls, value):
        if isinstance(value, str):
            try:
                return [int(x) for x in value.split(",") if x.strip()]
            except ValueError:
                raise ValueError(f"--p must be a comma-separated list of integers, got '{value}'")
        return value

    @model_validator(mode="after")
    def check_type(self):
        if self.g is not None and self.n is not None and not is_stable(self.g, self.n):
            raise ValueError(f"(g, n) = ({self.g}, {self.n}) is not stable: need 2g - 2 + n > 0")
        if self.p is not None:
            if self.n is not None and len(self.p) != self.n:
                raise ValueError(f"--p has {len(self.p)} entries, expected n = {self.n}")
            if any(x < 1 for x in self.p):
                raise ValueError(f"perimeters must be positive, got {self.p}")
        return self

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        load_dotenv(find_dotenv(usecwd=True))
        cache_dir = getattr(args, "cache_dir", None) or os.getenv(CACHE_DIR_ENV) or DEFAULT_CACHE_DIR
        db_path = getattr(args, "db", None) or os.getenv(DB_PATH_ENV) or os.path.join(cache_dir, "results.db")
        values = {
            "command": args.command,
            "cache_dir": cache_dir,
            "db_path": db_path,
            "log_file": getattr(args, "log_file", None),
            "guard_e": getattr(args, "guard_e", 6),
            "workers": getattr(args, "workers", 1),
            "verbose": getattr(args, "verbose", False),
        }
        optional = {
            "g": "g", "n": "n", "p": "p", "box": "box", "truncation": "truncation",
            "max_sum": "max_sum", "max_level": "max_level", "limit": "limit",
            "suite": "suite", "output_format": "format",
        }
        for field, attr in optional.items():
            value = getattr(args, attr, None)
            if value is not None:
                values[field] = value
        return cls(**values)
