"""Run configuration shared by the CLI and the scripts."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class VerifyConfig:
    suite: str = "all"
    json_path: str | None = None  # '-' means stdout
    dump_dir: str | None = None
    quiet: bool = False

    @classmethod
    def from_args(cls, args) -> VerifyConfig:
        return cls(args.suite, args.json, args.dump_matrices, args.quiet)
