#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Markdown run logs for CLI commands.
"""

import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from .types import RunMetrics


class MarkdownLogger:
    """Logs CLI runs (parameters, results, metrics) to markdown files."""

    def __init__(self, log_dir: str | Path = "logs"):
        """
        Initialize markdown logger.

        Args:
            log_dir: Directory to store log files
        """
        self.log_dir = Path(log_dir)
        self.log_dir.mkdir(parents=True, exist_ok=True)

    def _unique_filename(self, command: str) -> str:
        """`<command>_run.md`, with a counter suffix if that file already exists."""
        base_filename = f"{command}_run.md"
        counter = 0
        final_filename = base_filename
        while (self.log_dir / final_filename).exists():
            counter += 1
            final_filename = f"{command}_run_{counter:03d}.md"
        return final_filename

    def log_run(
        self,
        command: str,
        parameters: Dict[str, Any],
        results: Optional[Dict[str, Any] | List[Dict[str, Any]]],
        metrics: RunMetrics,
        config_path: Optional[str | Path] = None,
    ) -> Path:
        """
        Write one run log.

        Args:
            command: CLI command name
            parameters: Resolved run parameters
            results: Result record(s), rendered as JSON
            metrics: Timing and output bookkeeping
            config_path: Config file the run was started from

        Returns:
            Path of the written log
        """
        log_file = self.log_dir / self._unique_filename(command)

        with open(log_file, "w", encoding="utf-8") as f:
            f.write("# spiralmech Run Log\n\n")
            f.write(f"**Timestamp:** {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}\n")
            f.write(f"**Command:** {command}\n")
            if config_path:
                f.write(f"**Config:** `{config_path}`\n")
            f.write("\n")

            f.write("## Parameters\n\n")
            for key, value in parameters.items():
                f.write(f"- **{key}:** {value}\n")
            f.write("\n")

            f.write("## Results\n\n")
            f.write("```json\n")
            f.write(json.dumps(results, indent=2, ensure_ascii=False, default=str))
            f.write("\n```\n\n")

            self._write_metrics_table(f, metrics)
        return log_file

    def _write_metrics_table(self, f, metrics: RunMetrics) -> None:
        """
        Write metrics table to file.

        Args:
            f: File handle
            metrics: Run metrics to write
        """
        f.write("## Run Metrics\n\n")
        f.write("| Metric | Value |\n")
        f.write("|--------|-------|\n")
        f.write(f"| Total Time (s) | {metrics.total_time:.3f} |\n")
        f.write(f"| Points | {metrics.n_points} |\n")
        f.write(f"| Failed Points | {metrics.n_failed} |\n")
        for path in metrics.outputs:
            f.write(f"| Output | `{path}` |\n")
        f.write("\n")
