"""
Work accounting for polyrep.

This module counts the expensive exact operations performed during a run
(LP solves, wedge distance evaluations, epsilon evaluations, samples) so
that the command-line tools can report them at the end of a run.
"""
import logging
from typing import Any, Dict

logger = logging.getLogger(__name__)


class WorkTracker:
    """Track the amount of exact work done by the pipeline."""

    COUNTERS = (
        "lp_solves",
        "lp_pivots",
        "vertex_subsets",
        "wedge_evaluations",
        "exact_epsilon_evaluations",
        "certified_epsilon_verdicts",
        "samples",
    )

    def __init__(self):
        """Initialize the tracker."""
        self.reset()

    def reset(self):
        """Reset all counters."""
        self.counts = {name: 0 for name in self.COUNTERS}

    def track(self, name: str, amount: int = 1):
        """
        Add to one counter.

        Args:
            name: Counter name, one of ``COUNTERS``.
            amount: Amount to add.
        """
        if name not in self.counts:
            logger.warning(f"Unknown work counter: {name}")
            self.counts[name] = 0
        self.counts[name] += amount

    def get_work_summary(self) -> Dict[str, Any]:
        """Return a copy of all counters."""
        return dict(self.counts)

    def format_work_summary(self) -> str:
        """
        Format the counters as a human-readable string.

        Returns:
            Formatted summary; counters that stayed at zero are omitted.
        """
        lines = ["EXACT WORK:"]
        used = [(name, value) for name, value in self.counts.items() if value > 0]
        if not used:
            lines.append("  - nothing recorded")
        for name, value in used:
            lines.append(f"  - {name.replace('_', ' ')}: {value}")
        return "\n".join(lines)


# Global instance for convenience
work_tracker = WorkTracker()
