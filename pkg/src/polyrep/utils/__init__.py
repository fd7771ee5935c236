"""Utility modules for polyrep."""
from polyrep.utils.work_tracker import work_tracker

__all__ = [
    'work_tracker',
]
