"""Internal utilities for the hauteur package.

This module provides the argument checks shared by the public kernels.
These functions are not part of the public API.
"""

from __future__ import annotations

from . import validation

__all__ = ["validation"]
