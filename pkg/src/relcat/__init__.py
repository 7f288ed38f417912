"""Finite relation algebras over Heyting-valued truth and a law checker."""
from __future__ import annotations

__version__ = "0.1.0"
