"""Module entrypoint for ``python -m hauteur``."""

from __future__ import annotations

from .cli import main

raise SystemExit(main())
