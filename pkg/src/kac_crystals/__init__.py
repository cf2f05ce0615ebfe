"""kac-crystals: кристаллы Кашивары, правило сигнатуры и комбинаторика типа A."""

import os
import sys

__version__ = "0.1.0"

# Кириллица в логах и ⊗, ⋀, − в результатах на любой консоли
os.environ.setdefault("PYTHONIOENCODING", "utf-8")

for _stream in (sys.stdout, sys.stderr, sys.stdin):
    if _stream and hasattr(_stream, "reconfigure"):
        try:
            _stream.reconfigure(encoding="utf-8", errors="replace")
        except Exception:
            pass
