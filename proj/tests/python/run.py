"""ctest entry point: runs the pytest suite when the cylrig module is importable."""
import sys
from pathlib import Path

try:
    import cylrig  # noqa: F401
except ImportError:
    print("cylrig python module not installed; skipping")
    sys.exit(77)

import pytest

sys.exit(pytest.main(["-q", str(Path(__file__).parent)]))
