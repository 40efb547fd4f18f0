import os
from pathlib import Path

# Persistent table cache beside the repo so repeated runs skip the expensive
# contour extraction; safe to delete at any time.
os.environ.setdefault(
    "ZETALINE_CACHE_DIR", str(Path(__file__).resolve().parent.parent / ".zetaline_cache")
)
