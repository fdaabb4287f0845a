from __future__ import annotations

from hypothesis import settings

# exact arithmetic makes individual examples slow but deterministic
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")
