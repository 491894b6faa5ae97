from functools import lru_cache

from hypothesis import settings

from krlab.models import kr_crystal

settings.register_profile("krlab", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("krlab")


@lru_cache(maxsize=None)
def kr(type_code: str, r: int, s: int):
    """Shared KR crystal instances; graphs are cached on the objects."""
    return kr_crystal(type_code, r, s)
