"""Dispatch from a type code to an executable KR crystal model."""
from __future__ import annotations

from .cartan import CartanDatum, datum
from .errors import OutOfScope
from .kr import KRCrystal
from .kr_a import KRCrystalA
from .virtual_a2 import VirtualKR

_EXCLUDED = {
    "B": "native B-type KR model out of scope",
    "C": "native C-type KR model out of scope",
    "D": "native D-type KR model out of scope",
    "A2odd": "native A_{2n-1}^(2) KR model out of scope",
    "D2": "native D_{n+1}^(2) KR model out of scope",
}


def kr_crystal(type_code: str | CartanDatum, r: int, s: int) -> KRCrystal:
    """``B^{r,s}`` for type A_n^(1) (tableaux) or A_{2n}^(2) (virtual)."""
    d = type_code if isinstance(type_code, CartanDatum) else datum(type_code)
    fam, n = d.type.family, d.n
    if fam == "A":
        return KRCrystalA(n, r, s)
    if fam == "A2even":
        if not 1 <= r <= n:
            raise ValueError(f"r must lie in 1..{n}")
        return VirtualKR(n, r, s)
    raise OutOfScope(_EXCLUDED.get(fam, f"no KR model for family {fam}"))


def is_implemented(type_code: str | CartanDatum) -> bool:
    d = type_code if isinstance(type_code, CartanDatum) else datum(type_code)
    return d.type.family in ("A", "A2even")
