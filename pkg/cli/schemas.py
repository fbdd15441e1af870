"""
--json result envelopes, one per verb.

Every envelope carries its verb so a consumer reading mixed output can
dispatch on it.  Orders are in their compact text form ("2314"), signs as
"+-" text; field order is declaration order, so model_dump_json() output is
byte-stable.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel

# ---------------------------------------------------------------------------
# encode / decode / enum
# ---------------------------------------------------------------------------

class EncodeResult(BaseModel):
    verb: Literal["encode"] = "encode"
    order: str
    signs: str
    positive_positions: str
    top: int
    inversions: int


class DecodeResult(BaseModel):
    verb: Literal["decode"] = "decode"
    signs: str
    order: str
    top: int


class EnumResult(BaseModel):
    verb: Literal["enum"] = "enum"
    n: int
    count: int
    orders: list[str] | None = None
    # Entry i−1 = orders peaking at i; only with --counts.
    counts_by_top: list[int] | None = None


# ---------------------------------------------------------------------------
# poset / path / check
# ---------------------------------------------------------------------------

class PosetResult(BaseModel):
    verb: Literal["poset"] = "poset"
    n: int
    nodes: list[str]
    arcs: list[tuple[str, str]]
    levels: dict[int, list[str]]


class PathResult(BaseModel):
    verb: Literal["path"] = "path"
    source: str
    target: str
    found: bool
    path: list[str] | None = None


class CheckResult(BaseModel):
    verb: Literal["check"] = "check"
    n: int
    size: int
    single_peaked: bool
    minimally_rich: bool
    maximal_width: bool
    semi_connected: bool
    peak_pit: bool
    lattice: bool

    @property
    def passed(self) -> bool:
        return all(
            (
                self.single_peaked,
                self.minimally_rich,
                self.maximal_width,
                self.semi_connected,
                self.peak_pit,
                self.lattice,
            )
        )


# ---------------------------------------------------------------------------
# majority / verify-cd
# ---------------------------------------------------------------------------

class MajorityResult(BaseModel):
    verb: Literal["majority"] = "majority"
    n: int
    m: int
    # (x, y): a strict majority ranks x above y.
    prefers: list[tuple[int, int]]
    cycle: list[int] | None = None
    majority_order: str | None = None


class VerifyResult(BaseModel):
    verb: Literal["verify-cd"] = "verify-cd"
    n: int
    m: int
    domain_size: int
    condorcet: bool
    profiles_checked: int
    # Same shape as a profile file: {"voters": [[...], ...]}.
    witness: dict[str, list[list[int]]] | None = None
    witness_cycle: list[int] | None = None


# ---------------------------------------------------------------------------
# tiling / intervals
# ---------------------------------------------------------------------------

class TilingResult(BaseModel):
    verb: Literal["tiling"] = "tiling"
    n: int
    tiles: int
    highlight: str | None = None
    svg: str


class IntervalsResult(BaseModel):
    verb: Literal["intervals"] = "intervals"
    n: int
    nodes: int
    arcs: int
    dot: str
