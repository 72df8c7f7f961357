"""Graph family specifications."""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

Family = Literal["disjoint_cliques", "complement_blowup", "random"]


class FamilySpec(BaseModel):
    """Parameters of a named construction; validated before any graph is built."""

    family: Family
    m: Optional[int] = Field(default=None, ge=1, description="number of cliques")
    k: Optional[int] = Field(default=None, ge=1, description="clique size / target degree count")
    b: Optional[int] = Field(default=None, ge=1, description="inner clique size of the complement blow-up")
    n: Optional[int] = Field(default=None, ge=0, description="vertex count")
    p: Optional[float] = Field(default=None, ge=0, le=1, description="edge probability")
    seed: Optional[int] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _check_family_parameters(self) -> "FamilySpec":
        if self.family == "disjoint_cliques":
            if self.m is None or self.k is None:
                raise ValueError("disjoint_cliques needs m and k")
        elif self.family == "complement_blowup":
            if self.k is None or self.b is None or self.n is None:
                raise ValueError("complement_blowup needs k, b and n")
            if self.b > self.k or self.k % self.b or self.n % self.k:
                raise ValueError("complement_blowup needs b <= k, b | k and k | n")
        elif self.family == "random":
            if self.n is None or self.p is None or self.seed is None:
                raise ValueError("random needs n, p and seed")
        return self

    def describe(self) -> str:
        if self.family == "disjoint_cliques":
            return f"disjoint_cliques(m={self.m}, k={self.k})"
        if self.family == "complement_blowup":
            return f"complement_blowup(k={self.k}, b={self.b}, n={self.n})"
        return f"random(n={self.n}, p={self.p}, seed={self.seed})"
