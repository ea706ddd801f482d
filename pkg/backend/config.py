from fractions import Fraction
from typing import List

from pydantic import BaseModel, Field, field_validator


class OracleConfig(BaseModel):
    """Truncation oracle knobs."""
    sizes: List[int] = Field(default_factory=lambda: [64, 128, 256])
    tol: float = 1e-8
    cap_per_atom: int = 8
    max_dimension: int = 4096
    edge_fraction: float = 0.125
    edge_mass_threshold: float = 0.5
    gap_ratio: float = 1e-2
    stable_ratio: float = 0.75
    shrink_slack: float = 1.25

    @field_validator("sizes")
    @classmethod
    def _sizes_increasing(cls, sizes: List[int]) -> List[int]:
        if len(sizes) < 2:
            raise ValueError("at least two truncation sizes are required")
        if any(n < 2 for n in sizes):
            raise ValueError("truncation sizes must be >= 2")
        if any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise ValueError("truncation sizes must be strictly increasing")
        return sizes

    @field_validator("cap_per_atom", "max_dimension")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be positive")
        return value


class RegionConfig(BaseModel):
    max_predicates: int = 32
    max_refinement_depth: int = 48
    max_ray_directions: int = 64


class VerificationConfig(BaseModel):
    samples: int = 25
    seed: int = 0
    # sampled points keep this rational distance from every boundary predicate
    sample_margin: Fraction = Fraction(1, 8)
    sample_window: int = 4
    literal_printed_formulas: bool = False

    model_config = {"arbitrary_types_allowed": True}


class CalculusConfig(BaseModel):
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    region: RegionConfig = Field(default_factory=RegionConfig)
    verification: VerificationConfig = Field(default_factory=VerificationConfig)


DEFAULT_CONFIG = CalculusConfig()
