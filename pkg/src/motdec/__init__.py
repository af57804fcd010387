"""Exact index combinatorics for motivic and Lefschetz decompositions of abelian schemes."""

from .weights import (
    AbelianDescriptor,
    BrauerTag,
    DescriptorError,
    InvolutionTag,
    OrbitClass,
    PermutationGroup,
    ResourceLimitError,
    SimpleFactorDescriptor,
    UnsupportedFamilyError,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianDescriptor",
    "BrauerTag",
    "DescriptorError",
    "InvolutionTag",
    "OrbitClass",
    "PermutationGroup",
    "ResourceLimitError",
    "SimpleFactorDescriptor",
    "UnsupportedFamilyError",
]
