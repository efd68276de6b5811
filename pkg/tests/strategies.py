"""Hypothesis strategies shared by the property suites."""

import random

from hypothesis import strategies as st

from moritakit.algebra import build_algebra
from moritakit.fuzz import FuzzConfig, generate_case

SMALL = FuzzConfig(max_vertices=3, max_arrows=4, max_relation_length=3)


def presentation_from_seed(seed, config=SMALL):
    return generate_case(random.Random(seed), config)


seeds = st.integers(min_value=0, max_value=2**32 - 1)
presentations = seeds.map(presentation_from_seed)


def algebra_from_seed(seed, config=SMALL):
    return build_algebra(presentation_from_seed(seed, config), f"fuzz{seed}")


algebras = seeds.map(algebra_from_seed)
