"""Equivariant syzygies of 2x2 permanental ideals: descriptors, Betti and
Hilbert tables, and a brute-force Koszul homology verifier."""

__version__ = "0.1.0"

from .betti import (
    BettiTable,
    betti_D,
    betti_from_descriptors,
    betti_P_closed,
    betti_P_ghsw,
    betti_P_summation,
    betti_table,
    crosscheck,
)
from .hilbert import hf_closed, hf_oracle, verify_additivity
from .koszul import KoszulResolver
from .orbits import (
    MultidegreePattern,
    OrbitModule,
    StrandDescriptor,
    descriptors_for,
    ext_D_descriptors,
    ext_P_descriptors,
    exterior_orbit_rep,
    orbit_module_decompose,
    orbit_module_dim,
    source_module_descriptors,
)
from .partitions import (
    class_size,
    hook_dim,
    lr_coeffs,
    mn_character,
    multinomial,
    partitions_of,
)
from .reps import (
    IND,
    SIGN,
    TRIV,
    VirtualRep,
    character_vector,
    decompose_character,
    induce,
    lr_product,
    vrep_dim,
)
