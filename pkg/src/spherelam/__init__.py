"""Exact combinatorics of curves, triangulations and shear coordinates
on the four-punctured sphere.

Everything is integer/rational arithmetic; no floating point anywhere.
The main entry points are:

- :mod:`spherelam.lattice` -- rational slopes, Farey relations, basis changes
- :mod:`spherelam.curves` -- tagged arcs, allowable curves, compatibility
- :mod:`spherelam.triangulation` -- tagged triangulations, flips, exchange matrices
- :mod:`spherelam.shear` -- shear coordinates (three independent computation paths)
- :mod:`spherelam.fan` -- maximal cones of the rational quasi-lamination fan
- :mod:`spherelam.cli` -- command line front end
"""

from .lattice import (
    Slope,
    UnimodularMap,
    standard_form,
    farey_distance,
    is_farey1_triple,
    mediant,
    enumerate_slopes,
    separating_neighbors,
    triple_to_basis,
)
from .curves import (
    Puncture,
    Tagging,
    SpiralDir,
    TaggedArc,
    AllowableCurve,
    PairClass,
    endpoint_sets,
    kappa,
    kappa_inv,
    arcs_compatible,
    curves_compatible,
    classify_pair,
    enumerate_arcs,
    enumerate_curves,
)
from .triangulation import (
    TaggedTriangulation,
    TriType,
    base_triangulation,
    classify,
    build_type,
    enumerate_triangulations,
    flip,
    signed_adjacency,
    mutate,
)
from .shear import (
    Word,
    TypeITri,
    Tangle,
    QuasiLamination,
    word_prime,
    word_of_curve,
    shear_via_word,
    shear_closed_form,
    shear_oracle,
    shear_wrt,
    shear_lamination,
    tangle_shear,
    torus_shear,
    sphere_torus_check,
    find_witness,
    apply_perm,
    PERM_X, PERM_Z, GROUP_X, GROUP_Y, GROUP_Z, GAMMA24,
)
from .fan import (
    MaximalCollection,
    Cone,
    maximal_collections,
    cone_of,
    membership,
    locate,
    count_containing_cones,
    g_vectors,
    universal_coeffs,
    flip_adjacency,
    fan_check,
    induced_torus_check,
)

__version__ = "0.1.0"
