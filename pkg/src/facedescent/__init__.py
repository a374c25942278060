"""Exact computations on the face algebra of the braid arrangement.

The pieces, roughly in dependency order:

- ``combinatorics``: partitions, compositions, set partitions, permutations
- ``faces``: ordered set partitions under the Tits product, sparse algebra elements
- ``characters``, ``symfunc``: symmetric-group characters and symmetric functions
- ``idempotents``: an equivariant complete family of orthogonal idempotents
- ``repanalysis``: brute-force characters of E_lam CF_n E_mu
- ``lyndon``: Lyndon words and the necklace regrouping bijection
- ``genfunc``: the Lyndon-word generating function and its comparison with the oracle
"""

from .combinatorics import *  # noqa: F401,F403
from .config import CapExceeded, DEFAULT_CAPS, cap, check_cap
from .faces import (
    Face,
    FaceAlgebraElement,
    FaceMonoid,
    act,
    act_linear,
    bidigare_image,
    enumerate_faces,
    face_monoid,
    faces_of_type,
    multiply,
    support,
    tits_product,
)
from .characters import CharacterTable, character_table, character_value, dimension
from .symfunc import (
    SymFunc,
    frobenius_from_traces,
    h,
    h_of,
    hall_inner,
    higher_lie,
    lie,
    monomial_coefficient,
    p,
    plethysm,
    s,
    schur_expand,
)
from .idempotents import FamilyCheckError, IdempotentFamily, build_family, orbit_annihilation_check, verify_family
from .repanalysis import (
    ProjectedSpace,
    ch_of_right_module,
    character_of,
    composition_multiplicity,
    isotypic_dimension,
    projected_space,
    sign_isotypic_type,
)
from .lyndon import (
    Necklace,
    duval_factorization,
    f_map,
    is_lyndon,
    lyndon_type,
    lyndon_words_up_to,
    primitive_necklaces_with_content,
    psi,
    theta,
)
from .genfunc import (
    BivariateSeries,
    cartan_via_count,
    cartan_via_series,
    coefficient,
    rhs_series,
    verify_main_theorem,
)

__version__ = "0.1.0"
