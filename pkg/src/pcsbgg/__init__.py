"""Weight-level BGG sequences for parabolic contact structures and their descent to PCS-structures.

Exact-arithmetic toolkit: root systems and Weyl groups (:mod:`.lattice`),
crossed-node parabolics and Hasse diagrams (:mod:`.parabolic`), homology
weights (:mod:`.kostant`), dimensions and multiplicities (:mod:`.repinfo`),
BGG diagrams (:mod:`.bgg`) and cohomology bookkeeping for descended
complexes (:mod:`.descent`).
"""

from .bgg import BGGDiagram, build_bgg, build_relative_bgg, operator_order, preset
from .descent import (CohomologyProfile, contractible_profile, cpn_profile,
                      descended_cohomology, les_oracle)
from .errors import InputError, ResourceGuardError
from .kostant import homology_weights, relative_homology_weights
from .lattice import (LieType, WeylElement, affine_act, build_root_system, element_from_word,
                      inner_product, weight_to_root_basis)
from .parabolic import (brute_force_hasse, hasse_diagram, is_contact_grading, make_parabolic,
                        relative_hasse)
from .repinfo import (CartanElement, cartan_product, center_character, freudenthal,
                      kernel_dim, levi_dim, weyl_dim)

__version__ = "0.1.0"
