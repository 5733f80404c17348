"""Exact curvature positivity for compact irreducible hermitian symmetric
spaces: root systems, Chevalley constants, bisectional curvature forms and
the connectivity ranges they imply."""

from .catalog import (HermitianSpace, check_psi_closure, complementary_roots,
                      resolve, strongly_orthogonal_cascade,
                      symmetric_space_rank)
from .chevalley import (AlgebraElement, StructureTable, bracket, killing_form,
                        structure_constants)
from .connectivity import (ConnectivityReport, connectivity,
                           grassmann_rank_refinement, index_bound,
                           closed_form_check)
from .curvature import (ConeLine, HermitianForm, TangentVector,
                        bracket_curvature_oracle, complex_positivity,
                        curvature_component, ell_of_line, grassmann_rank,
                        hermitian_form, maximal_cone_subspace, nullity,
                        oracle_agreement, orbit_positivity_values, psi_prime)
from .errors import ConfigError, ConsistencyError
from .roots import Root, RootSystem, build_root_system
from .verify import run_verify, verify_space

__version__ = "0.1.0"
