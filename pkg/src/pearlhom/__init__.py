"""pearlhom: exact-arithmetic toolkit for canonical Lagrangian pearl complexes.

Assemble the canonical complex of a quantum datum over the group ring of its
disk classes, validate it symbolically (grading, d^2 = 0, the unit cycle),
specialize coefficients (subsystem quotients with sign characters, Novikov
variable, rank-1 local systems, base change), and compute homology, dual
cohomology and the Maslov-filtration spectral sequence, all over exact rings.
"""

__version__ = "0.1.0"

from .rings import (ZZ, QQ, IntegerRing, LaurentPoly, LaurentRing, ModularRing,
                    PrimeField, RationalField, Ring, RingError, ring_from_token)
from .groupring import ClassVector, GroupRing, GroupRingElement, group_ring_mul
from .matrices import (CompositionError, ExactMatrix, InvariantFactors,
                       SNFResult, det, homology_at_degree, kernel_basis,
                       matrix_rank, smith_normal_form)
from .detline import (BasedSpace, ExactSquare, ExactTriple, ExactnessError,
                      GradedLine, SquareReport, block_sum_square,
                      direct_sum_triple, exact_triple_scalar, interchange_sign,
                      random_exact_square, random_exact_triple,
                      random_unimodular, swapped_sum_triple,
                      verify_exact_square)
from .model import (CriticalPoint, DiskRecord, DSquaredReport, Generator,
                    GradedComplex, GradingError, MaslovForm, ModelError,
                    Period, QuantumDatum, SchemaError, assemble_boundary,
                    builtin_datum, builtin_fixture, check_d_squared,
                    complex_of, explicit_complex, fixture_names, load_datum,
                    random_torus2_datum, save_datum, unit)
from .specialize import (CharacterError, LocalSystem, ObstructionError,
                         SignCharacter, Subsystem, change_coefficients,
                         novikov_specialize, parse_specialization_json,
                         quotient_by_subsystem, twist_local_system)
from .homology import (DualComplex, EngineError, HomologyResult, HomologyRow,
                       PrincipalCokerResult, cohomology_window, dual_complex,
                       homology_window, principal_coker, scalarize)
from .spectral import (ConvergenceReport, FilteredComplex, FiltrationError,
                       SpectralPage, compute_pages, convergence_check,
                       maslov_filtration)
