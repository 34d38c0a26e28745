"""hopfkit: exact computer algebra for finite-dimensional Hopf algebras.

Structure constants over exact fields, R-matrix verification, Drinfeld
doubles, twists, transmutation, splitting certificates, and a group-part
obstruction for the existence of R-matrices.
"""

from .algebra import AlgebraPresentation, center, characters, verify_algebra
from .catalog import (
    build_catalog,
    cyclic_group_algebra,
    group_algebra,
    sweedler,
    symmetric_group_algebra,
    taft,
    trivial_hopf,
)
from .checks import Check, Report
from .errors import (
    BuilderError,
    HopfkitError,
    PreconditionError,
    StructureError,
    UsageError,
)
from .fields import CyclotomicField, Field, PrimeField, Rationals, field_from_json
from .gfpoly import factor_primefield_poly
from .hopf import (
    HopfAlgebra,
    HopfMorphism,
    QuotientData,
    coinvariants,
    dual_hopf,
    grouplikes,
    identity_morphism,
    is_normal_left_coideal_subalgebra,
    op_cop,
    quotient_by_coideal,
    tensor_hopf,
    verify_extension,
    verify_hopf,
    verify_morphism,
)
from .linalg import Matrix, Subspace
from .qt import (
    BraidedDualData,
    BraidedHopfData,
    QTStructure,
    TensorSquareElement,
    Twist,
    apply_twist,
    braided_dual,
    check_braided_projection,
    drinfeld_double,
    is_factorizable,
    lr_maps,
    monodromy,
    phi_maps,
    ribbon_check,
    tensor_qt,
    transmute,
    verify_rmatrix,
    verify_twist,
)
from .splitting import (
    FactorizationWitness,
    ObstructionReport,
    SplitCertificate,
    double_splitting,
    exact_factorization,
    extension_split,
    mueger_quotient,
    obstruction_check,
    split_via_factorizable,
    split_via_fullrank,
    verify_certificate,
)
from .tensors import SparseTensor3

__version__ = "0.1.0"
