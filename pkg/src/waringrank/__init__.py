"""Exact Waring rank of binary forms: Sylvester's algorithm, the binomial rank
table, explicit decompositions and real-rank facts."""

__version__ = "0.1.0"

from .apolarity import (
    ApolarPair,
    HilbertFunctionTable,
    apolar_generators,
    catalecticant,
    hilbert_function,
    min_apolar_form,
)
from .binomial import BinomialShape, binomial_rank, monomial_rank, normalize_binomial
from .decomposition import WaringDecomposition, decompose, projective_roots, squarefree_annihilator
from .errors import (
    ConvergenceError,
    DomainError,
    NotABinomial,
    ParseError,
    SearchFailed,
    VerificationError,
    WaringError,
)
from .forms import (
    BinaryForm,
    CoordinateChange,
    Role,
    apolar_apply,
    change_coords,
    falling_factorial,
    is_square_free,
)
from .parser import parse_form, render
from .realrank import (
    RealBinomialClass,
    RealRankReport,
    count_real_roots,
    real_binomial_class,
    real_rank,
    splits_over_reals,
)
from .sylvester import Method, RankCertificate, generic_rank, waring_rank
