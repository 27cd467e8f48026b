from .base import (
    CATEGORIES,
    FS,
    FSA,
    FWS,
    TWS,
    CategoryMismatch,
    FunctorModule,
    ZeroModule,
    act_matrix,
    eval_module,
    zero_module,
)
from .constructions import (
    Coinvariants,
    Convolution,
    FwsRestriction,
    Pushforward,
    Shift,
    coinvariants,
    convolve,
    plain_set,
    pushforward_u,
    restrict_to_fws,
    shift,
)
from .fourier import FourierTransform, fourier, projector_matrix
from .parse import ModuleSpecError, parse_module
from .projective import PrincipalProjective, principal_projective
from .v0 import V0Bar, V0Tilde, v0_bar, v0_quotient_matrix, v0_tilde
