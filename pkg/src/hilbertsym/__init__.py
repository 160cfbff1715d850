"""Hilbert transforms on the line and circle, the scale/shift group and
rational-dilation semigroup acting on them, and a symmetry engine that
extracts the scalar structure of operators commuting with those actions."""

__version__ = "0.1.0"

from .signals import (  # noqa: F401
    CircleSamples,
    CircleSignal,
    Grid1D,
    LineSignal,
    LineSpectrum,
    dft,
    idft,
    inner_product,
    norm,
)
from .line_ops import (  # noqa: F401
    AffineElement,
    AliasingError,
    HalfLineSignal,
    dilate,
    group_compose,
    group_inverse,
    hardy_project,
    hilbert_multiplier,
    hilbert_pv_quadrature,
    intertwine_defect,
    rep_fourier_side,
    rep_natural,
    translate,
)
from .circle_ops import (  # noqa: F401
    MoebiusElement,
    RationalScale,
    SignalFamily,
    annihilator_witness,
    cauchy_pv,
    cauchy_symbol,
    circular_convolve,
    circular_hilbert,
    circular_hilbert_quadrature,
    mean_functional,
    moebius_act,
    plemelj_project,
    semigroup_act,
    semigroup_act_samples,
    zero_set,
)
from .symmetry import (  # noqa: F401
    FourierBasis,
    LineBasis,
    OperatorMatrix,
    ScalarDecomposition,
    classify_pm_hilbert,
    commutator_defect,
    decompose_circle_operator,
    decompose_line_operator,
    rotation_commutant_analysis,
    synthesize_commuting_operator,
)
from .probes import make_probes  # noqa: F401
from .verify import SuiteConfig, SuiteReport, run_verify  # noqa: F401
