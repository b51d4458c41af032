"""Off-diagonal and diagonal geometric phases of a precessing neutron spin."""

from .beamline import (
    BeamConfig,
    H_BEAM,
    Interferogram,
    O_BEAM,
    h_beam_intensity,
    mixed_intensity,
    o_beam_intensity,
    o_beam_intensity_closed_form,
    synthesize_interferogram,
    synthesize_pair,
)
from .bloch import (
    AntipodalPoints,
    OpenLoop,
    UndefinedLoop,
    direct_evolution_loop,
    geodesic_arc,
    loop_solid_angle,
    off_diagonal_loop,
    precession_trajectory,
    to_bloch,
)
from .fitters import (
    DegenerateGrid,
    InsufficientData,
    SinusoidFit,
    fit_sinusoid,
    phase_shift,
    visibility_curve,
)
from .phases import (
    PhaseResult,
    dynamical_phase,
    generalized_bp_phase,
    off_diagonal_phase,
    pancharatnam_phase_hbeam,
    phase_of,
)
from .spinor import (
    basis_transform,
    conjugate_evolution,
    make_plus_state,
    orthogonal,
    precession_unitary,
    projector,
)

__version__ = "0.1.0"
