"""Linear-optics simulation of qudit teleportation with antisymmetric OAM photon states."""

__version__ = "0.1.0"

from .antisym import (
    LambdaMatrix,
    PartitionSpec,
    SchmidtDecomposition,
    antisym_dimension,
    antisymmetric_state,
    laplace_partition,
    schmidt_spectrum,
)
from .bell_filter import (
    BellFilterSpec,
    GeneralizedBellIndex,
    bell_filter_unitary,
    check_sufficiency,
    coincidence_project,
    cofactor,
    generalized_bell_state,
)
from .fock import (
    DensityOperator,
    ModeId,
    PureState,
    Register,
    fidelity,
    inner_product,
    make_state,
    partial_trace,
    tensor,
)
from .optics import (
    BeamSplitterSpec,
    ModeUnitary,
    apply_unitary,
    beam_splitter,
    compose,
    permanent,
    transition_amplitude,
)
from .prep import PrepReport, prepare_antisymmetric, qutrit_prep_demo
from .teleport import (
    QuditInput,
    TeleportReport,
    bell_filter_response,
    efficiency_curve,
    teleport_collective,
    teleport_single_qudit,
)
