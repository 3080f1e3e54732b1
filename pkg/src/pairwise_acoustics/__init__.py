"""Exact and Barnes-Hut pairwise interaction engines over acoustic feature points."""

from .allpairs import InteractionResult, KernelConfig, adjust_amplitude, all_pairs, calculate_similarity
from .barneshut import (
    QuadNode,
    QuadTree,
    barnes_hut,
    build_tree,
    calculate_force,
    compute_force,
    compute_mass_distribution,
    dump_tree,
    insert_to_node,
)
from .errors import (
    DegenerateInputError,
    InvalidArgumentError,
    NoUsableInputError,
    OutOfBoundsError,
    SingularMatrixError,
    UnsupportedFormatError,
)
from .features import Body, SpectralFeatures, TimeFeatures, embed, spectral_features, time_features
from .harness import BenchReport, pipeline, run_benchmark, synth_bodies
from .regression import DataSet, RidgeModel, SyntheticRegressionSpec, fit_ridge, predict, synth_regression
from .signal_core import (
    Signal,
    Spectrogram,
    Spectrum,
    WindowKind,
    WindowSpec,
    dft,
    dft_direct,
    frame_signal,
    make_window,
    stft,
    synth_sinusoid,
)

__version__ = "0.1.0"
