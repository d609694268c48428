# Re-export all model classes
from .numerics import HermitianMatrix, EigenDecomposition, as_complex_matrix
from .measure import QuadratureMeasure, MassSummary
from .frame import FieldTag, SampledFrame, FrameOperatorReport, FrameFile, FrameNode
from .reports import (
    BoundReport,
    WelchBounds,
    AltBounds,
    LhsValues,
    EqualityCertificate,
    MetricsReport,
    FrameSummary,
    OperatorDigest,
    AnalysisReport,
    WelchRow,
    BoundsTable,
    ExampleCheck,
    CircleExampleReport,
)
from .optimizer import (
    ObjectiveKind,
    OptimizerConfig,
    OptimizerResult,
    Certificate,
    GradientCheckEntry,
    GradientCheckReport,
)

__all__ = [
    'HermitianMatrix',
    'EigenDecomposition',
    'as_complex_matrix',
    'QuadratureMeasure',
    'MassSummary',
    'FieldTag',
    'SampledFrame',
    'FrameOperatorReport',
    'FrameFile',
    'FrameNode',
    'BoundReport',
    'WelchBounds',
    'AltBounds',
    'LhsValues',
    'EqualityCertificate',
    'MetricsReport',
    'FrameSummary',
    'OperatorDigest',
    'AnalysisReport',
    'WelchRow',
    'BoundsTable',
    'ExampleCheck',
    'CircleExampleReport',
    'ObjectiveKind',
    'OptimizerConfig',
    'OptimizerResult',
    'Certificate',
    'GradientCheckEntry',
    'GradientCheckReport',
]
