"""Acylindrical hyperbolicity of Artin-Tits groups, decided from the defining graph.

Triangle-free and almost-large-type graphs are classified; positive answers
carry a rank-one certificate that can be re-checked against the vertex link
of the Brady-McCammond presentation complex.
"""

from .certificate import (
    CertificateMode,
    RankOneCertificate,
    certify_gamma_222,
    certify_gamma_mn,
    certify_triangle,
    verify_certificate,
)
from .classifier import ClassificationReport, Verdict, classify
from .errors import (
    ArtinError,
    CertificateError,
    CertificateMismatch,
    GraphError,
    InconsistencyError,
    InvalidPointError,
    PreconditionError,
    UnknownGeneratorError,
)
from .graph import DirectedLabeledGraph, Edge, LabeledGraph, SubgraphWitness, WitnessKind, parse_graph
from .link import Metric, build_link, link_distance, systole
from .orientation import find_appropriate_direction, orient_search, validate_orientation
from .presentation import bm_presentation, standard_presentation, verify_bm_equivalence

__version__ = "0.1.0"

__all__ = [
    "ArtinError", "CertificateError", "CertificateMismatch", "CertificateMode",
    "ClassificationReport", "DirectedLabeledGraph", "Edge", "GraphError",
    "InconsistencyError", "InvalidPointError", "LabeledGraph", "Metric",
    "PreconditionError", "RankOneCertificate", "SubgraphWitness",
    "UnknownGeneratorError", "Verdict", "WitnessKind", "bm_presentation",
    "build_link", "certify_gamma_222", "certify_gamma_mn", "certify_triangle",
    "classify", "find_appropriate_direction", "link_distance", "orient_search",
    "parse_graph", "standard_presentation", "systole", "validate_orientation",
    "verify_bm_equivalence", "verify_certificate",
]
