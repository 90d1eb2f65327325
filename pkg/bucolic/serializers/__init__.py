from .objects import DocumentSerializer, ErrorSerializer
from .documents import GraphDocumentSerializer
from .reports import (
    CertificateSerializer,
    ClassReportSerializer,
    CoverSerializer,
    DecompositionSerializer,
    HullSerializer,
    LocalConditionsSerializer,
    MooringSerializer,
    PrismSerializer,
)

__all__ = [
    "DocumentSerializer",
    "ErrorSerializer",
    "GraphDocumentSerializer",
    "CertificateSerializer",
    "ClassReportSerializer",
    "CoverSerializer",
    "DecompositionSerializer",
    "HullSerializer",
    "LocalConditionsSerializer",
    "MooringSerializer",
    "PrismSerializer",
]
