from .quality import (
    coherence,
    crms,
    frame_potential,
    equiangularity,
    equality_certificate,
    metrics_report,
)

__all__ = ['coherence', 'crms', 'frame_potential', 'equiangularity', 'equality_certificate', 'metrics_report']
