#
#   Versioned tolerance registry
#   Copyright EAVISE
#

__all__ = ['TOLERANCES', 'TOLERANCE_VERSION']

TOLERANCE_VERSION = '1'

# Largest allowed residual per claim family; an exact family requires residual 0
TOLERANCES = {
    '1': {
        'identity': 1e-12,
        'connection': 1e-9,
        'metric': 1e-9,
        'inverse': 1e-10,
        'cocycle': 1e-9,
        'explicit': 1e-12,
        'covariance': 1e-7,
        'serre': 1e-7,
        'negative': 1e-2,
        'invariance': 1e-7,
        'lemma': 1e-7,
        'degeneration': 1e-12,
        'holomorphy': 1e-10,
        'corpus': 1e-9,
        'eisenstein': 1e-6,
        'exact': 0.0,
        'experiment': 1e-7,
    },
}
