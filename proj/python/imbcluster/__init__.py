"""Size-normalized (imbalanced) point clustering.

Thin wrapper around the compiled extension: losses, exact subset search,
k-means++ seeding, bi-criteria approximation, sensitivity-sampling coresets,
choice/divisive clustering, metrics, disc presets, and image quantization.
"""

try:
    from ._imbcluster import *  # noqa: F401,F403  (installed package layout)
    from ._imbcluster import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension sits on sys.path
    from _imbcluster import *  # noqa: F401,F403
    from _imbcluster import __version__  # noqa: F401
