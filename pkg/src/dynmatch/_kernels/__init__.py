"""Speed-critical exact solvers: compiled extension with pure-Python fallback.

The brute-force oracles get called tens of thousands of times by the
acceptance and property suites, so they are implemented twice: once in
Cython (``_speedups``) and once in plain Python (``_pure``).  The two
backends implement the same algorithms with the same tie-breaking and must
return identical results; ``tests/test_kernels.py`` enforces that and
``benchmarks/bench_kernels.py`` compares their throughput.

The compiled backend is preferred when the extension built; otherwise the
pure fallback is used transparently.
"""

from __future__ import annotations

try:  # pragma: no cover - exercised implicitly by whichever env runs
    from . import _speedups as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover
    from . import _pure as _impl

    BACKEND = "pure"

mcm_size = _impl.mcm_size
mwm_value = _impl.mwm_value
min_vc_size = _impl.min_vc_size
mwm_dp = _impl.mwm_dp
