"""Resource caps with an environment override.

Setting WRE_MAX_N=<integer> replaces every default cap; useful on machines
with more (or less) memory than the defaults assume.
"""

import os

# Default qubit-count caps per algorithm family.
DEFAULT_CAPS = {
    "enum": 12,       # 2^N-term subset enumeration over a 2^N vector
    "swap": 13,       # 4^N doubled vector for swap contraction
    "dm": 8,          # 4^N density-matrix subset enumeration
    "two_copy": 13,   # 4^N protocol statevector
}

ENV_CAP = "WRE_MAX_N"


def get_cap(kind):
    override = os.environ.get(ENV_CAP)
    if override is not None:
        return int(override)
    return DEFAULT_CAPS[kind]
