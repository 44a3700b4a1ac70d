"""Hand-transcribed expected matrices for the built-in representations
and their chiral sector matrices.  These are the frozen golden values the
library is audited against; tests import them rather than rebuilding
them from library calls.
"""

import numpy as np

from oracles import ID2, SX, SY, SZ


def kron(a, b):
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def blocks(tl, tr, bl, br):
    return np.block([[tl, tr], [bl, br]])


Z2 = np.zeros((2, 2), dtype=complex)
HALF = 0.5

EXPECTED_D4 = {
    "dirac": dict(
        alpha=[kron(SX, SX), kron(SX, SY), kron(SX, SZ)],
        beta=kron(SZ, ID2),
        gamma=[kron(1j * SY, SX), kron(1j * SY, SY), kron(1j * SY, SZ)],
        chirality=kron(SX, ID2),
        s_c=-1j * kron(SY, SY),
    ),
    "weyl": dict(
        alpha=[kron(SZ, SX), kron(SZ, SY), kron(SZ, SZ)],
        beta=-kron(SX, ID2),
        gamma=[kron(1j * SY, SX), kron(1j * SY, SY), kron(1j * SY, SZ)],
        chirality=kron(SZ, ID2),
        s_c=-1j * kron(SY, SY),
    ),
    "majorana": dict(
        alpha=[-kron(SX, SX), kron(SZ, ID2), -kron(SX, SZ)],
        beta=kron(SX, SY),
        gamma=[1j * kron(ID2, SZ), -1j * kron(SY, SY), -1j * kron(ID2, SX)],
        chirality=kron(SZ, SY),
        s_c=np.eye(4, dtype=complex),
    ),
}

EXPECTED_D2 = {
    "dirac": dict(alpha=[SX], beta=SZ, gamma=[1j * SY], chirality=SX, s_c=-1j * SX),
    "weyl": dict(alpha=[SZ], beta=SX, gamma=[-1j * SY], chirality=SZ, s_c=-1j * SZ),
    "majorana": dict(alpha=[SX], beta=SY, gamma=[-1j * SZ], chirality=SX, s_c=ID2.copy()),
}

EXPECTED_CAPITAL_GAMMA = {
    "dirac": [
        HALF * blocks(-SY, -SY, -SY, -SY),
        HALF * blocks(1j * SZ, 1j * SZ, 1j * SZ, 1j * SZ),
        HALF * blocks(-ID2, -ID2, -ID2, -ID2),
        HALF * blocks(-1j * SX, -1j * SX, -1j * SX, -1j * SX),
    ],
    "weyl": [
        blocks(-SY, Z2, Z2, Z2),
        blocks(1j * SZ, Z2, Z2, Z2),
        blocks(-ID2, Z2, Z2, Z2),
        blocks(-1j * SX, Z2, Z2, Z2),
    ],
    "majorana": [
        HALF * blocks(Z2, SY - ID2, SY + ID2, Z2),
        HALF * blocks(1j * SZ + SX, Z2, Z2, 1j * SZ - SX),
        HALF * blocks(Z2, -SY + ID2, SY + ID2, Z2),
        HALF * blocks(-1j * SX + SZ, Z2, Z2, -1j * SX - SZ),
    ],
}

EXPECTED_CAPITAL_LAMBDA = {
    "dirac": [
        HALF * blocks(SY, -SY, -SY, SY),
        HALF * blocks(1j * SZ, -1j * SZ, -1j * SZ, 1j * SZ),
        HALF * blocks(-ID2, ID2, ID2, -ID2),
        HALF * blocks(-1j * SX, 1j * SX, 1j * SX, -1j * SX),
    ],
    "weyl": [
        blocks(Z2, Z2, Z2, SY),
        blocks(Z2, Z2, Z2, 1j * SZ),
        blocks(Z2, Z2, Z2, -ID2),
        blocks(Z2, Z2, Z2, -1j * SX),
    ],
    "majorana": [
        HALF * blocks(Z2, SY + ID2, SY - ID2, Z2),
        HALF * blocks(1j * SZ - SX, Z2, Z2, 1j * SZ + SX),
        HALF * blocks(Z2, -SY - ID2, SY - ID2, Z2),
        HALF * blocks(-1j * SX - SZ, Z2, Z2, -1j * SX + SZ),
    ],
}

#: (gamma_+^0, gamma_-^0); gamma_+^1 = -gamma_+^0 and gamma_-^1 = gamma_-^0
EXPECTED_GAMMA_PM_D2 = {
    "dirac": (HALF * np.array([[1, -1], [1, -1]], dtype=complex),
              HALF * np.array([[1, 1], [-1, -1]], dtype=complex)),
    "weyl": (np.array([[0, 1], [0, 0]], dtype=complex),
             np.array([[0, 0], [1, 0]], dtype=complex)),
    "majorana": (0.5j * np.array([[1, -1], [1, -1]], dtype=complex),
                 0.5j * np.array([[-1, -1], [1, 1]], dtype=complex)),
}

EXPECTED_ETA = [-1j * SY, -SZ, -1j * ID2, SX.astype(complex)]
EXPECTED_XI = [1j * SY, -SZ, -1j * ID2, SX.astype(complex)]
