#!/usr/bin/env python3
"""Second J1 probe: strengthened signature filter, then orbit-size scan."""
import itertools
import random
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "scripts"))
sys.path.insert(0, str(ROOT / "src"))

from build_data_files import (_j1_candidates, _mat_order, _nullspace, _pnorm,
                              _projective_orbit, _EYE7, _J1_ORDERS)

p = 11
y = np.zeros((7, 7), dtype=np.int64)
for i in range(7):
    y[i, (i + 1) % 7] = 1

MUST = {7, 11, 15, 19}


def word_profile(z, n=150, seed=7):
    rng = random.Random(seed)
    mats = (y, z)
    orders = set()
    for _ in range(n):
        w = _EYE7
        for _ in range(rng.randint(2, 12)):
            w = w @ mats[rng.randint(0, 1)] % p
        o = _mat_order(w, p, cap=30)
        if o is None:
            return None
        orders.add(o)
    return orders


good = []
for z in _j1_candidates():
    if _mat_order(z, p) not in _J1_ORDERS:
        continue
    if _mat_order(y @ z % p, p) not in _J1_ORDERS:
        continue
    prof = word_profile(z)
    if prof is None or not prof <= _J1_ORDERS or not MUST <= prof:
        continue
    good.append(z)

print("strengthened-pass candidates:", len(good))

z = good[0]
print("z =")
print(z)

# an order-11 word
rng = random.Random(19)
mats = (y, z)
u = None
for _ in range(2000):
    w = _EYE7
    for _ in range(rng.randint(2, 12)):
        w = w @ mats[rng.randint(0, 1)] % p
    if _mat_order(w, p, cap=30) == 11:
        u = w
        break
print("order-11 word:", u is not None)
basis = _nullspace((u - _EYE7) % p, p)
print("fixed space dim:", len(basis))
pts = set()
for coeffs in itertools.product(range(p), repeat=len(basis)):
    v = sum((c * b for c, b in zip(coeffs, basis)),
            np.zeros(7, dtype=np.int64)) % p
    if v.any():
        pts.add(_pnorm(v, p))
print("projective fixed points of u:", len(pts))
sizes = {}
for pt in sorted(pts):
    orb = _projective_orbit(np.array(pt, dtype=np.int64), (y, z), p, cap=300000)
    sizes[pt] = None if orb is None else len(orb)
print("orbit sizes:", sorted(set(sizes.values()), key=lambda v: (v is None, v)))
