#!/usr/bin/env python3
"""Diagnose the J1 matrix-variant search: which candidates look like J1 at
the word-order level, and what projective orbit sizes they admit."""
import random
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "scripts"))
sys.path.insert(0, str(ROOT / "src"))

from build_data_files import (_j1_candidates, _mat_order, _order11_word,
                              _nullspace, _pnorm, _projective_orbit, _EYE7,
                              _J1_ORDERS)

p = 11
y = np.zeros((7, 7), dtype=np.int64)
for i in range(7):
    y[i, (i + 1) % 7] = 1


def word_profile(y, z, n=120, seed=7):
    rng = random.Random(seed)
    mats = (y, z)
    orders = set()
    for _ in range(n):
        w = _EYE7
        for _ in range(rng.randint(2, 12)):
            w = w @ mats[rng.randint(0, 1)] % p
        o = _mat_order(w, p, cap=30)
        orders.add(o)
        if o is None:
            return None  # order over 30: definitely not J1
    return orders


total = 0
stage1 = 0
good = []
for z in _j1_candidates():
    total += 1
    oz = _mat_order(z, p)
    if oz not in _J1_ORDERS:
        continue
    oyz = _mat_order(y @ z % p, p)
    if oyz not in _J1_ORDERS:
        continue
    stage1 += 1
    prof = word_profile(y, z)
    if prof is None or not prof <= _J1_ORDERS:
        continue
    good.append((z, oz, oyz, prof))

print(f"candidates: {total}, passed z/yz order filter: {stage1}, "
      f"full word-profile pass: {len(good)}")
for z, oz, oyz, prof in good[:6]:
    print(f"  ord(z)={oz} ord(yz)={oyz} word orders={sorted(prof)}")
    print("  z row0:", z[0], " row1:", z[1])

if good:
    z = good[0][0]
    u = _order11_word(y, z, p)
    print("order-11 word found:", u is not None)
    if u is not None:
        basis = _nullspace((u - _EYE7) % p, p)
        print("fixed space dim:", len(basis))
        import itertools
        pts = set()
        for coeffs in itertools.product(range(p), repeat=len(basis)):
            v = sum((c * b for c, b in zip(coeffs, basis)),
                    np.zeros(7, dtype=np.int64)) % p
            if v.any():
                pts.add(_pnorm(v, p))
        print("candidate projective fixed points:", len(pts))
        for pt in sorted(pts):
            orb = _projective_orbit(np.array(pt, dtype=np.int64), (y, z), p,
                                    cap=40000)
            print("  orbit size:", None if orb is None else len(orb))
