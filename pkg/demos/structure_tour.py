"""Tour of the structure tensors on the 7-sphere.

Builds the three compatible almost-contact structures, evaluates every
tensor at a sampled point, and prints the identities they satisfy.
"""

import numpy as np

from hkc import TangentVector, ThreeSasakiStructure

s = ThreeSasakiStructure(n=1)
print(f"ambient dimension : {s.ambient_dim}")
print(f"manifold dimension: {s.manifold_dim}")
print(f"distribution rank : {s.h_dim}")

rng = np.random.default_rng(7)
v = rng.standard_normal(s.ambient_dim)
x = s.point(v / np.linalg.norm(v))
print(f"\nsampled base point (|x| = {np.linalg.norm(x.x):.15f})")

# the three Reeb vectors are orthonormal and tangent
print("\nReeb vectors:")
for a in (1, 2, 3):
    xi = s.reeb(a, x)
    print(f"  |xi_{a}| = {xi.norm():.15f}   <xi_{a}, x> = "
          f"{float(np.dot(xi.v, x.x)):+.2e}")
for a, b in ((1, 2), (2, 3), (3, 1)):
    print(f"  <xi_{a}, xi_{b}> = {s.metric(s.reeb(a, x), s.reeb(b, x)):+.2e}")

# phi_a kills its own Reeb vector and rotates the other two
print("\nphi action on the Reeb span:")
for a in (1, 2, 3):
    print(f"  |phi_{a} xi_{a}| = {s.phi(a, s.reeb(a, x)).norm():.2e}")
print(f"  |phi_1 xi_2 - xi_3| = "
      f"{(s.phi(1, s.reeb(2, x)) - s.reeb(3, x)).norm():.2e}")

# a unit vector inside the distribution H
w = s.project_h_raw(rng.standard_normal(s.ambient_dim), x.x)
X = TangentVector(x, w / np.linalg.norm(w))
PX = s.phi(1, X)
PPX = s.phi(1, PX)
print("\nfor a unit X in the distribution H:")
print(f"  |phi_1 X|            = {PX.norm():.15f}")
print(f"  |phi_1^2 X + X|      = {(PPX + X).norm():.2e}")
print(f"  Omega^1(X, phi_1 X)  = {s.omega(1, X, PX):+.15f}")
print(f"  eta^a(X)             = "
      + ", ".join(f"{s.eta(a, X):+.1e}" for a in (1, 2, 3)))

# the composition law phi_1 phi_2 = phi_3 modulo Reeb terms
comp = s.phi(1, s.phi(2, X)) - s.phi(3, X)
print(f"  |phi_1 phi_2 X - phi_3 X| = {comp.norm():.2e}")

# a deterministic orthonormal frame of H
frame = s.frame_H(x, seed=0)
G = np.array([[s.metric(u, w) for w in frame.vectors] for u in frame.vectors])
print(f"\nframe of H: {len(frame.vectors)} vectors, "
      f"|G - I| = {np.abs(G - np.eye(len(frame.vectors))).max():.2e}")
