#!/usr/bin/env python3
# Three conventions for the double scalar product of tensors, and how they
# interlock.  Entries are printed with four decimals throughout.

import numpy as np

from tenderiv import ddot_cross, ddot_pos, ddot_seq, dot, iso_tensor, transpose2

np.set_printoptions(precision=4, suppress=True)

rng = np.random.default_rng(1)
A = rng.uniform(-1, 1, (3, 3))
B = rng.uniform(-1, 1, (3, 3))

print("A =\n", A)
print("B =\n", B)

print("\nOn two second-rank tensors the three conventions give two values:")
print("  sequential  A:B  (nearest vectors pair first) =", ddot_seq(A, B))
print("  cross       A:B  (parallel pairing)           =", ddot_cross(A, B))
print("  positional  A:B  (same as cross on rank 2)    =", ddot_pos(A, B))

print("\nThe cross product is the sequential one with a single transpose:")
print("  cross(A, B) - seq(A, B^T) =", ddot_cross(A, B) - ddot_seq(A, transpose2(B)))
print("  cross(A, B) - seq(A^T, B) =", ddot_cross(A, B) - ddot_seq(transpose2(A), B))

print("\nBoth are symmetric and transpose-invariant:")
print("  seq(A, B) - seq(B, A)      =", ddot_seq(A, B) - ddot_seq(B, A))
print("  seq(A, B) - seq(A^T, B^T)  =", ddot_seq(A, B) - ddot_seq(transpose2(A), transpose2(B)))

print("\nThe sequential product associates cleanly with the single dot:")
C = rng.uniform(-1, 1, (3, 3))
print("  seq(A, B.C) - seq(A.B, C) =", ddot_seq(A, dot(B, C)) - ddot_seq(dot(A, B), C))

print("\nOn mixed ranks the conventions genuinely differ.  With H a random")
print("fourth-rank tensor, the three contractions of A with H:")
H = rng.uniform(-1, 1, (3, 3, 3, 3))
print("  seq   A:H =\n", ddot_seq(A, H))
print("  cross A:H =\n", ddot_cross(A, H))
print("  pos   A:H =\n", ddot_pos(A, H))

print("\nOne tensor translates between the sequential and cross conventions")
print("on every rank combination: cross(x, y) == seq(seq(x, C_II), y).")
C2 = iso_tensor("II")
lhs = ddot_cross(A, H)
rhs = ddot_seq(ddot_seq(A, C2), H)
print("  max |difference| =", np.max(np.abs(lhs - rhs)))
