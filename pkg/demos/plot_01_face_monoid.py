"""
Faces of the braid arrangement
==============================

Faces are ordered set partitions of {1, ..., n}.  They multiply by
refining the first face with the blocks of the second, which makes them a
left regular band: every face is idempotent and fgf = fg.
"""

from facedescent import Face, enumerate_faces, face_monoid, support

# A face is written block by block.
f = Face.from_blocks([[4], [1, 5], [7], [2, 3, 6]])
g = Face.from_blocks([[2, 4, 5], [3, 6, 7], [1]])
print("f      =", f)
print("g      =", g)
print("f * g  =", f * g)
print("g * f  =", g * f)

# Forgetting the order of the blocks gives the support, a set partition.
print("support(f) =", support(f))

# The number of faces is the ordered Bell number.
for n in range(1, 7):
    print(n, len(enumerate_faces(n)))

# For small n the whole multiplication table fits in a numpy array of indices.
mon = face_monoid(3)
print(mon.table)
