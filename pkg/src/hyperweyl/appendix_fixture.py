"""Checked-in table of the 56 coset rows and their limit targets.

One row per line::

    <label> | <8 M args, ;-separated> | <J|L> <target label> | <7 target args>

Forms are in the canonical affine syntax understood by ``LinForm.parse``.
The b-carrying M args sit in their normal-form end slots (slot 8, or slots
7 and 8 for the rows that lose two letters in the limit); the remaining
middle slots keep their source order.  This file is transcription, not
computation: the generator in ``correspond`` must reproduce it.
"""

FIXTURE_TEXT = """
# blue rows: limits onto six-slot L arrangements
+v(0,7) | a; b; c; d; e; f; g; h | L 6 | e; f; g; 1+a-c-d; e+f+g-a; 1+a-c; 1+a-d
+v(0,6) | 2c-a; c+b-a; c; c+d-a; c+e-a; c+f-a; c+g-a; c+h-a | L 5 | c+e-a; c+f-a; c+g-a; 1-d; c+e+f+g-2a; 1+c-a; 1+c-d
+v(0,5) | 2d-a; d+b-a; d; d+c-a; d+e-a; d+f-a; d+g-a; d+h-a | L 4 | d+e-a; d+f-a; d+g-a; 1-c; d+e+f+g-2a; 1+d-a; 1+d-c
+v(0,4) | 2e-a; e+b-a; e; e+c-a; e+d-a; e+f-a; e+g-a; e+h-a | L 3 | e+d-a; e+f-a; e+g-a; 1-c; e+d+f+g-2a; 1+e-a; 1+e-c
+v(0,3) | 2f-a; f+b-a; f; f+c-a; f+d-a; f+e-a; f+g-a; f+h-a | L 2 | f+d-a; f+e-a; f+g-a; 1-c; f+d+e+g-2a; 1+f-a; 1+f-c
+v(0,2) | 2g-a; g+b-a; g; g+c-a; g+d-a; g+e-a; g+f-a; g+h-a | L 1 | g+d-a; g+e-a; g+f-a; 1-c; g+d+e+f-2a; 1+g-a; 1+g-c
-v(1,7) | 1-a; 1-h; 1-c; 1-d; 1-e; 1-f; 1-g; 1-b | L 6bar | 1-e; 1-f; 1-g; c+d-a; 2+a-e-f-g; 1+c-a; 1+d-a
-v(1,6) | 1+a-2c; 1+a-c-h; 1-c; 1+a-c-d; 1+a-c-e; 1+a-c-f; 1+a-c-g; 1+a-c-b | L 5bar | 1+a-c-e; 1+a-c-f; 1+a-c-g; d; 2+2a-c-e-f-g; 1+a-c; 1+d-c
-v(1,5) | 1+a-2d; 1+a-d-h; 1-d; 1+a-d-c; 1+a-d-e; 1+a-d-f; 1+a-d-g; 1+a-d-b | L 4bar | 1+a-d-e; 1+a-d-f; 1+a-d-g; c; 2+2a-d-e-f-g; 1+a-d; 1+c-d
-v(1,4) | 1+a-2e; 1+a-e-h; 1-e; 1+a-e-c; 1+a-e-d; 1+a-e-f; 1+a-e-g; 1+a-e-b | L 3bar | 1+a-e-d; 1+a-e-f; 1+a-e-g; c; 2+2a-e-d-f-g; 1+a-e; 1+c-e
-v(1,3) | 1+a-2f; 1+a-f-h; 1-f; 1+a-f-c; 1+a-f-d; 1+a-f-e; 1+a-f-g; 1+a-f-b | L 2bar | 1+a-f-d; 1+a-f-e; 1+a-f-g; c; 2+2a-f-d-e-g; 1+a-f; 1+c-f
-v(1,2) | 1+a-2g; 1+a-g-h; 1-g; 1+a-g-c; 1+a-g-d; 1+a-g-e; 1+a-g-f; 1+a-g-b | L 1bar | 1+a-g-d; 1+a-g-e; 1+a-g-f; c; 2+2a-g-d-e-f; 1+a-g; 1+c-g

# red rows: same targets as the matching blue rows
+v(1,7) | a; h; c; d; e; f; g; b | L 6 | e; f; g; 1+a-c-d; e+f+g-a; 1+a-c; 1+a-d
+v(1,6) | 2c-a; c+h-a; c; c+d-a; c+e-a; c+f-a; c+g-a; c+b-a | L 5 | c+e-a; c+f-a; c+g-a; 1-d; c+e+f+g-2a; 1+c-a; 1+c-d
+v(1,5) | 2d-a; d+h-a; d; d+c-a; d+e-a; d+f-a; d+g-a; d+b-a | L 4 | d+e-a; d+f-a; d+g-a; 1-c; d+e+f+g-2a; 1+d-a; 1+d-c
+v(1,4) | 2e-a; e+h-a; e; e+c-a; e+d-a; e+f-a; e+g-a; e+b-a | L 3 | e+d-a; e+f-a; e+g-a; 1-c; e+d+f+g-2a; 1+e-a; 1+e-c
+v(1,3) | 2f-a; f+h-a; f; f+c-a; f+d-a; f+e-a; f+g-a; f+b-a | L 2 | f+d-a; f+e-a; f+g-a; 1-c; f+d+e+g-2a; 1+f-a; 1+f-c
+v(1,2) | 2g-a; g+h-a; g; g+c-a; g+d-a; g+e-a; g+f-a; g+b-a | L 1 | g+d-a; g+e-a; g+f-a; 1-c; g+d+e+f-2a; 1+g-a; 1+g-c
-v(0,7) | 1-a; 1-b; 1-c; 1-d; 1-e; 1-f; 1-g; 1-h | L 6bar | 1-e; 1-f; 1-g; c+d-a; 2+a-e-f-g; 1+c-a; 1+d-a
-v(0,6) | 1+a-2c; 1+a-c-b; 1-c; 1+a-c-d; 1+a-c-e; 1+a-c-f; 1+a-c-g; 1+a-c-h | L 5bar | 1+a-c-e; 1+a-c-f; 1+a-c-g; d; 2+2a-c-e-f-g; 1+a-c; 1+d-c
-v(0,5) | 1+a-2d; 1+a-d-b; 1-d; 1+a-d-c; 1+a-d-e; 1+a-d-f; 1+a-d-g; 1+a-d-h | L 4bar | 1+a-d-e; 1+a-d-f; 1+a-d-g; c; 2+2a-d-e-f-g; 1+a-d; 1+c-d
-v(0,4) | 1+a-2e; 1+a-e-b; 1-e; 1+a-e-c; 1+a-e-d; 1+a-e-f; 1+a-e-g; 1+a-e-h | L 3bar | 1+a-e-d; 1+a-e-f; 1+a-e-g; c; 2+2a-e-d-f-g; 1+a-e; 1+c-e
-v(0,3) | 1+a-2f; 1+a-f-b; 1-f; 1+a-f-c; 1+a-f-d; 1+a-f-e; 1+a-f-g; 1+a-f-h | L 2bar | 1+a-f-d; 1+a-f-e; 1+a-f-g; c; 2+2a-f-d-e-g; 1+a-f; 1+c-f
-v(0,2) | 1+a-2g; 1+a-g-b; 1-g; 1+a-g-c; 1+a-g-d; 1+a-g-e; 1+a-g-f; 1+a-g-h | L 1bar | 1+a-g-d; 1+a-g-e; 1+a-g-f; c; 2+2a-g-d-e-f; 1+a-g; 1+c-g

# remaining rows: limits onto seven-slot J arrangements
+v(0,1) | 2+a-c-d-e-f; 2+2a-c-d-e-f-g; 1-c; 1-d; 1-e; 1-f; b+g-a; h+g-a | J p0 | 2+2a-c-d-e-f-g; 1-c; 1-d; 1+a-c-d; 2+a-c-d-e; 2+a-c-d-f; 2+a-c-d-g
-v(3,4) | 1+a-2e; 1+a-e-f; 1-e; 1+a-e-c; 1+a-e-d; 1+a-e-g; 1+a-e-h; 1+a-e-b | J p1 | 1+a-e-f; 1+a-e-c; 1+a-e-d; g; 2+2a-c-d-e-f; 1+a-e; 1+g-e
-v(2,4) | 1+a-2e; 1+a-e-g; 1-e; 1+a-e-c; 1+a-e-d; 1+a-e-f; 1+a-e-h; 1+a-e-b | J p2 | 1+a-e-g; 1+a-e-c; 1+a-e-d; f; 2+2a-c-d-e-g; 1+a-e; 1+f-e
-v(2,3) | 1+a-2f; 1+a-f-g; 1-f; 1+a-f-c; 1+a-f-d; 1+a-f-e; 1+a-f-h; 1+a-f-b | J p3 | 1+a-f-g; 1+a-f-c; 1+a-f-d; e; 2+2a-c-d-f-g; 1+a-f; 1+e-f
-v(6,7) | 1-a; 1-c; 1-d; 1-e; 1-f; 1-g; 1-h; 1-b | J p4 | 1-c; 1-d; 1-e; f+g-a; 2+a-c-d-e; 1+f-a; 1+g-a
+v(2,5) | 2d-a; d+g-a; d; d+c-a; d+e-a; d+f-a; d+b-a; d+h-a | J p5 | d+g-a; d+c-a; d+e-a; 1-f; c+d+e+g-2a; 1+d-a; 1+d-f
+v(3,5) | 2d-a; d+f-a; d; d+c-a; d+e-a; d+g-a; d+b-a; d+h-a | J p6 | d+f-a; d+c-a; d+e-a; 1-g; c+d+e+f-2a; 1+d-a; 1+d-g
+v(4,5) | 2d-a; d+e-a; d; d+c-a; d+f-a; d+g-a; d+b-a; d+h-a | J p7 | d+e-a; d+c-a; d+f-a; 1-g; c+d+e+f-2a; 1+d-a; 1+d-g
-v(5,7) | 1-a; 1-d; 1-c; 1-e; 1-f; 1-g; 1-h; 1-b | J p8 | 1-d; 1-c; 1-e; f+g-a; 2+a-c-d-e; 1+f-a; 1+g-a
+v(2,6) | 2c-a; c+g-a; c; c+d-a; c+e-a; c+f-a; c+b-a; c+h-a | J p9 | c+g-a; c+d-a; c+e-a; 1-f; c+d+e+g-2a; 1+c-a; 1+c-f
+v(3,6) | 2c-a; c+f-a; c; c+d-a; c+e-a; c+g-a; c+b-a; c+h-a | J p10 | c+f-a; c+d-a; c+e-a; 1-g; c+d+e+f-2a; 1+c-a; 1+c-g
+v(4,6) | 2c-a; c+e-a; c; c+d-a; c+f-a; c+g-a; c+b-a; c+h-a | J p11 | c+e-a; c+d-a; c+f-a; 1-g; c+d+e+f-2a; 1+c-a; 1+c-g
-v(5,6) | 1+a-2c; 1+a-c-d; 1-c; 1+a-c-e; 1+a-c-g; 1+a-c-f; 1+a-c-h; 1+a-c-b | J p12 | 1+a-c-d; 1+a-c-e; 1+a-c-g; f; 2+2a-c-d-e-g; 1+a-c; 1+f-c
+v(2,7) | a; g; c; d; e; f; b; h | J p13 | g; c; d; 1+a-e-f; c+d+g-a; 1+a-e; 1+a-f
+v(3,7) | a; f; c; d; e; g; b; h | J p14 | f; c; d; 1+a-e-g; c+d+f-a; 1+a-e; 1+a-g
+v(4,7) | a; e; c; d; f; g; b; h | J p15 | e; c; d; 1+a-f-g; c+d+e-a; 1+a-f; 1+a-g
-v(0,1) | c+d+e+f-a-1; c+d+e+f+g-2a-1; c; d; e; f; 1+a-h-g; 1+a-b-g | J n0 | c+d+e+f+g-2a-1; c; d; c+d-a; c+d+e-a; c+d+f-a; c+d+g-a
+v(3,4) | 2e-a; e+f-a; e; e+c-a; e+d-a; e+g-a; e+b-a; e+h-a | J n1 | e+f-a; e+c-a; e+d-a; 1-g; c+d+e+f-2a; 1+e-a; 1+e-g
+v(2,4) | 2e-a; e+g-a; e; e+c-a; e+d-a; e+f-a; e+b-a; e+h-a | J n2 | e+g-a; e+c-a; e+d-a; 1-f; c+d+e+g-2a; 1+e-a; 1+e-f
+v(2,3) | 2f-a; f+g-a; f; f+c-a; f+d-a; f+e-a; f+b-a; f+h-a | J n3 | f+g-a; f+c-a; f+d-a; 1-e; c+d+f+g-2a; 1+f-a; 1+f-e
+v(6,7) | a; c; d; e; f; g; b; h | J n4 | c; d; e; 1+a-f-g; c+d+e-a; 1+a-f; 1+a-g
-v(2,5) | 1+a-2d; 1+a-d-g; 1-d; 1+a-d-c; 1+a-d-e; 1+a-d-f; 1+a-d-h; 1+a-d-b | J n5 | 1+a-d-g; 1+a-d-c; 1+a-d-e; f; 2+2a-c-d-e-g; 1+a-d; 1+f-d
-v(3,5) | 1+a-2d; 1+a-d-f; 1-d; 1+a-d-c; 1+a-d-e; 1+a-d-g; 1+a-d-h; 1+a-d-b | J n6 | 1+a-d-f; 1+a-d-c; 1+a-d-e; g; 2+2a-c-d-e-f; 1+a-d; 1+g-d
-v(4,5) | 1+a-2d; 1+a-d-e; 1-d; 1+a-d-c; 1+a-d-f; 1+a-d-g; 1+a-d-h; 1+a-d-b | J n7 | 1+a-d-e; 1+a-d-c; 1+a-d-f; g; 2+2a-c-d-e-f; 1+a-d; 1+g-d
+v(5,7) | a; d; c; e; f; g; b; h | J n8 | d; c; e; 1+a-f-g; c+d+e-a; 1+a-f; 1+a-g
-v(2,6) | 1+a-2c; 1+a-c-g; 1-c; 1+a-c-d; 1+a-c-e; 1+a-c-f; 1+a-c-h; 1+a-c-b | J n9 | 1+a-c-g; 1+a-c-d; 1+a-c-e; f; 2+2a-c-d-e-g; 1+a-c; 1+f-c
-v(3,6) | 1+a-2c; 1+a-c-f; 1-c; 1+a-c-d; 1+a-c-e; 1+a-c-g; 1+a-c-h; 1+a-c-b | J n10 | 1+a-c-f; 1+a-c-d; 1+a-c-e; g; 2+2a-c-d-e-f; 1+a-c; 1+g-c
-v(4,6) | 1+a-2c; 1+a-c-e; 1-c; 1+a-c-d; 1+a-c-f; 1+a-c-g; 1+a-c-h; 1+a-c-b | J n11 | 1+a-c-e; 1+a-c-d; 1+a-c-f; g; 2+2a-c-d-e-f; 1+a-c; 1+g-c
+v(5,6) | 2c-a; c+d-a; c; c+e-a; c+g-a; c+f-a; c+b-a; c+h-a | J n12 | c+d-a; c+e-a; c+g-a; 1-f; c+d+e+g-2a; 1+c-a; 1+c-f
-v(2,7) | 1-a; 1-g; 1-c; 1-d; 1-e; 1-f; 1-h; 1-b | J n13 | 1-g; 1-c; 1-d; e+f-a; 2+a-c-d-g; 1+e-a; 1+f-a
-v(3,7) | 1-a; 1-f; 1-c; 1-d; 1-e; 1-g; 1-h; 1-b | J n14 | 1-f; 1-c; 1-d; e+g-a; 2+a-c-d-f; 1+e-a; 1+g-a
-v(4,7) | 1-a; 1-e; 1-c; 1-d; 1-f; 1-g; 1-h; 1-b | J n15 | 1-e; 1-c; 1-d; f+g-a; 2+a-c-d-e; 1+f-a; 1+g-a
"""
