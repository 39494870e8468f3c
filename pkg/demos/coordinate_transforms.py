"""Signed coordinate permutations and where they land in the coset tables.

The seven-slot argument forms can be written over six free coordinates.
Any even signed permutation of those coordinates turns the identity
arrangement into another tabulated coset — one in the 32-element table
(classified by its first slot) and one in the 12-element table (classified
by an invariant of the last three slots).  Because the function only
depends on the coset, evaluating directly at transformed coordinates and
evaluating through the matching group element must agree; the sampling
loop at the end measures that agreement.

Run:  python3 demos/coordinate_transforms.py
"""

import random

from hyperweyl.correspond import (
    signed_perm_transform,
    twiddle_check,
    twiddle_classify,
    twiddle_x_forms,
)

SEED = 7


def main():
    forms = twiddle_x_forms()
    print("identity coordinate forms:")
    for name, f in zip("ABCDEFG", forms):
        print(f"  {name} = {f}")
    print(f"  classified: table-32 coset {twiddle_classify(forms, 'J')}, "
          f"table-12 coset {twiddle_classify(forms, 'L')}")

    rng = random.Random(SEED)
    print("\nthree random even signed permutations:")
    for _ in range(3):
        perm = list(range(6))
        rng.shuffle(perm)
        signs = [rng.choice((1, -1)) for _ in range(6)]
        if (signs.count(-1) % 2) == 1:
            signs[0] = -signs[0]
        moved = signed_perm_transform(forms, perm, signs)
        j_lab = twiddle_classify(moved, "J")
        l_lab = twiddle_classify(moved, "L")
        desc = " ".join(f"{'+' if s > 0 else '-'}x{k}" for k, s in zip(perm, signs))
        print(f"  [{desc}]  ->  table-32 {j_lab}, table-12 {l_lab}")

    print("\ninvariance of the function values under such transforms:")
    for space in ("J", "L"):
        worst = 0.0
        seen = set()
        for _ in range(8):
            label, err = twiddle_check(rng, space)
            worst = max(worst, err)
            seen.add(str(label))
        print(f"  {space}-side: 8 draws hit cosets {sorted(seen)}; "
              f"worst relative error {worst:.3e}")


if __name__ == "__main__":
    main()
