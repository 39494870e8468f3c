"""Tour of the label geometry: index orbits, the distance, and compression.

The eight-parameter family is indexed by 56 signed pairs ±v(i,j).  A rank-5
reflection group splits them into three orbits (two of size 12, one of 32),
and a graph distance dd measures how far apart two indices sit.  Collapsing
the two 12-orbits pairwise produces the 44-label union space of the
seven-parameter families, where the induced distance t drops by exactly 2
whenever a blue label meets a red one.

Run:  python3 demos/label_geometry.py
"""

from collections import Counter

from hyperweyl.coxeter import (
    all_m_labels,
    color_orbits,
    dd,
    jl_label,
    orbit_color,
    parse_label,
    t_distance,
    triple_orbits,
)


def main():
    labels = all_m_labels()
    print(f"index space: {len(labels)} signed pairs, e.g. "
          + " ".join(str(u) for u in labels[:4]) + " ...")

    print("\norbits under the index action:")
    for members in color_orbits():
        color = orbit_color(members[0])
        sample = " ".join(str(u) for u in members[:5])
        print(f"  {str(color):>4}  size {len(members):2d}   {sample} ...")

    u = parse_label("+v(0,1)")
    v = parse_label("-v(0,1)")
    print(f"\ndistance examples:")
    print(f"  dd({u}, {v}) = {dd(u, v)}   (antipodal pair)")
    for name in ("+v(0,7)", "+v(1,7)", "+v(2,3)"):
        w = parse_label(name)
        print(f"  dd({u}, {w}) = {dd(u, w)}")

    print("\nevery pair of antipodes is at total distance 6:")
    checks = [dd(u, w) + dd(u, -w) for w in labels for u in labels[:3]]
    print(f"  dd(u,w) + dd(u,-w) over {len(checks)} pairs: "
          f"values {sorted(set(checks))}")

    print("\ncompression to the 44-label union space:")
    images = {}
    for w in labels:
        color, lab = jl_label(w)
        images.setdefault(str(lab), []).append((str(color), str(w)))
    sizes = Counter(len(v) for v in images.values())
    print(f"  {len(images)} distinct images; preimage sizes {dict(sizes)}")
    a, b = parse_label("+v(0,2)"), parse_label("-v(0,3)")
    (ca, ta), (cb, tb) = jl_label(a), jl_label(b)
    print(f"  {a} -> {ca} {ta}    {b} -> {cb} {tb}")
    print(f"  dd({a},{b}) = {dd(a, b)}  vs  t({ta},{tb}) = {t_distance(ta, tb)}"
          f"   (drop of 2: blue meets red)")
    c = parse_label("+v(2,7)")
    cc, tc = jl_label(c)
    print(f"  {a} -> {ca} {ta}    {c} -> {cc} {tc}")
    print(f"  dd({a},{c}) = {dd(a, c)}  vs  t({ta},{tc}) = {t_distance(ta, tc)}"
          f"   (no drop: blue meets J)")

    print("\ntriple classification in the union space:")
    mix = Counter(o["type"].split(":")[0] for o in triple_orbits("T"))
    total = sum(o["size"] for o in triple_orbits("T"))
    print(f"  {total} unordered triples fall into "
          f"{sum(mix.values())} orbits; composition by mixture "
          + ", ".join(f"{k}:{mix[k]}" for k in ("LLL", "JLL", "JJL", "JJJ")))


if __name__ == "__main__":
    main()
