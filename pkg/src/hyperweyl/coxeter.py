"""Coset labels, generator actions, orbit structure and discrete distances.

Three label spaces appear:

* 56 eight-slot-side labels +-v(i,j), 0 <= i < j <= 7, indexing cosets of the
  invariance group inside the big reflection group;
* 32 "sign string" labels p0..p15 / n0..n15 for the first summand family on
  the seven-slot side (strings of six signs with an even number of minuses);
* 12 labels 1..6 / 1bar..6bar for the second summand family.

The seven-slot labels together form the 44-element T space.  The map
jl_label sends every eight-slot label to a colored seven-slot one (blue and
red copies of the 12 L labels, plus the 32 J labels), it intertwines the two
generator actions through matching_generator, and it compresses the
discrete distance in a controlled way (t_distance).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .exactalg import (
    LinForm,
    RatMatrix,
    SUBGROUP_GENERATORS,
    SymVec,
    V_GENERATOR_NAMES,
    V_SYMBOLS,
    W_GENERATOR_NAMES,
    W_SYMBOLS,
    eq_mod_constraint,
    identity_symvec,
    v_constraint,
    w_constraint,
)

__all__ = [
    "MLabel",
    "JLabel",
    "LLabel",
    "Color",
    "act_m",
    "act_j",
    "act_l",
    "act_t",
    "central_involution",
    "all_m_labels",
    "all_j_labels",
    "all_l_labels",
    "all_t_labels",
    "parse_label",
    "classify_m",
    "classify_j",
    "classify_l",
    "classify_t",
    "orbit_color",
    "jl_label",
    "jl_preimage",
    "matching_generator",
    "color_orbits",
    "label_vector",
    "dd",
    "dd_by_cases",
    "hamming",
    "t_distance",
    "triple_type",
    "triple_orbits",
    "group_order",
    "full_group_census",
    "m_label_orbit_bfs",
    "representative_words",
    "M_BFS_GENERATOR_ORDER",
    "J_BFS_GENERATOR_ORDER",
]


# ---------------------------------------------------------------------------
# labels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MLabel:
    """Signed pair label +-v(i,j) with 0 <= i < j <= 7."""

    sign: int
    i: int
    j: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")
        if not (0 <= self.i < self.j <= 7):
            raise ValueError("need 0 <= i < j <= 7")

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'}v({self.i},{self.j})"

    def __neg__(self):
        return MLabel(-self.sign, self.i, self.j)

    @property
    def pair(self):
        return (self.i, self.j)

    def sort_key(self):
        return (self.i, self.j, -self.sign)


@dataclass(frozen=True)
class JLabel:
    """Six-sign string with an even number of minuses; also named p0..p15/n0..n15."""

    signs: tuple

    def __post_init__(self):
        if len(self.signs) != 6 or any(s not in (1, -1) for s in self.signs):
            raise ValueError("need six signs +-1")
        if sum(1 for s in self.signs if s < 0) % 2:
            raise ValueError("sign string must have an even number of minuses")

    def __str__(self):
        return self.pn_name()

    def string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def pn_name(self) -> str:
        # halves with an even minus count mean a p label, odd means n
        first, second = self.signs[:3], self.signs[3:]
        if sum(1 for s in first if s < 0) % 2 == 0:
            r = _BLOCKS.index(first)
            q = _BLOCKS.index(second)
            return f"p{4 * q + r}"
        r = _BLOCKS.index(tuple(-s for s in first))
        q = _BLOCKS.index(tuple(-s for s in second))
        return f"n{4 * q + r}"

    def __neg__(self):
        return JLabel(tuple(-s for s in self.signs))

    def sort_key(self):
        name = self.pn_name()
        return (name[0], int(name[1:]))


_BLOCKS = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]


def j_label_from_name(name: str) -> JLabel:
    kind, num = name[0], int(name[1:])
    if kind not in "pn" or not (0 <= num <= 15):
        raise ValueError(f"bad J label {name!r}")
    q, r = divmod(num, 4)
    signs = _BLOCKS[r] + _BLOCKS[q]
    if kind == "n":
        signs = tuple(-s for s in signs)
    return JLabel(tuple(signs))


@dataclass(frozen=True)
class LLabel:
    """Label 1..6, optionally barred."""

    index: int
    barred: bool = False

    def __post_init__(self):
        if not (1 <= self.index <= 6):
            raise ValueError("index must be 1..6")

    def __str__(self):
        return f"{self.index}bar" if self.barred else f"{self.index}"

    def __neg__(self):
        return LLabel(self.index, not self.barred)

    def sort_key(self):
        return (self.index, self.barred)


class Color:
    BLUE = "blue"
    RED = "red"
    J = "J"


def all_m_labels():
    out = []
    for i, j in combinations(range(8), 2):
        out.append(MLabel(1, i, j))
        out.append(MLabel(-1, i, j))
    return out


def all_j_labels():
    return [j_label_from_name(f"{k}{n}") for k in "pn" for n in range(16)]


def all_l_labels():
    return [LLabel(i, b) for i in range(1, 7) for b in (False, True)]


def all_t_labels():
    return all_l_labels() + all_j_labels()


def parse_label(text: str):
    """Parse any label form: "+v(0,7)", "-v(1,3)", "v(2,5)", "p11", "--+-+-", "4bar"."""
    s = text.strip()
    if "v(" in s:
        sign = 1
        if s[0] in "+-":
            sign = 1 if s[0] == "+" else -1
            s = s[1:]
        if not (s.startswith("v(") and s.endswith(")")):
            raise ValueError(f"bad label {text!r}")
        i_s, j_s = s[2:-1].split(",")
        return MLabel(sign, int(i_s), int(j_s))
    if len(s) == 6 and set(s) <= {"+", "-"}:
        return JLabel(tuple(1 if ch == "+" else -1 for ch in s))
    if s and s[0] in "pn" and s[1:].isdigit():
        return j_label_from_name(s)
    if s.endswith("bar"):
        return LLabel(int(s[:-3]), True)
    if s.isdigit():
        return LLabel(int(s), False)
    raise ValueError(f"bad label {text!r}")


# ---------------------------------------------------------------------------
# generator actions on labels
# ---------------------------------------------------------------------------

_K0 = frozenset({0, 1, 2, 3})
_K1 = frozenset({4, 5, 6, 7})


def act_m(gen: str, label: MLabel) -> MLabel:
    """Action of an eight-slot-side generator on the 56 labels.

    s_m with 1 <= m <= 6 transposes the index values 7-m and 8-m; the branch
    generator flips the sign and complements the pair inside {0,1,2,3} or
    {4,5,6,7} when the pair lies inside one of them, else acts trivially.
    """
    if gen == "s3'":
        pair = {label.i, label.j}
        for block in (_K0, _K1):
            if pair <= block:
                comp = sorted(block - pair)
                return MLabel(-label.sign, comp[0], comp[1])
        return label
    if gen in ("s1", "s2", "s3", "s4", "s5", "s6"):
        m = int(gen[1])
        u, v = 7 - m, 8 - m
        swap = {u: v, v: u}
        i2 = swap.get(label.i, label.i)
        j2 = swap.get(label.j, label.j)
        if i2 > j2:
            i2, j2 = j2, i2
        return MLabel(label.sign, i2, j2)
    raise KeyError(f"unknown generator {gen!r}")


def act_j(gen: str, label: JLabel) -> JLabel:
    """Action of a seven-slot-side generator on the 32 sign strings."""
    s = list(label.signs)
    if gen in ("a1", "a2", "a3", "a4", "a5"):
        k = int(gen[1])
        s[k - 1], s[k] = s[k], s[k - 1]
        return JLabel(tuple(s))
    if gen == "a1'":
        s0, s1 = s[0], s[1]
        s[0], s[1] = -s1, -s0
        return JLabel(tuple(s))
    raise KeyError(f"unknown generator {gen!r}")


def act_l(gen: str, label: LLabel) -> LLabel:
    """Action of a seven-slot-side generator on the 12 barred labels."""
    if gen in ("a1", "a2", "a3", "a4", "a5"):
        k = int(gen[1])
        if label.index == k:
            return LLabel(k + 1, label.barred)
        if label.index == k + 1:
            return LLabel(k, label.barred)
        return label
    if gen == "a1'":
        if label.index == 1:
            return LLabel(2, not label.barred)
        if label.index == 2:
            return LLabel(1, not label.barred)
        return label
    raise KeyError(f"unknown generator {gen!r}")


def act_t(gen: str, label):
    if isinstance(label, JLabel):
        return act_j(gen, label)
    if isinstance(label, LLabel):
        return act_l(gen, label)
    raise TypeError("T labels are J or L labels")


def central_involution(label):
    """The central involution: sign flip / string negation / bar toggle."""
    return -label


# ---------------------------------------------------------------------------
# classification of symbolic vectors
# ---------------------------------------------------------------------------


def _x_forms():
    # x_0..x_7 = b, h, g, f, e, d, c, a as forms
    order = ["b", "h", "g", "f", "e", "d", "c", "a"]
    return [LinForm.symbol(W_SYMBOLS, s) for s in order]


@lru_cache(maxsize=1)
def _m_classify_table():
    cons = w_constraint()
    x = _x_forms()
    table = {}
    for i, j in combinations(range(8), 2):
        plus = (x[i] + x[j] - x[7]).reduced(cons)
        minus = (LinForm.const_form(W_SYMBOLS, 1) + x[7] - x[i] - x[j]).reduced(cons)
        table[(plus.const, plus.coefs)] = MLabel(1, i, j)
        table[(minus.const, minus.coefs)] = MLabel(-1, i, j)
    assert len(table) == 56, "coset-defining forms must be pairwise distinct"
    return table


def classify_m(vec: SymVec) -> MLabel:
    """Label of the coset containing the group element that produced vec.

    The second slot determines the coset; it must match one of the 56
    defining forms modulo the constraint.
    """
    f = vec.entries[1].reduced(vec.constraint)
    key = (f.const, f.coefs)
    table = _m_classify_table()
    if key not in table:
        raise ValueError(f"second slot {f} matches no coset form")
    return table[key]


@lru_cache(maxsize=1)
def _j_classify_table():
    cons = v_constraint()
    a_forms = [LinForm.symbol(V_SYMBOLS, s) for s in ("A", "B", "C", "D")]
    e_forms = [
        LinForm.const_form(V_SYMBOLS, 1),
        LinForm.symbol(V_SYMBOLS, "E"),
        LinForm.symbol(V_SYMBOLS, "F"),
        LinForm.symbol(V_SYMBOLS, "G"),
    ]
    table = {}
    for q in range(4):
        for r in range(4):
            p_form = (LinForm.const_form(V_SYMBOLS, 1) + a_forms[r] - e_forms[q]).reduced(cons)
            n_form = (e_forms[q] - a_forms[r]).reduced(cons)
            table[(p_form.const, p_form.coefs)] = j_label_from_name(f"p{4 * q + r}")
            table[(n_form.const, n_form.coefs)] = j_label_from_name(f"n{4 * q + r}")
    assert len(table) == 32, "coset-defining forms must be pairwise distinct"
    return table


def classify_j(vec: SymVec) -> JLabel:
    """J label determined by the first slot of a seven-slot symbolic vector."""
    f = vec.entries[0].reduced(vec.constraint)
    key = (f.const, f.coefs)
    table = _j_classify_table()
    if key not in table:
        raise ValueError(f"first slot {f} matches no J coset form")
    return table[key]


# Quarter-sum combinations of the seven coordinates; the second-family
# invariance group fixes the first of them pointwise, so the functional
# (slot6 + slot7 - slot5 - 1)/4 of an arrangement is constant on cosets
# and always lands on one of these twelve forms.
_L_INVARIANT_FORMS = {
    "(F+G-E-1)/4": "4", "(E+F-G-1)/4": "6", "(E+G-F-1)/4": "5",
    "(A+C-B-D)/4": "2", "(A+D-B-C)/4": "3", "(A+B-C-D)/4": "1",
}


@lru_cache(maxsize=1)
def _l_classify_table():
    cons = v_constraint()
    table = {}
    for text, name in _L_INVARIANT_FORMS.items():
        inner = text[1:].split(")")[0]
        form = LinForm.parse(inner, V_SYMBOLS) * Fraction(1, 4)
        plus = form.reduced(cons)
        minus = (-form).reduced(cons)
        table[(plus.const, plus.coefs)] = parse_label(name)
        table[(minus.const, minus.coefs)] = parse_label(name + "bar")
    assert len(table) == 12, "coset-defining forms must be pairwise distinct"
    return table


def classify_l(vec: SymVec) -> LLabel:
    """L label of a group-transformed identity vector.

    The classifying quantity is (slot6 + slot7 - slot5 - 1)/4, which the
    arrangement-fixing subgroup leaves unchanged; the identity classifies
    as label 4.  (The raw fifth slot is *not* a coset invariant: within one
    coset different representatives show different fifth-slot forms.)
    """
    one = LinForm.const_form(vec.constraint.alphabet, 1)
    psi = (vec.entries[5] + vec.entries[6] - vec.entries[4] - one) * Fraction(1, 4)
    r = psi.reduced(vec.constraint)
    key = (r.const, r.coefs)
    table = _l_classify_table()
    if key not in table:
        raise ValueError(f"arrangement invariant {r} matches no L coset form")
    return table[key]


def classify_t(vec: SymVec):
    """J or L label of a seven-slot vector, trying the J first slot first."""
    try:
        return classify_j(vec)
    except ValueError:
        return classify_l(vec)


# ---------------------------------------------------------------------------
# the blue/red/J correspondence
# ---------------------------------------------------------------------------


def orbit_color(label: MLabel) -> str:
    """Which of the three index-action orbits the label belongs to."""
    if label.i == 0 and label.j >= 2:
        return Color.BLUE if label.sign > 0 else Color.RED
    if label.i == 1 and label.j >= 2:
        return Color.RED if label.sign > 0 else Color.BLUE
    return Color.J


def jl_label(label: MLabel):
    """Map an eight-slot label to (color, seven-slot label).

    Blue labels v(0,j)/-v(1,j) go to the L label j-1 (barred for the negated
    ones); red ones are the mirror family; everything else goes to a J sign
    string: v(0,1) is all-plus, v(i,j) with 2 <= i < j has plus exactly in
    positions i-1 and j-1 counted from 1, and negation flips the string.
    """
    color = orbit_color(label)
    if color in (Color.BLUE, Color.RED):
        if label.i == 0:
            # v(0,j) blue unbarred, -v(0,j) red barred
            return color, LLabel(label.j - 1, label.sign < 0)
        # i == 1: -v(1,j) blue barred, v(1,j) red unbarred
        return color, LLabel(label.j - 1, label.sign < 0)
    if (label.i, label.j) == (0, 1):
        s = JLabel((1,) * 6)
        return Color.J, s if label.sign > 0 else -s
    signs = [-1] * 6
    signs[label.i - 2] = 1
    signs[label.j - 2] = 1
    s = JLabel(tuple(signs))
    return Color.J, s if label.sign > 0 else -s


def jl_preimage(t_label, color: str = None) -> MLabel:
    """Inverse of jl_label.  For L labels the color (blue or red) is required;
    the blue preimage is the default used by the distance compression."""
    if isinstance(t_label, LLabel):
        color = color or Color.BLUE
        j = t_label.index + 1
        if color == Color.BLUE:
            return MLabel(-1, 1, j) if t_label.barred else MLabel(1, 0, j)
        if color == Color.RED:
            return MLabel(-1, 0, j) if t_label.barred else MLabel(1, 1, j)
        raise ValueError("color must be blue or red for L labels")
    if isinstance(t_label, JLabel):
        plus_positions = [k for k, s in enumerate(t_label.signs) if s > 0]
        if len(plus_positions) == 6:
            return MLabel(1, 0, 1)
        if len(plus_positions) == 0:
            return MLabel(-1, 0, 1)
        if len(plus_positions) == 2:
            i, j = plus_positions
            return MLabel(1, i + 2, j + 2)
        if len(plus_positions) == 4:
            minus_positions = [k for k, s in enumerate(t_label.signs) if s < 0]
            i, j = minus_positions
            return MLabel(-1, i + 2, j + 2)
        raise ValueError("not a valid J string")
    raise TypeError("expected a J or L label")


_GENERATOR_BRIDGE = {
    "s1": "a5",
    "s2": "a4",
    "s3": "a3",
    "s4": "a2",
    "s5": "a1",
    "s3'": "a1'",
}


def matching_generator(gen: str) -> str:
    """Seven-slot-side generator matching an index-action generator.

    s_k maps to a_{6-k} for k = 1..5 and the branch generator maps to the
    branch generator; the last simple reflection s6 has no counterpart.
    """
    if gen not in _GENERATOR_BRIDGE:
        raise KeyError(f"{gen!r} does not act on the seven-slot side")
    return _GENERATOR_BRIDGE[gen]


def color_orbits():
    """The three orbits of the 56 labels under the six index-action generators."""
    gens = ("s1", "s2", "s3", "s4", "s5", "s3'")
    seen = {}
    orbits = []
    for start in sorted(all_m_labels(), key=MLabel.sort_key):
        if start in seen:
            continue
        frontier = [start]
        members = {start}
        while frontier:
            nxt = []
            for lab in frontier:
                for g in gens:
                    out = act_m(g, lab)
                    if out not in members:
                        members.add(out)
                        nxt.append(out)
            frontier = nxt
        for lab in members:
            seen[lab] = len(orbits)
        orbits.append(sorted(members, key=MLabel.sort_key))
    return orbits


# ---------------------------------------------------------------------------
# vectors and distances
# ---------------------------------------------------------------------------


def label_vector(label: MLabel) -> np.ndarray:
    """Eight-component integer vector +-(4(e_{i+1}+e_{j+1}) - sum e_k)."""
    v = -np.ones(8, dtype=np.int64)
    v[label.i] += 4
    v[label.j] += 4
    return label.sign * v


def dd(u: MLabel, v: MLabel) -> int:
    """Discrete distance: (1/16) |vec(u) - vec(v)|^2, always in {0,2,4,6}."""
    diff = label_vector(u) - label_vector(v)
    q = int(np.dot(diff, diff))
    assert q % 16 == 0
    return q // 16


def dd_by_cases(u: MLabel, v: MLabel) -> int:
    """Same distance from the case table: overlap size and relative sign."""
    overlap = len({u.i, u.j} & {v.i, v.j})
    same = u.sign == v.sign
    if overlap == 2:
        return 0 if same else 6
    if overlap == 1:
        return 2 if same else 4
    return 4 if same else 2


def hamming(s: JLabel, t: JLabel) -> int:
    return sum(1 for x, y in zip(s.signs, t.signs) if x != y)


def t_distance(s, t) -> int:
    """Distance on the 44 seven-slot labels via blue preimages."""
    return dd(jl_preimage(s), jl_preimage(t))


# ---------------------------------------------------------------------------
# triples
# ---------------------------------------------------------------------------


def _pairwise(vals):
    return sorted(vals)


def triple_type(space: str, triple) -> str:
    """Type tag of a three-element set: sorted pairwise distances, or the
    coherence tag in the L space."""
    a, b, c = triple
    if space == "M":
        ds = _pairwise([dd(a, b), dd(a, c), dd(b, c)])
        return "".join(str(d) for d in ds)
    if space == "J":
        ds = _pairwise([hamming(a, b), hamming(a, c), hamming(b, c)])
        return "".join(str(d) for d in ds)
    if space == "L":
        idx = {a.index, b.index, c.index}
        return "coherent" if len(idx) == 3 else "incoherent"
    if space == "T":
        ds = _pairwise([t_distance(a, b), t_distance(a, c), t_distance(b, c)])
        comp = "".join(sorted("L" if isinstance(x, LLabel) else "J" for x in (a, b, c)))
        return comp + ":" + "".join(str(d) for d in ds)
    raise ValueError(f"unknown space {space!r}")


_SPACE_DATA = {
    "M": (all_m_labels, ("s1", "s2", "s3", "s4", "s5", "s3'", "s6"), act_m, lambda l: l.sort_key()),
    "J": (all_j_labels, V_GENERATOR_NAMES, act_j, lambda l: l.sort_key()),
    "L": (all_l_labels, V_GENERATOR_NAMES, act_l, lambda l: l.sort_key()),
    "T": (all_t_labels, V_GENERATOR_NAMES, act_t, lambda l: (isinstance(l, JLabel), l.sort_key())),
}


def triple_orbits(space: str):
    """Orbit decomposition of all three-element label sets under the action.

    Returns a list of dicts (size, type, representative), sorted by the
    representative, plus the invariant that the type tag is constant on each
    orbit (checked here, not assumed).
    """
    labels_fn, gens, act, key = _SPACE_DATA[space]
    labels = labels_fn()
    canon = lambda tri: tuple(sorted(tri, key=key))
    all_triples = [canon(t) for t in combinations(labels, 3)]
    all_set = set(all_triples)
    seen = set()
    orbits = []
    for start in all_triples:
        if start in seen:
            continue
        members = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for tri in frontier:
                for g in gens:
                    out = canon(tuple(act(g, x) for x in tri))
                    if out not in members:
                        members.add(out)
                        nxt.append(out)
            frontier = nxt
        ttype = triple_type(space, start)
        for tri in members:
            assert triple_type(space, tri) == ttype, "type tag not orbit-constant"
        seen |= members
        orbits.append(
            {
                "space": space,
                "size": len(members),
                "type": ttype,
                "representative": tuple(str(x) for x in start),
            }
        )
    assert sum(o["size"] for o in orbits) == len(all_set)
    return orbits


# ---------------------------------------------------------------------------
# group enumeration
# ---------------------------------------------------------------------------


def _bfs_matrix_group(generators: Sequence[RatMatrix], limit: int = 4_000_000):
    n = generators[0].order
    gen_arrays = [g.twice for g in generators]
    ident = 2 * np.eye(n, dtype=np.int64)
    seen = {ident.astype(np.int16).tobytes()}
    frontier = ident[None, :, :]
    total = 1
    chunk = 65536
    while frontier.shape[0]:
        fresh = []
        for g in gen_arrays:
            for lo in range(0, frontier.shape[0], chunk):
                prod = frontier[lo : lo + chunk] @ g
                if (prod & 1).any():
                    raise ArithmeticError("group product left the half-integer domain")
                prod >>= 1
                if np.abs(prod).max() > 32000:
                    raise ArithmeticError("matrix entries too large for compact keys")
                keys = prod.astype(np.int16)
                for idx in range(prod.shape[0]):
                    k = keys[idx].tobytes()
                    if k not in seen:
                        seen.add(k)
                        fresh.append(keys[idx])
        total += len(fresh)
        if total > limit:
            raise MemoryError("group enumeration exceeded the allowed size")
        if fresh:
            frontier = np.stack(fresh).astype(np.int64)
        else:
            frontier = np.empty((0, n, n), dtype=np.int64)
    return total


def group_order(name: str) -> int:
    """Order of a named subgroup by breadth-first closure of its generators."""
    if name not in SUBGROUP_GENERATORS:
        raise KeyError(f"unknown group {name!r}")
    return _bfs_matrix_group(SUBGROUP_GENERATORS[name])


def full_group_census(acknowledge_memory: bool = False) -> int:
    """Order of the full eight-slot-side group (about 2.9 million matrices).

    Refuses to run unless the caller acknowledges the memory cost (several
    hundred MB of key storage).
    """
    if not acknowledge_memory:
        raise RuntimeError(
            "full group enumeration holds ~3M matrix keys in memory; "
            "pass acknowledge_memory=True to proceed"
        )
    from .exactalg import W_GENERATORS

    gens = [W_GENERATORS[n] for n in W_GENERATOR_NAMES]
    return _bfs_matrix_group(gens)


# ---------------------------------------------------------------------------
# label BFS with words
# ---------------------------------------------------------------------------

# fixed expansion order: reproducible minimal-length lexicographically-first words
M_BFS_GENERATOR_ORDER = ("s1", "s2", "s3", "s4", "s5", "s3'", "s6")
J_BFS_GENERATOR_ORDER = ("a1", "a2", "a3", "a4", "a5", "a1'")


def m_label_orbit_bfs():
    """All 56 labels reached from +v(0,7) under the seven generators."""
    start = MLabel(1, 0, 7)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for lab in frontier:
            for g in M_BFS_GENERATOR_ORDER:
                out = act_m(g, lab)
                if out not in seen:
                    seen.add(out)
                    nxt.append(out)
        frontier = nxt
    return seen


def representative_words(space: str = "M"):
    """Minimal-length, first-found representative word for every label.

    Words compose left to right; the word's label is the result of applying
    its letters in order to the base label (+v(0,7) or the all-plus string).
    """
    if space == "M":
        start, order, act = MLabel(1, 0, 7), M_BFS_GENERATOR_ORDER, act_m
    elif space == "J":
        start, order, act = JLabel((1,) * 6), J_BFS_GENERATOR_ORDER, act_j
    elif space == "L":
        start, order, act = LLabel(6, False), J_BFS_GENERATOR_ORDER, act_l
    else:
        raise ValueError("space must be M, J or L")
    words = {start: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for lab in frontier:
            for g in order:
                out = act(g, lab)
                if out not in words:
                    words[out] = words[lab] + (g,)
                    nxt.append(out)
        frontier = nxt
    return words
