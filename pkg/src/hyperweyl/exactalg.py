"""Exact affine-linear forms over parameter alphabets, and the matrix groups
that act on them.

Two alphabets are in play: the eight-symbol one (a..h), constrained by
b+c+d+e+f+g+h = 2+3a, and the seven-symbol one (A..G), constrained by
E+F+G = 1+A+B+C+D.  A LinForm is an affine-linear combination with exact
Fraction coefficients; equality is always tested either exactly or modulo
the alphabet's constraint.

Matrices are stored doubled (2x entries) in int64 numpy arrays so that the
half-integer entries occurring here stay exact.  Every product checks that
the result is again half-integer and that entries stay small; a violation
raises ExactArithmeticError instead of silently producing garbage.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

W_SYMBOLS = ("a", "b", "c", "d", "e", "f", "g", "h")
V_SYMBOLS = ("A", "B", "C", "D", "E", "F", "G")

# abort bound for doubled entries; generous, only guards runaway products
_ENTRY_BOUND = 30000


class ExactArithmeticError(ArithmeticError):
    """Raised when matrix arithmetic leaves the checked half-integer domain."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class LinForm:
    """Affine-linear form  const + sum(coef_i * symbol_i)  with exact coefficients."""

    __slots__ = ("alphabet", "const", "coefs")

    def __init__(self, alphabet: Sequence[str], const=0, coefs=None):
        self.alphabet = tuple(alphabet)
        self.const = _as_fraction(const)
        if coefs is None:
            coefs = (Fraction(0),) * len(self.alphabet)
        else:
            coefs = tuple(_as_fraction(c) for c in coefs)
            if len(coefs) != len(self.alphabet):
                raise ValueError("coefficient count does not match alphabet")
        self.coefs = coefs

    # -- constructors ---------------------------------------------------

    @classmethod
    def symbol(cls, alphabet: Sequence[str], name: str) -> "LinForm":
        alphabet = tuple(alphabet)
        idx = alphabet.index(name)
        coefs = [Fraction(0)] * len(alphabet)
        coefs[idx] = Fraction(1)
        return cls(alphabet, 0, coefs)

    @classmethod
    def const_form(cls, alphabet: Sequence[str], value) -> "LinForm":
        return cls(alphabet, value, None)

    @classmethod
    def parse(cls, text: str, alphabet: Sequence[str]) -> "LinForm":
        """Parse forms like "1+a-c-d", "2c-a", "-1/2+3/2e".

        Terms are [sign][coefficient][symbol] with the coefficient optional
        (also as p/q); a term without symbol is a constant.
        """
        alphabet = tuple(alphabet)
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty LinForm text")
        const = Fraction(0)
        coefs = [Fraction(0)] * len(alphabet)
        i = 0
        n = len(s)
        while i < n:
            sign = 1
            while i < n and s[i] in "+-":
                if s[i] == "-":
                    sign = -sign
                i += 1
            j = i
            while j < n and (s[j].isdigit() or s[j] == "/"):
                j += 1
            num = s[i:j]
            sym = None
            if j < n and s[j] not in "+-":
                sym = s[j]
                if sym not in alphabet:
                    raise ValueError(f"unknown symbol {sym!r} in {text!r}")
                j += 1
            coef = Fraction(num) if num else Fraction(1)
            coef *= sign
            if sym is None:
                if not num:
                    raise ValueError(f"dangling sign in {text!r}")
                const += coef
            else:
                coefs[alphabet.index(sym)] += coef
            i = j
        return cls(alphabet, const, coefs)

    # -- algebra --------------------------------------------------------

    def _check(self, other: "LinForm"):
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")

    def __add__(self, other):
        if isinstance(other, LinForm):
            self._check(other)
            return LinForm(
                self.alphabet,
                self.const + other.const,
                [x + y for x, y in zip(self.coefs, other.coefs)],
            )
        return LinForm(self.alphabet, self.const + _as_fraction(other), self.coefs)

    __radd__ = __add__

    def __neg__(self):
        return LinForm(self.alphabet, -self.const, [-c for c in self.coefs])

    def __sub__(self, other):
        if isinstance(other, LinForm):
            return self + (-other)
        return self + (-_as_fraction(other))

    def __rsub__(self, other):
        return (-self) + _as_fraction(other)

    def __mul__(self, k):
        k = _as_fraction(k)
        return LinForm(self.alphabet, self.const * k, [c * k for c in self.coefs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinForm):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.const == other.const
            and self.coefs == other.coefs
        )

    def __hash__(self):
        return hash((self.alphabet, self.const, self.coefs))

    def is_zero(self) -> bool:
        return self.const == 0 and all(c == 0 for c in self.coefs)

    def coef(self, name: str) -> Fraction:
        return self.coefs[self.alphabet.index(name)]

    def substitute(self, forms: Sequence["LinForm"]) -> "LinForm":
        """Replace symbol_i by forms[i] (forms may live in another alphabet)."""
        if len(forms) != len(self.alphabet):
            raise ValueError("substitution arity mismatch")
        out = LinForm(forms[0].alphabet, self.const, None)
        for c, f in zip(self.coefs, forms):
            if c != 0:
                out = out + f * c
        return out

    def evaluate(self, values: Sequence[complex]) -> complex:
        """Numeric value at the given symbol values (sequence in alphabet order)."""
        z = complex(self.const)
        for c, v in zip(self.coefs, values):
            if c != 0:
                z += float(c) * v
        return z

    def reduced(self, constraint: "LinForm") -> "LinForm":
        """Canonical form modulo the constraint: zero the last symbol's coefficient.

        The constraint must have nonzero coefficient on the last symbol.
        """
        self._check(constraint)
        clast = constraint.coefs[-1]
        if clast == 0:
            raise ValueError("constraint has no last-symbol coefficient")
        lam = self.coefs[-1] / clast
        if lam == 0:
            return self
        return self - constraint * lam

    # -- text -----------------------------------------------------------

    def __str__(self):
        parts = []
        if self.const != 0:
            parts.append(("+", _frac_str(self.const)))
        for c, sym in zip(self.coefs, self.alphabet):
            if c == 0:
                continue
            mag = abs(c)
            body = sym if mag == 1 else _frac_str(mag) + sym
            parts.append(("+" if c > 0 else "-", body))
        if not parts:
            return "0"
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sg, body in parts[1:]:
            out += sg + body
        return out

    def __repr__(self):
        return f"LinForm({self!s})"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def w_constraint() -> LinForm:
    """b+c+d+e+f+g+h-3a-2, the defining hyperplane of the eight-symbol alphabet."""
    f = LinForm(W_SYMBOLS, -2, [-3, 1, 1, 1, 1, 1, 1, 1])
    return f


def v_constraint() -> LinForm:
    """E+F+G-A-B-C-D-1, the Saalschuetzian hyperplane of the seven-symbol alphabet."""
    return LinForm(V_SYMBOLS, -1, [-1, -1, -1, -1, 1, 1, 1])


def eq_mod_constraint(f: LinForm, g: LinForm, constraint: LinForm) -> bool:
    """True iff f - g is an exact rational multiple of the constraint."""
    d = f - g
    if d.is_zero():
        return True
    lam = None
    for dc, cc in zip(list(d.coefs) + [d.const], list(constraint.coefs) + [constraint.const]):
        if cc != 0:
            lam = dc / cc
            break
    if lam is None:
        return False
    return (d - constraint * lam).is_zero()


def pretty_str(form: LinForm, constraint: LinForm) -> str:
    """Shortest rendering of the form among natural constraint reductions.

    The canonical (last-symbol-free) form is not always the most readable;
    this tries zeroing each coefficient in turn and picks the rendering with
    fewest terms, breaking ties toward the canonical one.
    """
    candidates = [form.reduced(constraint)]
    for idx, cc in enumerate(constraint.coefs):
        if cc == 0:
            continue
        lam = form.coefs[idx] / cc
        candidates.append(form - constraint * lam)
    best = None
    best_key = None
    for cand in candidates:
        nterms = sum(1 for c in cand.coefs if c != 0) + (1 if cand.const != 0 else 0)
        key = (nterms, len(str(cand)))
        if best is None or key < best_key:
            best, best_key = cand, key
    return str(best)


class SymVec:
    """Vector of LinForms sharing one alphabet, with the ambient constraint."""

    __slots__ = ("entries", "constraint")

    def __init__(self, entries: Iterable[LinForm], constraint: LinForm):
        self.entries = tuple(entries)
        self.constraint = constraint
        for e in self.entries:
            if e.alphabet != constraint.alphabet:
                raise ValueError("entry alphabet mismatch")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def reduced(self) -> "SymVec":
        return SymVec([e.reduced(self.constraint) for e in self.entries], self.constraint)

    def evaluate(self, values: Sequence[complex]):
        return tuple(e.evaluate(values) for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, SymVec):
            return NotImplemented
        return self.entries == other.entries and self.constraint == other.constraint

    def __hash__(self):
        return hash((self.entries, self.constraint))

    def __repr__(self):
        return "SymVec(" + ", ".join(str(e) for e in self.entries) + ")"


def identity_symvec(side: str) -> SymVec:
    """The coordinate vector of the given side ("w" eight slots, "v" seven)."""
    if side == "w":
        syms, cons = W_SYMBOLS, w_constraint()
    elif side == "v":
        syms, cons = V_SYMBOLS, v_constraint()
    else:
        raise ValueError("side must be 'w' or 'v'")
    return SymVec([LinForm.symbol(syms, s) for s in syms], cons)


class RatMatrix:
    """Square matrix with half-integer entries, stored doubled as int64."""

    __slots__ = ("twice",)

    def __init__(self, twice: np.ndarray):
        t = np.asarray(twice, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise ValueError("matrix must be square")
        if np.abs(t).max(initial=0) > _ENTRY_BOUND:
            raise ExactArithmeticError("matrix entry out of checked range")
        self.twice = t
        self.twice.setflags(write=False)

    @property
    def order(self) -> int:
        return self.twice.shape[0]

    @classmethod
    def from_rows(cls, rows) -> "RatMatrix":
        n = len(rows)
        t = np.zeros((n, n), dtype=np.int64)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("ragged matrix rows")
            for j, x in enumerate(row):
                q = _as_fraction(x) * 2
                if q.denominator != 1:
                    raise ExactArithmeticError(f"entry {x} is not half-integer")
                t[i, j] = q.numerator
        return cls(t)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(2 * np.eye(n, dtype=np.int64))

    @classmethod
    def permutation(cls, cycles, n: int) -> "RatMatrix":
        """Permutation matrix sending e_i to e_{sigma(i)} for sigma given by cycles.

        Cycles use 1-based positions, e.g. [(1,2,3,4),(5,6,7)].
        """
        perm = list(range(n))
        for cyc in cycles:
            for k, pos in enumerate(cyc):
                perm[pos - 1] = cyc[(k + 1) % len(cyc)] - 1
        t = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            t[perm[i], i] = 2
        return cls(t)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("order mismatch")
        p = self.twice @ other.twice
        if (p & 1).any():
            raise ExactArithmeticError("product left the half-integer domain")
        p >>= 1
        if np.abs(p).max(initial=0) > _ENTRY_BOUND:
            raise ExactArithmeticError("product entry out of checked range")
        return RatMatrix(p)

    def __pow__(self, k: int) -> "RatMatrix":
        if k < 0:
            raise ValueError("negative powers not supported")
        out = RatMatrix.identity(self.order)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return np.array_equal(self.twice, other.twice)

    def __hash__(self):
        return hash(self.key())

    def key(self) -> bytes:
        """Hashable canonical encoding (int16 is ample for checked entries)."""
        return self.twice.astype(np.int16).tobytes()

    def is_identity(self) -> bool:
        return np.array_equal(self.twice, 2 * np.eye(self.order, dtype=np.int64))

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(int(self.twice[i, j]), 2)

    def apply(self, vec: SymVec) -> SymVec:
        """Matrix action on a symbolic vector (rows dot entries)."""
        if self.order != len(vec):
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.order):
            acc = LinForm(vec.constraint.alphabet, 0, None)
            for j in range(self.order):
                tij = int(self.twice[i, j])
                if tij:
                    acc = acc + vec.entries[j] * Fraction(tij, 2)
            out.append(acc)
        return SymVec(out, vec.constraint)

    def apply_values(self, values: Sequence[complex]):
        v = np.asarray(values, dtype=complex)
        return tuple((self.twice @ v) / 2.0)

    def __repr__(self):
        rows = []
        for i in range(self.order):
            rows.append("[" + ", ".join(_frac_str(self.entry(i, j)) for j in range(self.order)) + "]")
        return "RatMatrix(" + "; ".join(rows) + ")"


# ---------------------------------------------------------------------------
# generator catalogs
# ---------------------------------------------------------------------------

def _x_matrix() -> RatMatrix:
    h = Fraction(1, 2)
    rows = [
        [h, h, -h, -h, -h, h, h, h],
        [0, 1, 0, 0, 0, 0, 0, 0],
        [-h, h, h, -h, -h, h, h, h],
        [-h, h, -h, h, -h, h, h, h],
        [-h, h, -h, -h, h, h, h, h],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ]
    return RatMatrix.from_rows(rows)


def _y_matrix() -> RatMatrix:
    rows = [
        [-1, 2, 0, 0, 0, 0, 0, 0],
        [-1, 1, 1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 0],
        [-1, 1, 0, 1, 0, 0, 0, 0],
        [-1, 1, 0, 0, 1, 0, 0, 0],
        [-1, 1, 0, 0, 0, 1, 0, 0],
        [-1, 1, 0, 0, 0, 0, 1, 0],
        [-1, 1, 0, 0, 0, 0, 0, 1],
    ]
    return RatMatrix.from_rows(rows)


def _x1_matrix() -> RatMatrix:
    rows = [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 0, -1, 0, 1, 0, 0],
        [0, -1, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, -1, -1, 0, 1, 1, 0],
        [0, -1, -1, 0, 1, 0, 1],
    ]
    return RatMatrix.from_rows(rows)


def _central_w() -> RatMatrix:
    # unique linear map acting as w -> (1,...,1) - w on the constrained hyperplane
    phi = np.array([-3, 1, 1, 1, 1, 1, 1, 1], dtype=np.int64)
    t = np.tile(phi, (8, 1)) - 2 * np.eye(8, dtype=np.int64)
    return RatMatrix(t)


def _central_v() -> RatMatrix:
    # word formula: (14)(23) [ ((1234)(567))^2 X1 ]^4
    rot = RatMatrix.permutation([(1, 2, 3, 4), (5, 6, 7)], 7)
    inner = (rot @ rot) @ _x1_matrix()
    return RatMatrix.permutation([(1, 4), (2, 3)], 7) @ (inner ** 4)


W_GENERATOR_NAMES = ("s1", "s2", "s3", "s4", "s5", "s3'", "s6")
V_GENERATOR_NAMES = ("a1", "a2", "a3", "a4", "a5", "a1'")


def _build_w_generators():
    p = lambda *cyc: RatMatrix.permutation([cyc], 8)
    return {
        "s1": _y_matrix() @ p(2, 3),
        "s2": p(3, 4),
        "s3": p(4, 5),
        "s4": p(5, 6),
        "s5": p(6, 7),
        "s6": p(7, 8),
        "s3'": _x_matrix(),
    }


def _build_v_generators():
    p = lambda *cyc: RatMatrix.permutation([cyc], 7)
    return {
        "a1": p(2, 3),
        "a2": p(3, 4),
        "a3": _x1_matrix(),
        "a4": p(5, 6),
        "a5": p(6, 7),
        "a1'": p(1, 4),
    }


W_GENERATORS = _build_w_generators()
V_GENERATORS = _build_v_generators()
CENTRAL_W = _central_w()
CENTRAL_V = _central_v()

# G_L's conjugated generator lives on the seven-slot side
_P57 = RatMatrix.permutation([(5, 7)], 7)
X1_CONJ_57 = _P57 @ _x1_matrix() @ _P57

# named subgroup generator lists (matrix side)
SUBGROUP_GENERATORS = {
    # stabilizer of the two-term family on the eight-slot side
    "G": [W_GENERATORS[n] for n in ("s2", "s3", "s4", "s5", "s6", "s3'")],
    # index-56 action subgroup missing the last simple reflection
    "Q": [W_GENERATORS[n] for n in ("s1", "s2", "s3", "s4", "s5", "s3'")],
    # full seven-slot group
    "H1": [V_GENERATORS[n] for n in V_GENERATOR_NAMES],
    # stabilizer of the first coordinate (seven-slot side)
    "G_J": [
        RatMatrix.permutation([(2, 3)], 7),
        RatMatrix.permutation([(3, 4)], 7),
        RatMatrix.permutation([(5, 6)], 7),
        RatMatrix.permutation([(6, 7)], 7),
        _x1_matrix(),
    ],
    # stabilizer of the second summand structure (seven-slot side)
    "G_L": [
        RatMatrix.permutation([(1, 2)], 7),
        RatMatrix.permutation([(2, 3)], 7),
        RatMatrix.permutation([(3, 4)], 7),
        RatMatrix.permutation([(6, 7)], 7),
        X1_CONJ_57,
    ],
}


def generator(side: str, name: str) -> RatMatrix:
    table = W_GENERATORS if side == "w" else V_GENERATORS
    if name not in table:
        raise KeyError(f"unknown generator {name!r} for side {side!r}")
    return table[name]


def word_to_matrix(word: Sequence[str], side: str) -> RatMatrix:
    """Product of generator matrices along the word (first letter leftmost).

    The derived central involutions are available as the words ("Z",) on the
    "w" side and ("Z1",) on the "v" side.
    """
    if side == "w":
        table, n = W_GENERATORS, 8
        extra = {"Z": CENTRAL_W}
    elif side == "v":
        table, n = V_GENERATORS, 7
        extra = {"Z1": CENTRAL_V}
    else:
        raise ValueError("side must be 'w' or 'v'")
    out = RatMatrix.identity(n)
    for name in word:
        if name in table:
            out = out @ table[name]
        elif name in extra:
            out = out @ extra[name]
        else:
            raise KeyError(f"unknown generator {name!r}")
    return out


def coxeter_order(side: str, g1: str, g2: str) -> int:
    """Order m(g1,g2) prescribed by the relevant Coxeter diagram."""
    if g1 == g2:
        return 1
    if side == "w":
        # chain 1-2-3-4-5-6 with 3' attached to vertex 4
        def adj(x, y):
            if x == "s3'":
                return y == "s4"
            if y == "s3'":
                return x == "s4"
            return abs(int(x[1]) - int(y[1])) == 1
    elif side == "v":
        # chain 1-2-3-4-5 with 1' attached to vertex 2
        def adj(x, y):
            if x == "a1'":
                return y == "a2"
            if y == "a1'":
                return x == "a2"
            return abs(int(x[1]) - int(y[1])) == 1
    else:
        raise ValueError("side must be 'w' or 'v'")
    return 3 if adj(g1, g2) else 2
