"""Generators for the built-in word families, identity bases and variety specs.

All generators are pure and deterministic; permutation-indexed families take a
one-line image sequence (``"2 1"`` is the transposition in S2).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .equational import Identity
from .words import EMPTY, Letter, Word


class Permutation:
    """A permutation of {1, ..., n}, given by its image sequence."""

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = tuple(int(i) for i in images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {imgs}")
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(int(tok) for tok in text.split())

    @classmethod
    def all_of(cls, n: int):
        """S_n in lexicographic order of image sequences."""
        return [cls(p) for p in permutations(range(1, n + 1))]

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.images):
            raise ValueError(f"argument out of range: {i}")
        return self.images[i - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        return " ".join(str(i) for i in self.images)

    def __repr__(self):
        return f"Permutation.parse({str(self)!r})"


_x = Letter("x")
_y = Letter("y")
_z = Letter("z")


def _zi(i):
    return Letter("z", i)


def _ti(i):
    return Letter("t", i)


def _si(i):
    return Letter("s", i)


def _yi(i):
    return Letter("y", i)


def chain_word(n: int) -> Word:
    """x t1 x t2 x ... tn x (length 2n+1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    letters = [_x]
    for i in range(1, n + 1):
        letters += [_ti(i), _x]
    return Word(letters)


def _check_family_args(n, m, rho):
    if n < 1 or m < 1:
        raise ValueError("n and m must be at least 1")
    if rho.degree != n + m:
        raise ValueError(f"permutation degree {rho.degree} != n+m = {n + m}")


def a_word(n: int, m: int, rho: Permutation) -> Word:
    """Two x occurrences straddling the permuted z-block:
    (z1 t1 ... zn tn) x (z_{1rho} ... z_{(n+m)rho}) x (t_{n+1} z_{n+1} ... t_{n+m} z_{n+m})."""
    _check_family_args(n, m, rho)
    letters = []
    for i in range(1, n + 1):
        letters += [_zi(i), _ti(i)]
    letters.append(_x)
    for i in range(1, n + m + 1):
        letters.append(_zi(rho(i)))
    letters.append(_x)
    for i in range(n + 1, n + m + 1):
        letters += [_ti(i), _zi(i)]
    return Word(letters)


def a_prime_word(n: int, m: int, rho: Permutation) -> Word:
    """Same blocks with the two x occurrences merged into x^2 after the z-block."""
    _check_family_args(n, m, rho)
    letters = []
    for i in range(1, n + 1):
        letters += [_zi(i), _ti(i)]
    for i in range(1, n + m + 1):
        letters.append(_zi(rho(i)))
    letters += [_x, _x]
    for i in range(n + 1, n + m + 1):
        letters += [_ti(i), _zi(i)]
    return Word(letters)


FIXED_BASIS = (
    Identity.parse("x x = x x x"),
    Identity.parse("x x y = y x x"),
    Identity.parse("x y z x t y = y x z x t y"),
    Identity.parse("x z y t x y = x z y t y x"),
    Identity.parse("x z x t x y s y = x z x t y x s y"),
    Identity.parse("x z x y t y s y = x z y x t y s y"),
)


def basis_identities(n_max: int, m_max: int):
    """The six fixed identities plus the a/a' family up to the given indices."""
    if n_max < 1 or m_max < 1:
        raise ValueError("bounds must be at least 1")
    out = list(FIXED_BASIS)
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            for rho in Permutation.all_of(n + m):
                out.append(Identity(a_word(n, m, rho), a_prime_word(n, m, rho)))
    return out


def square_commuting_basis():
    """x^2 = x^3 together with x^2 y = x y x = y x^2, split into two identities."""
    return [
        Identity.parse("x x = x x x"),
        Identity.parse("x x y = x y x"),
        Identity.parse("x y x = y x x"),
    ]


ZIGZAG_WORD = Word.parse("x z x y t y")


@dataclass(frozen=True)
class VarietySpec:
    """A finite generator recipe: empty, one, x, xy, chain:n or zigzag:n."""

    kind: str
    n: int | None = None

    _KINDS = ("empty", "one", "x", "xy", "chain", "zigzag")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown variety kind: {self.kind!r}")
        if self.kind in ("chain", "zigzag"):
            if self.n is None or self.n < 1:
                raise ValueError(f"{self.kind} needs n >= 1")
        elif self.n is not None:
            raise ValueError(f"{self.kind} takes no parameter")

    @classmethod
    def parse(cls, text: str) -> "VarietySpec":
        text = text.strip().lower()
        if ":" in text:
            kind, _, num = text.partition(":")
            return cls(kind, int(num))
        return cls(text)

    def __str__(self):
        return self.kind if self.n is None else f"{self.kind}:{self.n}"


def variety_generators(spec: VarietySpec):
    """Generator words for the spec; the empty spec has no generators at all."""
    if spec.kind == "empty":
        return ()
    if spec.kind == "one":
        return (EMPTY,)
    if spec.kind == "x":
        return (Word([_x]),)
    if spec.kind == "xy":
        return (Word([_x, _y]),)
    if spec.kind == "chain":
        return (chain_word(spec.n),)
    return (ZIGZAG_WORD, chain_word(spec.n))


def standard_variety_specs(max_chain: int = 2):
    """The finite generator recipes, smallest first."""
    out = [VarietySpec("empty"), VarietySpec("one"), VarietySpec("x"), VarietySpec("xy")]
    out += [VarietySpec("chain", n) for n in range(1, max_chain + 1)]
    out += [VarietySpec("zigzag", n) for n in range(1, max_chain + 1)]
    return out


def step1_words():
    """The anchor pair whose only nontrivial one-step rewrite is the other word.

    The two words differ precisely in the central three-letter factor
    (x c y versus y c x)."""
    u = Word.parse("z1 t1 z2 t2 c c z1 b z2 x c y b s1 x s2 y")
    v = Word.parse("z1 t1 z2 t2 c c z1 b z2 y c x b s1 x s2 y")
    return u, v


def step3_words():
    """Anchor pair as in step1 but with a triple-x prefix and a single c."""
    u = Word.parse("x s1 x s2 z1 t1 z2 t2 c z1 b z2 x c y b s3 y")
    v = Word.parse("x s1 x s2 z1 t1 z2 t2 c z1 b z2 y c x b s3 y")
    return u, v


@dataclass(frozen=True)
class Step2Construction:
    """The seven objects of the squared-letter deletion argument."""

    p: Word
    r: Word
    x_generators: tuple
    u: Word
    a: Word
    a_prime: Word
    u_prime: Word
    case: str  # "low" when 1 <= 1rho <= n, else "high"


def step2_construction(n: int, m: int, rho: Permutation) -> Step2Construction:
    """Instantiate the deletion/reinsertion witness family at (n, m, rho).

    The head p, tail r and the companion generator pair switch on whether the
    first permuted z-index lands in the low block (<= n) or the high one."""
    _check_family_args(n, m, rho)
    low = 1 <= rho(1) <= n
    head = []
    for i in range(1, n + 1):
        head += [_zi(i), _ti(i)]
    # tail chains run t_i z_i so that deleting {y1, y2, s1, s2, z} from u gives
    # exactly a_word(n, m, rho); the simple t_i must separate the two z_i
    # occurrences that follow the second x
    tail = []
    for i in range(n + 1, n + m + 1):
        tail += [_ti(i), _zi(i)]
    wing = [_yi(1), _si(1), _yi(2), _si(2)]
    wing_r = [_si(1), _yi(1), _si(2), _yi(2)]
    if low:
        p = Word(head)
        r = Word(tail + wing_r)
        x_generators = (Word.parse("y y x t x"), Word.parse("x y y t x"))
    else:
        p = Word(wing + head)
        r = Word(tail)
        x_generators = (Word.parse("x t x y y"), Word.parse("x t y y x"))
    mid_all = [_zi(rho(i)) for i in range(1, n + m)]  # z_{1rho} ... z_{(n+m-1)rho}
    last = _zi(rho(n + m))
    core = [_yi(1), _z, _z, _yi(2)]
    core_nz = [_yi(1), _yi(2)]

    def glue(parts):
        letters = []
        for part in parts:
            letters.extend(part.letters if isinstance(part, Word) else part)
        return Word(letters)

    u = glue([p, [_x], mid_all, core, [last, _x], r])
    a = glue([p, [_x], mid_all, core_nz, [last, _x], r])
    a_prime = glue([p, [mid_all[0], _x], mid_all[1:], core_nz, [last, _x], r])
    u_prime = glue([p, [mid_all[0], _x], mid_all[1:], core, [last, _x], r])
    return Step2Construction(p, r, x_generators, u, a, a_prime, u_prime, "low" if low else "high")


def block_identity_one_letter(n: int) -> Identity:
    """x t1 x ... tn x = x^2 t1 ... tn."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lhs = chain_word(n)
    rhs = Word([_x, _x] + [_ti(i) for i in range(1, n + 1)])
    return Identity(lhs, rhs)


def block_identity_two_letters(k: int, ell: int, assignment) -> Identity:
    """(a1 t1 ... ak tk) x y (t_{k+1} a_{k+1} ...) = same with y x.

    assignment gives a1 ... a_{k+ell}, which must use both x and y unless empty."""
    if k < 0 or ell < 0:
        raise ValueError("k and ell must be non-negative")
    letters = tuple(Letter.parse(a) if isinstance(a, str) else a for a in assignment)
    if len(letters) != k + ell:
        raise ValueError(f"assignment length {len(letters)} != k+ell = {k + ell}")
    if k + ell > 0 and set(letters) != {_x, _y}:
        raise ValueError("assignment must use both letters x and y")
    if any(a not in (_x, _y) for a in letters):
        raise ValueError("assignment letters must be x or y")
    head = []
    for i in range(1, k + 1):
        head += [letters[i - 1], _ti(i)]
    tail = []
    for i in range(k + 1, k + ell + 1):
        tail += [_ti(i), letters[i - 1]]
    lhs = Word(head + [_x, _y] + tail)
    rhs = Word(head + [_y, _x] + tail)
    return Identity(lhs, rhs)
