"""Finite quotient monoids built from the factors of a word set.

Given a finite set W of words, the monoid has one element per contiguous
factor of a word of W (the empty word included) plus an absorbing zero;
multiplication is concatenation, collapsed to zero whenever the product is
not itself a factor.  The element set of the empty word set collapses to a
single element that is both identity and zero.
"""

from __future__ import annotations

from array import array
from itertools import product

from . import verdicts
from .equational import Identity, match_pattern
from .kernel import check_identity
from .words import EMPTY, Word, alphabet, factors


class _Zero:
    """Absorbing zero; a sentinel distinct from every word."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "0"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


def element_name(el) -> str:
    return "0" if el is ZERO else str(el)


def element_from_name(name: str):
    return ZERO if name.strip() == "0" else Word.parse(name)


class ReesMonoid:
    """Factor monoid of a finite word set, with exact identity checking."""

    def __init__(self, generators):
        gens = sorted(set(generators), key=lambda w: w.key)
        for g in gens:
            if not isinstance(g, Word):
                raise TypeError(f"generator is not a Word: {g!r}")
        self.generators = tuple(gens)
        self.factor_set = factors(self.generators)
        nonzero = sorted(self.factor_set, key=lambda w: w.key)
        self.elements = list(nonzero) + [ZERO]
        self._index = {el: i for i, el in enumerate(nonzero)}
        self.zero_index = len(nonzero)
        self.identity = EMPTY if nonzero else ZERO
        self._max_len = max((len(w) for w in nonzero), default=0)
        self._table = None

    def __reduce__(self):
        return (ReesMonoid, (self.generators,))

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return not self.factor_set

    def nonzero_elements(self):
        """Factors in shortlex order (the zero is excluded)."""
        return self.elements[:-1]

    def element_names(self):
        return [element_name(el) for el in self.elements]

    def index(self, el) -> int:
        if el is ZERO:
            return self.zero_index
        got = self._index.get(el)
        if got is None:
            raise ValueError(f"not an element of M({self._gen_label()}): {el}")
        return got

    def is_element(self, el) -> bool:
        return el is ZERO or el in self._index

    def _gen_label(self):
        return ", ".join(str(g) for g in self.generators)

    def __repr__(self):
        return f"ReesMonoid([{self._gen_label()}], size={self.size})"

    def multiply(self, a, b):
        """Concatenation, collapsed to the zero when outside the factor set."""
        ia = self.index(a)  # raises on foreign elements
        ib = self.index(b)
        if ia == self.zero_index or ib == self.zero_index:
            return ZERO
        prod = a * b
        return prod if prod in self.factor_set else ZERO

    def evaluate(self, w: Word, psi: dict):
        """Image of w under a substitution into this monoid's elements."""
        missing = alphabet(w) - set(psi)
        if missing:
            raise KeyError(f"no image for letter(s): {sorted(missing)}")
        acc: list = []
        for x in w.letters:
            img = psi[x]
            if img is ZERO:
                return ZERO
            if not isinstance(img, Word):
                raise TypeError(f"image of {x} is neither ZERO nor a Word: {img!r}")
            acc.extend(img.letters)
            if len(acc) > self._max_len:
                return ZERO
        word = Word(acc)
        return word if word in self.factor_set else ZERO

    def table(self):
        """Flat multiplication table over element indices (built once, on demand)."""
        tab = self._table
        if tab is None:
            n = self.size
            tab = array("i", [0]) * (n * n)
            z = self.zero_index
            nonzero = self.elements[:-1]
            for i, a in enumerate(nonzero):
                for j, b in enumerate(nonzero):
                    prod = a * b
                    tab[i * n + j] = self._index.get(prod, z)
            for i in range(n):
                tab[i * n + z] = z
                tab[z * n + i] = z
            self._table = tab
        return tab

    def check_associative(self) -> bool:
        """Exhaustive associativity check over all element triples."""
        n = self.size
        tab = self.table()
        for a in range(n):
            row_a = tab[a * n : (a + 1) * n]
            for b in range(n):
                ab = row_a[b]
                base_b = b * n
                base_ab = ab * n
                for c in range(n):
                    if tab[base_ab + c] != row_a[tab[base_b + c]]:
                        return False
        return True

    def satisfies(self, ident: Identity, budget: int = 10_000_000, jobs: int = 1):
        """Exact satisfaction decision driven by pattern matching.

        The identity holds iff every substitution sending one side to a
        nonzero element sends the other side to the same element.  For each
        side s and each nonzero element m, all matches of s onto m are
        enumerated; letters of the other side missing from s then range over
        every element (zero included).  The first failing substitution in
        this fixed order is the witness.  With jobs > 1 the per-element scan
        is partitioned across processes (budget applies per worker chunk);
        the verdict and witness are the same as in the sequential order.
        """
        tasks = []
        for s, t in ((ident.lhs, ident.rhs), (ident.rhs, ident.lhs)):
            ext = sorted(alphabet(t) - alphabet(s))
            tasks.append((s, t, ext))
        if jobs <= 1:
            checked = 0
            for s, t, ext in tasks:
                result, n_checked = _scan_side(self, s, t, ext, 0, self.size - 1, budget - checked)
                checked += n_checked
                if result is not None:
                    return verdicts.fails(result, checked=checked)
                if checked >= budget:
                    return verdicts.unknown("enumeration budget exhausted", checked=checked)
            return verdicts.holds(checked=checked)
        return self._satisfies_parallel(tasks, budget, jobs)

    def _satisfies_parallel(self, tasks, budget, jobs):
        from concurrent.futures import ProcessPoolExecutor

        n_nonzero = self.size - 1
        chunk = max(1, -(-n_nonzero // jobs))
        work = []
        for s, t, ext in tasks:
            for lo in range(0, n_nonzero, chunk):
                work.append((self, s, t, ext, lo, min(lo + chunk, n_nonzero), budget))
        checked = 0
        exhausted = False
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result, n_checked in pool.map(_scan_side_star, work):
                checked += n_checked
                if result is not None:
                    return verdicts.fails(result, checked=checked)
                if n_checked >= budget:
                    exhausted = True
        if exhausted:
            return verdicts.unknown("enumeration budget exhausted", checked=checked)
        return verdicts.holds(checked=checked)

    def satisfies_naive(self, ident: Identity, budget: int = 10_000_000):
        """Full enumeration over all substitutions into the monoid (cross-oracle)."""
        letters = sorted(alphabet(ident.lhs) | alphabet(ident.rhs))
        k = len(letters)
        n = self.size
        total = n**k
        if total > budget:
            return verdicts.unknown(
                f"{n}^{k} = {total} substitutions exceed budget {budget}", checked=0
            )
        code = {x: c for c, x in enumerate(letters)}
        lhs = array("i", [code[x] for x in ident.lhs.letters])
        rhs = array("i", [code[x] for x in ident.rhs.letters])
        rank = check_identity(self.table(), n, self.index(self.identity), lhs, rhs, k)
        if rank < 0:
            return verdicts.holds(checked=total)
        witness = {}
        rem = rank
        for i in range(k - 1, -1, -1):
            witness[letters[i]] = self.elements[rem % n]
            rem //= n
        return verdicts.fails(witness, checked=rank + 1)


def _scan_side_star(args):
    monoid, s, t, ext, lo, hi, budget = args
    return _scan_side(monoid, s, t, ext, lo, hi, budget)


def _scan_side(monoid: ReesMonoid, s: Word, t: Word, ext, lo: int, hi: int, budget: int):
    """Scan elements[lo:hi] as images of side s; return (witness or None, checked)."""
    checked = 0
    s_letters = sorted(alphabet(s))
    for m in monoid.elements[lo:hi]:
        if m is ZERO:
            continue
        for phi in match_pattern(s, m):
            base = {x: phi[x] for x in s_letters}
            for combo in product(monoid.elements, repeat=len(ext)):
                psi = dict(base)
                psi.update(zip(ext, combo))
                checked += 1
                if monoid.evaluate(t, psi) != m:
                    return psi, checked
                if checked >= budget:
                    return None, checked
    return None, checked


def build(words) -> ReesMonoid:
    """The factor monoid of a finite word set."""
    return ReesMonoid(words)


def parse_word_set_file(text: str):
    """One word per line; blank lines and '#' comments are skipped."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(Word.parse(line))
    return out
