"""Finite monoids as multiplication tables: satisfaction, truncated theories,
direct products and bound-relative isoterm checking.

The satisfaction engine here is independent of the match-based one in
eqmon.rees: it enumerates substitutions over the table, which is what makes
the two usable as cross-oracles for each other.
"""

from __future__ import annotations

import hashlib
import random
from array import array
from itertools import product

from . import verdicts
from .equational import Identity
from .kernel import check_identity, eval_subs_range, eval_under_subs
from .words import Word, alphabet, canonical_letter

_DIGEST_CHUNK = 1 << 16


class FiniteMonoid:
    """A monoid given by element names, an identity index and an n x n table."""

    def __init__(self, names, identity, table):
        self.names = [str(x) for x in names]
        n = len(self.names)
        if len(set(self.names)) != n:
            raise ValueError("element names must be distinct")
        flat = array("i")
        if len(table) == n and all(hasattr(row, "__len__") for row in table):
            for row in table:
                if len(row) != n:
                    raise ValueError("table is not square")
                flat.extend(row)
        else:
            flat.extend(table)
            if len(flat) != n * n:
                raise ValueError("flat table has wrong size")
        for v in flat:
            if not 0 <= v < n:
                raise ValueError(f"table entry out of range: {v}")
        if not 0 <= identity < n:
            raise ValueError(f"identity index out of range: {identity}")
        for i in range(n):
            if flat[identity * n + i] != i or flat[i * n + identity] != i:
                raise ValueError("identity element is not two-sided")
        self.identity = identity
        self.table = flat
        self.n = n

    @property
    def size(self) -> int:
        return self.n

    def multiply(self, i: int, j: int) -> int:
        return self.table[i * self.n + j]

    def name(self, i: int) -> str:
        return self.names[i]

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown element name: {name!r}") from None

    def check_associative(self) -> bool:
        n, tab = self.n, self.table
        for a in range(n):
            row_a = tab[a * n : (a + 1) * n]
            for b in range(n):
                base_ab = row_a[b] * n
                base_b = b * n
                for c in range(n):
                    if tab[base_ab + c] != row_a[tab[base_b + c]]:
                        return False
        return True

    def to_dict(self):
        n = self.n
        return {
            "elements": list(self.names),
            "identity": self.identity,
            "table": [list(self.table[i * n : (i + 1) * n]) for i in range(n)],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["elements"], d["identity"], d["table"])

    def __repr__(self):
        return f"FiniteMonoid(size={self.n})"


def from_rees(M) -> FiniteMonoid:
    """Table form of a factor monoid; names are the element words (zero prints 0)."""
    return FiniteMonoid(M.element_names(), M.index(M.identity), array("i", M.table()))


def direct_product(A: FiniteMonoid, B: FiniteMonoid, max_size: int = 2000) -> FiniteMonoid:
    """Componentwise product; raises when the result would exceed max_size elements."""
    n = A.size * B.size
    if n > max_size:
        raise ValueError(f"product size {n} exceeds cap {max_size}")
    names = [f"({a},{b})" for a in A.names for b in B.names]
    nb = B.size
    flat = array("i", [0]) * (n * n)
    for a1 in range(A.size):
        for b1 in range(B.size):
            i = a1 * nb + b1
            for a2 in range(A.size):
                ra = A.table[a1 * A.size + a2]
                for b2 in range(B.size):
                    flat[i * n + a2 * nb + b2] = ra * nb + B.table[b1 * B.size + b2]
    return FiniteMonoid(names, A.identity * nb + B.identity, flat)


def _letter_codes(letters):
    return {x: c for c, x in enumerate(letters)}


def _encode(w: Word, code) -> array:
    return array("i", [code[x] for x in w.letters])


def satisfies(M: FiniteMonoid, ident: Identity, budget: int = 10_000_000, jobs: int = 1):
    """Exhaustive check over all substitutions into M; lexicographically least witness.

    With jobs > 1 the substitution ranks are split into ranges scanned by
    worker processes; the reported witness is still the least rank, so the
    verdict matches the sequential run exactly.
    """
    letters = sorted(alphabet(ident.lhs) | alphabet(ident.rhs))
    k = len(letters)
    total = M.size**k
    if total > budget:
        return verdicts.unknown(
            f"{M.size}^{k} = {total} substitutions exceed budget {budget}", checked=0
        )
    code = _letter_codes(letters)
    lhs = _encode(ident.lhs, code)
    rhs = _encode(ident.rhs, code)
    if jobs > 1 and total > 4096:
        rank = _parallel_first_violation(M.table, M.size, M.identity, lhs, rhs, k, total, jobs)
    else:
        rank = check_identity(M.table, M.size, M.identity, lhs, rhs, k)
    if rank < 0:
        return verdicts.holds(checked=total)
    witness = {}
    rem = rank
    for i in range(k - 1, -1, -1):
        witness[letters[i]] = M.names[rem % M.size]
        rem //= M.size
    return verdicts.fails(witness, checked=rank + 1)


def _scan_rank_range(args):
    table, n, e, lhs, rhs, k, lo, hi = args
    step = 1 << 14
    pos = lo
    while pos < hi:
        stop = min(pos + step, hi)
        va = eval_subs_range(table, n, e, lhs, k, pos, stop)
        vb = eval_subs_range(table, n, e, rhs, k, pos, stop)
        if va != vb:
            for off in range(stop - pos):
                if va[off] != vb[off]:
                    return pos + off
        pos = stop
    return -1


def _parallel_first_violation(table, n, e, lhs, rhs, k, total, jobs):
    from concurrent.futures import ProcessPoolExecutor

    chunk = -(-total // (jobs * 4))
    work = [
        (table, n, e, lhs, rhs, k, lo, min(lo + chunk, total))
        for lo in range(0, total, chunk)
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for rank in pool.map(_scan_rank_range, work):
            if rank >= 0:
                return rank
    return -1


class TruncatedTheory:
    """All canonical identities up to a word length and letter count holding in a monoid."""

    def __init__(self, max_len, max_letters, identities, complete=True, note=""):
        self.max_len = max_len
        self.max_letters = max_letters
        self.identities = frozenset(identities)
        self.complete = complete
        self.note = note

    def __contains__(self, ident: Identity) -> bool:
        return ident in self.identities

    def __len__(self):
        return len(self.identities)

    def sorted_identities(self):
        return sorted(self.identities, key=lambda i: i.canonical_key)

    def to_lines(self) -> str:
        return "\n".join(str(i.canonical()) for i in self.sorted_identities())

    def __repr__(self):
        flag = "" if self.complete else ", partial"
        return f"TruncatedTheory(L={self.max_len}, k={self.max_letters}, {len(self)} identities{flag})"


def _all_word_codes(k: int, max_len: int):
    """Code tuples of every word over k fixed letters, shortlex order."""
    for length in range(max_len + 1):
        yield from product(range(k), repeat=length)


def _fingerprint(table, n, e, codes, k, total) -> bytes:
    h = hashlib.blake2b(digest_size=16)
    arr = array("i", codes)
    for lo in range(0, total, _DIGEST_CHUNK):
        chunk = eval_subs_range(table, n, e, arr, k, lo, min(lo + _DIGEST_CHUNK, total))
        h.update(chunk.tobytes())
    return h.digest()


def truncated_theory(
    M: FiniteMonoid, max_len: int = 6, max_letters: int = 4, budget: int = 10_000_000
) -> TruncatedTheory:
    """Enumerate the nontrivial identities of M within the size bounds.

    Words over a fixed alphabet of max_letters letters are grouped by a
    fingerprint of their value under every substitution, and each candidate
    group is split into exact classes by re-verification, so a hash collision
    can never smuggle in a wrong identity.  When the substitution space
    exceeds the budget the result is empty and flagged incomplete.
    """
    n, e, k = M.size, M.identity, max_letters
    total = n**k
    if total > budget:
        return TruncatedTheory(
            max_len, max_letters, (), complete=False,
            note=f"{n}^{k} = {total} substitutions exceed budget {budget}",
        )
    groups: dict = {}
    for codes in _all_word_codes(k, max_len):
        groups.setdefault(_fingerprint(M.table, n, e, codes, k, total), []).append(codes)
    letters = [canonical_letter(i) for i in range(k)]
    identities = set()
    for group in groups.values():
        if len(group) < 2:
            continue
        for cls in _split_exact(M.table, n, e, k, group):
            words = [Word(letters[c] for c in codes) for codes in cls]
            for i in range(len(words)):
                for j in range(i + 1, len(words)):
                    identities.add(Identity(words[i], words[j]).canonical())
    return TruncatedTheory(max_len, max_letters, identities)


def _split_exact(table, n, e, k, group):
    """Partition fingerprint-equal words into genuinely equal-value classes."""
    classes: list = []
    for codes in group:
        arr = array("i", codes)
        for cls in classes:
            if check_identity(table, n, e, cls[0][1], arr, k) < 0:
                cls.append((codes, arr))
                break
        else:
            classes.append([(codes, arr)])
    return [[codes for codes, _ in cls] for cls in classes]


def theory_intersect(a: TruncatedTheory, b: TruncatedTheory) -> TruncatedTheory:
    _check_params(a, b)
    return TruncatedTheory(
        a.max_len, a.max_letters, a.identities & b.identities,
        complete=a.complete and b.complete,
    )


def theory_leq(a: TruncatedTheory, b: TruncatedTheory) -> bool:
    """True iff every identity of a also belongs to b (at equal parameters)."""
    _check_params(a, b)
    return a.identities <= b.identities


def _check_params(a, b):
    if (a.max_len, a.max_letters) != (b.max_len, b.max_letters):
        raise ValueError(
            f"theory parameters differ: ({a.max_len},{a.max_letters}) vs ({b.max_len},{b.max_letters})"
        )


def _fresh_letters(taken, count):
    out = []
    taken = set(taken)
    i = 0
    while len(out) < count:
        cand = canonical_letter(i)
        if cand not in taken:
            out.append(cand)
        i += 1
    return out


def _probe_subs(n: int, e: int, k: int, probes: int) -> array:
    """Deterministic probe substitutions, biased toward the identity element.

    Identity-heavy probes keep long products from collapsing, which is what
    makes them discriminate between candidate words.
    """
    rng = random.Random(1_000_003 * n + 101 * k + probes)
    flat = array("i", [0]) * (probes * k)
    for r in range(probes):
        for c in range(k):
            flat[r * k + c] = e if rng.random() < 0.5 else rng.randrange(n)
    return flat


def isoterm_check(
    M: FiniteMonoid,
    u: Word,
    bound: int,
    fresh_letters: int = 1,
    budget: int = 10_000_000,
    probes: int = 128,
):
    """Search for a word distinct from u that M cannot tell apart from u.

    Candidates range over all words of length <= bound over alphabet(u) plus
    up to fresh_letters extra letters.  A refutation carries a fully verified
    witness; the positive outcome is only "no witness within the bound".
    Candidates are prefiltered by probe substitutions and survivors are
    checked exhaustively, so the reported witness is the shortlex-first one.
    """
    base = sorted(alphabet(u))
    letters = sorted(base + _fresh_letters(base, fresh_letters))
    k = len(letters)
    n, e = M.size, M.identity
    total = n**k
    if total > budget:
        return verdicts.IsotermVerdict(
            verdicts.UNKNOWN, bound, fresh_letters,
            note=f"{n}^{k} = {total} substitutions exceed budget {budget}",
        )
    code = _letter_codes(letters)
    ucodes = _encode(u, code)
    subs = _probe_subs(n, e, k, probes)
    u_probe = eval_under_subs(M.table, n, e, ucodes, k, subs)
    u_tuple = tuple(ucodes)
    checked = 0
    for codes in _all_word_codes(k, bound):
        if codes == u_tuple:
            continue
        arr = array("i", codes)
        if eval_under_subs(M.table, n, e, arr, k, subs) != u_probe:
            continue
        checked += 1
        if check_identity(M.table, n, e, ucodes, arr, k) < 0:
            witness = Word(letters[c] for c in codes)
            return verdicts.IsotermVerdict(
                verdicts.NOT_ISOTERM, bound, fresh_letters, witness=witness, checked=checked
            )
    return verdicts.IsotermVerdict(
        verdicts.ISOTERM_UP_TO, bound, fresh_letters, checked=checked
    )
