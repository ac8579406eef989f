"""Identities, substitutions, one-step rewriting and bounded deduction search.

An identity ``u = v`` rewrites a word w in one step when w = a phi(s) b and
the result is a phi(t) b for a substitution phi and {s, t} the two sides.
Deduction chains such steps; the search is budgeted and sound: a returned
derivation always verifies, while exhausting the budget proves nothing.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from . import kernel
from .words import Letter, Word, canonical_map


class Substitution:
    """Finite-support map from letters to words; unmapped letters stay themselves."""

    __slots__ = ("mapping",)

    def __init__(self, mapping=None):
        m = {}
        for letter, image in (mapping or {}).items():
            if not isinstance(letter, Letter) or not isinstance(image, Word):
                raise TypeError("substitution maps Letter to Word")
            if len(image) == 1 and image[0] == letter:
                continue  # identity mapping, not stored
            m[letter] = image
        self.mapping = m

    def __getitem__(self, letter: Letter) -> Word:
        got = self.mapping.get(letter)
        return Word((letter,)) if got is None else got

    @property
    def support(self):
        return frozenset(self.mapping)

    def apply(self, w: Word) -> Word:
        """Homomorphic image: concatenation of the letter images along w."""
        out = []
        for x in w.letters:
            img = self.mapping.get(x)
            if img is None:
                out.append(x)
            else:
                out.extend(img.letters)
        return Word(out)

    def items(self):
        return sorted(self.mapping.items(), key=lambda kv: kv[0])

    def __eq__(self, other):
        if not isinstance(other, Substitution):
            return NotImplemented
        return self.mapping == other.mapping

    def __hash__(self):
        return hash(frozenset(self.mapping.items()))

    def to_dict(self):
        return {str(k): str(v) for k, v in self.items()}

    @classmethod
    def from_dict(cls, d):
        return cls({Letter.parse(k): Word.parse(v) for k, v in d.items()})

    def __repr__(self):
        inner = ", ".join(f"{k} -> {v}" for k, v in self.items())
        return f"Substitution({{{inner}}})"


IDENTITY_SEPARATORS = ("≈", "=")


class Identity:
    """An unordered pair of words; equality and hashing are up to joint renaming."""

    __slots__ = ("lhs", "rhs", "_canonical", "_key")

    def __init__(self, lhs: Word, rhs: Word):
        object.__setattr__(self, "lhs", lhs)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "_canonical", None)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("Identity is immutable")

    @classmethod
    def parse(cls, text: str) -> "Identity":
        for sep in IDENTITY_SEPARATORS:
            if sep in text:
                left, _, right = text.partition(sep)
                return cls(Word.parse(left), Word.parse(right))
        raise ValueError(f"identity must contain '=' or '≈': {text!r}")

    @property
    def is_trivial(self) -> bool:
        return self.lhs == self.rhs

    def sides(self):
        return (self.lhs, self.rhs)

    def reversed(self) -> "Identity":
        return Identity(self.rhs, self.lhs)

    def canonical(self) -> "Identity":
        """Jointly renamed form with the shortlex-smaller presentation first."""
        c = self._canonical
        if c is None:
            a = _joint_rename(self.lhs, self.rhs)
            b = _joint_rename(self.rhs, self.lhs)
            pair = min(a, b, key=lambda p: (p[0].key, p[1].key))
            c = Identity(pair[0], pair[1])
            object.__setattr__(c, "_canonical", c)
            object.__setattr__(self, "_canonical", c)
        return c

    @property
    def canonical_key(self):
        k = self._key
        if k is None:
            c = self.canonical()
            k = (c.lhs.key, c.rhs.key)
            object.__setattr__(self, "_key", k)
        return k

    def __eq__(self, other):
        if not isinstance(other, Identity):
            return NotImplemented
        return self.canonical_key == other.canonical_key

    def __lt__(self, other):
        return self.canonical_key < other.canonical_key

    def __hash__(self):
        return hash(("Identity", self.canonical_key))

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"

    def __repr__(self):
        return f"Identity.parse({str(self)!r})"

    def __reduce__(self):
        return (Identity, (self.lhs, self.rhs))


def _joint_rename(a: Word, b: Word):
    m = canonical_map(list(a.letters) + list(b.letters))
    return (Word(m[x] for x in a.letters), Word(m[x] for x in b.letters))


def I(text: str) -> Identity:
    """Shorthand parser (``I("x y = y x")``)."""
    return Identity.parse(text)


def parse_identity_file(text: str):
    """One identity per line; blank lines and '#' comments are skipped."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(Identity.parse(line))
    return out


def _encode_pattern(pattern: Word):
    order = []
    ids = {}
    for x in pattern.letters:
        if x not in ids:
            ids[x] = len(order)
            order.append(x)
    codes = array("i", [ids[x] for x in pattern.letters])
    return codes, order, ids


def _encode_symbols(w: Word):
    ids = {}
    return array("i", [ids.setdefault(x, len(ids)) for x in w.letters])


def match_pattern(s: Word, target: Word):
    """All substitutions phi with support in alf(s) and phi(s) = target.

    Images may be empty.  Backtracking keeps letter images consistent across
    all occurrences; results come out in a stable order (earlier pattern
    positions take shorter images first).
    """
    pcodes, order, _ = _encode_pattern(s)
    tcodes = _encode_symbols(target)
    tletters = target.letters
    out = []
    for spans in kernel.enumerate_matches(pcodes, tcodes, len(order)):
        mapping = {}
        for v, letter in enumerate(order):
            mapping[letter] = Word(tletters[spans[2 * v] : spans[2 * v + 1]])
        out.append(Substitution(mapping))
    return out


@dataclass(frozen=True)
class Witness:
    """One rewrite step: from prefix*phi(matched side)*suffix to prefix*phi(other side)*suffix."""

    identity: Identity
    forward: bool  # True when the matched side is identity.lhs
    prefix: Word
    suffix: Word
    subst: Substitution

    @property
    def matched_side(self) -> Word:
        return self.identity.lhs if self.forward else self.identity.rhs

    @property
    def produced_side(self) -> Word:
        return self.identity.rhs if self.forward else self.identity.lhs

    def from_word(self) -> Word:
        return self.prefix * self.subst.apply(self.matched_side) * self.suffix

    def to_word(self) -> Word:
        return self.prefix * self.subst.apply(self.produced_side) * self.suffix

    def reversed(self) -> "Witness":
        return Witness(self.identity, not self.forward, self.prefix, self.suffix, self.subst)

    def to_dict(self):
        return {
            "identity": str(self.identity),
            "matched_side": "lhs" if self.forward else "rhs",
            "prefix": str(self.prefix),
            "suffix": str(self.suffix),
            "substitution": self.subst.to_dict(),
        }

    @classmethod
    def from_dict(cls, d):
        side = d["matched_side"]
        if side not in ("lhs", "rhs"):
            raise ValueError(f"bad matched_side: {side!r}")
        return cls(
            identity=Identity.parse(d["identity"]),
            forward=(side == "lhs"),
            prefix=Word.parse(d["prefix"]),
            suffix=Word.parse(d["suffix"]),
            subst=Substitution.from_dict(d["substitution"]),
        )


def direct_successors(w: Word, sigma):
    """All words one rewrite step away from w, with one witness each.

    Enumerates every factorization w = a m b, matches m against both sides of
    every identity, and keeps distinct results different from w itself.
    Letters of the produced side outside the matched side's alphabet are left
    unchanged, which keeps the successor set finite.  Output is sorted
    shortlex and carries the first witness found in enumeration order.
    """
    wt = w.letters
    n = len(wt)
    wcodes = _encode_symbols(w)
    found: dict = {}
    for ident in sigma:
        for forward in (True, False):
            src = ident.lhs if forward else ident.rhs
            dst = ident.rhs if forward else ident.lhs
            pcodes, order, ids = _encode_pattern(src)
            nvars = len(order)
            # produced side as (var id | -1) per position, -1 = letter kept as is
            dst_plan = [(ids.get(x, -1), x) for x in dst.letters]
            for i in range(n + 1):
                for j in range(i, n + 1):
                    for spans in kernel.enumerate_matches(pcodes, wcodes[i:j], nvars):
                        out = list(wt[:i])
                        for var, letter in dst_plan:
                            if var < 0:
                                out.append(letter)
                            else:
                                out.extend(wt[i + spans[2 * var] : i + spans[2 * var + 1]])
                        out.extend(wt[j:])
                        tup = tuple(out)
                        if tup == wt:
                            continue  # trivial self-step
                        if tup in found:
                            continue
                        mapping = {
                            letter: Word(wt[i + spans[2 * v] : i + spans[2 * v + 1]])
                            for v, letter in enumerate(order)
                        }
                        found[tup] = (
                            Word(tup),
                            Witness(ident, forward, Word(wt[:i]), Word(wt[j:]), Substitution(mapping)),
                        )
    return sorted(found.values(), key=lambda pair: pair[0].key)


@dataclass(frozen=True)
class SearchBudget:
    """Caps for the deduction search; exhausting one is not a disproof."""

    max_word_length: int
    max_visited_states: int = 1_000_000
    max_depth: int = 50

    def __post_init__(self):
        for field in ("max_word_length", "max_visited_states", "max_depth"):
            if getattr(self, field) <= 0:
                raise ValueError(f"{field} must be positive")


class Derivation:
    """A verified chain of one-step rewrites."""

    found = True

    def __init__(self, chain, steps):
        if len(chain) != len(steps) + 1:
            raise ValueError("chain must be one longer than steps")
        self.chain = list(chain)
        self.steps = list(steps)

    def __len__(self):
        return len(self.steps)

    def to_dict(self):
        return {
            "chain": [str(w) for w in self.chain],
            "steps": [s.to_dict() for s in self.steps],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            [Word.parse(w) for w in d["chain"]],
            [Witness.from_dict(s) for s in d["steps"]],
        )

    def __repr__(self):
        return f"Derivation({' -> '.join(str(w) for w in self.chain)})"


class NotFoundWithinBudget:
    """Search gave up; carries exploration statistics, proves nothing."""

    found = False

    def __init__(self, reason, visited, depth_reached):
        self.reason = reason
        self.visited = visited
        self.depth_reached = depth_reached

    def to_dict(self):
        return {
            "reason": self.reason,
            "visited": self.visited,
            "depth_reached": self.depth_reached,
        }

    def __repr__(self):
        return f"NotFoundWithinBudget({self.reason}, visited={self.visited})"


def deduce(u: Word, v: Word, sigma, budget: SearchBudget | None = None):
    """Bidirectional breadth-first search for a rewrite chain from u to v.

    Returns a Derivation (sound by construction) or NotFoundWithinBudget.
    Words longer than the budget allows are pruned, so the search is
    incomplete but terminating.  Default word-length cap: longest input + 3.
    """
    sigma = list(sigma)
    if budget is None:
        budget = SearchBudget(max_word_length=max(len(u), len(v)) + 3)
    if u == v:
        return Derivation([u], [])
    if len(u) > budget.max_word_length or len(v) > budget.max_word_length:
        return NotFoundWithinBudget("endpoint longer than max_word_length", 0, 0)
    left = {u: None}
    right = {v: None}
    frontier_left = [u]
    frontier_right = [v]
    visited = 2
    depth = 0
    while frontier_left and frontier_right:
        if depth >= budget.max_depth:
            return NotFoundWithinBudget("max_depth reached", visited, depth)
        expand_left = len(frontier_left) <= len(frontier_right)
        frontier = frontier_left if expand_left else frontier_right
        table = left if expand_left else right
        other = right if expand_left else left
        next_frontier = []
        for w in sorted(frontier):
            for w2, wit in direct_successors(w, sigma):
                if len(w2) > budget.max_word_length or w2 in table:
                    continue
                table[w2] = (w, wit)
                visited += 1
                next_frontier.append(w2)
                if w2 in other:
                    return _reconstruct(left, right, w2)
                if visited > budget.max_visited_states:
                    return NotFoundWithinBudget("max_visited_states reached", visited, depth)
        if expand_left:
            frontier_left = next_frontier
        else:
            frontier_right = next_frontier
        depth += 1
    return NotFoundWithinBudget("frontier exhausted (within length cap)", visited, depth)


def _reconstruct(left, right, meeting: Word) -> Derivation:
    chain = [meeting]
    steps = []
    cur = meeting
    while left[cur] is not None:
        parent, wit = left[cur]
        chain.insert(0, parent)
        steps.insert(0, wit)
        cur = parent
    cur = meeting
    while right[cur] is not None:
        parent, wit = right[cur]
        # recorded as parent -> cur while searching backwards from the target
        steps.append(wit.reversed())
        chain.append(parent)
        cur = parent
    return Derivation(chain, steps)


def verify_derivation(d: Derivation, sigma) -> bool:
    """True iff every step's witness reconstructs the step exactly from sigma."""
    if not isinstance(d, Derivation):
        raise TypeError("expected a Derivation")
    if len(d.chain) != len(d.steps) + 1 or not d.chain:
        raise ValueError("malformed derivation: chain/step length mismatch")
    allowed = set(sigma)
    for wi, wj, step in zip(d.chain, d.chain[1:], d.steps):
        if step.identity not in allowed:
            return False
        if step.from_word() != wi or step.to_word() != wj:
            return False
    return True
