"""Finite lattices from cover relations, with two independent modularity tests.

An element is modular when (x v y) ^ z = (x ^ z) v y for all y <= z; the dual
route searches for a pentagon sublattice having the element as its lonely
midpoint.  Both are exposed so they can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass


class LatticeError(ValueError):
    pass


class FiniteLattice:
    """A finite lattice given by named elements and the cover (Hasse) relation."""

    def __init__(self, names, covers):
        self.names = [str(x) for x in names]
        n = len(self.names)
        if n == 0:
            raise LatticeError("a lattice needs at least one element")
        if len(set(self.names)) != n:
            raise LatticeError("element names must be distinct")
        idx = {name: i for i, name in enumerate(self.names)}
        up: list = [set() for _ in range(n)]
        for lo, hi in covers:
            if lo not in idx or hi not in idx:
                raise LatticeError(f"cover uses unknown element: {lo} < {hi}")
            if lo == hi:
                raise LatticeError(f"cover relates an element to itself: {lo}")
            up[idx[lo]].add(idx[hi])
        self.covers = sorted((lo, hi) for lo in range(n) for hi in up[lo])
        self._check_acyclic(up)
        leq = [set([i]) for i in range(n)]
        order = self._topo_order(up)
        for i in reversed(order):
            for j in up[i]:
                leq[i] |= leq[j]
        self._leq = [frozenset(s) for s in leq]
        self._meet = [[0] * n for _ in range(n)]
        self._join = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                self._meet[a][b] = self._bound(a, b, lower=True)
                self._join[a][b] = self._bound(a, b, lower=False)
        bot = 0
        top = 0
        for i in range(n):
            bot = self._meet[bot][i]
            top = self._join[top][i]
        self.bottom = bot
        self.top = top

    def _check_acyclic(self, up):
        n = len(self.names)
        indeg = [0] * n
        for i in range(n):
            for j in up[i]:
                indeg[j] += 1
        queue = [i for i in range(n) if indeg[i] == 0]
        seen = 0
        while queue:
            i = queue.pop()
            seen += 1
            for j in up[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if seen != n:
            raise LatticeError("cover relation has a cycle")

    def _topo_order(self, up):
        n = len(self.names)
        indeg = [0] * n
        for i in range(n):
            for j in up[i]:
                indeg[j] += 1
        queue = sorted(i for i in range(n) if indeg[i] == 0)
        order = []
        while queue:
            i = queue.pop(0)
            order.append(i)
            for j in sorted(up[i]):
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        return order

    def _bound(self, a, b, lower):
        n = len(self.names)
        if lower:
            common = [c for c in range(n) if self.leq(c, a) and self.leq(c, b)]
            best = [c for c in common if all(self.leq(d, c) for d in common)]
        else:
            common = [c for c in range(n) if self.leq(a, c) and self.leq(b, c)]
            best = [c for c in common if all(self.leq(c, d) for d in common)]
        if len(best) != 1:
            kind = "meet" if lower else "join"
            raise LatticeError(
                f"not a lattice: elements {self.names[a]!r} and {self.names[b]!r} have no {kind}"
            )
        return best[0]

    @property
    def size(self) -> int:
        return len(self.names)

    def resolve(self, x) -> int:
        if isinstance(x, int):
            if not 0 <= x < self.size:
                raise LatticeError(f"element index out of range: {x}")
            return x
        try:
            return self.names.index(str(x))
        except ValueError:
            raise LatticeError(f"unknown element: {x!r}") from None

    def leq(self, a, b) -> bool:
        return self.resolve(b) in self._leq[self.resolve(a)]

    def meet(self, a, b) -> int:
        return self._meet[self.resolve(a)][self.resolve(b)]

    def join(self, a, b) -> int:
        return self._join[self.resolve(a)][self.resolve(b)]

    def incomparable(self, a, b) -> bool:
        return not self.leq(a, b) and not self.leq(b, a)

    def to_text(self) -> str:
        lines = ["elements: " + " ".join(self.names)]
        lines += [f"{self.names[lo]} < {self.names[hi]}" for lo, hi in self.covers]
        return "\n".join(lines)

    def __repr__(self):
        return f"FiniteLattice({self.names})"


def from_covers(names, covers) -> FiniteLattice:
    return FiniteLattice(names, covers)


def parse_lattice_file(text: str) -> FiniteLattice:
    """Element list plus cover lines: ``elements: a b c`` then ``a < b`` per cover."""
    names: list = []
    covers = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            names.extend(line[len("elements:") :].split())
        elif "<" in line:
            lo, _, hi = line.partition("<")
            covers.append((lo.strip(), hi.strip()))
        else:
            raise LatticeError(f"bad lattice line: {raw!r}")
    return FiniteLattice(names, covers)


def is_modular_element(L: FiniteLattice, x) -> bool:
    """Exhaustive check of (x v y) ^ z = (x ^ z) v y over all pairs y <= z."""
    xi = L.resolve(x)
    n = L.size
    for y in range(n):
        for z in range(n):
            if z in L._leq[y]:
                if L._meet[L._join[xi][y]][z] != L._join[L._meet[xi][z]][y]:
                    return False
    return True


@dataclass(frozen=True)
class Pentagon:
    """A five-element non-modular sublattice; center is the lonely midpoint."""

    bottom: str
    low: str
    high: str
    center: str
    top: str

    def elements(self):
        return (self.bottom, self.low, self.high, self.center, self.top)

    def verify(self, L: FiniteLattice) -> bool:
        o, a, b, c, i = (L.resolve(e) for e in self.elements())
        if len({o, a, b, c, i}) != 5:
            return False
        return (
            L.leq(a, b)
            and L.incomparable(c, a)
            and L.incomparable(c, b)
            and L._meet[c][a] == o
            and L._meet[c][b] == o
            and L._join[c][a] == i
            and L._join[c][b] == i
        )

    def to_dict(self):
        return {
            "bottom": self.bottom,
            "low": self.low,
            "high": self.high,
            "center": self.center,
            "top": self.top,
        }


def find_pentagon_with_center(L: FiniteLattice, x):
    """A pentagon sublattice with x as its lonely midpoint, or None.

    Any such pentagon is determined by a covering pair of elements a < b both
    incomparable to x with x v a = x v b and x ^ a = x ^ b; the search scans
    those pairs in element order, so the result is deterministic."""
    c = L.resolve(x)
    inc = [a for a in range(L.size) if L.incomparable(a, c)]
    for a in inc:
        for b in inc:
            if a != b and L.leq(a, b):
                if L._join[c][a] == L._join[c][b] and L._meet[c][a] == L._meet[c][b]:
                    return Pentagon(
                        bottom=L.names[L._meet[c][a]],
                        low=L.names[a],
                        high=L.names[b],
                        center=L.names[c],
                        top=L.names[L._join[c][a]],
                    )
    return None


def modular_elements(L: FiniteLattice):
    """Names of the modular elements, in element order."""
    return [L.names[i] for i in range(L.size) if is_modular_element(L, i)]


def pentagon_lattice() -> FiniteLattice:
    """The five-element non-modular lattice; the lonely midpoint is c."""
    return FiniteLattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )


def nonmodular_join_lattice() -> FiniteLattice:
    """Nine elements; the atoms x and y are modular but their join is not."""
    return FiniteLattice(
        ["0", "x", "y", "c", "p", "q", "r", "s", "1"],
        [
            ("0", "x"), ("0", "y"), ("0", "c"),
            ("x", "p"), ("x", "q"), ("y", "q"), ("y", "r"),
            ("c", "p"), ("c", "r"), ("c", "s"),
            ("p", "1"), ("q", "1"), ("r", "1"), ("s", "1"),
        ],
    )


BUILTINS = {"fig1": pentagon_lattice, "fig2": nonmodular_join_lattice}


def builtin(name: str) -> FiniteLattice:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise LatticeError(f"unknown builtin lattice: {name!r}") from None
