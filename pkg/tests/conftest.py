import random

from eqmon.lattice import FiniteLattice, LatticeError


def random_lattice(rng: random.Random, max_mid: int = 8) -> FiniteLattice:
    """A random lattice built by sandwiching a random middle poset between
    a bottom and a top, rejecting candidates where some pair lacks a meet
    or join."""
    while True:
        n_mid = rng.randint(0, max_mid)
        names = [f"m{i}" for i in range(n_mid)]
        covers = []
        for i in range(n_mid):
            for j in range(i + 1, n_mid):
                if rng.random() < 0.25:
                    covers.append((names[i], names[j]))
        has_lower = {hi for _, hi in covers}
        has_upper = {lo for lo, _ in covers}
        full = ["bot"] + names + ["top"]
        covers += [("bot", nm) for nm in names if nm not in has_lower]
        covers += [(nm, "top") for nm in names if nm not in has_upper]
        if not names:
            covers = [("bot", "top")]
        try:
            return FiniteLattice(full, covers)
        except LatticeError:
            continue
