"""Outcome types for satisfaction and isoterm checks."""

from __future__ import annotations

HOLDS = "holds"
FAILS = "fails"
UNKNOWN = "unknown"


class Verdict:
    """Result of an identity-satisfaction check.

    A failing verdict carries a witness substitution (letter -> element) that
    can be replayed to reproduce the refutation; an unknown verdict means the
    enumeration budget ran out, never that the identity fails.
    """

    __slots__ = ("status", "witness", "checked", "note")

    def __init__(self, status, witness=None, checked=0, note=""):
        if status not in (HOLDS, FAILS, UNKNOWN):
            raise ValueError(f"bad verdict status: {status!r}")
        if status == FAILS and witness is None:
            raise ValueError("failing verdict needs a witness")
        self.status = status
        self.witness = witness
        self.checked = checked
        self.note = note

    @property
    def holds(self):
        return self.status == HOLDS

    @property
    def fails(self):
        return self.status == FAILS

    @property
    def unknown(self):
        return self.status == UNKNOWN

    def witness_strings(self):
        """Witness as a plain {letter: element} string dict, None when absent."""
        if self.witness is None:
            return None
        return {str(k): str(v) for k, v in sorted(self.witness.items(), key=lambda kv: kv[0])}

    def to_dict(self):
        out = {"status": self.status}
        w = self.witness_strings()
        if w is not None:
            out["witness"] = w
        out["checked"] = self.checked
        if self.note:
            out["note"] = self.note
        return out

    def __repr__(self):
        if self.fails:
            return f"Verdict(fails, witness={self.witness_strings()})"
        return f"Verdict({self.status})"


def holds(checked=0):
    return Verdict(HOLDS, checked=checked)


def fails(witness, checked=0):
    return Verdict(FAILS, witness=witness, checked=checked)


def unknown(note, checked=0):
    return Verdict(UNKNOWN, checked=checked, note=note)


ISOTERM_UP_TO = "isoterm_up_to"
NOT_ISOTERM = "not_isoterm"


class IsotermVerdict:
    """Bound-relative isoterm check result.

    ``isoterm_up_to`` only asserts that no distinct equivalent word exists
    within the searched length bound and fresh-letter allowance; it is never
    an absolute isoterm claim.
    """

    __slots__ = ("status", "bound", "fresh_letters", "witness", "checked", "note")

    def __init__(self, status, bound, fresh_letters, witness=None, checked=0, note=""):
        if status not in (ISOTERM_UP_TO, NOT_ISOTERM, UNKNOWN):
            raise ValueError(f"bad isoterm status: {status!r}")
        if status == NOT_ISOTERM and witness is None:
            raise ValueError("not_isoterm needs a witness word")
        self.status = status
        self.bound = bound
        self.fresh_letters = fresh_letters
        self.witness = witness
        self.checked = checked
        self.note = note

    @property
    def is_isoterm_up_to_bound(self):
        return self.status == ISOTERM_UP_TO

    @property
    def refuted(self):
        return self.status == NOT_ISOTERM

    @property
    def unknown(self):
        return self.status == UNKNOWN

    def to_dict(self):
        out = {"status": self.status, "bound": self.bound, "fresh_letters": self.fresh_letters}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        out["checked"] = self.checked
        if self.note:
            out["note"] = self.note
        return out

    def __repr__(self):
        if self.refuted:
            return f"IsotermVerdict(not_isoterm, witness={self.witness})"
        return f"IsotermVerdict({self.status}, bound={self.bound})"
