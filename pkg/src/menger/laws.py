"""Executable verifiers, one per theorem/proposition/corollary.

Each verifier checks the statement as a biconditional (or implication batch)
on concrete inputs and returns a :class:`LawReport` carrying a replayable
description of those inputs.  A failing report is always a finding against
the implementation, never acceptable output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, PreconditionError
from .transform import (
    NPlaceTransformation,
    Witness,
    diagonal_star,
    is_contractive,
    is_full_intersection_distributive,
    is_full_union_distributive,
    is_interior,
    is_intersection_distributive,
    is_isotone,
    is_union_distributive,
    preceq,
    satisfies_eq2,
    satisfies_eq6,
    satisfies_eq8,
    superpose,
)

__all__ = [
    "LawReport",
    "verify_theorem1",
    "verify_theorem2",
    "verify_corollary1",
    "verify_corollary2",
    "verify_theorem3",
    "verify_prop1",
    "verify_prop2",
    "verify_n1_corollaries",
]


@dataclass
class LawReport:
    law: str
    inputs: dict
    passed: bool
    witnesses: list[Witness] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "inputs": self.inputs,
            "passed": self.passed,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def _inputs(**named: NPlaceTransformation | list[NPlaceTransformation]) -> dict:
    out: dict = {}
    for name, value in named.items():
        if isinstance(value, list):
            out[name] = [t.to_json() for t in value]
        else:
            out[name] = value.to_json()
    return out


def verify_theorem1(f: NPlaceTransformation) -> LawReport:
    """Interior ⇔ the single-inclusion characterization."""
    a = is_interior(f)
    b = satisfies_eq2(f)
    passed = a.passed == b.passed
    return LawReport("T1", _inputs(f=f), passed, [] if passed else [a, b])


def verify_theorem2(f: NPlaceTransformation) -> LawReport:
    """Three-way equivalence: contractive+full-∪ ⇔ contractive+∪ ⇔ kernel form."""
    contr = is_contractive(f).passed
    i = contr and is_full_union_distributive(f).passed
    ii = contr and is_union_distributive(f).passed
    iii = satisfies_eq6(f).passed
    passed = i == ii == iii
    report = LawReport("T2", _inputs(f=f), passed)
    if not passed:
        report.witnesses = [
            Witness(f"T2({name})={value}", False)
            for name, value in (("i", i), ("ii", ii), ("iii", iii))
        ]
    return report


def verify_corollary1(f: NPlaceTransformation) -> LawReport:
    """Kernel form implies interior."""
    passed = True
    witnesses: list[Witness] = []
    if satisfies_eq6(f).passed:
        w = is_interior(f)
        passed = w.passed
        if not passed:
            witnesses.append(w)
    return LawReport("C1", _inputs(f=f), passed, witnesses)


def verify_corollary2(f: NPlaceTransformation) -> LawReport:
    """∪-distributive interior ⇒ ∩-distributive (plain and full variants)."""
    witnesses: list[Witness] = []
    if is_interior(f).passed:
        if is_union_distributive(f).passed:
            w = is_intersection_distributive(f)
            if not w.passed:
                witnesses.append(w)
        if is_full_union_distributive(f).passed:
            w = is_full_intersection_distributive(f)
            if not w.passed:
                witnesses.append(w)
    return LawReport("C2", _inputs(f=f), not witnesses, witnesses)


def verify_theorem3(f: NPlaceTransformation, gs: list[NPlaceTransformation]) -> LawReport:
    """Superposition of interiors is interior ⇔ the closure condition."""
    for name, t in [("f", f)] + [(f"g{i+1}", g) for i, g in enumerate(gs)]:
        if not is_interior(t).passed:
            raise PreconditionError(f"verify_theorem3 requires interior inputs; {name} is not")
    a = is_interior(superpose(f, gs))
    b = satisfies_eq8(f, gs)
    passed = a.passed == b.passed
    return LawReport("T3", _inputs(f=f, gs=gs), passed, [] if passed else [a, b])


def _first_not_below(a: NPlaceTransformation, b: NPlaceTransformation) -> int:
    for idx in range(a.size):
        if a.table[idx] & ~b.table[idx]:
            return idx
    return -1


def verify_prop1(
    f: NPlaceTransformation,
    gs: list[NPlaceTransformation],
    hs: list[NPlaceTransformation],
) -> LawReport:
    """The three inclusion properties of the pointwise order.

    Each part is checked only when its hypothesis holds on the given inputs:
    (a) needs contractive f, (b) isotone f with gi below hi, (c) isotone f
    with a contractive inner transformation.
    """
    witnesses: list[Witness] = []
    f_contr = is_contractive(f).passed
    f_iso = is_isotone(f).passed
    if f_contr:
        fg = superpose(f, gs)
        for i, g in enumerate(gs):
            idx = _first_not_below(fg, g)
            if idx >= 0:
                witnesses.append(Witness.fail("P1a", idx, coord=i))
    if f_iso and all(preceq(g, h) for g, h in zip(gs, hs)):
        idx = _first_not_below(superpose(f, gs), superpose(f, hs))
        if idx >= 0:
            witnesses.append(Witness.fail("P1b", idx))
    if f_iso:
        for i, g in enumerate(gs):
            if is_contractive(g).passed:
                idx = _first_not_below(diagonal_star(f, g), f)
                if idx >= 0:
                    witnesses.append(Witness.fail("P1c", idx, coord=i))
    return LawReport("P1", _inputs(f=f, gs=gs, hs=hs), not witnesses, witnesses)


def verify_prop2(f: NPlaceTransformation, g: NPlaceTransformation) -> LawReport:
    """f∗g interior ⇔ f∗g = g∗f∗g ⇔ f∗g = f∗g∗f, for interior f, g."""
    for name, t in (("f", f), ("g", g)):
        if not is_interior(t).passed:
            raise PreconditionError(f"verify_prop2 requires interior inputs; {name} is not")
    fg = diagonal_star(f, g)
    a = is_interior(fg).passed
    b = fg.table == diagonal_star(diagonal_star(g, f), g).table
    c = fg.table == diagonal_star(fg, f).table
    passed = a == b == c
    report = LawReport("P2", _inputs(f=f, g=g), passed)
    if not passed:
        report.witnesses = [
            Witness(f"P2({name})={value}", False)
            for name, value in (("a", a), ("b", b), ("c", c))
        ]
    return report


def verify_n1_corollaries(
    f: NPlaceTransformation, g: NPlaceTransformation | None = None
) -> LawReport:
    """The rank-1 specializations: C5 for f, and C9 when interior g is given."""
    if f.n != 1 or (g is not None and g.n != 1):
        raise DomainError("the rank-1 corollaries require n = 1")
    witnesses: list[Witness] = []

    # C5: interior ⇔ f(X ∩ Y) ⊆ f(f(X)) ∩ f(Y) ∩ Y for all X, Y.
    t = f.table
    inclusion = True
    for x in range(f.size):
        for y in range(f.size):
            if t[x & y] & ~(t[t[x]] & t[y] & y):
                inclusion = False
                break
        if not inclusion:
            break
    if is_interior(f).passed != inclusion:
        witnesses.append(Witness.fail("C5", x, y) if not inclusion else Witness("C5", False))

    if g is not None:
        _require_interior_pair(f, g)
        fg = superpose(f, [g])
        closed = is_interior(fg).passed
        fgf = superpose(fg, [f])
        if closed != (fg.table == fgf.table):
            witnesses.append(Witness("C9", False))

    inputs = _inputs(f=f) if g is None else _inputs(f=f, g=g)
    return LawReport("C5/C9", inputs, not witnesses, witnesses)


def _require_interior_pair(f: NPlaceTransformation, g: NPlaceTransformation) -> None:
    for name, t in (("f", f), ("g", g)):
        if not is_interior(t).passed:
            raise PreconditionError(f"the composition corollary requires interior inputs; {name} is not")
