"""Standard test families with complete lists of indecomposables.

Completeness of each catalogue is by construction:

* ``linear_An``: the path algebra of 1 -> 2 -> ... -> n is hereditary of
  finite type; its indecomposables are the n(n+1)/2 interval modules.
* ``loop_nakayama``: k[x]/(x^n) is a local Nakayama algebra, so every
  indecomposable is uniserial, i.e. one of k[x]/(x^i) for 1 <= i <= n.
* ``An_rad_square``: kA_n modulo all paths of length 2 is Nakayama with Loewy
  length at most 2; its indecomposables are the intervals of length <= 2.

The generator checks on construction that the catalogue is pairwise
non-isomorphic.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, QuiverPresentation, algebra_from_presentation
from .errors import InputError
from .exactla import Field
from .modules import Module, direct_sum, indecomposable_iso

KINDS = ("linear_An", "loop_nakayama", "An_rad_square")


@dataclass
class FamilySpec:
    kind: str
    n: int
    field: Field = dc_field(default_factory=Field)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown family {self.kind!r}")
        if self.n < 1:
            raise InputError("n must be at least 1")


@dataclass
class Designated:
    name: str
    module: Module
    d: int
    members: list  # catalogue indices, one copy each


@dataclass
class Family:
    spec: FamilySpec
    presentation: QuiverPresentation
    algebra: Algebra
    catalogue: list  # list[Module]
    labels: list  # catalogue labels
    designated: list  # list[Designated]


def _linear_presentation(field: Field, n: int, rad_square: bool) -> QuiverPresentation:
    vertices = tuple(str(i) for i in range(1, n + 1))
    arrows = tuple((f"a{i}", str(i), str(i + 1)) for i in range(1, n))
    relations = ()
    if rad_square:
        relations = tuple((((1, (f"a{i}", f"a{i + 1}")),)) for i in range(1, n - 1))
    return QuiverPresentation(field, vertices, arrows, relations, max(n, 2))


def interval_module(a: Algebra, lo: int, hi: int) -> Module:
    """Thin module supported on vertices lo..hi of a linearly oriented A_n."""
    field = a.field
    size = hi - lo + 1
    pos = {str(v): v - lo for v in range(lo, hi + 1)}
    action = []
    for src, tgt, _ in a.paths:
        m = field.zeros(size, size)
        if src in pos and tgt in pos:
            m[pos[src], pos[tgt]] = 1
        action.append(m)
    return Module(a, action, name=f"[{lo},{hi}]")


def truncated_module(a: Algebra, i: int) -> Module:
    """k[x]/(x^i) over k[x]/(x^n)."""
    field = a.field
    action = []
    for _, _, arrows in a.paths:
        power = len(arrows)
        m = field.zeros(i, i)
        for t in range(i - power):
            m[t, t + power] = 1
        action.append(m)
    return Module(a, action, name=f"k[x]/(x^{i})")


def _check_distinct(mods: list[Module]) -> None:
    for i in range(len(mods)):
        for j in range(i):
            if indecomposable_iso(mods[j], mods[i]) is not None:
                raise AssertionError(f"catalogue members {j} and {i} coincide")


def _sum_of(a: Algebra, cat: list, idx: list) -> Module:
    m, _, _ = direct_sum([cat[i] for i in idx], a)
    return m


def generate_family(spec: FamilySpec) -> Family:
    n = spec.n
    field = spec.field
    if spec.kind == "loop_nakayama":
        if n == 1:
            pres = QuiverPresentation(field, ("1",), (), (), 2)
        else:
            pres = QuiverPresentation(field, ("1",), (("x", "1", "1"),), (((1, ("x",) * n),),), n + 1)
        a = algebra_from_presentation(pres)
        cat = [truncated_module(a, i) for i in range(1, n + 1)]
        labels = [m.name for m in cat]
        designated = [Designated("generator", _sum_of(a, cat, list(range(n))), 1, list(range(n)))]
    else:
        rad_square = spec.kind == "An_rad_square"
        pres = _linear_presentation(field, n, rad_square)
        a = algebra_from_presentation(pres)
        longest = 2 if rad_square else n
        intervals = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1) if j - i + 1 <= longest]
        cat = [interval_module(a, i, j) for i, j in intervals]
        labels = [m.name for m in cat]
        everything = list(range(len(cat)))
        designated = [Designated("generator", _sum_of(a, cat, everything), 1, everything)]
        if rad_square and n >= 2:
            # projectives [v, v+1] (and [n, n]) together with injectives [v-1, v] (and [1, 1])
            wanted = {(v, min(v + 1, n)) for v in range(1, n + 1)} | {(max(v - 1, 1), v) for v in range(1, n + 1)}
            idx = [k for k, iv in enumerate(intervals) if iv in wanted]
            designated.append(Designated("lambda_dlambda", _sum_of(a, cat, idx), n - 1, idx))
    _check_distinct(cat)
    return Family(spec, pres, a, cat, labels, designated)
