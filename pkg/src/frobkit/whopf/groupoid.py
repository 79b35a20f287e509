"""Finite groupoids and their weak Hopf groupoid algebras.

Composition reads left to right: the product g h is defined exactly when
tgt(g) = src(h), with src(g h) = src(g) and tgt(g h) = tgt(h).  Under this
convention g g^{-1} = id at src(g), the target counital map sends a morphism
to the identity at its source, and the left integral space of the groupoid
algebra is spanned by the target-fibre sums sum_{tgt(h) = X} h, one per
object X.

The groupoid algebra has basis the morphisms, product composition-or-zero,
unit the sum of identities, group-like comultiplication g -> g (x) g,
counit g -> 1, and antipode g -> g^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConstructionError, InputError
from ..exactlin import Mat, ONE, Vec
from ..finalg import AlgebraData
from .core import WeakHopfData, check_weak_hopf

__all__ = [
    "Morphism",
    "GroupoidData",
    "groupoid_algebra",
    "hopf_group_algebra",
    "cyclic_group_table",
    "group_groupoid",
    "trivial_groupoid",
    "pair_groupoid",
    "connected_groupoid",
    "disjoint_union",
    "groupoid_to_json",
    "groupoid_from_json",
]


@dataclass(frozen=True)
class Morphism:
    name: str
    src: int
    tgt: int


class GroupoidData:
    """A finite groupoid: objects, morphisms, a total composition table on
    composable pairs, and inverses.  Category and invertibility axioms are
    checked at construction."""

    def __init__(
        self,
        objects: list,
        morphisms: list[Morphism],
        compose: dict[tuple[int, int], int],
        inv: list[int],
    ):
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        self.compose = dict(compose)
        self.inv = list(inv)
        self.identities: dict = {}
        self._validate()

    def _validate(self):
        objs = set(range(len(self.objects)))
        n = len(self.morphisms)
        if not self.objects:
            raise ConstructionError("groupoid must have at least one object")
        for m in self.morphisms:
            if m.src not in objs or m.tgt not in objs:
                raise ConstructionError(
                    f"morphism {m.name} has source or target outside the object set"
                )
        composable = {
            (g, h)
            for g in range(n)
            for h in range(n)
            if self.morphisms[g].tgt == self.morphisms[h].src
        }
        if set(self.compose) != composable:
            raise ConstructionError(
                "composition table domain must be exactly the composable pairs"
            )
        for (g, h), k in self.compose.items():
            if not 0 <= k < n:
                raise ConstructionError("composition table value out of range")
            if (
                self.morphisms[k].src != self.morphisms[g].src
                or self.morphisms[k].tgt != self.morphisms[h].tgt
            ):
                raise ConstructionError(
                    f"composite of {self.morphisms[g].name} and "
                    f"{self.morphisms[h].name} has wrong endpoints"
                )
        # identities: for each object, a loop acting as a two-sided unit
        for x in objs:
            loops = [
                e
                for e in range(n)
                if self.morphisms[e].src == x and self.morphisms[e].tgt == x
            ]
            ident = None
            for e in loops:
                left_ok = all(
                    self.compose[(e, f)] == f
                    for f in range(n)
                    if self.morphisms[f].src == x
                )
                right_ok = all(
                    self.compose[(f, e)] == f
                    for f in range(n)
                    if self.morphisms[f].tgt == x
                )
                if left_ok and right_ok:
                    ident = e
                    break
            if ident is None:
                raise ConstructionError(f"object {self.objects[x]} has no identity")
            self.identities[x] = ident
        # associativity on all composable triples
        for (g, h), gh in self.compose.items():
            for k in range(n):
                if self.morphisms[h].tgt != self.morphisms[k].src:
                    continue
                if self.compose[(gh, k)] != self.compose[(g, self.compose[(h, k)])]:
                    raise ConstructionError(
                        "composition is not associative at "
                        f"({self.morphisms[g].name}, {self.morphisms[h].name}, "
                        f"{self.morphisms[k].name})"
                    )
        # inverses
        if len(self.inv) != n:
            raise ConstructionError("inverse map must be total")
        for g in range(n):
            gi = self.inv[g]
            if not 0 <= gi < n:
                raise ConstructionError("inverse map value out of range")
            m, mi = self.morphisms[g], self.morphisms[gi]
            if (mi.src, mi.tgt) != (m.tgt, m.src):
                raise ConstructionError(
                    f"inverse of {m.name} has wrong endpoints"
                )
            if self.compose[(g, gi)] != self.identities[m.src]:
                raise ConstructionError(
                    f"{m.name} composed with its inverse is not the identity at its source"
                )
            if self.compose[(gi, g)] != self.identities[m.tgt]:
                raise ConstructionError(
                    f"inverse composed with {m.name} is not the identity at its target"
                )

    @property
    def num_morphisms(self) -> int:
        return len(self.morphisms)


def groupoid_algebra(g: GroupoidData) -> WeakHopfData:
    """The groupoid algebra as verified WeakHopfData."""
    n = g.num_morphisms
    labels = [m.name for m in g.morphisms]
    mult = {
        (a, b): Vec.basis(n, k) for (a, b), k in g.compose.items()
    }
    unit = Vec(n, [(e, ONE) for e in g.identities.values()])
    algebra = AlgebraData(n, labels, mult, unit)
    delta = Mat(n * n, n, [(j * n + j, j, ONE) for j in range(n)])
    epsilon = Vec(n, [(j, ONE) for j in range(n)])
    antipode = Mat(n, n, [(g.inv[j], j, ONE) for j in range(n)])
    h = WeakHopfData(algebra, delta, epsilon, antipode)
    report = check_weak_hopf(h)
    if not report.passed:
        raise ConstructionError(
            f"groupoid algebra failed axiom {report.failures()[0].name}"
        )
    return h


def hopf_group_algebra(table: list[list[int]], labels: list[str] | None = None) -> WeakHopfData:
    """Group algebra of a finite group (given by its multiplication table)
    with the group-like Hopf structure g -> g (x) g, eps = 1, S(g) = g^{-1}."""
    n = len(table)
    if any(len(row) != n for row in table):
        raise InputError("group table must be square")
    ident = _identity_of(table)
    inv = _inverses_of(table, ident)
    if labels is None:
        labels = [f"g{k}" for k in range(n)]
    mult = {
        (a, b): Vec.basis(n, table[a][b]) for a in range(n) for b in range(n)
    }
    algebra = AlgebraData(n, labels, mult, Vec.basis(n, ident))
    delta = Mat(n * n, n, [(j * n + j, j, ONE) for j in range(n)])
    epsilon = Vec(n, [(j, ONE) for j in range(n)])
    antipode = Mat(n, n, [(inv[j], j, ONE) for j in range(n)])
    h = WeakHopfData(algebra, delta, epsilon, antipode)
    report = check_weak_hopf(h)
    if not report.passed:
        raise ConstructionError(
            f"group table does not give a Hopf algebra: {report.failures()[0].name}"
        )
    return h


def _identity_of(table: list[list[int]]) -> int:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    raise InputError("group table has no identity element")


def _inverses_of(table: list[list[int]], ident: int) -> list[int]:
    n = len(table)
    inv = []
    for g in range(n):
        gi = next(
            (x for x in range(n) if table[g][x] == ident and table[x][g] == ident),
            None,
        )
        if gi is None:
            raise InputError(f"element {g} has no inverse")
        inv.append(gi)
    return inv


def cyclic_group_table(n: int) -> list[list[int]]:
    if n < 1:
        raise InputError("cyclic group order must be >= 1")
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def connected_groupoid(num_objects: int, table: list[list[int]]) -> GroupoidData:
    """Connected groupoid with the given vertex group: morphisms are
    (src, tgt, group element), composed by multiplying group parts."""
    if num_objects < 1:
        raise InputError("need at least one object")
    order = len(table)
    ident = _identity_of(table)
    inv_tab = _inverses_of(table, ident)
    morphisms = []
    index = {}
    for src in range(num_objects):
        for tgt in range(num_objects):
            for k in range(order):
                idx = len(morphisms)
                if src == tgt and k == ident:
                    name = f"id{src}" if order == 1 else f"id{src}g{k}"
                else:
                    name = f"m{src}_{tgt}" if order == 1 else f"m{src}_{tgt}g{k}"
                morphisms.append(Morphism(name, src, tgt))
                index[(src, tgt, k)] = idx
    compose = {}
    for (s1, t1, k1), g in index.items():
        for (s2, t2, k2), h in index.items():
            if t1 != s2:
                continue
            compose[(g, h)] = index[(s1, t2, table[k1][k2])]
    inv = [0] * len(morphisms)
    for (s, t, k), g in index.items():
        inv[g] = index[(t, s, inv_tab[k])]
    return GroupoidData(list(range(num_objects)), morphisms, compose, inv)


def group_groupoid(table: list[list[int]]) -> GroupoidData:
    """A finite group seen as a one-object groupoid."""
    return connected_groupoid(1, table)


def trivial_groupoid() -> GroupoidData:
    return connected_groupoid(1, cyclic_group_table(1))


def pair_groupoid(num_objects: int) -> GroupoidData:
    """Exactly one morphism between every ordered pair of objects."""
    return connected_groupoid(num_objects, cyclic_group_table(1))


def disjoint_union(a: GroupoidData, b: GroupoidData) -> GroupoidData:
    """Disjoint union; no morphisms connect the two pieces."""
    off_obj = len(a.objects)
    off_mor = a.num_morphisms
    objects = [f"L.{x}" for x in a.objects] + [f"R.{x}" for x in b.objects]
    morphisms = [Morphism(f"L.{m.name}", m.src, m.tgt) for m in a.morphisms]
    morphisms += [
        Morphism(f"R.{m.name}", m.src + off_obj, m.tgt + off_obj)
        for m in b.morphisms
    ]
    compose = dict(a.compose)
    for (g, h), k in b.compose.items():
        compose[(g + off_mor, h + off_mor)] = k + off_mor
    inv = list(a.inv) + [k + off_mor for k in b.inv]
    return GroupoidData(objects, morphisms, compose, inv)


def groupoid_to_json(g: GroupoidData) -> dict:
    return {
        "objects": list(g.objects),
        "morphisms": [
            {"id": m.name, "src": g.objects[m.src], "tgt": g.objects[m.tgt]}
            for m in g.morphisms
        ],
        "compose": sorted(
            [g.morphisms[a].name, g.morphisms[b].name, g.morphisms[k].name]
            for (a, b), k in g.compose.items()
        ),
        "inv": [
            [g.morphisms[a].name, g.morphisms[g.inv[a]].name]
            for a in range(g.num_morphisms)
        ],
    }


def groupoid_from_json(payload: dict) -> GroupoidData:
    try:
        objects = list(payload["objects"])
        morph_raw = payload["morphisms"]
        comp_raw = payload["compose"]
        inv_raw = payload["inv"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"missing or malformed field: {exc}") from None
    obj_index = {x: i for i, x in enumerate(objects)}
    morphisms = []
    name_index = {}
    for m in morph_raw:
        try:
            name, src, tgt = m["id"], m["src"], m["tgt"]
        except (KeyError, TypeError):
            raise InputError(f"bad morphism entry {m!r}") from None
        if src not in obj_index or tgt not in obj_index:
            raise InputError(f"morphism {name!r} references unknown object")
        name_index[name] = len(morphisms)
        morphisms.append(Morphism(str(name), obj_index[src], obj_index[tgt]))
    compose = {}
    for entry in comp_raw:
        try:
            a, b, c = entry
        except ValueError:
            raise InputError(f"bad compose entry {entry!r}") from None
        compose[(name_index[a], name_index[b])] = name_index[c]
    inv = [0] * len(morphisms)
    seen = set()
    for a, b in inv_raw:
        inv[name_index[a]] = name_index[b]
        seen.add(name_index[a])
    if len(seen) != len(morphisms):
        raise InputError("inverse table must cover every morphism")
    return GroupoidData(objects, morphisms, compose, inv)
