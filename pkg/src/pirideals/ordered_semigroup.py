"""Brute-force machinery for finite ordered semigroups given by tables.

Elements are the indices ``0..k-1``. ``mul[i][j]`` is the index of the product and
``leq[i][j]`` says whether ``i <= j``. All checks are exhaustive and scan tuples in
lexicographic order, so the reported counterexample is always the least one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, Sequence

from pirideals.errors import DomainError, FormatError
from pirideals.report import CheckReport


@dataclass(frozen=True)
class FiniteOrderedSemigroup:
    labels: tuple[str, ...]
    mul: tuple[tuple[int, ...], ...]
    leq: tuple[tuple[bool, ...], ...]
    name: str = "S"

    def __post_init__(self):
        k = len(self.labels)
        if len(self.mul) != k or any(len(row) != k for row in self.mul):
            raise FormatError(f"mul table must be {k}x{k}")
        if len(self.leq) != k or any(len(row) != k for row in self.leq):
            raise FormatError(f"leq table must be {k}x{k}")
        mul = tuple(tuple(int(v) for v in row) for row in self.mul)
        if any(not 0 <= v < k for row in mul for v in row):
            raise FormatError("mul table entry out of range")
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "leq", tuple(tuple(bool(v) for v in row) for row in self.leq))

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    @classmethod
    def from_operations(cls, elements: Sequence, mul: Callable, leq: Callable,
                        labels: Sequence[str] | None = None, name: str = "S"):
        """Tabulate a multiplication and an order over a finite list of hashable elements."""
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise DomainError("elements must be distinct")
        try:
            mul_table = [[index[mul(x, y)] for y in elements] for x in elements]
        except KeyError as exc:
            raise DomainError(f"product {exc.args[0]!r} is outside the element list") from None
        leq_table = [[bool(leq(x, y)) for y in elements] for x in elements]
        if labels is None:
            labels = [str(e) for e in elements]
        return cls(tuple(labels), mul_table, leq_table, name)

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "mul": [list(r) for r in self.mul],
                "leq": [list(r) for r in self.leq]}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, payload: dict, name: str = "S"):
        try:
            return cls(tuple(payload["labels"]), payload["mul"], payload["leq"], name)
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad table payload: {exc}") from None

    @classmethod
    def from_json(cls, text: str, name: str = "S"):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(str(exc)) from None
        return cls.from_dict(payload, name)

    def restrict(self, subset: Iterable[int], name: str | None = None):
        """Subsemigroup on ``subset`` (must be closed under multiplication), indices renumbered."""
        idx = sorted(set(subset))
        pos = {v: i for i, v in enumerate(idx)}
        try:
            mul = [[pos[self.mul[i][j]] for j in idx] for i in idx]
        except KeyError:
            raise DomainError("subset is not closed under multiplication") from None
        leq = [[self.leq[i][j] for j in idx] for i in idx]
        return FiniteOrderedSemigroup(tuple(self.labels[i] for i in idx), mul, leq,
                                      name or f"{self.name}|sub")

    def label_of(self, indices):
        return [self.labels[i] for i in indices]


def _tuple_ce(S, law, idx):
    return {"law": law, "indices": list(idx), "labels": S.label_of(idx)}


def _first(iterable):
    return next(iter(iterable), None)


def validate(S: FiniteOrderedSemigroup) -> CheckReport:
    """Exhaustively check associativity, partial-order axioms and two-sided compatibility."""
    k, m, le = S.size, S.mul, S.leq
    r = range(k)
    laws = {
        "associativity": lambda: _first(
            t for t in product(r, r, r) if m[m[t[0]][t[1]]][t[2]] != m[t[0]][m[t[1]][t[2]]]),
        "reflexivity": lambda: _first((i,) for i in r if not le[i][i]),
        "antisymmetry": lambda: _first(
            (i, j) for i, j in product(r, r) if i != j and le[i][j] and le[j][i]),
        "transitivity": lambda: _first(
            (i, j, l) for i, j, l in product(r, r, r) if le[i][j] and le[j][l] and not le[i][l]),
        "right_compatibility": lambda: _first(
            (i, j, l) for i, j, l in product(r, r, r) if le[i][j] and not le[m[i][l]][m[j][l]]),
        "left_compatibility": lambda: _first(
            (i, j, l) for i, j, l in product(r, r, r) if le[i][j] and not le[m[l][i]][m[l][j]]),
    }
    details = []
    for law, find in laws.items():
        bad = find()
        ce = None if bad is None else _tuple_ce(S, law, bad)
        details.append(CheckReport(law, S.name, bad is None, ce))
    return CheckReport.aggregate("ordered_semigroup_axioms", S.name, details)


def _check_indices(S, subset):
    subset = set(subset)
    bad = [i for i in subset if not (isinstance(i, int) and 0 <= i < S.size)]
    if bad:
        raise DomainError(f"indices out of range: {bad}")
    return subset


def downward_closure(S: FiniteOrderedSemigroup, subset: Iterable[int]) -> frozenset[int]:
    """``(A] = {x : x <= a for some a in A}``."""
    subset = _check_indices(S, subset)
    return frozenset(x for x in range(S.size) if any(S.leq[x][a] for a in subset))


def principal_ordered_ideals(S: FiniteOrderedSemigroup, a: int):
    """Return ``(L(a), R(a), I(a))`` as frozensets of indices."""
    _check_indices(S, [a])
    m, r = S.mul, range(S.size)
    left = {m[s][a] for s in r}
    right = {m[a][s] for s in r}
    both = {m[m[s][a]][t] for s in r for t in r}
    return (
        downward_closure(S, {a} | left),
        downward_closure(S, {a} | right),
        downward_closure(S, {a} | left | right | both),
    )


def _partition_by(k: int, key) -> tuple[tuple[int, ...], ...]:
    groups: dict = {}
    for i in range(k):
        groups.setdefault(key(i), []).append(i)
    return tuple(sorted((tuple(g) for g in groups.values()), key=lambda g: g[0]))


def _join(k: int, *partitions) -> tuple[tuple[int, ...], ...]:
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in partitions:
        for cls in part:
            for x in cls[1:]:
                ra, rb = find(cls[0]), find(x)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    return _partition_by(k, find)


@dataclass(frozen=True)
class GreensStructure:
    L: tuple[tuple[int, ...], ...]
    R: tuple[tuple[int, ...], ...]
    J: tuple[tuple[int, ...], ...]
    H: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]
    size: int

    NAMES = ("L", "R", "J", "H", "D")

    def partition(self, name: str):
        return getattr(self, name)

    def related(self, name: str, a: int, b: int) -> bool:
        return any(a in cls and b in cls for cls in self.partition(name))

    def is_universal(self, name: str) -> bool:
        return len(self.partition(name)) == 1

    def as_dict(self) -> dict:
        return {n: [list(c) for c in self.partition(n)] for n in self.NAMES}


def refines(fine, coarse) -> bool:
    """Every class of ``fine`` sits inside one class of ``coarse``."""
    owner = {x: i for i, cls in enumerate(coarse) for x in cls}
    return all(len({owner[x] for x in cls}) == 1 for cls in fine)


def greens_relations(S: FiniteOrderedSemigroup) -> GreensStructure:
    k = S.size
    ideals = [principal_ordered_ideals(S, a) for a in range(k)]
    L = _partition_by(k, lambda a: ideals[a][0])
    R = _partition_by(k, lambda a: ideals[a][1])
    J = _partition_by(k, lambda a: ideals[a][2])
    H = _partition_by(k, lambda a: (ideals[a][0], ideals[a][1]))
    D = _join(k, L, R)
    return GreensStructure(L, R, J, H, D, k)


def simplified_greens(S: FiniteOrderedSemigroup):
    """``(L, R)`` partitions from ``(Sa] = (Sb]`` and ``(aS] = (bS]``; valid on regular S."""
    k, m = S.size, S.mul
    left = [downward_closure(S, {m[s][a] for s in range(k)}) for a in range(k)]
    right = [downward_closure(S, {m[a][s] for s in range(k)}) for a in range(k)]
    return _partition_by(k, left.__getitem__), _partition_by(k, right.__getitem__)


def greens_L_alt(S: FiniteOrderedSemigroup, a: int, b: int) -> bool:
    """``a <= xb`` and ``b <= ya`` for some ``x, y``."""
    m, le, r = S.mul, S.leq, range(S.size)
    return any(le[a][m[x][b]] for x in r) and any(le[b][m[y][a]] for y in r)


def greens_R_alt(S: FiniteOrderedSemigroup, a: int, b: int) -> bool:
    """``a <= bu`` and ``b <= av`` for some ``u, v``."""
    m, le, r = S.mul, S.leq, range(S.size)
    return any(le[a][m[b][u]] for u in r) and any(le[b][m[a][v]] for v in r)


def regularity_witness(S: FiniteOrderedSemigroup, a: int) -> int | None:
    m, le = S.mul, S.leq
    return _first(x for x in range(S.size) if le[a][m[m[a][x]][a]])


def ordered_regular_set(S: FiniteOrderedSemigroup) -> frozenset[int]:
    return frozenset(a for a in range(S.size) if regularity_witness(S, a) is not None)


def ordered_idempotents(S: FiniteOrderedSemigroup) -> frozenset[int]:
    return frozenset(e for e in range(S.size) if S.leq[e][S.mul[e][e]])


def ordered_inverses(S: FiniteOrderedSemigroup, a: int) -> frozenset[int]:
    m, le = S.mul, S.leq
    return frozenset(b for b in range(S.size)
                     if le[a][m[m[a][b]][a]] and le[b][m[m[b][a]][b]])


@dataclass
class Classification:
    """Outcome of :func:`classify`. Witnesses are per element; counterexamples are least tuples."""

    instance: str
    regular: bool
    intra_regular: bool
    completely_regular: bool
    group_like: bool
    clifford: bool
    inverse_ordered: bool
    all_ordered_idempotent: bool
    ordered_idempotents: frozenset[int]
    ordered_inverses: dict[int, frozenset[int]]
    witnesses: dict[str, dict] = field(default_factory=dict)
    counterexamples: dict[str, dict] = field(default_factory=dict)

    PROPERTIES = ("intra_regular", "inverse_ordered", "all_ordered_idempotent",
                  "completely_regular", "group_like", "clifford")

    def all_true(self) -> bool:
        return all(getattr(self, p) for p in self.PROPERTIES)

    def to_report(self) -> CheckReport:
        details = [
            CheckReport(p, self.instance, getattr(self, p), self.counterexamples.get(p),
                        self.witnesses.get(p))
            for p in ("regular",) + self.PROPERTIES
        ]
        witness = {
            "ordered_idempotents": sorted(self.ordered_idempotents),
            "ordered_inverses": {str(a): sorted(v) for a, v in self.ordered_inverses.items()},
        }
        return CheckReport.aggregate("classify", self.instance, details, witness)


def classify(S: FiniteOrderedSemigroup, greens: GreensStructure | None = None) -> Classification:
    """Decide each regularity class by exhaustive witness search."""
    k, m, le = S.size, S.mul, S.leq
    r = range(k)
    sq = [m[a][a] for a in r]
    wit: dict[str, dict] = {}
    ce: dict[str, dict] = {}

    def per_element(name, search):
        found = {}
        for a in r:
            w = search(a)
            if w is None:
                ce[name] = _tuple_ce(S, name, (a,))
                return False
            found[str(a)] = w
        wit[name] = found
        return True

    regular = per_element("regular", lambda a: regularity_witness(S, a))
    intra = per_element("intra_regular", lambda a: _first(
        [x, y] for x in r for y in r if le[a][m[m[x][sq[a]]][y]]))
    complete = per_element("completely_regular", lambda a: _first(
        x for x in r if le[a][m[m[sq[a]][x]][sq[a]]]))

    group_like = True
    for a, b in product(r, r):
        if not (any(le[a][m[x][b]] for x in r) and any(le[a][m[b][y]] for y in r)):
            ce["group_like"] = _tuple_ce(S, "group_like", (a, b))
            group_like = False
            break

    idem = ordered_idempotents(S)
    clifford = regular
    if not regular:
        ce["clifford"] = {"law": "clifford", "reason": "not a regular ordered semigroup",
                          "labels": ce["regular"]["labels"]}
    else:
        for a, e in product(r, sorted(idem)):
            ae, ea = m[a][e], m[e][a]
            if not (any(le[ae][m[m[e][u]][a]] for u in r) and any(le[ea][m[m[a][v]][e]] for v in r)):
                ce["clifford"] = _tuple_ce(S, "clifford", (a, e))
                clifford = False
                break

    inverses = {a: ordered_inverses(S, a) for a in r}
    greens = greens or greens_relations(S)
    inverse_ordered = True
    for a in r:
        bad = _first((x, y) for x, y in combinations(sorted(inverses[a]), 2)
                     if not greens.related("H", x, y))
        if bad is not None:
            ce["inverse_ordered"] = _tuple_ce(S, "inverse_ordered", (a,) + bad)
            inverse_ordered = False
            break

    all_idem = len(idem) == k
    if not all_idem:
        ce["all_ordered_idempotent"] = _tuple_ce(
            S, "all_ordered_idempotent", (min(set(r) - idem),))

    return Classification(S.name, regular, intra, complete, group_like, clifford,
                          inverse_ordered, all_idem, idem, inverses, wit, ce)


def _profile(S: FiniteOrderedSemigroup, i: int):
    m, le, r = S.mul, S.leq, range(S.size)
    return (
        sum(le[i][j] for j in r),
        sum(le[j][i] for j in r),
        m[i][i] == i,
        all(m[i][j] == i and m[j][i] == i for j in r),
        all(m[i][j] == j and m[j][i] == j for j in r),
        le[i][m[i][i]],
        sum(m[i][j] == i for j in r),
    )


def is_isomorphism(S: FiniteOrderedSemigroup, T: FiniteOrderedSemigroup, f: Sequence[int]) -> bool:
    """``f`` is a bijection preserving products and the order in both directions."""
    k = S.size
    if T.size != k or len(f) != k or sorted(f) != list(range(k)):
        return False
    return all(f[S.mul[i][j]] == T.mul[f[i]][f[j]] and S.leq[i][j] == T.leq[f[i]][f[j]]
               for i, j in product(range(k), range(k)))


def find_isomorphism(S: FiniteOrderedSemigroup, T: FiniteOrderedSemigroup) -> tuple[int, ...] | None:
    """Backtracking search for an ordered-semigroup isomorphism ``S -> T``.

    Candidates are pruned by an order/idempotent/zero fingerprint. Returns the
    lexicographically first map as a tuple ``f`` with ``f[i]`` the image of ``i``.
    """
    k = S.size
    if T.size != k:
        return None
    ps = [_profile(S, i) for i in range(k)]
    pt = [_profile(T, j) for j in range(k)]
    if sorted(ps) != sorted(pt):
        return None
    cands = [[j for j in range(k) if pt[j] == ps[i]] for i in range(k)]
    order = sorted(range(k), key=lambda i: (len(cands[i]), i))
    f = [-1] * k
    used = [False] * k

    def consistent(i):
        fi = f[i]
        for j in range(k):
            fj = f[j]
            if fj < 0:
                continue
            if S.leq[i][j] != T.leq[fi][fj] or S.leq[j][i] != T.leq[fj][fi]:
                return False
            for x, y in ((i, j), (j, i)):
                prod = f[S.mul[x][y]]
                if prod >= 0 and prod != T.mul[f[x]][f[y]]:
                    return False
        # products landing on i from earlier assignments
        for x in range(k):
            if f[x] < 0:
                continue
            for y in range(k):
                if f[y] >= 0 and S.mul[x][y] == i and T.mul[f[x]][f[y]] != fi:
                    return False
        return True

    def search(pos):
        if pos == k:
            return True
        i = order[pos]
        for j in cands[i]:
            if used[j]:
                continue
            f[i], used[j] = j, True
            if consistent(i) and search(pos + 1):
                return True
            f[i], used[j] = -1, False
        return False

    if search(0):
        assert is_isomorphism(S, T, f)
        return tuple(f)
    return None


def check_inverse_transversal(S: FiniteOrderedSemigroup, S0: Iterable[int]) -> CheckReport:
    """Check the four inverse-transversal conditions for the index set ``S0``."""
    S0 = sorted(_check_indices(S, S0))
    name = f"{S.name}, S0={S.label_of(S0)}"
    details = []

    closed = _first((a, b) for a, b in product(S0, S0) if S.mul[a][b] not in S0)
    if closed is not None:
        details.append(CheckReport("inverse_ordered_subsemigroup", name, False,
                                   _tuple_ce(S, "closure", closed)))
        sub = None
    else:
        sub = S.restrict(S0, name=f"{S.name}|S0")
        sub_cls = classify(sub)
        no_inverse = _first(a for a in range(sub.size) if not sub_cls.ordered_inverses[a])
        if no_inverse is not None:
            ce = {"law": "regular_in_S0", "labels": [sub.labels[no_inverse]]}
        elif not sub_cls.inverse_ordered:
            ce = sub_cls.counterexamples["inverse_ordered"]
        else:
            ce = None
        details.append(CheckReport("inverse_ordered_subsemigroup", name, ce is None, ce))

    down = downward_closure(S, S0)
    extra = sorted(down - set(S0))
    details.append(CheckReport("downward_closed", name, not extra,
                               {"law": "downward_closed", "labels": S.label_of(extra)} if extra else None))

    meets = {a: sorted(ordered_inverses(S, a) & set(S0)) for a in range(S.size)}
    missing = _first(a for a in range(S.size) if not meets[a])
    details.append(CheckReport(
        "meets_every_inverse_set", name, missing is None,
        None if missing is None else _tuple_ce(S, "meets_every_inverse_set", (missing,)),
        {S.labels[a]: S.label_of(v) for a, v in meets.items()}))

    ce = None
    if sub is None:
        ce = {"law": "h_related_inverses", "reason": "S0 is not a subsemigroup"}
    else:
        pos = {v: i for i, v in enumerate(S0)}
        hs = greens_relations(sub)
        for a in range(S.size):
            bad = _first((x, y) for x, y in combinations(meets[a], 2)
                         if not hs.related("H", pos[x], pos[y]))
            if bad is not None:
                ce = _tuple_ce(S, "h_related_inverses", (a,) + bad)
                break
    details.append(CheckReport("h_related_inverses", name, ce is None, ce))
    return CheckReport.aggregate("inverse_transversal", name, details)
