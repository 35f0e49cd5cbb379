"""Extended Dynkin quivers with the canonical vertex/arrow labelling.

Builds the doubled quivers for types ~A_n (n >= 2), ~D_n (n >= 4) and
~E_6/7/8, their Cartan data, Nakayama automorphisms, and classification of
full subquivers into canonical Dynkin pieces.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InternalInconsistency

FAMILIES = ("A", "D", "E")

COXETER_NUMBERS = {"A": lambda n: n + 1, "D": lambda n: 2 * n - 2, "E": {6: 12, 7: 18, 8: 30}.get}


def _check_rank(family: str, n: int, extended: bool) -> None:
    if family == "A":
        low = 2 if extended else 1
        if n < low:
            raise DomainError(f"type A requires n >= {low}, got {n}"
                              + (" (doubled-edge ~A1 is unsupported)" if extended else ""))
    elif family == "D":
        if n < 4:
            raise DomainError(f"type D requires n >= 4, got {n}")
    elif family == "E":
        if n not in (6, 7, 8):
            raise DomainError(f"type E requires n in 6..8, got {n}")
    else:
        raise DomainError(f"unknown family {family!r}")


@dataclass(frozen=True)
class DynkinType:
    """A Dynkin diagram A_n (n>=1), D_n (n>=4) or E_n (n in 6..8)."""

    family: str
    n: int

    def __post_init__(self) -> None:
        _check_rank(self.family, self.n, extended=False)

    def __str__(self) -> str:
        return f"{self.family}{self.n}"

    @property
    def coxeter_number(self) -> int:
        return COXETER_NUMBERS[self.family](self.n)


@dataclass(frozen=True)
class ExtDynkinType:
    """An extended Dynkin diagram ~A_n (n>=2), ~D_n (n>=4) or ~E_n.

    Vertices are 0..n with 0 the extending vertex.
    """

    family: str
    n: int

    def __post_init__(self) -> None:
        _check_rank(self.family, self.n, extended=True)

    def __str__(self) -> str:
        return f"~{self.family}{self.n}"

    @property
    def dynkin(self) -> DynkinType:
        return DynkinType(self.family, self.n)

    @property
    def vertex_count(self) -> int:
        return self.n + 1


def parse_type(text: str) -> ExtDynkinType | DynkinType:
    """Parse "A5" / "D4" / "E7" or the extended forms "~A5" etc."""
    text = text.strip()
    extended = text.startswith("~")
    body = text[1:] if extended else text
    if not body or body[0] not in FAMILIES or not body[1:].isdigit():
        raise DomainError(f"cannot parse Dynkin type {text!r}")
    family, n = body[0], int(body[1:])
    return ExtDynkinType(family, n) if extended else DynkinType(family, n)


@dataclass(frozen=True)
class Arrow:
    """One arrow of a double quiver: a<k> (ordinary) or ~a<k> (reverse)."""

    index: int
    reverse: bool
    tail: int
    head: int

    @property
    def name(self) -> str:
        return ("~a" if self.reverse else "a") + str(self.index)

    def reversed_arrow(self) -> "Arrow":
        return Arrow(self.index, not self.reverse, self.head, self.tail)

    def __str__(self) -> str:
        return self.name


def _ordinary_arrows(t: ExtDynkinType) -> list[tuple[int, int, int]]:
    """Figure-1 ordinary arrows as (index, tail, head)."""
    n = t.n
    if t.family == "A":
        return [(i, i, (i + 1) % (n + 1)) for i in range(n + 1)]
    if t.family == "D":
        arrows = [(0, 0, 2), (1, 1, 2)]
        for i in range(2, n - 2):
            # chain edge between i and i+1; even-indexed arrows point down the chain
            arrows.append((i, i, i + 1) if i % 2 == 1 else (i, i + 1, i))
        if n % 2 == 0:
            arrows += [(n - 1, n - 1, n - 2), (n, n, n - 2)]
        else:
            arrows += [(n - 1, n - 2, n - 1), (n, n - 2, n)]
        return arrows
    if n == 6:
        return [(0, 0, 1), (1, 4, 1), (2, 2, 3), (3, 4, 3), (4, 4, 5), (5, 6, 5)]
    if n == 7:
        return [(0, 0, 1), (1, 2, 1), (2, 2, 3), (3, 4, 3), (4, 4, 5), (5, 6, 5), (7, 7, 3)]
    return [(0, 0, 1), (1, 2, 1), (2, 2, 3), (3, 4, 3), (4, 4, 5), (5, 6, 5), (6, 6, 7), (8, 8, 5)]


@dataclass(frozen=True)
class LabelledDoubleQuiver:
    """The double of a quiver: each ordinary arrow a<k> has a reverse ~a<k>."""

    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    type: ExtDynkinType | None = None

    def __post_init__(self) -> None:
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise InternalInconsistency("duplicate arrow labels")

    @property
    def ordinary_arrows(self) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if not a.reverse)

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise DomainError(f"no arrow named {name!r}")

    def arrows_from(self, v: int) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.tail == v)

    def neighbours(self, v: int) -> tuple[int, ...]:
        out = sorted({a.head for a in self.arrows if a.tail == v})
        return tuple(out)

    def adjacency(self) -> dict[int, tuple[int, ...]]:
        return {v: self.neighbours(v) for v in self.vertices}

    def sink_class(self) -> frozenset[int]:
        """Vertices whose incident ordinary arrows all point inwards.

        Defined for types D and E, where the Figure-1 orientation is
        bipartite; paths in the double then alternate ordinary and
        reverse arrows.
        """
        sinks = {v for v in self.vertices
                 if all(a.head == v for a in self.ordinary_arrows if v in (a.tail, a.head))}
        sources = set(self.vertices) - sinks
        for a in self.ordinary_arrows:
            if a.tail in sinks or a.head in sources:
                raise DomainError("orientation is not bipartite (type ~A has no sink class)")
        return frozenset(sinks)

    def full_subquiver(self, keep: set[int]) -> "LabelledDoubleQuiver":
        keep = set(keep)
        arrows = tuple(a for a in self.arrows if a.tail in keep and a.head in keep)
        return LabelledDoubleQuiver(tuple(sorted(keep)), arrows, type=None)


def build_extended(t: ExtDynkinType) -> LabelledDoubleQuiver:
    """The double of the extended Dynkin quiver with its canonical labels."""
    arrows: list[Arrow] = []
    for idx, tail, head in _ordinary_arrows(t):
        a = Arrow(idx, False, tail, head)
        arrows.append(a)
        arrows.append(a.reversed_arrow())
    return LabelledDoubleQuiver(tuple(range(t.n + 1)), tuple(arrows), type=t)


def build_dynkin(t: DynkinType) -> LabelledDoubleQuiver:
    """The double of the Dynkin quiver: the extended quiver minus vertex 0."""
    ext_n = max(t.n, 2) if t.family == "A" else t.n
    ext = build_extended(ExtDynkinType(t.family, ext_n))
    sub = ext.full_subquiver(set(range(1, t.n + 1)))
    return LabelledDoubleQuiver(sub.vertices, sub.arrows, type=None)


def delta_vector(t: ExtDynkinType) -> tuple[int, ...]:
    """Dimension vector of the McKay irreducibles, indexed by vertex."""
    n = t.n
    if t.family == "A":
        return tuple([1] * (n + 1))
    if t.family == "D":
        return tuple([1, 1] + [2] * (n - 3) + [1, 1])
    return {6: (1, 2, 1, 2, 3, 2, 1),
            7: (1, 2, 3, 4, 3, 2, 1, 2),
            8: (1, 2, 3, 4, 5, 6, 4, 2, 3)}[n]


@dataclass(frozen=True)
class CartanData:
    """Cartan matrices and the delta vector of an extended Dynkin type.

    C is the (n x n) Dynkin Cartan matrix on vertices 1..n, C_ext the
    (n+1) x (n+1) extended one; both equal 2I - A for the respective
    adjacency matrices.
    """

    type: ExtDynkinType
    adjacency: tuple[tuple[int, ...], ...]
    cartan_ext: tuple[tuple[int, ...], ...]
    cartan: tuple[tuple[int, ...], ...]
    delta: tuple[int, ...]


def cartan(t: ExtDynkinType) -> CartanData:
    q = build_extended(t)
    n1 = t.n + 1
    adj = [[0] * n1 for _ in range(n1)]
    for a in q.ordinary_arrows:
        adj[a.tail][a.head] += 1
        adj[a.head][a.tail] += 1
    cext = [[(2 if i == j else 0) - adj[i][j] for j in range(n1)] for i in range(n1)]
    cdyn = [[cext[i][j] for j in range(1, n1)] for i in range(1, n1)]
    freeze = lambda m: tuple(tuple(r) for r in m)
    data = CartanData(t, freeze(adj), freeze(cext), freeze(cdyn), delta_vector(t))
    d = data.delta
    for i in range(n1):
        if sum(data.cartan_ext[i][j] * d[j] for j in range(n1)) != 0:
            raise InternalInconsistency("extended Cartan matrix does not kill delta")
    return data


def dynkin_adjacency(t: DynkinType) -> dict[int, tuple[int, ...]]:
    """Undirected adjacency of the canonical Dynkin diagram on 1..n."""
    return build_dynkin(t).adjacency()


@dataclass(frozen=True)
class VertexPermutation:
    """A bijection on a vertex subset."""

    mapping: tuple[tuple[int, int], ...]

    @staticmethod
    def of(mapping: dict[int, int]) -> "VertexPermutation":
        if sorted(mapping) != sorted(mapping.values()):
            raise DomainError("mapping is not a bijection of its domain")
        return VertexPermutation(tuple(sorted(mapping.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)

    def __call__(self, v: int) -> int:
        return dict(self.mapping)[v]

    def is_involution(self) -> bool:
        m = self.as_dict()
        return all(m[m[v]] == v for v in m)

    def preserves(self, adjacency: dict[int, tuple[int, ...]]) -> bool:
        m = self.as_dict()
        return all(sorted(m[w] for w in adjacency[v] if w in m) == sorted(adjacency[m[v]])
                   for v in m)


def nakayama(t: DynkinType) -> VertexPermutation:
    """Graph automorphism induced by the Nakayama functor of Pi(Q).

    Identity for A_1, D_even, E_7, E_8; the unique order-2 automorphism
    for A_n (n >= 2), D_odd and E_6, in the canonical labelling.
    """
    n = t.n
    verts = range(1, n + 1)
    if t.family == "A":
        return VertexPermutation.of({i: n + 1 - i for i in verts})
    if t.family == "D":
        m = {i: i for i in verts}
        if n % 2 == 1:
            m[n - 1], m[n] = n, n - 1
        return VertexPermutation.of(m)
    if n == 6:
        return VertexPermutation.of({1: 1, 2: 6, 3: 5, 4: 4, 5: 3, 6: 2})
    return VertexPermutation.of({i: i for i in verts})


def graph_automorphisms(adjacency: dict[int, tuple[int, ...]]) -> list[dict[int, int]]:
    """All adjacency-preserving bijections of a small graph (brute force)."""
    verts = sorted(adjacency)
    nbrs = {v: frozenset(adjacency[v]) for v in verts}
    autos = []
    for perm in itertools.permutations(verts):
        m = dict(zip(verts, perm))
        if all(frozenset(m[w] for w in nbrs[v]) == nbrs[m[v]] for v in verts):
            autos.append(m)
    return autos


def _identify_tree(adjacency: dict[int, frozenset[int]]) -> DynkinType:
    m = len(adjacency)
    degs = sorted(len(nb) for nb in adjacency.values())
    branch = [v for v, nb in adjacency.items() if len(nb) >= 3]
    if not branch:
        return DynkinType("A", m)
    if len(branch) > 1 or degs[-1] > 3:
        raise InternalInconsistency("component is not of ADE shape")
    c = branch[0]
    # arm lengths from the unique degree-3 vertex
    arms = []
    for start in adjacency[c]:
        length, prev, cur = 1, c, start
        while True:
            nxt = [w for w in adjacency[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == arms[1] == 1:
        return DynkinType("D", m)
    if arms[:2] == [1, 2] and m in (6, 7, 8):
        return DynkinType("E", m)
    raise InternalInconsistency(f"arm lengths {arms} are not of ADE shape")


def _isomorphisms(adjacency: dict[int, frozenset[int]],
                  canon: dict[int, tuple[int, ...]]) -> list[dict[int, int]]:
    verts = sorted(adjacency)
    cverts = sorted(canon)
    cn = {v: frozenset(canon[v]) for v in cverts}
    degs = {v: len(adjacency[v]) for v in verts}
    cdegs = {v: len(cn[v]) for v in cverts}
    out: list[dict[int, int]] = []

    def extend(m: dict[int, int], used: set[int]) -> None:
        if len(m) == len(verts):
            out.append(dict(m))
            return
        v = verts[len(m)]
        for c in cverts:
            if c in used or cdegs[c] != degs[v]:
                continue
            ok = True
            for w in adjacency[v]:
                if w in m and m[w] not in cn[c]:
                    ok = False
                    break
            for w, mw in m.items():
                if mw in cn[c] and w not in adjacency[v]:
                    ok = False
                    break
            if ok:
                m[v] = c
                extend(m, used | {c})
                del m[v]

    extend({}, set())
    return out


def classify_components(q: LabelledDoubleQuiver, keep: set[int]
                        ) -> list[tuple[DynkinType, tuple[int, ...], dict[int, int]]]:
    """Connected components of the full subquiver on ``keep``, classified.

    Every component of a proper subquiver of an extended Dynkin diagram is
    Dynkin; each is returned with a deterministic isomorphism onto the
    canonical labelling (the lexicographically smallest one).
    """
    keep = set(keep)
    if q.type is not None and 0 in keep:
        raise DomainError("keep must consist of non-extending vertices")
    if not keep <= set(q.vertices):
        raise DomainError("keep must be a subset of the vertex set")
    adj = {v: frozenset(w for w in q.neighbours(v) if w in keep) for v in keep}
    seen: set[int] = set()
    components = []
    for v in sorted(keep):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        sub = {u: frozenset(adj[u] & comp) for u in comp}
        dt = _identify_tree(sub)
        isos = _isomorphisms(sub, dynkin_adjacency(dt))
        if not isos:
            raise InternalInconsistency(f"component {sorted(comp)} failed to classify as {dt}")
        key = lambda m: tuple(m[u] for u in sorted(comp))
        best = min(isos, key=key)
        components.append((dt, tuple(sorted(comp)), best))
    return components


def det_int(matrix: tuple[tuple[int, ...], ...]) -> int:
    """Determinant of a small integer matrix, exactly."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    num = det.numerator
    assert det.denominator == 1
    return num
