"""Exact arithmetic in path algebras of double quivers modulo the deformed
preprojective relations.

The workhorse is a layer-by-layer normal-form construction of Pi^lambda:
filtering by path length, each new layer is presented by symbols
(basis element, arrow) modulo one relation row per lower basis element, and
Gaussian elimination yields multiplication tables.  Because the associated
graded algebra of Pi^lambda is the undeformed Pi, a query element lies in
the relation ideal exactly when its normal form vanishes, and an explicit
membership certificate can be pulled out of the stored elimination rows.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dynkin import (Arrow, DynkinType, ExtDynkinType, LabelledDoubleQuiver,
                     build_dynkin, build_extended)
from .errors import DomainError, InternalInconsistency
from .weights import FieldElem, Weight, ZERO, ONE

# ---------------------------------------------------------------------------
# paths and path elements


@dataclass(frozen=True)
class Path:
    """A composable arrow sequence, read left to right; () is trivial."""

    source: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self) -> None:
        at = self.source
        for a in self.arrows:
            if a.tail != at:
                raise DomainError(f"arrow {a.name} does not compose at vertex {at}")
            at = a.head

    @property
    def target(self) -> int:
        return self.arrows[-1].head if self.arrows else self.source

    def __len__(self) -> int:
        return len(self.arrows)

    def concat(self, other: "Path") -> "Path":
        if self.target != other.source:
            raise DomainError("paths do not compose")
        return Path(self.source, self.arrows + other.arrows)

    def then(self, a: Arrow) -> "Path":
        return Path(self.source, self.arrows + (a,))

    def name(self) -> str:
        return ".".join(a.name for a in self.arrows) if self.arrows else "e"

    def __str__(self) -> str:
        return f"{self.name()}:{self.source}->{self.target}"


def trivial_path(v: int) -> Path:
    return Path(v, ())


def parse_path(q: LabelledDoubleQuiver, text: str, source: int | None = None) -> Path:
    """Parse "a0.~a1.a2" against a quiver; "e" needs an explicit source."""
    text = text.strip()
    if text in ("e", ""):
        if source is None:
            raise DomainError("trivial path needs an explicit source vertex")
        return Path(source, ())
    arrows = tuple(q.arrow(tok) for tok in text.split("."))
    return Path(source if source is not None else arrows[0].tail, arrows)


class PathElement:
    """A finite field-linear combination of paths sharing source and target."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Path, FieldElem] | None = None):
        clean = {p: c for p, c in (terms or {}).items() if c}
        srcs = {p.source for p in clean}
        tgts = {p.target for p in clean}
        if len(srcs) > 1 or len(tgts) > 1:
            raise DomainError("paths in an element must share source and target")
        self.terms = clean

    @staticmethod
    def zero() -> "PathElement":
        return PathElement({})

    @staticmethod
    def unit(v: int) -> "PathElement":
        return PathElement({trivial_path(v): ONE})

    @staticmethod
    def of_path(p: Path, coef=1) -> "PathElement":
        return PathElement({p: FieldElem.of(coef)})

    @property
    def source(self) -> int | None:
        return next(iter(self.terms)).source if self.terms else None

    @property
    def target(self) -> int | None:
        return next(iter(self.terms)).target if self.terms else None

    @property
    def degree(self) -> int:
        """Filtration degree: the longest path present (-1 for zero)."""
        return max((len(p) for p in self.terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "PathElement") -> "PathElement":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, ZERO) + c
        return PathElement(out)

    def __sub__(self, other: "PathElement") -> "PathElement":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, ZERO) - c
        return PathElement(out)

    def scale(self, c) -> "PathElement":
        c = FieldElem.of(c)
        return PathElement({p: x * c for p, x in self.terms.items()})

    def __neg__(self) -> "PathElement":
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, PathElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"PathElement({format_element(self)!r})"


def multiply(a: PathElement, b: PathElement) -> PathElement:
    """Bilinear extension of concatenation; pq = 0 when endpoints mismatch."""
    out: dict[Path, FieldElem] = {}
    for p, cp in a.terms.items():
        for q, cq in b.terms.items():
            if p.target != q.source:
                continue
            pq = p.concat(q)
            out[pq] = out.get(pq, ZERO) + cp * cq
    return PathElement(out)


def format_element(x: PathElement) -> str:
    if not x.terms:
        return "0"
    bits = []
    for p in sorted(x.terms, key=lambda p: (len(p), p.name())):
        c = x.terms[p]
        bits.append(f"{c} * {p.name()} : {p.source}->{p.target}")
    return "  +  ".join(bits)


def parse_element(q: LabelledDoubleQuiver, text: str) -> PathElement:
    """Parse the textual format emitted by :func:`format_element`."""
    text = text.strip()
    if text == "0":
        return PathElement.zero()
    out: dict[Path, FieldElem] = {}
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        coef_s, rest = chunk.split("*", 1)
        body, ends = rest.rsplit(":", 1)
        src = int(ends.split("->")[0])
        p = parse_path(q, body.strip(), source=src)
        out[p] = out.get(p, ZERO) + FieldElem.of(coef_s.strip())
    return PathElement(out)


# ---------------------------------------------------------------------------
# relations


def relation_set(q: LabelledDoubleQuiver, weight: dict[int, FieldElem]) -> dict[int, PathElement]:
    """rho_v = sum_{t(a)=v} a.~a - sum_{h(a)=v} ~a.a - lambda_v e_v."""
    out = {}
    for v in q.vertices:
        terms: dict[Path, FieldElem] = {}
        for a in q.ordinary_arrows:
            rev = q.arrow("~a" + str(a.index))
            if a.tail == v:
                terms[Path(v, (a, rev))] = ONE
            if a.head == v:
                p = Path(v, (rev, a))
                terms[p] = terms.get(p, ZERO) - ONE
        lam = weight.get(v, ZERO)
        if lam:
            terms[trivial_path(v)] = terms.get(trivial_path(v), ZERO) - lam
        out[v] = PathElement(terms)
    return out


def relations_for(t: ExtDynkinType, w: Weight) -> dict[int, PathElement]:
    q = build_extended(t)
    return relation_set(q, {i: w[i] for i in range(t.n + 1)})


# ---------------------------------------------------------------------------
# the normal-form engine


@dataclass
class _Basis:
    idx: int
    degree: int
    source: int
    target: int
    rep: Path


class QuotientModel:
    """Filtered basis and multiplication tables for Pi^lambda of a double
    quiver, built one path-length layer at a time."""

    def __init__(self, quiver: LabelledDoubleQuiver, weight: dict[int, FieldElem]):
        self.quiver = quiver
        self.weight = {v: FieldElem.of(weight.get(v, 0)) for v in quiver.vertices}
        self.basis: list[_Basis] = []
        self.layers: list[list[int]] = []
        self.mul: dict[tuple[int, str], dict[int, FieldElem]] = {}
        # per degree: reduced relation rows with provenance over the raw
        # (c, v) rows, used both to build layers and to extract certificates
        self.rows: list[list[tuple[int, int]]] = [[]]
        self.echelon: list[dict] = [{}]
        self._nf_cache: dict[Path, dict[int, FieldElem]] = {}
        layer0 = []
        for v in quiver.vertices:
            b = _Basis(len(self.basis), 0, v, v, trivial_path(v))
            self.basis.append(b)
            layer0.append(b.idx)
        self.layers.append(layer0)

    # -- layer construction -------------------------------------------------

    def max_degree(self) -> int:
        return len(self.layers) - 1

    def extend_to(self, degree: int) -> None:
        while self.max_degree() < degree:
            self._build_layer(self.max_degree() + 1)

    def _symbols(self, d: int) -> list[tuple[int, Arrow]]:
        syms = []
        for bid in self.layers[d - 1]:
            b = self.basis[bid]
            for a in self.quiver.arrows_from(b.target):
                syms.append((bid, a))
        return syms

    def _build_layer(self, d: int) -> None:
        syms = self._symbols(d)
        sym_index = {(bid, a.name): k for k, (bid, a) in enumerate(syms)}

        raw_rows: list[tuple[int, int]] = []
        vecs: list[tuple[dict[int, FieldElem], dict[int, FieldElem]]] = []
        if d >= 2:
            for cid in self.layers[d - 2]:
                c = self.basis[cid]
                v = c.target
                sym: dict[int, FieldElem] = {}
                tail: dict[int, FieldElem] = {}

                def accumulate(first: Arrow, second: Arrow, sign: FieldElem) -> None:
                    prod = self.mul[(cid, first.name)]
                    for bid, coef in prod.items():
                        coef = coef * sign
                        if self.basis[bid].degree == d - 1:
                            k = sym_index[(bid, second.name)]
                            sym[k] = sym.get(k, ZERO) + coef
                        else:
                            for b2, c2 in self.mul[(bid, second.name)].items():
                                tail[b2] = tail.get(b2, ZERO) + coef * c2

                for a in self.quiver.ordinary_arrows:
                    rev = self.quiver.arrow("~a" + str(a.index))
                    if a.tail == v:
                        accumulate(a, rev, ONE)
                    if a.head == v:
                        accumulate(rev, a, -ONE)
                lam = self.weight[v]
                if lam:
                    tail[cid] = tail.get(cid, ZERO) - lam
                raw_rows.append((cid, v))
                vecs.append(({k: x for k, x in sym.items() if x},
                             {k: x for k, x in tail.items() if x}))

        # echelonize rows on the symbol columns, tracking provenance
        ech: list[dict] = []
        pivots: dict[int, int] = {}
        for ridx, (sym, tail) in enumerate(vecs):
            sym = dict(sym)
            tail = dict(tail)
            prov = {ridx: ONE}
            for pk in sorted(set(sym) & set(pivots), reverse=True):
                coef = sym.get(pk)
                if not coef:
                    continue
                row = ech[pivots[pk]]
                _axpy(sym, row["sym"], -coef)
                _axpy(tail, row["tail"], -coef)
                _axpy(prov, row["prov"], -coef)
            sym = {k: x for k, x in sym.items() if x}
            tail = {k: x for k, x in tail.items() if x}
            if not sym:
                if tail:
                    raise InternalInconsistency(
                        "relation row degenerated below the associated graded algebra")
                continue
            pk = max(sym)
            inv = ONE / sym[pk]
            sym = {k: x * inv for k, x in sym.items()}
            tail = {k: x * inv for k, x in tail.items()}
            prov = {k: x * inv for k, x in prov.items()}
            pivots[pk] = len(ech)
            ech.append({"pivot": pk, "sym": sym, "tail": tail, "prov": prov})

        # back-substitute to reduced echelon form
        for row in ech:
            for pk in sorted((set(row["sym"]) - {row["pivot"]}) & set(pivots), reverse=True):
                coef = row["sym"].get(pk)
                if not coef:
                    continue
                other = ech[pivots[pk]]
                _axpy(row["sym"], other["sym"], -coef)
                _axpy(row["tail"], other["tail"], -coef)
                _axpy(row["prov"], other["prov"], -coef)
            row["sym"] = {k: x for k, x in row["sym"].items() if x}
            row["tail"] = {k: x for k, x in row["tail"].items() if x}
            row["prov"] = {k: x for k, x in row["prov"].items() if x}

        # non-pivot symbols become the new layer's basis
        new_layer: list[int] = []
        sym_to_basis: dict[int, int] = {}
        for k, (bid, a) in enumerate(syms):
            if k in pivots:
                continue
            b = self.basis[bid]
            nb = _Basis(len(self.basis), d, b.source, a.head, b.rep.then(a))
            self.basis.append(nb)
            new_layer.append(nb.idx)
            sym_to_basis[k] = nb.idx
        self.layers.append(new_layer)

        for k, (bid, a) in enumerate(syms):
            if k in sym_to_basis:
                self.mul[(bid, a.name)] = {sym_to_basis[k]: ONE}
                continue
            row = ech[pivots[k]]
            vec: dict[int, FieldElem] = {}
            for k2, x in row["sym"].items():
                if k2 != k:
                    vec[sym_to_basis[k2]] = -x
            for b2, x in row["tail"].items():
                vec[b2] = vec.get(b2, ZERO) - x
            self.mul[(bid, a.name)] = {b2: x for b2, x in vec.items() if x}

        self.rows.append(raw_rows)
        self.echelon.append({"rows": ech, "pivots": pivots,
                             "sym_index": sym_index, "syms": syms})

    # -- normal forms --------------------------------------------------------

    def nf_path(self, p: Path) -> dict[int, FieldElem]:
        if p in self._nf_cache:
            return self._nf_cache[p]
        self.extend_to(len(p))
        vec = {self.layers[0][self.quiver.vertices.index(p.source)]: ONE}
        done = trivial_path(p.source)
        for a in p.arrows:
            done = done.then(a)
            if done in self._nf_cache:
                vec = self._nf_cache[done]
                continue
            out: dict[int, FieldElem] = {}
            for bid, coef in vec.items():
                for b2, c2 in self.mul[(bid, a.name)].items():
                    out[b2] = out.get(b2, ZERO) + coef * c2
            vec = {k: x for k, x in out.items() if x}
            self._nf_cache[done] = vec
        return vec

    def nf(self, x: PathElement) -> dict[int, FieldElem]:
        out: dict[int, FieldElem] = {}
        for p, coef in x.terms.items():
            for bid, c in self.nf_path(p).items():
                out[bid] = out.get(bid, ZERO) + coef * c
        return {k: v for k, v in out.items() if v}

    def is_zero(self, x: PathElement) -> bool:
        return not self.nf(x)

    # -- membership certificates ----------------------------------------------

    def certificate(self, x: PathElement) -> list[tuple[FieldElem, Path, int, Path]] | None:
        """An explicit presentation of x in the relation ideal, or None.

        Terms (coef, u, v, w) satisfy  x = sum coef * u rho_v w  in the free
        path algebra; checkable by plain expansion.
        """
        if not x:
            return []
        self.extend_to(x.degree)
        if self.nf(x):
            return None
        cert: dict[tuple[Path, int, Path], FieldElem] = {}
        work: dict[tuple[Arrow, ...], dict[Path, FieldElem]] = {(): dict(x.terms)}
        while work:
            suffix, g = work.popitem()
            g = {p: c for p, c in g.items() if c}
            while g:
                top = max(len(p) for p in g)
                if top < 2:
                    raise InternalInconsistency("nonzero ideal element of filtration degree < 2")
                sym_vec: dict[int, FieldElem] = {}
                for p in [p for p in g if len(p) == top]:
                    self._consume_top(g, work, suffix, p, g.pop(p), sym_vec)
                sym_vec = {k: v for k, v in sym_vec.items() if v}
                if sym_vec:
                    combo = self._solve_rows(top, sym_vec)
                    dropped: dict[int, FieldElem] = {}
                    for ridx, mu in combo.items():
                        cid, v = self.rows[top][ridx]
                        rep = self.basis[cid].rep
                        key = (rep, v, Path(v, suffix))
                        cert[key] = cert.get(key, ZERO) + mu
                        for q, c in self._expand_generator(cid, v).items():
                            if len(q) == top:
                                self._consume_top(g, work, suffix, q, -(mu * c), dropped)
                            else:
                                g[q] = g.get(q, ZERO) - mu * c
                    # the expansions' symbol content must cancel the query's
                    _axpy(dropped, sym_vec, ONE)
                    if any(dropped.values()):
                        raise InternalInconsistency("certificate bookkeeping went off balance")
                g = {p: c for p, c in g.items() if c}
        out = [(c, u, v, w) for (u, v, w), c in cert.items() if c]
        out.sort(key=lambda t: (len(t[1]), len(t[3]), t[1].name(), t[3].name(), t[2]))
        return out

    def _consume_top(self, g: dict, work: dict, suffix: tuple,
                     p: Path, coef: FieldElem, sym_sink: dict) -> None:
        """Split a top-length path into symbol content, lower tails kept in
        g, and an ideal remainder pushed one suffix level down."""
        top = len(p)
        info = self.echelon[top]
        prefix = Path(p.source, p.arrows[:-1])
        last = p.arrows[-1]
        delta = {prefix: coef}
        for bid, c in self.nf_path(prefix).items():
            b = self.basis[bid]
            delta[b.rep] = delta.get(b.rep, ZERO) - coef * c
            if b.degree == top - 1:
                k = info["sym_index"][(bid, last.name)]
                sym_sink[k] = sym_sink.get(k, ZERO) + coef * c
            else:
                p2 = b.rep.then(last)
                g[p2] = g.get(p2, ZERO) + coef * c
        delta = {q: c for q, c in delta.items() if c}
        if delta:
            slot = work.setdefault((last,) + suffix, {})
            for q, c in delta.items():
                slot[q] = slot.get(q, ZERO) + c

    def _solve_rows(self, d: int, sym_vec: dict[int, FieldElem]) -> dict[int, FieldElem]:
        """Express a symbol vector over the reduced relation rows of degree d."""
        info = self.echelon[d]
        residual = dict(sym_vec)
        combo: dict[int, FieldElem] = {}
        # rows are fully reduced: eliminating a pivot never reintroduces one
        for pk in sorted(residual, reverse=True):
            coef = residual.get(pk)
            if not coef or pk not in info["pivots"]:
                continue
            row = info["rows"][info["pivots"][pk]]
            _axpy(residual, row["sym"], -coef)
            _axpy(combo, row["prov"], coef)
        if any(residual.values()):
            raise InternalInconsistency("symbol vector escaped the relation row space")
        return {k: v for k, v in combo.items() if v}

    def _expand_generator(self, cid: int, v: int) -> dict[Path, FieldElem]:
        """rep(c) * rho_v as an explicit path combination."""
        rep = self.basis[cid].rep
        out: dict[Path, FieldElem] = {}
        for a in self.quiver.ordinary_arrows:
            rev = self.quiver.arrow("~a" + str(a.index))
            if a.tail == v:
                p = rep.then(a).then(rev)
                out[p] = out.get(p, ZERO) + ONE
            if a.head == v:
                p = rep.then(rev).then(a)
                out[p] = out.get(p, ZERO) - ONE
        lam = self.weight[v]
        if lam:
            out[rep] = out.get(rep, ZERO) - lam
        return out

    # -- dimension data --------------------------------------------------------

    def layer_dims(self, degree: int) -> int:
        self.extend_to(degree)
        return len(self.layers[degree])

    def block_dim(self, i: int, j: int, degree: int) -> int:
        self.extend_to(degree)
        return sum(1 for bid in self.layers[degree]
                   if self.basis[bid].source == i and self.basis[bid].target == j)


def _axpy(dst: dict, src: dict, coef) -> None:
    if not coef:
        return
    for k, v in src.items():
        dst[k] = dst.get(k, ZERO) + coef * v


# ---------------------------------------------------------------------------
# model cache and public operations

_MODELS: dict[tuple, QuotientModel] = {}


def _weight_key(weight: dict[int, FieldElem]) -> tuple:
    return tuple(sorted((v, x.re, x.im) for v, x in weight.items() if x))


def model_for(t: ExtDynkinType, w: Weight) -> QuotientModel:
    weight = {i: FieldElem.of(w[i]) for i in range(t.n + 1)}
    key = ("ext", str(t), _weight_key(weight))
    if key not in _MODELS:
        _MODELS[key] = QuotientModel(build_extended(t), weight)
    return _MODELS[key]


def model_for_dynkin(t: DynkinType) -> QuotientModel:
    key = ("dyn", str(t))
    if key not in _MODELS:
        _MODELS[key] = QuotientModel(build_dynkin(t), {})
    return _MODELS[key]


def graded_dims_pi(t: DynkinType, max_degree: int | None = None
                   ) -> tuple[tuple[int, ...], int]:
    """Per-degree dimensions of Pi(Q) for Dynkin Q, and the total."""
    model = model_for_dynkin(t)
    guard = max_degree if max_degree is not None else 2 * t.coxeter_number + 2
    dims = []
    for d in range(guard + 1):
        dim = model.layer_dims(d)
        if dim == 0:
            break
        dims.append(dim)
    else:
        raise InternalInconsistency(f"Pi({t}) did not terminate by degree {guard}")
    return tuple(dims), sum(dims)


def hom_matrix(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    """H_ij = dim e_i Pi(Q) e_j over the canonical vertex labels 1..n."""
    model = model_for_dynkin(t)
    dims, _ = graded_dims_pi(t)
    top = len(dims) - 1
    n = t.n
    out = [[0] * n for _ in range(n)]
    for d in range(top + 1):
        for bid in model.layers[d]:
            b = model.basis[bid]
            out[b.source - 1][b.target - 1] += 1
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class MembershipCertificate:
    """x = sum_k coef_k * (left_k rho_{v_k} right_k) in the free algebra."""

    quiver_label: str
    weight: Weight
    element: PathElement
    terms: tuple[tuple[FieldElem, Path, int, Path], ...]


@dataclass(frozen=True)
class MembershipNotFound:
    quiver_label: str
    element: PathElement
    degree_cap: int


def ideal_member(t: ExtDynkinType, w: Weight, x: PathElement,
                 degree_cap: int | None = None,
                 use_rewriting: bool = True):
    """Decide membership of x in the Pi^lambda relation ideal with a
    certificate.  The engine is complete at cap = deg(x); larger caps are
    accepted for interface compatibility."""
    if degree_cap is None:
        degree_cap = x.degree + 8
    if x and degree_cap < x.degree:
        raise DomainError(f"degree cap {degree_cap} is below the element degree {x.degree}")
    quiver = build_extended(t)
    weight = {i: FieldElem.of(w[i]) for i in range(t.n + 1)}
    if use_rewriting:
        greedy = _greedy_certificate(quiver, weight, x)
        if greedy is not None:
            return MembershipCertificate(str(t), w, x, tuple(greedy))
    model = model_for(t, w)
    terms = model.certificate(x)
    if terms is None:
        return MembershipNotFound(str(t), x, degree_cap)
    return MembershipCertificate(str(t), w, x, tuple(terms))


def expand_certificate(q: LabelledDoubleQuiver, weight: dict[int, FieldElem],
                       terms) -> PathElement:
    """Free-algebra expansion of certificate terms; no linear algebra."""
    rels = relation_set(q, weight)
    total = PathElement.zero()
    for coef, left, v, right in terms:
        piece = multiply(multiply(PathElement.of_path(left), rels[v]),
                         PathElement.of_path(right))
        total = total + piece.scale(coef)
    return total


def check_certificate(t: ExtDynkinType, cert: MembershipCertificate) -> bool:
    q = build_extended(t)
    weight = {i: FieldElem.of(cert.weight[i]) for i in range(t.n + 1)}
    return expand_certificate(q, weight, cert.terms) == cert.element


# ---------------------------------------------------------------------------
# rewriting accelerator


def _designated_loops(q: LabelledDoubleQuiver):
    """Per vertex: the 2-loop through the highest-index incident arrow,
    its sign inside rho_v, and the remaining loop terms."""
    out = {}
    for v in q.vertices:
        loops: list[tuple[Path, FieldElem]] = []
        for a in q.ordinary_arrows:
            rev = q.arrow("~a" + str(a.index))
            if a.tail == v:
                loops.append((Path(v, (a, rev)), ONE))
            if a.head == v:
                loops.append((Path(v, (rev, a)), -ONE))
        if not loops:
            continue
        lead = max(loops, key=lambda t: t[0].arrows[0].index)
        out[v] = (lead, [l for l in loops if l is not lead])
    return out


def _greedy_certificate(q: LabelledDoubleQuiver, weight: dict[int, FieldElem],
                        x: PathElement, max_steps: int = 400):
    """Paper-style loop rewriting; returns certificate terms or None.

    Rewrites the designated loop at a vertex into the rest of the relation.
    Not confluent and not complete: None means "fall back", never "not a
    member"."""
    designated = _designated_loops(q)
    g = dict(x.terms)
    cert: dict[tuple[Path, int, Path], FieldElem] = {}
    for _ in range(max_steps):
        g = {p: c for p, c in g.items() if c}
        if not g:
            out = [(c, u, v, w) for (u, v, w), c in cert.items() if c]
            out.sort(key=lambda t: (len(t[1]), len(t[3]), t[1].name(), t[3].name(), t[2]))
            return out
        hit = None
        for p in sorted(g, key=lambda p: (-len(p), p.name())):
            for k in range(len(p) - 1):
                v = p.arrows[k].tail
                if v not in designated:
                    continue
                (lead_path, _), _ = designated[v]
                if p.arrows[k: k + 2] == lead_path.arrows:
                    hit = (p, k, v)
                    break
            if hit:
                break
        if hit is None:
            return None
        p, k, v = hit
        (lead_path, sign), rest = designated[v]
        coef = g.pop(p)
        left = Path(p.source, p.arrows[:k])
        right = Path(v, p.arrows[k + 2:])
        key = (left, v, right)
        cert[key] = cert.get(key, ZERO) + coef * sign
        # x lead y = sign * x rho_v y - sign * x (rest - lam e_v) y
        for loop, s in rest:
            p2 = left.concat(loop).concat(right)
            g[p2] = g.get(p2, ZERO) - coef * sign * s
        lam = weight.get(v, ZERO)
        if lam:
            p2 = left.concat(right)
            g[p2] = g.get(p2, ZERO) + coef * sign * lam
    return None


# ---------------------------------------------------------------------------
# zero products of morphism matrices


@dataclass(frozen=True)
class ZeroProductReport:
    """Outcome of certifying psi . phi = 0 entrywise in Pi^lambda."""

    ok: bool
    certificates: tuple[MembershipCertificate, ...]
    failed_entry: tuple[int, int] | None = None
    failure: PathElement | None = None


def verify_zero_product(t: ExtDynkinType, w: Weight,
                        psi: list[list[PathElement]],
                        phi: list[list[PathElement]],
                        degree_cap: int | None = None) -> ZeroProductReport:
    """Compute the matrix product psi.phi and certify every entry lies in
    the relation ideal; entries are composed by path concatenation."""
    if not psi or not phi or len(psi[0]) != len(phi):
        raise DomainError("matrix shapes are not composable")
    certs = []
    for i in range(len(psi)):
        for j in range(len(phi[0])):
            entry = PathElement.zero()
            for k in range(len(phi)):
                entry = entry + multiply(psi[i][k], phi[k][j])
            if degree_cap is not None and entry.degree > degree_cap:
                raise DomainError(
                    f"entry ({i},{j}) has degree {entry.degree} above the cap {degree_cap}")
            res = ideal_member(t, w, entry, degree_cap)
            if isinstance(res, MembershipNotFound):
                return ZeroProductReport(False, tuple(certs), (i, j), entry)
            certs.append(res)
    return ZeroProductReport(True, tuple(certs))
