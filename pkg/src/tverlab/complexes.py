"""Chessboard-type simplicial complexes and their group actions.

Vertices of the configuration-space complexes are (row, column) pairs with
integer rows and columns 1..q; a face assigns each of its rows one column.
The full configuration space on rows 0..N is the q-fold pairwise deleted
join of the N-simplex: every partial assignment of rows to columns.

Named subcomplexes (rows are listed first-to-last):

  * chessboard(m, n): partial assignments that are injective on columns;
  * complex_C(l, q): no column shared between the apex row and a leaf row;
  * complex_D(l, q): consecutive rows use distinct columns;
  * complex_E(l, q): complex_D's rule plus first row != last row.
"""

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .errors import InvalidParameters, LabelCollision, LabelFormat


class SimplicialComplex:
    """Abstract simplicial complex with facet-based storage."""

    def __init__(self, facets):
        fs = {frozenset(f) for f in facets}
        fs.discard(frozenset())
        by_size = {}
        for f in fs:
            by_size.setdefault(len(f), []).append(f)
        maximal = set()
        sizes = sorted(by_size, reverse=True)
        for idx, size in enumerate(sizes):
            bigger = [g for s in sizes[:idx] for g in by_size[s]]
            for f in by_size[size]:
                if not any(f < g for g in bigger):
                    maximal.add(f)
        self.facets = frozenset(maximal)
        self._faces = None

    @property
    def vertices(self):
        return frozenset(v for f in self.facets for v in f)

    @property
    def dim(self):
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    def faces(self):
        """All non-empty faces, cached."""
        if self._faces is None:
            out = set()
            for f in self.facets:
                elems = tuple(f)
                for r in range(1, len(elems) + 1):
                    out.update(map(frozenset, combinations(elems, r)))
            self._faces = out
        return self._faces

    def faces_by_dim(self):
        by_dim = {}
        for f in self.faces():
            by_dim.setdefault(len(f) - 1, []).append(f)
        return {k: sorted(v, key=sorted) for k, v in sorted(by_dim.items())}

    def f_vector(self):
        return [len(v) for _, v in sorted(self.faces_by_dim().items())]

    def total_faces(self):
        return len(self.faces())

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return f"SimplicialComplex({len(self.facets)} facets, dim {self.dim})"


EMPTY = SimplicialComplex([])


def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; facets are unions of facets."""
    if k1.vertices & k2.vertices:
        raise LabelCollision("join factors share vertex labels")
    if not k1.facets:
        return k2
    if not k2.facets:
        return k1
    return SimplicialComplex(f1 | f2 for f1 in k1.facets for f2 in k2.facets)


def assignment_complex(rows, q) -> SimplicialComplex:
    """All assignments of the given rows to columns 1..q (the pairwise
    deleted join restricted to these rows)."""
    rows = list(rows)
    return SimplicialComplex(
        frozenset(zip(rows, cols)) for cols in product(range(1, q + 1), repeat=len(rows))
    )


def deleted_join_of_simplex(n, p) -> SimplicialComplex:
    """The p-fold pairwise deleted join of the n-simplex: p^(n+1) facets on
    rows 0..n, one per assignment of rows to columns."""
    if n < 0 or p < 1:
        raise InvalidParameters("need n >= 0 and p >= 1")
    return assignment_complex(range(n + 1), p)


def chessboard_on(rows, q) -> SimplicialComplex:
    """Chessboard complex on explicit rows with columns 1..q."""
    rows = list(rows)
    k = min(len(rows), q)
    facets = []
    for row_subset in combinations(rows, k):
        for cols in permutations(range(1, q + 1), k):
            facets.append(frozenset(zip(row_subset, cols)))
    return SimplicialComplex(facets)


def chessboard(m, n) -> SimplicialComplex:
    """The chessboard complex on m rows and n columns: faces are
    non-attacking partial rook placements."""
    if m < 1 or n < 1:
        raise InvalidParameters("need m, n >= 1")
    return chessboard_on(range(m), n)


def _sequence_facet(rows, cols):
    return frozenset(zip(rows, cols))


def complex_C(l, q, rows=None) -> SimplicialComplex:
    """Star-constraint complex: apex row (first of `rows`) never shares a
    column with a leaf row.  q(q-1)^l facets."""
    if l < 1 or q < 2:
        raise InvalidParameters("need l >= 1 and q >= 2")
    if rows is None:
        rows = list(range(l + 1))
    if len(rows) != l + 1:
        raise InvalidParameters("need l+1 rows (apex first)")
    facets = []
    for apex_col in range(1, q + 1):
        others = [c for c in range(1, q + 1) if c != apex_col]
        for cols in product(others, repeat=l):
            facets.append(_sequence_facet(rows, (apex_col,) + cols))
    return SimplicialComplex(facets)


def c_cones(l, q, rows=None):
    """The decomposition of complex_C into the q cones L_m (apex column m)."""
    if rows is None:
        rows = list(range(l + 1))
    cones = []
    for apex_col in range(1, q + 1):
        others = [c for c in range(1, q + 1) if c != apex_col]
        facets = [
            _sequence_facet(rows, (apex_col,) + cols) for cols in product(others, repeat=l)
        ]
        cones.append(SimplicialComplex(facets))
    return cones


def _d_facet_columns(l, q):
    """Column sequences (c_0..c_l) with consecutive entries distinct."""
    def rec(prefix):
        if len(prefix) == l + 1:
            yield tuple(prefix)
            return
        for c in range(1, q + 1):
            if not prefix or c != prefix[-1]:
                prefix.append(c)
                yield from rec(prefix)
                prefix.pop()

    yield from rec([])


def _complex_D_any(l, q, rows=None) -> SimplicialComplex:
    if rows is None:
        rows = list(range(l + 1))
    if len(rows) != l + 1:
        raise InvalidParameters("need l+1 rows")
    return SimplicialComplex(
        _sequence_facet(rows, cols) for cols in _d_facet_columns(l, q)
    )


def complex_D(l, q, rows=None) -> SimplicialComplex:
    """Path-constraint complex on l+1 rows: consecutive rows use distinct
    columns.  q(q-1)^l facets; complex_D(1, q) is the 2-row chessboard."""
    if l < 1 or q < 2:
        raise InvalidParameters("need l >= 1 and q >= 2")
    return _complex_D_any(l, q, rows)


def d_subcomplexes(l, q, rows=None):
    """The subcomplexes D^k (facets whose last row uses column k), k=1..q."""
    if rows is None:
        rows = list(range(l + 1))
    out = {}
    for k in range(1, q + 1):
        out[k] = SimplicialComplex(
            _sequence_facet(rows, cols) for cols in _d_facet_columns(l, q) if cols[-1] == k
        )
    return out


def complex_E(l, q, rows=None) -> SimplicialComplex:
    """Cycle-constraint complex on l rows: consecutive rows distinct and
    first row != last row.  (q-1)^l + (-1)^l (q-1) facets."""
    if l < 3 or q < 2:
        raise InvalidParameters("need l >= 3 and q >= 2")
    if rows is None:
        rows = list(range(l))
    if len(rows) != l:
        raise InvalidParameters("need l rows")
    return SimplicialComplex(
        _sequence_facet(rows, cols)
        for cols in _d_facet_columns(l - 1, q)
        if cols[0] != cols[-1]
    )


def e_subcomplexes(l, q, rows=None):
    """The subcomplexes E^i: facets ending in column i with first row != i."""
    if rows is None:
        rows = list(range(l))
    out = {}
    for i in range(1, q + 1):
        out[i] = SimplicialComplex(
            _sequence_facet(rows, cols)
            for cols in _d_facet_columns(l - 1, q)
            if cols[-1] == i and cols[0] != i
        )
    return out


def induced_deletion(K: SimplicialComplex, removed_vertices) -> SimplicialComplex:
    """Delete every face containing one of the given vertices (the induced
    subcomplex on the remaining vertices)."""
    removed = frozenset(removed_vertices)
    return SimplicialComplex(f - removed for f in K.facets)


def complex_D_tilde(i, S, l, q, rows=None) -> SimplicialComplex:
    """Subcomplex of D^i obtained by deleting all faces with a first-row
    vertex in the column set S."""
    if rows is None:
        rows = list(range(l + 1))
    if not set(S) <= set(range(1, q + 1)):
        raise InvalidParameters("S must be a set of columns 1..q")
    di = d_subcomplexes(l, q, rows)[i]
    return induced_deletion(di, {(rows[0], c) for c in S})


def nerve(family) -> SimplicialComplex:
    """Nerve on the family indices: a subfamily spans a simplex iff its
    members share at least one (non-empty) face."""
    vsets = [K.vertices for K in family]
    facets = []
    indices = [i for i, vs in enumerate(vsets) if vs]
    for r in range(len(indices), 0, -1):
        for subset in combinations(indices, r):
            common = frozenset.intersection(*(vsets[i] for i in subset))
            if common:
                facets.append(frozenset(subset))
    return SimplicialComplex(facets)


# ---------------------------------------------------------------------------
# Column group actions

@dataclass(frozen=True)
class GroupAction:
    """Generators are column permutations, stored as tuples g with
    g[c-1] = image of column c (columns are 1-based)."""

    q: int
    generators: tuple
    name: str = ""

    def elements(self):
        """All group elements generated (BFS closure of composition)."""
        identity = tuple(range(1, self.q + 1))
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for g in frontier:
                for h in self.generators:
                    gh = tuple(h[g[c] - 1] for c in range(self.q))
                    if gh not in seen:
                        seen.add(gh)
                        nxt.append(gh)
            frontier = nxt
        return sorted(seen)


def cyclic_action(q) -> GroupAction:
    shift = tuple(c % q + 1 for c in range(1, q + 1))
    return GroupAction(q, (shift,), f"Z_{q}")


def _prime_power_decompose(q):
    f = 2
    n = q
    while f * f <= n:
        if n % f == 0:
            r = 0
            while n % f == 0:
                n //= f
                r += 1
            if n != 1:
                raise InvalidParameters(f"q={q} is not a prime power")
            return f, r
        f += 1
    return q, 1


def regular_prime_power_action(q) -> GroupAction:
    """The regular action of (Z_p)^r on itself, columns identified with
    F_p^r by the base-p digits of column-1 (column c <-> digits of c-1)."""
    p, r = _prime_power_decompose(q)
    gens = []
    for i in range(r):
        step = p**i
        gen = []
        for c in range(1, q + 1):
            v = c - 1
            digit = (v // step) % p
            image = v - digit * step + ((digit + 1) % p) * step
            gen.append(image + 1)
        gens.append(tuple(gen))
    return GroupAction(q, tuple(gens), f"(Z_{p})^{r}")


def _apply(g, facet):
    try:
        return frozenset((row, g[col - 1]) for row, col in facet)
    except (TypeError, IndexError, ValueError) as exc:
        raise LabelFormat("vertices must be (row, column) pairs") from exc


def invariance_check(K, action: GroupAction) -> bool:
    """True iff every generator maps the facet set onto itself."""
    if isinstance(K, JoinComplex):
        return all(invariance_check(f, action) for f in K.factors)
    for g in action.generators:
        if frozenset(_apply(g, f) for f in K.facets) != K.facets:
            return False
    return True


def goodness_check(K, constrained_row_pairs) -> bool:
    """True iff no face holds both ends of a constrained row pair in the
    same column (no 'vertical edge' for those pairs)."""
    pairs = [tuple(p) for p in constrained_row_pairs]
    if isinstance(K, JoinComplex):
        return K._goodness(pairs)
    for f in K.facets:
        cols = {}
        for v in f:
            try:
                row, col = v
            except (TypeError, ValueError) as exc:
                raise LabelFormat("vertices must be (row, column) pairs") from exc
            cols.setdefault(col, set()).add(row)
        for rows in cols.values():
            for r1, r2 in pairs:
                if r1 in rows and r2 in rows:
                    return False
    return True


def vertex_orbit_sizes(K, action: GroupAction):
    """Sizes of the vertex orbits under the full generated group; an orbit
    leaving the complex's vertex set reports its full size regardless."""
    factors = K.factors if isinstance(K, JoinComplex) else [K]
    elements = action.elements()
    sizes = []
    for factor in factors:
        verts = factor.vertices
        seen = set()
        for v in sorted(verts):
            if v in seen:
                continue
            orbit = {(v[0], g[v[1] - 1]) for g in elements}
            if not orbit <= verts:
                sizes.append(-1)  # orbit escapes the complex: not invariant
                seen |= orbit & verts
            else:
                sizes.append(len(orbit))
                seen |= orbit
    return sizes


# ---------------------------------------------------------------------------
# Good subcomplexes for constraint-graph families

class JoinComplex:
    """A join kept in factored form (factors on disjoint row sets).

    Facet counts multiply, so the full complex is often far too large to
    materialize; goodness, invariance, and orbit checks all work
    factor-wise.
    """

    def __init__(self, factors):
        self.factors = [f for f in factors if f.facets]
        rows_seen = set()
        for f in self.factors:
            rows = {v[0] for v in f.vertices}
            if rows & rows_seen:
                raise LabelCollision("join factors share rows")
            rows_seen |= rows

    def facet_count(self):
        count = 1
        for f in self.factors:
            count *= len(f.facets)
        return count

    @property
    def vertices(self):
        return frozenset(v for f in self.factors for v in f.vertices)

    @property
    def dim(self):
        return sum(f.dim + 1 for f in self.factors) - 1

    def materialize(self, facet_budget=200_000) -> SimplicialComplex:
        if self.facet_count() > facet_budget:
            raise InvalidParameters(
                f"{self.facet_count()} facets exceed the budget {facet_budget}"
            )
        out = EMPTY
        for f in self.factors:
            out = join(out, f)
        return out

    def _goodness(self, pairs):
        row_to_factor = {}
        for idx, f in enumerate(self.factors):
            for v in f.vertices:
                row_to_factor[v[0]] = idx
        cols_of = [
            {} for _ in self.factors
        ]  # per factor: row -> set of columns used by some vertex
        for idx, f in enumerate(self.factors):
            for row, col in f.vertices:
                cols_of[idx].setdefault(row, set()).add(col)
        for r1, r2 in pairs:
            if r1 not in row_to_factor or r2 not in row_to_factor:
                continue  # a row absent from the complex cannot be violated
            i1, i2 = row_to_factor[r1], row_to_factor[r2]
            if i1 == i2:
                if not goodness_check(self.factors[i1], [(r1, r2)]):
                    return False
            else:
                # Facets combine freely across factors, so any shared
                # column between the two rows appears in some facet.
                if cols_of[i1][r1] & cols_of[i2][r2]:
                    return False
        return True


def _component_complex(spec, q, rows):
    from .constraints import CompleteK, Cycle, Path, Star

    if isinstance(spec, CompleteK):
        return chessboard_on(rows, q)
    if isinstance(spec, Star):
        return complex_C(spec.l, q, rows)
    if isinstance(spec, Path):
        return complex_D(spec.l, q, rows)
    if isinstance(spec, Cycle):
        return complex_E(spec.l, q, rows)
    raise InvalidParameters(f"not a family component: {spec!r}")


def good_subcomplex(spec, q, d, rows=None) -> JoinComplex:
    """The invariant subcomplex avoiding a family's constraint edges: the
    join of per-component complexes with all remaining rows free.

    `rows` assigns rows 0..N to the family's vertex slots (defaults to
    0, 1, 2, ...); for a Star the first row is the center, for Path/Cycle
    the rows follow the path/cycle order.
    """
    from .constraints import DisjointUnion, family_admissible

    if not family_admissible(spec, q, d):
        raise InvalidParameters(f"{spec!r} is not an admissible family for q={q}, d={d}")
    n_rows = (d + 1) * (q - 1) + 1
    count = spec.vertex_count()
    if rows is None:
        rows = list(range(count))
    if len(rows) != count or not set(rows) <= set(range(n_rows)):
        raise InvalidParameters("row assignment must pick distinct rows 0..N")
    parts = spec.parts if isinstance(spec, DisjointUnion) else (spec,)
    factors = []
    off = 0
    for part in parts:
        part_rows = rows[off : off + part.vertex_count()]
        factors.append(_component_complex(part, q, part_rows))
        off += part.vertex_count()
    for row in range(n_rows):
        if row not in rows:
            factors.append(assignment_complex([row], q))
    return JoinComplex(factors)


# ---------------------------------------------------------------------------
# Intersection identities of the D/E decompositions

def _face_set(K):
    return set(K.faces())


def _record(report, name, lhs, rhs):
    if lhs == rhs:
        report["identities"].append({"name": name, "ok": True})
    else:
        offending = sorted(map(sorted, (lhs ^ rhs)))[0]
        report["identities"].append({"name": name, "ok": False, "offending_face": offending})
        report["ok"] = False


def verify_intersection_identities(l, q):
    """Face-set equalities behind the D and E connectivity arguments.

    D-identities (on D_{l,q}, l >= 2):
      (3)  for 1 < |T| < q-1:   cap_{j in T} D^j_l  =  cup_{j notin T} D^j_{l-1}
      (4)  cap_{j != k} D^j_l  =  D^k_{l-1}  union  D^k_{l-2}
      (5)  cap_{j} D^j_l       =  cup_j D^j_{l-2}

    E-identities (on E_{l,q}, l >= 4, q >= 5; Dt is the first-row deletion
    complex_D_tilde, lower-index complexes live on the leading rows, except
    the identity (6) target which lives on rows 1..l-3):
      (6)  cap_i E^i_l         =  D_{l-4}  on rows 1..l-3
      (7)  cap_{i != k} E^i_l  =  Dt^{k,[q]-k}_{l-2}  union  Dt^{k,[q]-k}_{l-3}
      (8)  for 1 < |T| < q-1:   cap_{i in T} E^i_l  =  cup_{i notin T} Dt^{i,T}_{l-2}
    """
    if l < 2 or q < 3:
        raise InvalidParameters("need l >= 2 and q >= 3")
    report = {"l": l, "q": q, "ok": True, "identities": []}
    cols = range(1, q + 1)

    d_l = {k: _face_set(K) for k, K in d_subcomplexes(l, q).items()}
    d_l1 = {k: _face_set(K) for k, K in d_subcomplexes(l - 1, q).items()}
    d_l2 = {
        k: _face_set(K) for k, K in d_subcomplexes(l - 2, q).items()
    } if l >= 2 else {}
    for t in range(2, q - 1):
        for T in combinations(cols, t):
            lhs = set.intersection(*(d_l[j] for j in T))
            rhs = set().union(*(d_l1[j] for j in cols if j not in T))
            _record(report, f"D eq3 T={T}", lhs, rhs)
    for k in cols:
        lhs = set.intersection(*(d_l[j] for j in cols if j != k))
        _record(report, f"D eq4 k={k}", lhs, d_l1[k] | d_l2[k])
    lhs = set.intersection(*(d_l[j] for j in cols))
    _record(report, "D eq5", lhs, set().union(*d_l2.values()))

    if l >= 4 and q >= 5:
        e_l = {i: _face_set(K) for i, K in e_subcomplexes(l, q).items()}
        lhs = set.intersection(*(e_l[i] for i in cols))
        middle = _complex_D_any(l - 4, q, rows=list(range(1, l - 2)))
        _record(report, "E eq6", lhs, _face_set(middle))
        for k in cols:
            lhs = set.intersection(*(e_l[i] for i in cols if i != k))
            S = set(cols) - {k}
            a = complex_D_tilde(k, S, l - 2, q, rows=list(range(l - 1)))
            b = complex_D_tilde(k, S, l - 3, q, rows=list(range(l - 2)))
            _record(report, f"E eq7 k={k}", lhs, _face_set(a) | _face_set(b))
        for t in range(2, q - 1):
            for T in combinations(cols, t):
                lhs = set.intersection(*(e_l[i] for i in T))
                rhs = set()
                for i in cols:
                    if i not in T:
                        rhs |= _face_set(
                            complex_D_tilde(i, set(T), l - 2, q, rows=list(range(l - 1)))
                        )
                _record(report, f"E eq8 T={T}", lhs, rhs)
    return report
