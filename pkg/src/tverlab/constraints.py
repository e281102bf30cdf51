"""Constraint graphs: avoidance, admissible families, witness search.

A constraint graph forbids same-block pairs; a partition avoids it when no
block contains both endpoints of any edge.  The admissible families (for
prime-power q > 2) are complete graphs K_l with 2l < q+2, stars K_{1,l}
with l < q-1, paths P_l (l+1 vertices) with l <= (d+1)(q-1) and q > 3,
cycles C_l with l <= (d+1)(q-1)+1 and q > 4, and vertex-disjoint unions of
those.
"""

from dataclasses import dataclass, field

from .errors import Degenerate, InvalidParameters, LabelMismatch, NotPrimePower
from .geometry import PointConfiguration, common_point, points_in_general_position
from .partitions import enumerate_candidate_partitions
from .rng import SplitMix64
from .tverberg import is_prime_power, is_tverberg

WITNESS_COORD_BOUND = 1 << 10
SAMPLE_COORD_BOUND = 1 << 20


@dataclass(frozen=True)
class ConstraintGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        norm = frozenset(tuple(sorted(e)) for e in self.edges)
        object.__setattr__(self, "edges", norm)
        for a, b in norm:
            if a == b:
                raise InvalidParameters(f"loop edge ({a},{b})")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InvalidParameters(f"edge ({a},{b}) outside 0..{self.n - 1}")


def avoids(partition, graph: ConstraintGraph) -> bool:
    """True iff no block contains both endpoints of any edge."""
    labels = {x for blk in partition for x in blk}
    if any(a not in labels or b not in labels for a, b in graph.edges):
        raise LabelMismatch("graph edge endpoints outside the partition labels")
    for blk in partition:
        s = set(blk)
        for a, b in graph.edges:
            if a in s and b in s:
                return False
    return True


# ---------------------------------------------------------------------------
# Family specs (the constructive descriptions the recognition works on)

@dataclass(frozen=True)
class CompleteK:
    l: int  # noqa: E741 - parameter name mirrors K_l

    def vertex_count(self):
        return self.l

    def edges_on(self, vertices):
        return [(vertices[i], vertices[j]) for i in range(self.l) for j in range(i + 1, self.l)]


@dataclass(frozen=True)
class Star:
    l: int  # noqa: E741 - K_{1,l}, center plus l leaves

    def vertex_count(self):
        return self.l + 1

    def edges_on(self, vertices):
        return [(vertices[0], v) for v in vertices[1:]]


@dataclass(frozen=True)
class Path:
    l: int  # noqa: E741 - P_l on l+1 vertices

    def vertex_count(self):
        return self.l + 1

    def edges_on(self, vertices):
        return list(zip(vertices, vertices[1:]))


@dataclass(frozen=True)
class Cycle:
    l: int  # noqa: E741 - C_l on l vertices

    def vertex_count(self):
        return self.l

    def edges_on(self, vertices):
        return list(zip(vertices, vertices[1:])) + [(vertices[-1], vertices[0])]


@dataclass(frozen=True)
class DisjointUnion:
    parts: tuple

    def vertex_count(self):
        return sum(p.vertex_count() for p in self.parts)

    def edges_on(self, vertices):
        edges = []
        off = 0
        for p in self.parts:
            edges.extend(p.edges_on(vertices[off : off + p.vertex_count()]))
            off += p.vertex_count()
        return edges


def _component_admissible(spec, q, d):
    n_labels = (d + 1) * (q - 1) + 1
    if isinstance(spec, CompleteK):
        return spec.l >= 2 and 2 * spec.l < q + 2
    if isinstance(spec, Star):
        return spec.l >= 1 and spec.l < q - 1
    if isinstance(spec, Path):
        return spec.l >= 1 and spec.l <= n_labels - 1 and q > 3
    if isinstance(spec, Cycle):
        return spec.l >= 3 and spec.l <= n_labels and q > 4
    raise InvalidParameters(f"not a family component: {spec!r}")


def family_admissible(spec, q, d) -> bool:
    """Is this family instance a known constraint graph for (q, d)?

    Requires q > 2 and q a prime power (the hypothesis of the family list);
    raises NotPrimePower otherwise.
    """
    if q <= 2 or not is_prime_power(q):
        raise NotPrimePower(f"q={q} is not a prime power > 2")
    if any(p <= 0 for p in _int_params(spec)):
        raise InvalidParameters("family parameters must be positive")
    if isinstance(spec, DisjointUnion):
        if spec.vertex_count() > (d + 1) * (q - 1) + 1:
            return False
        return all(_component_admissible(p, q, d) for p in spec.parts)
    return _component_admissible(spec, q, d)


def _int_params(spec):
    if isinstance(spec, DisjointUnion):
        return [p for part in spec.parts for p in _int_params(part)]
    return [spec.l]


def instantiate(spec, n, vertices=None) -> ConstraintGraph:
    """Constraint graph of a family spec on explicit vertex labels
    (defaults to 0, 1, 2, ...)."""
    count = spec.vertex_count()
    if vertices is None:
        vertices = list(range(count))
    if len(vertices) != count or len(set(vertices)) != count:
        raise InvalidParameters("need distinct vertices, one per family slot")
    return ConstraintGraph(n, frozenset(spec.edges_on(list(vertices))))


def recognize_component(vertices, edges):
    """Match one connected component against the family shapes; None when
    no shape fits (the families do not exhaust all constraint graphs)."""
    n = len(vertices)
    m = len(edges)
    deg = {v: 0 for v in vertices}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    degs = sorted(deg.values(), reverse=True)
    if m == n * (n - 1) // 2 and n >= 2 and (n < 3 or degs[0] == n - 1):
        return CompleteK(n)
    if m == n and all(x == 2 for x in degs) and n >= 3:
        return Cycle(n)
    if m == n - 1 and degs[0] == m and n >= 3:
        return Star(m)
    if m == n - 1 and degs.count(1) == 2 and all(x <= 2 for x in degs):
        return Path(m)
    return None


def decompose(graph: ConstraintGraph):
    """Connected components of the graph's support, with a recognized
    family spec (or None) per component."""
    adj = {}
    for a, b in graph.edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    seen = set()
    out = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comp = sorted(comp)
        comp_edges = [e for e in graph.edges if e[0] in comp]
        out.append((comp, recognize_component(comp, comp_edges)))
    return out


# ---------------------------------------------------------------------------

def constrained_records(config: PointConfiguration, graph: ConstraintGraph, records=None):
    """Tverberg records whose partitions avoid the constraint graph."""
    from .tverberg import tverberg_records

    if records is None:
        records = tverberg_records(config)
    return [r for r in records if avoids(r.partition, graph)]


def deleted_edges_k3q2(q):
    """The q-1 deleted edges {1, 3q-2-2i} of the K_{3q-2} example, on
    vertex labels 1..3q-2."""
    if q < 2:
        raise InvalidParameters("q >= 2 required")
    return [(1, 3 * q - 2 - 2 * i) for i in range(q - 1)]


def sample_configuration(d, q, rng: SplitMix64, coord_bound=SAMPLE_COORD_BOUND):
    """Draw integer-coordinate points until effective general position holds."""
    n = (d + 1) * (q - 1) + 1
    while True:
        pts = tuple(
            tuple(rng.randint(-coord_bound, coord_bound) for _ in range(d)) for _ in range(n)
        )
        if points_in_general_position(pts, d):
            return PointConfiguration(d, q, pts)


def witness_search(q, d, graph: ConstraintGraph, seed, budget):
    """Search for a configuration with no avoiding Tverberg partition.

    Deterministic given the seed.  A returned witness has been re-verified
    by an independent full enumeration with exact LP hull-intersection
    tests.  Samples whose classification hits a degeneracy are skipped
    (they still consume budget).
    """
    if budget < 1:
        return None
    rng = SplitMix64(seed)
    n = (d + 1) * (q - 1) + 1
    candidates = [
        p for p in enumerate_candidate_partitions(n, q, d) if avoids(p, graph)
    ]
    for _ in range(budget):
        config = sample_configuration(d, q, rng, WITNESS_COORD_BOUND)
        try:
            if any(is_tverberg(p, config) is not None for p in candidates):
                continue
        except Degenerate:
            continue
        if _verify_witness(config, candidates):
            return config
    return None


def _verify_witness(config, avoiding_candidates):
    """Independent re-check: no avoiding candidate has intersecting hulls."""
    for partition in avoiding_candidates:
        blocks = [[config.points[i] for i in blk] for blk in partition]
        if common_point(blocks, config.d) is not None:
            return False
    return True
