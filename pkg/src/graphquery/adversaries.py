"""Adaptive adversaries that answer membership queries while committing to nothing.

Each adversary keeps an auxiliary simple graph whose edges record "different
component" answers, plus a proper k-coloring whose color classes are, at
every moment, a real partition consistent with everything said so far. A
learner's final claim is audited by `declare`: the claim is *forced* only if
no second consistent partition exists, and otherwise the audit hands back
such a partition as a witness.

Three strategies are implemented:

- SeparabilityAdversary: the component count is public; answers "yes" only
  on pairs that every proper k-coloring of the auxiliary graph forces
  together (k-inseparable pairs).
- UnknownCountAdversary: the component count is fixed at construction but
  hidden from the learner; "yes" answers additionally accumulate in a second
  certificate graph whose components the audit inspects.
- ContractionAdversary: polynomial-time variant; instead of separability
  searches it recolors low-degree endpoints and contracts high-degree ones.
"""

from __future__ import annotations

from .coloring import Coloring, find_k_coloring, proper_partitions
from .graphs import ContractionMap, Graph, connected_components, normalize_edge
from .ledger import QueryLedger
from .oracles import AuditVerdict
from .partitions import Partition


def _validated_pair(x: int, y: int, n: int) -> tuple[int, int]:
    if not (0 <= x < n and 0 <= y < n):
        raise ValueError(f"vertices must lie in 0..{n - 1}")
    if x == y:
        raise ValueError("membership query needs two distinct vertices")
    return normalize_edge(x, y)


def _balanced_colors(n: int, k: int) -> tuple[int, ...]:
    return tuple(v % k + 1 for v in range(n))


class SeparabilityAdversary:
    """Answers for a hidden graph known to have exactly k components, 2 <= k <= n.

    Rules on a query (x, y):
      - different colors: record the edge, answer 0;
      - same color and the pair is k-separable in the auxiliary graph:
        record the edge, switch to a separating coloring, answer 0;
      - same color and inseparable: leave the graph alone, answer 1.

    Re-asking an edge answers 0 again and re-asking an inseparable pair
    answers 1 again; duplicates still count in the ledger.
    """

    variant = "separability"

    def __init__(self, n: int, k: int, initial_coloring=None, initial_edges=None):
        if not 2 <= k <= n:
            raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
        self.n = n
        self.k = k
        self.edges: set[tuple[int, int]] = set()
        if initial_edges:
            self.edges = {normalize_edge(u, v) for u, v in initial_edges}
        colors = tuple(initial_coloring) if initial_coloring else _balanced_colors(n, k)
        self.chi = Coloring(colors, k)
        if not self.chi.is_proper(self.graph_view()):
            raise ValueError("initial coloring is not proper on the initial edges")
        self.ledger = QueryLedger()

    def graph_view(self) -> Graph:
        return Graph(self.n, frozenset(self.edges))

    def chi_partition(self) -> Partition:
        return self.chi.classes()

    def membership_query(self, x: int, y: int) -> int:
        pair = _validated_pair(x, y, self.n)
        if pair in self.edges or self.chi.color_of(x) != self.chi.color_of(y):
            self.edges.add(pair)
            answer = 0
        else:
            separating = find_k_coloring(self.graph_view().with_edge(*pair), self.k)
            if separating is not None:
                self.edges.add(pair)
                self.chi = separating
                answer = 0
            else:
                answer = 1
        assert self.chi.is_proper(self.graph_view())
        self.ledger.append("alpha", (x, y), answer)
        return answer

    def declare(self, claimed: Partition) -> AuditVerdict:
        """Forced iff the auxiliary graph pins down a single consistent partition.

        The consistent partitions are exactly the proper color-class
        partitions of the auxiliary graph (pairs answered 1 are inseparable,
        so every such partition keeps them together automatically).
        """
        if claimed.n != self.n:
            raise ValueError("claimed partition is over the wrong vertex set")
        parts = proper_partitions(self.graph_view(), self.k, limit=2)
        if len(parts) == 1:
            if claimed == parts[0]:
                return AuditVerdict(True, None, "auxiliary graph has a unique consistent partition")
            return AuditVerdict(False, parts[0], "claim differs from the single consistent partition")
        witness = parts[0] if parts[0] != claimed else parts[1]
        return AuditVerdict(False, witness, "a second consistent partition exists")


class UnknownCountAdversary:
    """Variant for learners that do not know the component count.

    k is a construction parameter the learner never sees. Queries behave as
    in SeparabilityAdversary on the auxiliary graph, except inseparable pairs
    are answered 1 *and* recorded (once) in a certificate graph; the audit
    additionally requires the certificate components to match the claim. The
    coloring starts with every vertex colored 1.
    """

    variant = "unknown-count"

    def __init__(self, n: int, k: int):
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
        self.n = n
        self.k = k
        self.edges: set[tuple[int, int]] = set()
        self.forced_edges: set[tuple[int, int]] = set()
        self.chi = Coloring(tuple(1 for _ in range(n)), k)
        self.ledger = QueryLedger()

    def graph_view(self) -> Graph:
        return Graph(self.n, frozenset(self.edges))

    def forced_graph_view(self) -> Graph:
        return Graph(self.n, frozenset(self.forced_edges))

    def chi_partition(self) -> Partition:
        return self.chi.classes()

    def membership_query(self, x: int, y: int) -> int:
        pair = _validated_pair(x, y, self.n)
        if pair in self.edges or self.chi.color_of(x) != self.chi.color_of(y):
            self.edges.add(pair)
            answer = 0
        else:
            separating = find_k_coloring(self.graph_view().with_edge(*pair), self.k)
            if separating is not None:
                self.edges.add(pair)
                self.chi = separating
                answer = 0
            else:
                self.forced_edges.add(pair)
                answer = 1
        assert self.chi.is_proper(self.graph_view())
        self.ledger.append("alpha", (x, y), answer)
        return answer

    def declare(self, claimed: Partition) -> AuditVerdict:
        """Forced iff the claim is the only partition (of any block count) that fits.

        The certificate components always fit and refine every consistent
        partition, so the claim must equal them; the auxiliary graph must
        additionally admit no second proper partition.
        """
        if claimed.n != self.n:
            raise ValueError("claimed partition is over the wrong vertex set")
        certificate = connected_components(self.forced_graph_view())
        if certificate != claimed:
            return AuditVerdict(
                False, certificate, "certificate components form a consistent refinement"
            )
        parts = proper_partitions(self.graph_view(), self.k, limit=2)
        if len(parts) >= 2:
            witness = parts[0] if parts[0] != claimed else parts[1]
            return AuditVerdict(False, witness, "a second consistent partition exists")
        if parts[0] != claimed:
            return AuditVerdict(False, parts[0], "claim differs from the single consistent partition")
        return AuditVerdict(True, None, "certificate components and auxiliary graph agree")


class ContractionAdversary:
    """Polynomial-time adversary: no coloring search, only degree bookkeeping.

    Works on the contracted auxiliary graph. A vertex is *big* when its
    degree in the current simple quotient is at least k-1, else *small*. On a
    same-colored query, a small endpoint (the first argument when both are
    small) is recolored to another admissible color; when both endpoints are
    big they are contracted and the answer is 1.
    """

    variant = "contraction"

    def __init__(self, n: int, k: int, initial_coloring=None, initial_edges=None):
        if not 2 <= k <= n:
            raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
        self.n = n
        self.k = k
        self.contraction = ContractionMap(n)
        self.adj: dict[int, set[int]] = {v: set() for v in range(n)}
        if initial_edges:
            for u, v in initial_edges:
                a, b = normalize_edge(u, v)
                self.adj[a].add(b)
                self.adj[b].add(a)
        colors = list(initial_coloring) if initial_coloring else list(_balanced_colors(n, k))
        self.color: dict[int, int] = {v: colors[v] for v in range(n)}
        for v, nbrs in self.adj.items():
            if any(self.color[v] == self.color[u] for u in nbrs):
                raise ValueError("initial coloring is not proper on the initial edges")
        self.ledger = QueryLedger()

    def _rep(self, v: int) -> int:
        return self.contraction.find(v)

    def _is_big(self, rep: int) -> bool:
        return len(self.adj[rep]) >= self.k - 1

    def _recolor(self, rep: int, avoid: int) -> None:
        blocked = {self.color[u] for u in self.adj[rep]}
        blocked.add(avoid)
        for c in range(1, self.k + 1):
            if c not in blocked:
                self.color[rep] = c
                return
        raise AssertionError("small vertex lost all admissible colors")

    def _add_edge(self, a: int, b: int) -> None:
        self.adj[a].add(b)
        self.adj[b].add(a)

    def _contract(self, a: int, b: int) -> None:
        root = self.contraction.union(a, b)
        gone = b if root == a else a
        for u in self.adj[gone]:
            self.adj[u].discard(gone)
            if u != root:
                self.adj[u].add(root)
                self.adj[root].add(u)
        self.adj[root].discard(root)
        self.adj[root].discard(gone)
        del self.adj[gone]
        del self.color[gone]

    def membership_query(self, x: int, y: int) -> int:
        _validated_pair(x, y, self.n)
        rx, ry = self._rep(x), self._rep(y)
        if rx == ry:
            raise ValueError(f"vertices {x} and {y} are already identified")
        if self.color[rx] != self.color[ry]:
            self._add_edge(rx, ry)
            answer = 0
        elif not self._is_big(rx):
            self._recolor(rx, avoid=self.color[ry])
            self._add_edge(rx, ry)
            answer = 0
        elif not self._is_big(ry):
            self._recolor(ry, avoid=self.color[rx])
            self._add_edge(rx, ry)
            answer = 0
        else:
            self._contract(rx, ry)
            answer = 1
        self.ledger.append("alpha", (x, y), answer)
        return answer

    def quotient_view(self) -> Graph:
        """Current contracted auxiliary graph with reps relabeled densely."""
        reps = self.contraction.representatives()
        index = {rep: i for i, rep in enumerate(reps)}
        edges = {
            (min(index[a], index[b]), max(index[a], index[b]))
            for a in reps
            for b in self.adj[a]
        }
        return Graph(len(reps), frozenset(edges))

    def chi_partition(self) -> Partition:
        """Color classes lifted through the contraction map to original labels."""
        blocks: dict[int, list[int]] = {}
        for v in range(self.n):
            blocks.setdefault(self.color[self._rep(v)], []).append(v)
        return Partition.from_blocks(blocks.values())

    def declare(self, claimed: Partition) -> AuditVerdict:
        if claimed.n != self.n:
            raise ValueError("claimed partition is over the wrong vertex set")
        reps = self.contraction.representatives()
        quotient = self.quotient_view()
        parts = proper_partitions(quotient, self.k, limit=2)

        def lift(p: Partition) -> Partition:
            blocks = []
            for block in p.blocks:
                members = []
                for idx in block:
                    rep = reps[idx]
                    members.extend(
                        v for v in range(self.n) if self._rep(v) == rep
                    )
                blocks.append(members)
            return Partition.from_blocks(blocks)

        if len(parts) == 1:
            unique = lift(parts[0])
            if claimed == unique:
                return AuditVerdict(True, None, "contracted graph has a unique consistent partition")
            return AuditVerdict(False, unique, "claim differs from the single consistent partition")
        w0, w1 = lift(parts[0]), lift(parts[1])
        witness = w0 if w0 != claimed else w1
        return AuditVerdict(False, witness, "a second consistent partition exists")
