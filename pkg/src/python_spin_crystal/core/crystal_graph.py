import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx

from python_spin_crystal.core.cartan import CartanType, ContentVector, relevant_residues
from python_spin_crystal.core.crystal import e_tilde, eps, f_tilde, phi
from python_spin_crystal.core.exceptions import InvalidPartitionError
from python_spin_crystal.core.partitions import (
    EMPTY,
    HStrictPartition,
    b_of,
    content,
    is_h_strict,
    is_restricted,
)
from python_spin_crystal.core.type_hints import ModuleType, Residue, ResidueWord

BASE_LOGGER = logging.getLogger(__name__)

PathLabel = ResidueWord
Edge = Tuple[HStrictPartition, Residue, HStrictPartition]


@dataclass(frozen=True)
class NodeStatistics:
    degree: int
    content: ContentVector
    eps: Tuple[int, ...]
    phi: Tuple[int, ...]
    type: ModuleType


def _node_key(lam: HStrictPartition) -> Tuple[int, Tuple[int, ...]]:
    return lam.degree, lam.parts


def node_statistics(
    lam: HStrictPartition, ct: CartanType, residues: Sequence[Residue]
) -> NodeStatistics:
    return NodeStatistics(
        degree=lam.degree,
        content=content(lam, ct),
        eps=tuple(eps(lam, ct, i) for i in residues),
        phi=tuple(phi(lam, ct, i) for i in residues),
        type=ModuleType.from_parity(b_of(lam, ct)),
    )


class CrystalGraph:
    """
    The crystal graph of B(Lambda_0) up to a given degree, held as a networkx DiGraph
    whose nodes are partitions (with their NodeStatistics under "stats") and whose
    edges carry the residue under "label".
    The graph is not modified after generate() returns.
    """

    def __init__(self, ct: CartanType, max_n: int, graph: nx.DiGraph):
        self._ct = ct
        self._max_n = max_n
        self._graph = graph

    @property
    def ct(self) -> CartanType:
        return self._ct

    @property
    def max_n(self) -> int:
        return self._max_n

    @property
    def graph(self) -> nx.DiGraph:
        return self._graph

    @property
    def residues(self) -> range:
        return relevant_residues(self._ct, self._max_n)

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def __contains__(self, lam: object) -> bool:
        return lam in self._graph

    def nodes(self) -> List[HStrictPartition]:
        """Degree by degree, and lexicographically on parts within a degree"""
        return sorted(self._graph.nodes, key=_node_key)

    def edges(self) -> List[Edge]:
        edges = [
            (src, data["label"], dst) for src, dst, data in self._graph.edges(data=True)
        ]
        return sorted(edges, key=lambda e: (_node_key(e[0]), e[1]))

    def layer(self, n: int) -> List[HStrictPartition]:
        return sorted(lam for lam in self._graph.nodes if lam.degree == n)

    @property
    def layers(self) -> List[List[HStrictPartition]]:
        return [self.layer(n) for n in range(self._max_n + 1)]

    def statistics(self, lam: HStrictPartition) -> NodeStatistics:
        return self._graph.nodes[lam]["stats"]

    def successor(
        self, lam: HStrictPartition, i: Residue
    ) -> Optional[HStrictPartition]:
        for target in self._graph.successors(lam):
            if self._graph.edges[lam, target]["label"] == i:
                return target
        return None

    def predecessor(
        self, lam: HStrictPartition, i: Residue
    ) -> Optional[HStrictPartition]:
        for source in self._graph.predecessors(lam):
            if self._graph.edges[source, lam]["label"] == i:
                return source
        return None


def generate(ct: CartanType, max_n: int) -> CrystalGraph:
    """Breadth-first closure of the empty partition under the f_tilde_i"""
    logger = BASE_LOGGER.getChild("generate")
    residues = relevant_residues(ct, max_n)
    graph = nx.DiGraph()
    graph.add_node(EMPTY, stats=node_statistics(EMPTY, ct, residues))
    layer: List[HStrictPartition] = [EMPTY]
    for n in range(max_n):
        following: Set[HStrictPartition] = set()
        for lam in layer:
            for i in residues:
                target = f_tilde(lam, ct, i)
                if target is None:
                    continue
                if not is_restricted(target, ct):
                    logger.warning(f"f_{i}{lam} = {target} is not restricted, dropped")
                    continue
                if target not in graph:
                    graph.add_node(target, stats=node_statistics(target, ct, residues))
                graph.add_edge(lam, target, label=i)
                following.add(target)
        layer = sorted(following)
        logger.debug(f"{ct} layer {n + 1}: {len(layer)} partitions")
    logger.info(f"Generated {graph.number_of_nodes()} nodes for {ct} up to {max_n}")
    return CrystalGraph(ct, max_n, graph)


def path_to_partition(label: PathLabel, ct: CartanType) -> Optional[HStrictPartition]:
    lam: Optional[HStrictPartition] = EMPTY
    for i in label:
        lam = f_tilde(lam, ct, i)
        if lam is None or not is_restricted(lam, ct):
            return None
    return lam


def partition_to_canonical_path(lam: HStrictPartition, ct: CartanType) -> PathLabel:
    """
    Applies e_tilde_i for the smallest i with eps_i > 0 until the empty partition is
    reached, and reads the residues backwards.
    """
    if not is_h_strict(lam, ct) or not is_restricted(lam, ct):
        raise InvalidPartitionError(f"{lam} is not a restricted partition for {ct}")
    word: List[Residue] = []
    current: Optional[HStrictPartition] = lam
    while current:
        for i in relevant_residues(ct, current.degree):
            if eps(current, ct, i) > 0:
                word.append(i)
                current = e_tilde(current, ct, i)
                break
        else:
            raise InvalidPartitionError(f"{current} is not reachable from []")
    return tuple(reversed(word))


def export_dot(graph: CrystalGraph) -> str:
    """Lists nodes and edges in the degree-major order of CrystalGraph.nodes"""
    lines = ["digraph crystal {", f'  label="B(Lambda_0), {graph.ct}";']
    for lam in graph.nodes():
        lines.append(f'  "{lam}";')
    for source, i, target in graph.edges():
        lines.append(f'  "{source}" -> "{target}" [label={i}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _node_json(lam: HStrictPartition, stats: NodeStatistics) -> Dict[str, Any]:
    return {
        "partition": lam.to_json(),
        "degree": stats.degree,
        "content": {str(r): c for r, c in stats.content.counts},
        "eps": list(stats.eps),
        "phi": list(stats.phi),
        "type": stats.type.value,
    }


def graph_payload(graph: CrystalGraph) -> Dict[str, Any]:
    return {
        "h": int(graph.ct.h) if graph.ct.is_finite else "inf",
        "max_n": graph.max_n,
        "nodes": [_node_json(lam, graph.statistics(lam)) for lam in graph.nodes()],
        "edges": [
            {"from": source.to_json(), "label": i, "to": target.to_json()}
            for source, i, target in graph.edges()
        ],
    }


def export_json(graph: CrystalGraph) -> str:
    """Same node and edge order as export_dot"""
    return json.dumps(graph_payload(graph), indent=2) + "\n"
