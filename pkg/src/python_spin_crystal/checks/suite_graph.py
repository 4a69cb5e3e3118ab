from typing import Dict, Iterable, List, Set, Union

import networkx as nx

from python_spin_crystal.checks.check_suite import CheckSuite
from python_spin_crystal.core.exceptions import UnsupportedRangeError

Graph = Dict[CheckSuite, Set[CheckSuite]]
SuiteOrGraph = Union[CheckSuite, "SuiteGraph"]


def _format_suite(suite: CheckSuite, dependencies: Iterable[CheckSuite]) -> str:
    return f"{suite.name}: depends on: {sorted(d.name for d in dependencies)}"


class SuiteGraph:
    """
    A mapping of suite to every suite that must pass before it starts.
    Graphs are combined with +, and ordered with depends_on/is_depended_on_by, which
    both return the combined graph so calls can be chained.
    """

    def __init__(self, suite_graph: Graph):
        self.graph = {k: set(v) for k, v in suite_graph.items() if k}

    def __add__(self, other: SuiteOrGraph) -> "SuiteGraph":
        if isinstance(other, CheckSuite):
            other = SuiteGraph.from_suite(other)
        merged = {k: set(v) for k, v in self.graph.items()}
        for suite, dependencies in other.graph.items():
            merged.setdefault(suite, set()).update(dependencies)
        return SuiteGraph(merged)

    def __radd__(self, other: SuiteOrGraph) -> "SuiteGraph":
        return self.__add__(other)

    def __str__(self) -> str:
        return str([_format_suite(k, v) for k, v in self.graph.items()])

    def __len__(self) -> int:
        return len(self.graph)

    def __contains__(self, suite: object) -> bool:
        return suite in self.graph

    def suites(self) -> List[CheckSuite]:
        return list(self.graph)

    """
    Makes all suites in this graph depend on all suites within another graph, and
    adds the other graph to this graph.
    """

    def depends_on(self, other: SuiteOrGraph) -> "SuiteGraph":
        if isinstance(other, CheckSuite):
            other = SuiteGraph.from_suite(other)
        for _, dependencies in self.graph.items():
            dependencies.update(other.graph.keys())
        return self + other

    def is_depended_on_by(self, other: SuiteOrGraph) -> "SuiteGraph":
        if isinstance(other, CheckSuite):
            other = SuiteGraph.from_suite(other)
        return other.depends_on(self)

    def dependencies_of(self, suite: CheckSuite) -> Set[CheckSuite]:
        return set(self.graph.get(suite, set()))

    def to_networkx(self) -> nx.DiGraph:
        """Edges point from a prerequisite to the suite that needs it"""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.graph)
        for suite, dependencies in self.graph.items():
            graph.add_edges_from((dependency, suite) for dependency in dependencies)
        return graph

    def validate(self) -> None:
        graph = self.to_networkx()
        if not nx.is_directed_acyclic_graph(graph):
            cycle = [edge[0].name for edge in nx.find_cycle(graph)]
            raise UnsupportedRangeError(f"suite dependencies form a cycle: {cycle}")
        missing = set(graph.nodes) - set(self.graph)
        if missing:
            raise UnsupportedRangeError(
                f"suites depended on but not in the graph: {sorted(missing, key=str)}"
            )

    def execution_order(self) -> List[CheckSuite]:
        self.validate()
        return list(
            nx.lexicographical_topological_sort(
                self.to_networkx(), key=lambda suite: suite.name
            )
        )

    @staticmethod
    def from_suite(suite: CheckSuite) -> "SuiteGraph":
        return SuiteGraph({suite: set()})
