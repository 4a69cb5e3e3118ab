from collections import defaultdict
from typing import Dict, Iterable, List, Set, Tuple, Type

import networkx as nx

from python_spin_crystal.checks.check_suite import CheckSuite, SuiteInputs
from python_spin_crystal.checks.suite_graph import SuiteGraph
from python_spin_crystal.core.cartan import ContentVector
from python_spin_crystal.core.crystal import (
    PartitionElement,
    e_tilde,
    verify_axioms,
)
from python_spin_crystal.core.crystal_graph import (
    generate,
    partition_to_canonical_path,
    path_to_partition,
)
from python_spin_crystal.core.exceptions import CheckSkipped, UnsupportedRangeError
from python_spin_crystal.core.partitions import (
    EMPTY,
    HStrictPartition,
    a_of,
    bar_core,
    bar_cores_all_orders,
    bar_weight,
    bar_weight_from_content,
    content,
    enumerate_h_strict,
    enumerate_restricted,
)
from python_spin_crystal.core.type_hints import ModuleType
from python_spin_crystal.reps.appendix import cross_check, load_appendix
from python_spin_crystal.reps.blocks import (
    block_size,
    blocks_of_degree,
    kac_check,
    type_from_content,
    type_S,
    type_W,
)
from python_spin_crystal.reps.branching import (
    basic_spin,
    jantzen_seitz_S,
    omega,
    restrict_S,
)


def _require_finite(inputs: SuiteInputs, what: str) -> None:
    if not inputs.ct.is_finite:
        raise CheckSkipped(f"{what} needs a finite h")


class AxiomSuite(CheckSuite):
    """Crystal axioms on every restricted partition up to max_n"""

    def __init__(self, name: str = "axioms"):
        super().__init__(name)

    def _run_suite(self, inputs: SuiteInputs) -> List[str]:
        elements = [
            PartitionElement(lam, inputs.ct)
            for n in range(inputs.max_n + 1)
            for lam in enumerate_restricted(n, inputs.ct)
        ]
        report = verify_axioms(elements, inputs.ct)
        self._logger.info(
            f"{report.checked} pairs checked, {report.skipped} f_tilde images "
            f"beyond degree {inputs.max_n}"
        )
        return [str(violation) for violation in report.violations]


class GraphSuite(CheckSuite):
    """The graph from [] is exactly the restricted partitions, and paths round-trip"""

    def __init__(self, name: str = "graph"):
        super().__init__(name)

    def _run_suite(self, inputs: SuiteInputs) -> List[str]:
        ct = inputs.ct
        graph = generate(ct, inputs.max_n)
        violations: List[str] = []
        for n in range(inputs.max_n + 1):
            reached = set(graph.layer(n))
            expected = set(enumerate_restricted(n, ct))
            if reached != expected:
                violations.append(
                    f"degree {n}: reached {len(reached)}, expected {len(expected)}; "
                    f"missing {sorted(map(str, expected - reached))}, "
                    f"extra {sorted(map(str, reached - expected))}"
                )
        reachable = nx.descendants(graph.graph, EMPTY) | {EMPTY}
        unreachable = set(graph.graph.nodes) - reachable
        if unreachable:
            violations.append(f"unreachable from []: {sorted(map(str, unreachable))}")
        for source, i, target in graph.edges():
            if e_tilde(target, ct, i) != source:
                violations.append(f"e_{i}{target} is not {source}")
        for lam in graph.nodes():
            path = partition_to_canonical_path(lam, ct)
            if len(path) != lam.degree or path_to_partition(path, ct) != lam:
                violations.append(f"canonical path {path} does not return to {lam}")
        return violations


class CoreSuite(CheckSuite):
    """Bar cores, bar weights and parities agree with the residue content"""

    def __init__(self, name: str = "cores"):
        super().__init__(name)

    def _run_suite(self, inputs: SuiteInputs) -> List[str]:
        ct = inputs.ct
        violations: List[str] = []
        for n in range(inputs.max_n + 1):
            cores_by_content: Dict[ContentVector, Set[HStrictPartition]] = defaultdict(
                set
            )
            for lam in enumerate_h_strict(n, ct):
                gamma = content(lam, ct)
                core = bar_core(lam, ct)
                cores_by_content[gamma].add(core)
                if bar_cores_all_orders(lam, ct) != frozenset({core}):
                    violations.append(f"{lam}: the bar core depends on removal order")
                weight = bar_weight(lam, ct)
                if ct.is_finite and bar_weight_from_content(gamma, ct) != weight:
                    violations.append(f"{lam}: bar weight disagrees with its content")
                nonzero_residues = sum(c for r, c in gamma.counts if r != 0)
                if a_of(lam, ct) % 2 != nonzero_residues % 2:
                    violations.append(f"{lam}: a(lam) has the wrong parity")
            all_cores: List[HStrictPartition] = []
            for gamma, cores in cores_by_content.items():
                if len(cores) != 1:
                    violations.append(f"content {gamma} has several cores {cores}")
                all_cores.extend(cores)
            if len(set(all_cores)) != len(all_cores):
                violations.append(f"degree {n}: one core shared by different contents")
            for lam in enumerate_restricted(n, ct):
                if type_W(lam, ct) != type_from_content(content(lam, ct)):
                    violations.append(f"{lam}: type_W disagrees with gamma_0 parity")
        return violations


class KacSuite(CheckSuite):
    """Block sizes: Kac's formula for finite h, singletons for h = inf"""

    def __init__(self, name: str = "kac"):
        super().__init__(name)

    def _run_suite(self, inputs: SuiteInputs) -> List[str]:
        ct = inputs.ct
        violations: List[str] = []
        for n in range(inputs.max_n + 1):
            layer = enumerate_restricted(n, ct)
            blocks = blocks_of_degree(n, ct)
            if sum(len(members) for members in blocks.values()) != len(layer):
                violations.append(f"degree {n}: blocks do not partition the layer")
            if ct.is_finite:
                report = kac_check(n, ct)
                violations.extend(
                    f"{lam}: block size {size}, Kac formula {expected}"
                    for lam, size, expected in report.mismatches
                )
            else:
                violations.extend(
                    f"{lam}: block of size {block_size(lam, ct)} without bars"
                    for lam in layer
                    if block_size(lam, ct) != 1
                )
        return violations


class FixtureSuite(CheckSuite):
    """Tabulated characters agree with the crystal"""

    def __init__(self, name: str = "fixtures"):
        super().__init__(name)

    def _run_suite(self, inputs: SuiteInputs) -> List[str]:
        _require_finite(inputs, "the character tables")
        report = cross_check(load_appendix(inputs.ct), inputs.ct, inputs.max_n)
        for flag in report.flags:
            self._logger.warning(flag)
        self._logger.info(
            f"{report.checked} entries, survivors per degree {report.survivors}"
        )
        return list(report.failures)


class SpinSuite(CheckSuite):
    """Basic spin labels and dimensions, parities, and Jantzen-Seitz restrictions"""

    def __init__(self, name: str = "spin"):
        super().__init__(name)

    def _run_suite(self, inputs: SuiteInputs) -> List[str]:
        _require_finite(inputs, "basic spin data")
        ct = inputs.ct
        violations: List[str] = []
        for n in range(1, inputs.max_n + 1):
            label = omega(n, ct)
            if label not in enumerate_restricted(n, ct):
                violations.append(f"omega_{n} = {label} is not restricted")
                continue
            report = basic_spin(n, ct)
            types = {report.type_S, report.clifford.type}
            k = 2 if types == {ModuleType.Q} else 1
            if report.dim_W * k != report.dim_S * report.clifford.dim:
                violations.append(
                    f"n={n}: dim W {report.dim_W}, dim S {report.dim_S} and Clifford "
                    f"dim {report.clifford.dim} do not match"
                )
            for lam in enumerate_restricted(n, ct):
                if (type_S(lam, ct) == type_W(lam, ct)) != (n % 2 == 0):
                    violations.append(f"{lam}: S- and W-types break the n parity rule")
                if jantzen_seitz_S(lam, ct):
                    pieces = restrict_S(lam, ct).pieces
                    if len(pieces) != 1 or not pieces[0].irreducible:
                        violations.append(f"{lam}: JS but restriction is {pieces}")
        return violations


SUITES: Dict[str, Type[CheckSuite]] = {
    "axioms": AxiomSuite,
    "graph": GraphSuite,
    "cores": CoreSuite,
    "kac": KacSuite,
    "fixtures": FixtureSuite,
    "spin": SpinSuite,
}

DEPENDENCIES: Tuple[Tuple[str, str], ...] = (
    ("graph", "axioms"),
    ("kac", "cores"),
    ("fixtures", "axioms"),
)

SUITE_CHOICES = tuple(SUITES) + ("all",)


def _with_prerequisites(names: Iterable[str]) -> Set[str]:
    selected = set(names)
    if "all" in selected:
        return set(SUITES)
    unknown = selected - set(SUITES)
    if unknown:
        raise UnsupportedRangeError(f"unknown suite(s) {sorted(unknown)}")
    while True:
        needed = {dep for suite, dep in DEPENDENCIES if suite in selected}
        if needed <= selected:
            return selected
        selected |= needed


def build_suite_graph(names: Iterable[str]) -> SuiteGraph:
    """Graph of the named suites plus everything they depend on"""
    selected = _with_prerequisites(names)
    suites = {name: SUITES[name]() for name in sorted(selected)}
    graph = SuiteGraph({})
    for suite in suites.values():
        graph += suite
    for name, dependency in DEPENDENCIES:
        if name in suites:
            graph = SuiteGraph.from_suite(suites[name]).depends_on(
                suites[dependency]
            ) + graph
    return graph
