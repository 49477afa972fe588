"""Combinational gate-level netlists: construction, validation, evaluation,
and static analysis.

The model is a DAG of single-output boolean gates connected by nets. Buses
are named, ordered lists of nets, LSB first. A finalized ``Netlist`` is
immutable and safe to share across threads; ``evaluate`` is a pure function
of its input assignment.

Cost model: every gate costs one delay unit and one unit of area, wires are
free. ``critical_path_depth`` and ``gate_counts`` report those two metrics.
"""

from __future__ import annotations

import enum
import heapq
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import _engine
from .bitvec import BitVector


class NetlistError(ValueError):
    """Raised for structural violations: bad arity, unknown nets, duplicate
    drivers, combinational cycles, floating outputs."""


class GateKind(enum.Enum):
    AND = "AND"
    OR = "OR"
    XOR = "XOR"
    NOT = "NOT"
    NAND = "NAND"
    NOR = "NOR"
    XNOR = "XNOR"

    @property
    def arity(self) -> int:
        return 1 if self is GateKind.NOT else 2


# Opcode protocol shared with the evaluation kernels.
_OPCODE = {
    GateKind.AND: 0,
    GateKind.OR: 1,
    GateKind.XOR: 2,
    GateKind.NOT: 3,
    GateKind.NAND: 4,
    GateKind.NOR: 5,
    GateKind.XNOR: 6,
}

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def as_gate_kind(kind: GateKind | str) -> GateKind:
    if isinstance(kind, GateKind):
        return kind
    try:
        return GateKind[str(kind).upper()]
    except KeyError:
        raise NetlistError(f"unknown gate kind {kind!r}") from None


@dataclass(frozen=True)
class Net:
    """A single wire, driven by exactly one source."""

    id: int
    name: str | None = None


@dataclass(frozen=True)
class Gate:
    id: int
    kind: GateKind
    inputs: tuple[int, ...]
    output: int


class GateCounts(NamedTuple):
    by_kind: dict[str, int]
    total: int


def _check_bus_name(name: str) -> str:
    if not _NAME_RE.match(name):
        raise NetlistError(f"invalid bus name {name!r}")
    return name


class Netlist:
    """An immutable, validated combinational netlist.

    Construct through :class:`NetlistBuilder` or :func:`vedicfft.netio.parse_netlist`.
    """

    def __init__(
        self,
        name: str,
        nets: Mapping[int, Net],
        inputs: Mapping[str, Sequence[int]],
        outputs: Mapping[str, Sequence[int]],
        gates: Iterable[Gate],
        consts: Mapping[int, int],
    ):
        self.name = name
        self.nets: dict[int, Net] = dict(nets)
        self.inputs: dict[str, tuple[int, ...]] = {b: tuple(n) for b, n in inputs.items()}
        self.outputs: dict[str, tuple[int, ...]] = {b: tuple(n) for b, n in outputs.items()}
        self.gates: tuple[Gate, ...] = tuple(sorted(gates, key=lambda g: g.id))
        self.consts: dict[int, int] = dict(consts)  # constant bit value -> net id
        self._order = self._validate()
        self._program = self._compile()
        self._buffers: dict[str, tuple] = {}
        self._depth: int | None = None
        self._counts: GateCounts | None = None

    # -- validation ---------------------------------------------------------

    def _validate(self) -> tuple[Gate, ...]:
        if not _NAME_RE.match(self.name):
            raise NetlistError(f"invalid netlist name {self.name!r}")
        drivers: dict[int, str] = {}

        def claim(net: int, source: str):
            if net not in self.nets:
                raise NetlistError(f"{source} drives unknown net {net}")
            if net in drivers:
                raise NetlistError(
                    f"net {net} has two drivers: {drivers[net]} and {source}"
                )
            drivers[net] = source

        for bus in list(self.inputs) + list(self.outputs):
            _check_bus_name(bus)
        for bus, nets in self.inputs.items():
            if not nets:
                raise NetlistError(f"input bus {bus} has zero width")
            for k, n in enumerate(nets):
                claim(n, f"input {bus}[{k}]")
        for value, n in self.consts.items():
            if value not in (0, 1):
                raise NetlistError(f"constant value must be 0 or 1, got {value}")
            claim(n, f"const{value}")

        gate_ids = set()
        for gate in self.gates:
            if gate.id in gate_ids:
                raise NetlistError(f"duplicate gate id {gate.id}")
            gate_ids.add(gate.id)
            if len(gate.inputs) != gate.kind.arity:
                raise NetlistError(
                    f"gate {gate.id} ({gate.kind.value}) takes {gate.kind.arity} "
                    f"inputs, got {len(gate.inputs)}"
                )
            for n in gate.inputs:
                if n not in self.nets:
                    raise NetlistError(f"gate {gate.id} reads unknown net {n}")
            claim(gate.output, f"gate {gate.id}")

        for gate in self.gates:
            for n in gate.inputs:
                if n not in drivers:
                    raise NetlistError(f"gate {gate.id} reads undriven net {n}")
        for bus, nets in self.outputs.items():
            if not nets:
                raise NetlistError(f"output bus {bus} has zero width")
            for k, n in enumerate(nets):
                if n not in self.nets:
                    raise NetlistError(f"output {bus}[{k}] is unknown net {n}")
                if n not in drivers:
                    raise NetlistError(f"floating output bit {bus}[{k}] (net {n})")

        # Kahn's algorithm over gates; ready ties broken by ascending gate id
        # so evaluation order is reproducible.
        producer = {g.output: g for g in self.gates}
        pending = {g.id: sum(1 for n in g.inputs if n in producer) for g in self.gates}
        ready = [g.id for g in self.gates if pending[g.id] == 0]
        heapq.heapify(ready)
        consumers: dict[int, list[Gate]] = {}
        for g in self.gates:
            for n in g.inputs:
                if n in producer:
                    consumers.setdefault(n, []).append(g)
        order: list[Gate] = []
        by_id = {g.id: g for g in self.gates}
        while ready:
            g = by_id[heapq.heappop(ready)]
            order.append(g)
            for consumer in consumers.get(g.output, ()):
                pending[consumer.id] -= 1
                if pending[consumer.id] == 0:
                    heapq.heappush(ready, consumer.id)
        if len(order) != len(self.gates):
            stuck = sorted(gid for gid, deg in pending.items() if deg > 0)
            raise NetlistError(f"combinational cycle through gates {stuck}")
        return tuple(order)

    # -- evaluation ---------------------------------------------------------

    def _compile(self):
        slot = {nid: i for i, nid in enumerate(sorted(self.nets))}
        base = [0] * len(slot)
        for value, nid in self.consts.items():
            base[slot[nid]] = value
        ops = [_OPCODE[g.kind] for g in self._order]
        in0 = [slot[g.inputs[0]] for g in self._order]
        in1 = [slot[g.inputs[-1]] for g in self._order]  # NOT: duplicate in0
        outs = [slot[g.output] for g in self._order]
        in_slots = {b: [slot[n] for n in nets] for b, nets in self.inputs.items()}
        out_slots = {b: [slot[n] for n in nets] for b, nets in self.outputs.items()}
        return ops, in0, in1, outs, base, in_slots, out_slots

    def _backend_buffers(self, backend: str):
        got = self._buffers.get(backend)
        if got is None:
            ops, in0, in1, outs, base, _, _ = self._program
            if backend == "compiled":
                import numpy as np

                got = (
                    np.array(ops, dtype=np.int8),
                    np.array(in0, dtype=np.int32),
                    np.array(in1, dtype=np.int32),
                    np.array(outs, dtype=np.int32),
                    np.array(base, dtype=np.uint8),
                )
            else:
                got = (ops, in0, in1, outs, base)
            self._buffers[backend] = got
        return got

    def evaluate(self, assignments: Mapping[str, BitVector]) -> dict[str, BitVector]:
        """Compute all output buses for one input assignment.

        Every input bus must be assigned a :class:`BitVector` of exactly its
        width. Deterministic and side-effect free.
        """
        return self.evaluate_with(_engine.BACKEND, assignments)

    def evaluate_with(self, backend: str, assignments: Mapping[str, BitVector]):
        """Like :meth:`evaluate` but on a named kernel from ``_engine.KERNELS``.

        Lets tests and benchmarks compare the pure-Python and compiled
        kernels side by side regardless of which one import selected.
        """
        if backend not in _engine.KERNELS:
            raise NetlistError(
                f"unknown backend {backend!r}; available: {sorted(_engine.KERNELS)}"
            )
        in_slots = self._program[5]
        out_slots = self._program[6]
        missing = set(self.inputs) - set(assignments)
        if missing:
            raise NetlistError(f"missing input buses: {sorted(missing)}")
        extra = set(assignments) - set(self.inputs)
        if extra:
            raise NetlistError(f"unknown input buses: {sorted(extra)}")
        ops, in0, in1, outs, base = self._backend_buffers(backend)
        values = base.copy()
        for bus, bv in assignments.items():
            if not isinstance(bv, BitVector):
                raise NetlistError(f"input {bus} must be a BitVector, got {type(bv).__name__}")
            slots = in_slots[bus]
            if bv.width != len(slots):
                raise NetlistError(
                    f"input {bus} is {len(slots)} bits wide, got {bv.width}"
                )
            for s, bit in zip(slots, bv.bits):
                values[s] = bit
        _engine.KERNELS[backend](ops, in0, in1, outs, values)
        return {
            bus: BitVector(tuple(int(values[s]) for s in slots))
            for bus, slots in out_slots.items()
        }

    # -- static analysis ----------------------------------------------------

    def critical_path_depth(self) -> int:
        """Gate count along the longest input-to-output path (unit delays)."""
        if self._depth is None:
            depth = dict.fromkeys(self.nets, 0)
            for gate in self._order:
                depth[gate.output] = 1 + max(depth[n] for n in gate.inputs)
            out_nets = {n for nets in self.outputs.values() for n in nets}
            self._depth = max((depth[n] for n in out_nets), default=0)
        return self._depth

    def gate_counts(self) -> GateCounts:
        """Census of gates by kind; the total is the area metric."""
        if self._counts is None:
            by_kind: dict[str, int] = {}
            for gate in self.gates:
                by_kind[gate.kind.value] = by_kind.get(gate.kind.value, 0) + 1
            self._counts = GateCounts(by_kind, len(self.gates))
        return self._counts

    def input_width(self, bus: str) -> int:
        return len(self.inputs[bus])

    def output_width(self, bus: str) -> int:
        return len(self.outputs[bus])

    def __repr__(self) -> str:
        return (
            f"Netlist({self.name!r}, inputs={list(self.inputs)}, "
            f"outputs={list(self.outputs)}, gates={len(self.gates)})"
        )


class NetlistBuilder:
    """Single-owner accumulator for a netlist. Not shareable across threads;
    unusable after :meth:`finalize`."""

    def __init__(self, name: str):
        self.name = name
        self._nets: dict[int, Net] = {}
        self._inputs: dict[str, tuple[int, ...]] = {}
        self._outputs: dict[str, list[int]] = {}
        self._gates: list[Gate] = []
        self._consts: dict[int, int] = {}
        self._driven: set[int] = set()
        self._next_net = 0
        self._done = False

    def _check_open(self):
        if self._done:
            raise NetlistError("builder already finalized")

    def _new_net(self, name: str | None = None) -> int:
        nid = self._next_net
        self._next_net += 1
        self._nets[nid] = Net(nid, name)
        return nid

    def new_net(self, name: str | None = None) -> int:
        """Create a floating net to be driven by a later gate (forward
        reference). It must be driven before finalize."""
        self._check_open()
        return self._new_net(name)

    def add_input(self, name: str, width: int) -> list[int]:
        self._check_open()
        _check_bus_name(name)
        if width < 1:
            raise NetlistError(f"input bus {name} must be at least 1 bit wide")
        if name in self._inputs or name in self._outputs:
            raise NetlistError(f"duplicate bus name {name}")
        nets = [self._new_net(f"{name}[{k}]") for k in range(width)]
        self._driven.update(nets)
        self._inputs[name] = tuple(nets)
        return nets

    def const(self, value: int) -> int:
        """Net tied to constant 0 or 1 (created on first use)."""
        self._check_open()
        if value not in (0, 1):
            raise NetlistError(f"constant must be 0 or 1, got {value}")
        if value not in self._consts:
            nid = self._new_net(f"const{value}")
            self._consts[value] = nid
            self._driven.add(nid)
        return self._consts[value]

    def add_gate(
        self,
        kind: GateKind | str,
        inputs: Sequence[int],
        output: int | None = None,
    ) -> int:
        """Append a gate; returns its output net.

        By default a fresh net is created for the output. Passing ``output``
        ties the gate to a floating net from :meth:`new_net` instead.
        """
        self._check_open()
        kind = as_gate_kind(kind)
        inputs = tuple(inputs)
        if len(inputs) != kind.arity:
            raise NetlistError(
                f"{kind.value} takes {kind.arity} input(s), got {len(inputs)}"
            )
        for n in inputs:
            if n not in self._nets:
                raise NetlistError(f"unknown input net {n}")
        if output is None:
            output = self._new_net()
        else:
            if output not in self._nets:
                raise NetlistError(f"unknown output net {output}")
            if output in self._driven:
                raise NetlistError(f"net {output} already has a driver")
        self._driven.add(output)
        self._gates.append(Gate(len(self._gates), kind, inputs, output))
        return output

    def set_output(self, name: str, nets: Sequence[int]):
        self._check_open()
        _check_bus_name(name)
        if name in self._outputs or name in self._inputs:
            raise NetlistError(f"duplicate bus name {name}")
        nets = list(nets)
        if not nets:
            raise NetlistError(f"output bus {name} must be at least 1 bit wide")
        for n in nets:
            if n not in self._nets:
                raise NetlistError(f"unknown net {n} in output bus {name}")
        self._outputs[name] = nets

    def instantiate(
        self, sub: Netlist, connections: Mapping[str, Sequence[int]]
    ) -> dict[str, list[int]]:
        """Copy a finalized netlist into this builder as a sub-block.

        ``connections`` maps each of ``sub``'s input buses to parent nets of
        the same width. Returns the parent nets of ``sub``'s output buses.
        Gates are copied one-for-one; constants are shared.
        """
        self._check_open()
        missing = set(sub.inputs) - set(connections)
        if missing:
            raise NetlistError(f"unconnected sub-netlist inputs: {sorted(missing)}")
        extra = set(connections) - set(sub.inputs)
        if extra:
            raise NetlistError(f"unknown sub-netlist inputs: {sorted(extra)}")
        mapping: dict[int, int] = {}
        for bus, parent_nets in connections.items():
            sub_nets = sub.inputs[bus]
            parent_nets = list(parent_nets)
            if len(parent_nets) != len(sub_nets):
                raise NetlistError(
                    f"sub input {bus} is {len(sub_nets)} bits, got {len(parent_nets)}"
                )
            for n in parent_nets:
                if n not in self._nets:
                    raise NetlistError(f"unknown net {n} connected to sub input {bus}")
            mapping.update(zip(sub_nets, parent_nets))
        for value, nid in sub.consts.items():
            mapping[nid] = self.const(value)
        for gate in sub._order:
            mapping[gate.output] = self.add_gate(
                gate.kind, tuple(mapping[n] for n in gate.inputs)
            )
        return {bus: [mapping[n] for n in nets] for bus, nets in sub.outputs.items()}

    def finalize(self) -> Netlist:
        """Validate and freeze. The builder cannot be used afterwards."""
        self._check_open()
        if not self._outputs:
            raise NetlistError("netlist has no output buses")
        # Drop nets that were reserved but never driven nor referenced.
        referenced = set(self._driven)
        for gate in self._gates:
            referenced.update(gate.inputs)
        for nets in self._outputs.values():
            referenced.update(nets)
        self._nets = {nid: net for nid, net in self._nets.items() if nid in referenced}
        self._done = True
        return Netlist(
            self.name,
            self._nets,
            self._inputs,
            {b: tuple(n) for b, n in self._outputs.items()},
            self._gates,
            self._consts,
        )
