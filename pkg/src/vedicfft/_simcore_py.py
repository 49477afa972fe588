"""Pure-Python gate evaluation kernel.

Fallback for environments where the compiled extension is not built. The
opcode protocol is shared with ``_simcore.pyx``:

    0 AND   1 OR   2 XOR   3 NOT   4 NAND   5 NOR   6 XNOR

All buffers are plain Python lists of ints. For NOT gates ``in1`` duplicates
``in0`` so every row has two operands. Gates are already in topological
order; the loop writes each gate's output slot exactly once.
"""


def eval_gates(ops, in0, in1, outs, values):
    for g in range(len(ops)):
        x = values[in0[g]]
        y = values[in1[g]]
        op = ops[g]
        if op == 0:
            values[outs[g]] = x & y
        elif op == 1:
            values[outs[g]] = x | y
        elif op == 2:
            values[outs[g]] = x ^ y
        elif op == 3:
            values[outs[g]] = x ^ 1
        elif op == 4:
            values[outs[g]] = (x & y) ^ 1
        elif op == 5:
            values[outs[g]] = (x | y) ^ 1
        elif op == 6:
            values[outs[g]] = (x ^ y) ^ 1
        else:
            raise ValueError(f"unknown opcode {op}")
