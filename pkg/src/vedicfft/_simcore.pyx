# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled gate evaluation kernel.

Same opcode protocol as the pure-Python twin in ``_simcore_py.py``:

    0 AND   1 OR   2 XOR   3 NOT   4 NAND   5 NOR   6 XNOR

Buffers arrive as C-contiguous numpy arrays; ``values`` is mutated in place.
For NOT gates ``in1`` duplicates ``in0``.
"""


def eval_gates(const signed char[::1] ops,
               const int[::1] in0,
               const int[::1] in1,
               const int[::1] outs,
               unsigned char[::1] values):
    cdef Py_ssize_t g, n = ops.shape[0]
    cdef unsigned char x, y
    cdef signed char op
    for g in range(n):
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
