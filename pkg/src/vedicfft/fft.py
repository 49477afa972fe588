"""Reconfigurable 2/4-point FFT datapath built from the arithmetic netlists,
plus an exact reference DFT oracle.

Structure is radix-2 decimation in time: stage 1 runs butterflies on
(x0, x2) and (x1, x3), stage 2 recombines with the twiddle W4^1 = -j on the
odd branch. Callers pass samples in natural order; the bit-reversed pairing
is internal. Every add/subtract grows the word by one bit and nothing is
truncated, so exact mode equals the oracle bit for bit.

In quantized mode the odd branch goes through a complex multiplier whose
coefficient is -j rounded to Q1.F. The datapath then carries all values
scaled by 2^F (the even branch is shifted left by F wire positions) and the
result metadata reports scale_log2 = -F; no rounding happens inside the
netlist. Dividing the integer outputs by 2^F recovers the spectrum estimate.
"""

from __future__ import annotations

import cmath
import functools
import json
import math
import re
from dataclasses import dataclass
from typing import Sequence

from .arith import build_signed_multiplier4, ripple_add
from .bitvec import BitVector
from .netlist import Netlist, NetlistBuilder, NetlistError

# Quarter-turn rotations: value of W4^r for r = 0..3.
_QUARTER_TURNS = ((1, 0), (0, -1), (-1, 0), (0, 1))


# -- reference oracle ---------------------------------------------------------


def dft_oracle(x: Sequence[complex], n: int | None = None) -> list[complex]:
    """Direct evaluation of X(k) = sum_n x(n) W_N^(nk), W_N = e^(-2pi j/N).

    For N in {1, 2, 4} every twiddle is one of 1, -j, -1, j, so the sum is
    computed by exact quarter-turn rotations: integer inputs give exact
    Gaussian-integer results (floats hold integers exactly below 2**53).
    Other lengths fall back to double precision; expect a few ulps of
    rounding, well below 1e-9 for |x| <= 1e6 and N <= 4096.
    """
    xs = [complex(v) for v in x]
    if n is None:
        n = len(xs)
    if n < 1:
        raise ValueError("dft_oracle needs at least one sample")
    if len(xs) != n:
        raise ValueError(f"expected {n} samples, got {len(xs)}")
    if n in (1, 2, 4):
        step = 4 // n
        out = []
        for k in range(n):
            acc = complex(0, 0)
            for idx, v in enumerate(xs):
                r = (idx * k * step) % 4
                if r == 0:
                    acc += v
                elif r == 1:
                    acc += complex(v.imag, -v.real)
                elif r == 2:
                    acc -= v
                else:
                    acc += complex(-v.imag, v.real)
            out.append(acc)
        return out
    return [
        sum(xs[m] * cmath.exp(-2j * math.pi * m * k / n) for m in range(n))
        for k in range(n)
    ]


# -- domain types -------------------------------------------------------------


@dataclass(frozen=True)
class FixedComplex:
    """One complex sample as a pair of signed integers."""

    re: int
    im: int

    def __post_init__(self):
        for part in (self.re, self.im):
            if not isinstance(part, int) or isinstance(part, bool):
                raise ValueError(f"components must be integers, got {part!r}")

    def check_range(self, width: int) -> "FixedComplex":
        lo, hi = -(1 << (width - 1)), (1 << (width - 1)) - 1
        for part in (self.re, self.im):
            if not lo <= part <= hi:
                raise ValueError(
                    f"component {part} outside [{lo}, {hi}] for width {width}"
                )
        return self

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


def _quantize_component(value: float, fraction_bits: int) -> int:
    """Round-half-to-even to Q1.F, clamped to the representable range
    [-2^F, 2^F - 1] (so +1.0 clamps to (2^F - 1)/2^F)."""
    q = round(value * (1 << fraction_bits))
    return max(-(1 << fraction_bits), min((1 << fraction_bits) - 1, q))


@dataclass(frozen=True)
class Twiddle:
    """One DFT rotation coefficient W_N^k.

    ``exact`` mode stores the value precisely (it must be one of 1, -1, j,
    -j, the only twiddles for N in {1, 2, 4}). ``quantized`` mode stores a
    Q1.F signed fixed-point pair (re_q, im_q), meaning (re_q + j im_q)/2^F.
    """

    mode: str
    value: complex
    re_q: int | None = None
    im_q: int | None = None
    fraction_bits: int | None = None

    def __post_init__(self):
        if self.mode == "exact":
            if self.value not in (1, -1, 1j, -1j):
                raise ValueError(
                    f"exact twiddle must be one of 1, -1, j, -j, got {self.value}"
                )
        elif self.mode == "quantized":
            f = self.fraction_bits
            if not isinstance(f, int) or f < 1:
                raise ValueError("quantized twiddle needs fraction_bits >= 1")
            for q in (self.re_q, self.im_q):
                if not isinstance(q, int) or not -(1 << f) <= q <= (1 << f) - 1:
                    raise ValueError(f"coefficient {q!r} not a Q1.{f} integer")
        else:
            raise ValueError(f"twiddle mode must be exact or quantized, got {self.mode!r}")

    @classmethod
    def exact(cls, k: int, n: int) -> "Twiddle":
        if n not in (1, 2, 4):
            raise ValueError(f"exact twiddles exist only for N in {{1, 2, 4}}, got {n}")
        re, im = _QUARTER_TURNS[(k * (4 // n)) % 4]
        return cls("exact", complex(re, im))

    @classmethod
    def quantized(cls, k: int, n: int, fraction_bits: int) -> "Twiddle":
        if n < 1:
            raise ValueError(f"N must be >= 1, got {n}")
        if fraction_bits < 1:
            raise ValueError("quantized twiddle needs fraction_bits >= 1")
        if n in (1, 2, 4):
            re, im = _QUARTER_TURNS[(k * (4 // n)) % 4]
        else:
            angle = 2.0 * math.pi * k / n
            re, im = math.cos(angle), -math.sin(angle)
        return cls(
            "quantized",
            complex(re, im),
            _quantize_component(re, fraction_bits),
            _quantize_component(im, fraction_bits),
            fraction_bits,
        )

    @property
    def effective(self) -> complex:
        """The value the hardware actually applies (quantization included)."""
        if self.mode == "exact":
            return self.value
        scale = 1 << self.fraction_bits
        return complex(self.re_q / scale, self.im_q / scale)


_TWIDDLE_SPEC_RE = re.compile(r"^q(\d+)$")


def parse_twiddle_spec(spec: str) -> tuple[str, int | None]:
    """Parse a twiddle mode string: ``exact`` or ``q<F>`` (e.g. ``q3``)."""
    if spec == "exact":
        return "exact", None
    m = _TWIDDLE_SPEC_RE.match(spec)
    if m:
        f = int(m.group(1))
        if f < 1:
            raise ValueError("fraction bits must be >= 1")
        return "quantized", f
    raise ValueError(f"twiddle mode must be 'exact' or 'q<F>', got {spec!r}")


@dataclass(frozen=True)
class FftConfig:
    """Run-time transform configuration: select line, twiddle mode, width."""

    select: int = 4
    twiddle_mode: str = "exact"
    fraction_bits: int | None = None
    input_width: int = 4

    def __post_init__(self):
        if self.select not in (2, 4):
            raise ValueError(f"select must be 2 or 4, got {self.select}")
        if self.twiddle_mode not in ("exact", "quantized"):
            raise ValueError(
                f"twiddle_mode must be exact or quantized, got {self.twiddle_mode!r}"
            )
        if self.twiddle_mode == "quantized":
            if not isinstance(self.fraction_bits, int) or self.fraction_bits < 1:
                raise ValueError("quantized mode needs fraction_bits >= 1")
        elif self.fraction_bits is not None:
            raise ValueError("fraction_bits only applies to quantized mode")
        if self.input_width < 2:
            raise ValueError(f"input_width must be >= 2, got {self.input_width}")

    @classmethod
    def make(cls, select: int = 4, twiddle: str = "exact", input_width: int = 4):
        mode, f = parse_twiddle_spec(twiddle)
        return cls(select, mode, f, input_width)

    @property
    def scale_log2(self) -> int:
        return -self.fraction_bits if self.twiddle_mode == "quantized" else 0


# -- structural helpers (signed, growing arithmetic) --------------------------


def _sext(bits: Sequence[int], width: int) -> list[int]:
    """Sign-extend a two's-complement bus by repeating its MSB net (wires)."""
    return list(bits) + [bits[-1]] * (width - len(bits))


def _add_signed(b: NetlistBuilder, xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """Two's-complement sum, one growth bit, never truncated."""
    w = max(len(xs), len(ys)) + 1
    sums, _ = ripple_add(b, _sext(xs, w), _sext(ys, w), b.const(0))
    return sums


def _sub_signed(b: NetlistBuilder, xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """Two's-complement difference xs - ys, one growth bit (a + NOT b + 1)."""
    w = max(len(xs), len(ys)) + 1
    inv = _sext([b.add_gate("NOT", [y]) for y in ys], w)
    sums, _ = ripple_add(b, _sext(xs, w), inv, b.const(1))
    return sums


def _neg_signed(b: NetlistBuilder, xs: Sequence[int]) -> list[int]:
    zero = b.const(0)
    return _sub_signed(b, [zero] * len(xs), xs)


def _shift_left(b: NetlistBuilder, bits: Sequence[int], count: int) -> list[int]:
    """Multiply by 2^count with wires: count constant-zero LSBs."""
    return [b.const(0)] * count + list(bits)


# -- builders -----------------------------------------------------------------


def build_butterfly2(width: int) -> Netlist:
    """2-point butterfly: X0 = x0 + x1, X1 = x0 - x1 on complex inputs.

    Buses x0_re, x0_im, x1_re, x1_im (width) -> X0_re .. X1_im (width + 1).
    """
    if width < 2:
        raise NetlistError(f"width must be >= 2, got {width}")
    b = NetlistBuilder("butterfly2")
    x0r = b.add_input("x0_re", width)
    x0i = b.add_input("x0_im", width)
    x1r = b.add_input("x1_re", width)
    x1i = b.add_input("x1_im", width)
    b.set_output("X0_re", _add_signed(b, x0r, x1r))
    b.set_output("X0_im", _add_signed(b, x0i, x1i))
    b.set_output("X1_re", _sub_signed(b, x0r, x1r))
    b.set_output("X1_im", _sub_signed(b, x0i, x1i))
    return b.finalize()


def complex_multiply_unit(
    width: int, twiddle: Twiddle, multiplier: str = "vedic"
) -> Netlist:
    """Multiply one complex sample by a fixed twiddle coefficient.

    Quantized twiddles use the full product form (a+jb)(c+jd) =
    (ac - bd) + j(ad + bc): four signed 4x4 multiplier instances with the
    coefficient bits tied to constant nets, one subtractor, one adder.
    Outputs p_re, p_im carry the raw integer product, i.e. the true product
    scaled by 2^F; sat flags magnitude saturation (|-8| -> 7) in any
    instance. Exact twiddles (1, -1, j, -j) need no multiplier and compile
    to wire swaps and structural negation; outputs grow by one bit.

    The unsigned core inside the signed multipliers is selected by
    ``multiplier``: ``vedic`` or ``array``.
    """
    if width != 4:
        raise NetlistError(
            f"complex multiplier is pinned to the 4x4 core, got width {width}"
        )
    if twiddle.mode == "exact":
        b = NetlistBuilder("cmul_exact")
        xr = b.add_input("x_re", width)
        xi = b.add_input("x_im", width)
        w = width + 1
        if twiddle.value == 1:
            pr, pi = _sext(xr, w), _sext(xi, w)
        elif twiddle.value == -1:
            pr, pi = _neg_signed(b, xr), _neg_signed(b, xi)
        elif twiddle.value == -1j:
            pr, pi = _sext(xi, w), _neg_signed(b, xr)
        else:  # j
            pr, pi = _neg_signed(b, xi), _sext(xr, w)
        b.set_output("p_re", pr)
        b.set_output("p_im", pi)
        b.set_output("sat", [b.const(0)])
        return b.finalize()

    f = twiddle.fraction_bits
    if f > 3:
        raise NetlistError(f"Q1.{f} coefficient does not fit the 4-bit core")
    if twiddle.re_q == 0 and twiddle.im_q == 0:
        raise NetlistError("quantized twiddle rounds to zero, product would vanish")
    b = NetlistBuilder(f"cmul_{multiplier}_q{f}")
    xr = b.add_input("x_re", width)
    xi = b.add_input("x_im", width)
    core = build_signed_multiplier4(multiplier)

    def const_bus(value: int) -> list[int]:
        return [b.const(bit) for bit in BitVector.from_signed(value, 4).bits]

    c_re, c_im = const_bus(twiddle.re_q), const_bus(twiddle.im_q)
    parts = {}
    sats = []
    for label, x_bits, c_bits in (
        ("ac", xr, c_re),
        ("bd", xi, c_im),
        ("ad", xr, c_im),
        ("bc", xi, c_re),
    ):
        out = b.instantiate(core, {"a": x_bits, "b": c_bits})
        parts[label] = out["p"]
        sats.append(out["sat"][0])
    b.set_output("p_re", _sub_signed(b, parts["ac"], parts["bd"]))
    b.set_output("p_im", _add_signed(b, parts["ad"], parts["bc"]))
    sat = b.add_gate("OR", [sats[0], sats[1]])
    sat = b.add_gate("OR", [sat, sats[2]])
    sat = b.add_gate("OR", [sat, sats[3]])
    b.set_output("sat", [sat])
    return b.finalize()


def _parse_build_mode(twiddle_mode: str, fraction_bits: int | None):
    if twiddle_mode in ("exact", "quantized"):
        mode = twiddle_mode
        f = fraction_bits
    else:
        mode, f = parse_twiddle_spec(twiddle_mode)
        if fraction_bits is not None and fraction_bits != f:
            raise NetlistError("conflicting fraction_bits")
    if mode == "quantized" and (not isinstance(f, int) or f < 1):
        raise NetlistError("quantized mode needs fraction_bits >= 1")
    return mode, f


def build_fft4(
    width: int,
    twiddle_mode: str = "exact",
    fraction_bits: int | None = None,
    multiplier: str = "vedic",
) -> Netlist:
    """4-point DFT netlist, decimation in time.

    Buses x0_re .. x3_im (width) -> X0_re .. X3_im. Exact mode applies
    W4^1 = -j as a wire swap plus structural negation folded into the
    stage-2 adders/subtractors; outputs are width + 2 bits and equal the
    DFT exactly. Quantized mode (``q<F>`` or twiddle_mode="quantized" with
    fraction_bits=F) sends x1 and x3 through complex multiplier units and
    carries everything scaled by 2^F; outputs share one uniform width.
    """
    if width < 2:
        raise NetlistError(f"width must be >= 2, got {width}")
    mode, f = _parse_build_mode(twiddle_mode, fraction_bits)
    if mode == "quantized":
        if width != 4:
            raise NetlistError("quantized mode requires width 4 (4x4 multiplier core)")
        if f > 3:
            raise NetlistError(f"Q1.{f} coefficient does not fit the 4-bit core")

    b = NetlistBuilder("fft4" if mode == "exact" else f"fft4_q{f}")
    x = [
        (b.add_input(f"x{i}_re", width), b.add_input(f"x{i}_im", width))
        for i in range(4)
    ]
    # Stage 1: butterflies on the bit-reversed pairs (x0, x2) and (x1, x3).
    a0r = _add_signed(b, x[0][0], x[2][0])
    a0i = _add_signed(b, x[0][1], x[2][1])
    a1r = _sub_signed(b, x[0][0], x[2][0])
    a1i = _sub_signed(b, x[0][1], x[2][1])
    b0r = _add_signed(b, x[1][0], x[3][0])
    b0i = _add_signed(b, x[1][1], x[3][1])

    if mode == "exact":
        b1r = _sub_signed(b, x[1][0], x[3][0])
        b1i = _sub_signed(b, x[1][1], x[3][1])
        # Stage 2; -j(re, im) = (im, -re), negation folded into add/sub.
        outs = {
            "X0_re": _add_signed(b, a0r, b0r),
            "X0_im": _add_signed(b, a0i, b0i),
            "X1_re": _add_signed(b, a1r, b1i),
            "X1_im": _sub_signed(b, a1i, b1r),
            "X2_re": _sub_signed(b, a0r, b0r),
            "X2_im": _sub_signed(b, a0i, b0i),
            "X3_re": _sub_signed(b, a1r, b1i),
            "X3_im": _add_signed(b, a1i, b1r),
        }
    else:
        # Odd branch through the quantized multiplier. The unit is pinned to
        # 4-bit inputs, so rotate x1 and x3 separately before the butterfly
        # (c(x1 - x3) = c x1 - c x3) instead of rotating the 5-bit difference.
        unit = complex_multiply_unit(width, Twiddle.quantized(1, 4, f), multiplier)
        rot1 = b.instantiate(unit, {"x_re": x[1][0], "x_im": x[1][1]})
        rot3 = b.instantiate(unit, {"x_re": x[3][0], "x_im": x[3][1]})
        rr = _sub_signed(b, rot1["p_re"], rot3["p_re"])
        ri = _sub_signed(b, rot1["p_im"], rot3["p_im"])
        # Even branch carries no coefficient: scale by 2^F with wires.
        a1rs = _shift_left(b, a1r, f)
        a1is = _shift_left(b, a1i, f)
        outs = {
            "X0_re": _shift_left(b, _add_signed(b, a0r, b0r), f),
            "X0_im": _shift_left(b, _add_signed(b, a0i, b0i), f),
            "X1_re": _add_signed(b, a1rs, rr),
            "X1_im": _add_signed(b, a1is, ri),
            "X2_re": _shift_left(b, _sub_signed(b, a0r, b0r), f),
            "X2_im": _shift_left(b, _sub_signed(b, a0i, b0i), f),
            "X3_re": _sub_signed(b, a1rs, rr),
            "X3_im": _sub_signed(b, a1is, ri),
        }
    out_w = max(len(bits) for bits in outs.values())
    for bus in ("X0_re", "X0_im", "X1_re", "X1_im", "X2_re", "X2_im", "X3_re", "X3_im"):
        b.set_output(bus, _sext(outs[bus], out_w))
    return b.finalize()


def build_reconfigurable_fft(config: FftConfig, multiplier: str = "vedic") -> Netlist:
    """Both transform datapaths behind one 1-bit ``select`` input.

    select=0: X0, X1 carry the 2-point butterfly of (x0, x1); X2 and X3 are
    forced to zero. select=1: the full 4-point transform of x0..x3. Output
    multiplexing is gate-level (AND/OR/NOT). In quantized mode the 2-point
    branch is shifted left by F wire positions so both paths share the
    documented 2^-F output scale.
    """
    if not isinstance(config, FftConfig):
        raise NetlistError(f"expected FftConfig, got {type(config).__name__}")
    width = config.input_width
    f = config.fraction_bits if config.twiddle_mode == "quantized" else 0
    suffix = "" if config.twiddle_mode == "exact" else f"_q{f}"
    if multiplier != "vedic":
        suffix += f"_{multiplier}"
    b = NetlistBuilder(f"reconfigurable{suffix}")
    select = b.add_input("select", 1)[0]
    x = [
        (b.add_input(f"x{i}_re", width), b.add_input(f"x{i}_im", width))
        for i in range(4)
    ]
    four = b.instantiate(
        build_fft4(width, config.twiddle_mode, config.fraction_bits, multiplier),
        {f"x{i}_{part}": x[i][j] for i in range(4) for j, part in enumerate(("re", "im"))},
    )
    two = b.instantiate(
        build_butterfly2(width),
        {"x0_re": x[0][0], "x0_im": x[0][1], "x1_re": x[1][0], "x1_im": x[1][1]},
    )
    out_w = len(four["X0_re"])
    not_sel = b.add_gate("NOT", [select])

    def mux(two_bits: list[int], four_bits: list[int]) -> list[int]:
        padded = _sext(_shift_left(b, two_bits, f), out_w)
        return [
            b.add_gate(
                "OR",
                [
                    b.add_gate("AND", [lo, not_sel]),
                    b.add_gate("AND", [hi, select]),
                ],
            )
            for lo, hi in zip(padded, four_bits)
        ]

    b.set_output("X0_re", mux(two["X0_re"], four["X0_re"]))
    b.set_output("X0_im", mux(two["X0_im"], four["X0_im"]))
    b.set_output("X1_re", mux(two["X1_re"], four["X1_re"]))
    b.set_output("X1_im", mux(two["X1_im"], four["X1_im"]))
    for bus in ("X2_re", "X2_im", "X3_re", "X3_im"):
        b.set_output(bus, [b.add_gate("AND", [n, select]) for n in four[bus]])
    return b.finalize()


# -- behavioral front door ----------------------------------------------------


@dataclass(frozen=True)
class FftResult:
    """Decoded spectrum plus the metadata needed to interpret it.

    ``spectrum`` holds raw integer outputs; the represented values are
    spectrum * 2^scale_log2 (scale_log2 is 0 in exact mode, -F quantized).
    """

    spectrum: tuple[FixedComplex, ...]
    output_width: int
    scale_log2: int
    select: int

    @property
    def values(self) -> list[complex]:
        scale = 2.0 ** self.scale_log2
        return [c.to_complex() * scale for c in self.spectrum]

    def to_document(self) -> dict:
        return {
            "spectrum": [[c.re, c.im] for c in self.spectrum],
            "output_width": self.output_width,
            "scale_log2": self.scale_log2,
            "select": self.select,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document()) + "\n"


@functools.lru_cache(maxsize=None)
def _reconfigurable_cached(
    input_width: int, twiddle_mode: str, fraction_bits: int | None
) -> Netlist:
    return build_reconfigurable_fft(
        FftConfig(4, twiddle_mode, fraction_bits, input_width)
    )


def run_fft(
    config: FftConfig, samples: Sequence[FixedComplex | Sequence[int]]
) -> FftResult:
    """Encode samples, evaluate the reconfigurable netlist, decode outputs.

    Expects 4 samples; with select=2, two samples are also accepted (the
    unused upper slots are zero-filled). Components must fit the configured
    input width.
    """
    coerced = []
    for s in samples:
        if not isinstance(s, FixedComplex):
            pair = tuple(s)
            if len(pair) != 2:
                raise ValueError(f"sample must be a (re, im) pair, got {s!r}")
            s = FixedComplex(int(pair[0]), int(pair[1]))
        coerced.append(s)
    if config.select == 2 and len(coerced) == 2:
        coerced += [FixedComplex(0, 0), FixedComplex(0, 0)]
    if len(coerced) != 4:
        raise ValueError(
            f"expected 4 samples (or 2 with select=2), got {len(coerced)}"
        )
    for s in coerced:
        s.check_range(config.input_width)
    net = _reconfigurable_cached(
        config.input_width, config.twiddle_mode, config.fraction_bits
    )
    assignments = {"select": BitVector.from_unsigned(int(config.select == 4), 1)}
    for i, s in enumerate(coerced):
        assignments[f"x{i}_re"] = BitVector.from_signed(s.re, config.input_width)
        assignments[f"x{i}_im"] = BitVector.from_signed(s.im, config.input_width)
    outs = net.evaluate(assignments)
    spectrum = tuple(
        FixedComplex(outs[f"X{k}_re"].sint, outs[f"X{k}_im"].sint) for k in range(4)
    )
    return FftResult(
        spectrum, net.output_width("X0_re"), config.scale_log2, config.select
    )


# -- sample/spectrum documents ------------------------------------------------


def parse_samples_document(text: str) -> tuple[list[FixedComplex], int]:
    """Parse the sample JSON document {"samples": [[re, im], ...], "width": W}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed sample document: {exc}") from exc
    if not isinstance(doc, dict) or "samples" not in doc:
        raise ValueError("sample document must be an object with a 'samples' list")
    width = doc.get("width", 4)
    if not isinstance(width, int) or width < 2:
        raise ValueError(f"bad sample width {width!r}")
    raw = doc["samples"]
    if not isinstance(raw, list):
        raise ValueError("'samples' must be a list of [re, im] pairs")
    samples = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise ValueError(f"sample {item!r} is not an [re, im] pair")
        re_part, im_part = item
        if not isinstance(re_part, int) or not isinstance(im_part, int):
            raise ValueError(f"sample {item!r} must hold integers")
        samples.append(FixedComplex(re_part, im_part))
    return samples, width


def parse_inline_samples(text: str) -> list[FixedComplex]:
    """Parse the CLI inline syntax ``re,im;re,im;...``."""
    samples = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"sample {chunk!r} is not 're,im'")
        try:
            samples.append(FixedComplex(int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ValueError(f"sample {chunk!r}: {exc}") from exc
    return samples


# -- canonical unit catalog ---------------------------------------------------

_FFT_UNIT_RE = re.compile(r"^(fft4|reconfigurable)_q(\d+)$")


def unit_names() -> list[str]:
    """Canonical exportable FFT unit names handled by :func:`build_unit`."""
    return ["butterfly2", "fft4", "fft4_q3", "reconfigurable", "reconfigurable_q3"]


def build_unit(name: str) -> Netlist:
    """Build an FFT unit by canonical name: ``butterfly2``, ``fft4``,
    ``fft4_q<F>``, ``reconfigurable``, ``reconfigurable_q<F>``."""
    if name == "butterfly2":
        return build_butterfly2(4)
    if name == "fft4":
        return build_fft4(4)
    if name == "reconfigurable":
        return build_reconfigurable_fft(FftConfig())
    m = _FFT_UNIT_RE.match(name)
    if m:
        f = int(m.group(2))
        if m.group(1) == "fft4":
            return build_fft4(4, "quantized", f)
        return build_reconfigurable_fft(FftConfig(4, "quantized", f, 4))
    raise NetlistError(f"unknown unit {name!r}")
