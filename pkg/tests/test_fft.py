import cmath
import random

import pytest

from vedicfft import (
    BitVector,
    FftConfig,
    FixedComplex,
    NetlistError,
    Twiddle,
    build_fft4,
    complex_multiply_unit,
    dft_oracle,
    parse_inline_samples,
    parse_samples_document,
    parse_twiddle_spec,
    run_fft,
)
from vedicfft.fft import build_unit, unit_names


def brute_dft(samples):
    n = len(samples)
    return [
        sum(samples[m] * cmath.exp(-2j * cmath.pi * m * k / n) for m in range(n))
        for k in range(n)
    ]


class TestOracle:
    def test_single_point(self):
        assert dft_oracle([complex(3, -2)]) == [complex(3, -2)]

    def test_two_point(self):
        assert dft_oracle([3, 5]) == [8, -2]

    def test_four_point_known(self):
        assert dft_oracle([1, 2, 3, 4]) == [10, -2 + 2j, -2, -2 - 2j]

    def test_matches_brute_force(self):
        rng = random.Random(11)
        for n in (1, 2, 4):
            for _ in range(200):
                x = [complex(rng.randint(-8, 7), rng.randint(-8, 7)) for _ in range(n)]
                got = dft_oracle(x)
                for g, ref in zip(got, brute_dft(x)):
                    assert abs(g - ref) < 1e-9

    def test_quarter_turn_outputs_are_exact_integers(self):
        got = dft_oracle([complex(1, 1), complex(-2, 3), complex(0, -4), complex(5, 0)])
        for v in got:
            assert v.real == int(v.real) and v.imag == int(v.imag)


class TestFixedComplex:
    def test_range_check(self):
        FixedComplex(-8, 7).check_range(4)
        with pytest.raises(ValueError):
            FixedComplex(9, 0).check_range(4)
        with pytest.raises(ValueError):
            FixedComplex(0, -9).check_range(4)

    def test_to_complex(self):
        assert FixedComplex(-2, 5).to_complex() == complex(-2, 5)


class TestTwiddle:
    def test_exact_values(self):
        assert Twiddle.exact(0, 4).value == 1
        assert Twiddle.exact(1, 4).value == -1j
        assert Twiddle.exact(2, 4).value == -1
        assert Twiddle.exact(3, 4).value == 1j

    def test_exact_restricted_sizes(self):
        with pytest.raises(ValueError):
            Twiddle.exact(1, 3)

    def test_quantized_q3_values(self):
        minus_j = Twiddle.quantized(1, 4, 3)
        assert (minus_j.re_q, minus_j.im_q) == (0, -8)
        unity = Twiddle.quantized(0, 4, 3)
        # +1.0 scales to +8 which does not fit Q1.3; clamps to 7/8.
        assert (unity.re_q, unity.im_q) == (7, 0)
        plus_j = Twiddle.quantized(3, 4, 3)
        assert (plus_j.re_q, plus_j.im_q) == (0, 7)

    def test_quantized_needs_fraction_bits(self):
        with pytest.raises(ValueError):
            Twiddle.quantized(1, 4, 0)

    def test_spec_parsing(self):
        assert parse_twiddle_spec("exact") == ("exact", None)
        assert parse_twiddle_spec("q2") == ("quantized", 2)
        with pytest.raises(ValueError):
            parse_twiddle_spec("banana")
        with pytest.raises(ValueError):
            parse_twiddle_spec("q")


class TestFftConfig:
    def test_make(self):
        cfg = FftConfig.make(4, "q3", 4)
        assert cfg.twiddle_mode == "quantized"
        assert cfg.fraction_bits == 3
        assert cfg.scale_log2 == -3
        exact = FftConfig.make(2, "exact", 4)
        assert exact.fraction_bits is None
        assert exact.scale_log2 == 0

    def test_validation(self):
        with pytest.raises(ValueError):
            FftConfig.make(3, "exact", 4)
        with pytest.raises(ValueError):
            FftConfig.make(4, "exact", 1)

    def test_unbuildable_configs_fail_at_run(self):
        # Coefficients wider than the multiplier core are caught when the
        # datapath is assembled, not when the config object is created.
        with pytest.raises(NetlistError):
            run_fft(FftConfig.make(4, "q9", 4), [(0, 0)] * 4)
        with pytest.raises(NetlistError):
            run_fft(FftConfig.make(4, "q3", 5), [(0, 0)] * 4)


class TestButterfly2:
    def test_known_pair(self, butterfly2):
        out = butterfly2.evaluate(
            {
                "x0_re": BitVector.from_signed(3, 4),
                "x0_im": BitVector.from_signed(0, 4),
                "x1_re": BitVector.from_signed(5, 4),
                "x1_im": BitVector.from_signed(0, 4),
            }
        )
        assert (out["X0_re"].sint, out["X0_im"].sint) == (8, 0)
        assert (out["X1_re"].sint, out["X1_im"].sint) == (-2, 0)

    def test_output_width_grows_one_bit(self, butterfly2):
        assert butterfly2.output_width("X0_re") == 5
        assert butterfly2.output_width("X1_im") == 5

    def test_random_against_oracle(self, butterfly2):
        rng = random.Random(21)
        for _ in range(500):
            x = [complex(rng.randint(-8, 7), rng.randint(-8, 7)) for _ in range(2)]
            out = butterfly2.evaluate(
                {
                    "x0_re": BitVector.from_signed(int(x[0].real), 4),
                    "x0_im": BitVector.from_signed(int(x[0].imag), 4),
                    "x1_re": BitVector.from_signed(int(x[1].real), 4),
                    "x1_im": BitVector.from_signed(int(x[1].imag), 4),
                }
            )
            ref = dft_oracle(x)
            assert complex(out["X0_re"].sint, out["X0_im"].sint) == ref[0]
            assert complex(out["X1_re"].sint, out["X1_im"].sint) == ref[1]


class TestComplexMultiplier:
    def test_exact_rotation(self):
        unit = complex_multiply_unit(4, Twiddle.exact(3, 4))
        out = unit.evaluate(
            {
                "x_re": BitVector.from_signed(4, 4),
                "x_im": BitVector.from_signed(-3, 4),
            }
        )
        # (4 - 3j) * j == 3 + 4j
        assert (out["p_re"].sint, out["p_im"].sint) == (3, 4)
        assert out["sat"].uint == 0

    def test_exact_rotation_needs_no_multiplier(self):
        # Rotating by 1 is pure wiring; by +-j only a sign flip.
        assert complex_multiply_unit(4, Twiddle.exact(0, 4)).gate_counts().total == 0
        flip = complex_multiply_unit(4, Twiddle.exact(3, 4)).gate_counts().total
        full = complex_multiply_unit(4, Twiddle.quantized(3, 4, 3)).gate_counts().total
        assert flip < full

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_quantized_matches_integer_model(self, k):
        tw = Twiddle.quantized(k, 4, 3)

        def clamp(v):
            return -7 if v == -8 else v

        coeff = complex(clamp(tw.re_q), clamp(tw.im_q))
        unit = complex_multiply_unit(4, tw)
        for re in range(-8, 8):
            for im in range(-8, 8):
                out = unit.evaluate(
                    {
                        "x_re": BitVector.from_signed(re, 4),
                        "x_im": BitVector.from_signed(im, 4),
                    }
                )
                expected = complex(clamp(re), clamp(im)) * coeff
                assert complex(out["p_re"].sint, out["p_im"].sint) == expected

    def test_saturation_flag(self):
        unit = complex_multiply_unit(4, Twiddle.quantized(1, 4, 3))
        hot = unit.evaluate(
            {"x_re": BitVector.from_signed(4, 4), "x_im": BitVector.from_signed(0, 4)}
        )
        assert hot["sat"].uint == 1  # the -8 coefficient was clamped
        cold = complex_multiply_unit(4, Twiddle.quantized(3, 4, 3)).evaluate(
            {"x_re": BitVector.from_signed(4, 4), "x_im": BitVector.from_signed(0, 4)}
        )
        assert cold["sat"].uint == 0

    def test_rejects_bad_shapes(self):
        with pytest.raises(NetlistError):
            complex_multiply_unit(5, Twiddle.quantized(1, 4, 3))
        with pytest.raises(NetlistError):
            complex_multiply_unit(4, Twiddle.quantized(1, 4, 9))
        zero = Twiddle(
            mode="quantized", value=0j, re_q=0, im_q=0, fraction_bits=3
        )
        with pytest.raises(NetlistError):
            complex_multiply_unit(4, zero)


def spectrum_of(result):
    return [(s.re, s.im) for s in result.spectrum]


class TestFft4Exact:
    def test_known_vector(self):
        res = run_fft(FftConfig.make(4, "exact", 4), [(1, 0), (2, 0), (3, 0), (4, 0)])
        assert spectrum_of(res) == [(10, 0), (-2, 2), (-2, 0), (-2, -2)]
        assert res.output_width == 6
        assert res.scale_log2 == 0
        assert res.values == [10, -2 + 2j, -2, -2 - 2j]

    def test_random_against_oracle(self):
        cfg = FftConfig.make(4, "exact", 4)
        rng = random.Random(31)
        for _ in range(400):
            samples = [(rng.randint(-8, 7), rng.randint(-8, 7)) for _ in range(4)]
            res = run_fft(cfg, samples)
            ref = dft_oracle([complex(r, i) for r, i in samples])
            assert res.values == ref

    def test_width_validation(self):
        with pytest.raises(NetlistError):
            build_fft4(1)


class TestFft4Quantized:
    def test_known_vector(self):
        res = run_fft(FftConfig.make(4, "q3", 4), [(1, 0), (2, 0), (3, 0), (4, 0)])
        # True spectrum scaled by 8 is [80, -16+16j, -16, -16-16j]; the
        # Q1.3 twiddle costs 2 counts of error on the odd bins.
        assert spectrum_of(res) == [(80, 0), (-16, 14), (-16, 0), (-16, -14)]
        assert res.output_width == 11
        assert res.scale_log2 == -3

    def test_dc_vector_is_exact(self):
        res = run_fft(FftConfig.make(4, "q3", 4), [(4, 0)] * 4)
        assert spectrum_of(res) == [(128, 0), (0, 0), (0, 0), (0, 0)]
        assert res.values == [16, 0, 0, 0]

    def test_error_bound_random(self):
        cfg = FftConfig.make(4, "q3", 4)
        rng = random.Random(41)
        for _ in range(300):
            samples = [(rng.randint(-8, 7), rng.randint(-8, 7)) for _ in range(4)]
            res = run_fft(cfg, samples)
            ref = dft_oracle([complex(r, i) for r, i in samples])
            peak = max(max(abs(r), abs(i)) for r, i in samples)
            bound = 4 * 2**-3 * max(peak, 1)
            for got, want in zip(res.values, ref):
                assert abs(got.real - want.real) <= bound
                assert abs(got.imag - want.imag) <= bound


class TestReconfigurable:
    def test_select4_matches_dedicated_fft(self):
        cfg = FftConfig.make(4, "exact", 4)
        rng = random.Random(51)
        for _ in range(200):
            samples = [(rng.randint(-8, 7), rng.randint(-8, 7)) for _ in range(4)]
            res = run_fft(cfg, samples)
            ref = dft_oracle([complex(r, i) for r, i in samples])
            assert res.values == ref
            assert res.select == 4

    def test_select2_zero_forces_upper_bins(self):
        cfg = FftConfig.make(2, "exact", 4)
        res = run_fft(cfg, [(3, 0), (5, 0), (7, 0), (7, 0)])
        # x2/x3 are ignored by the two-point path.
        assert spectrum_of(res) == [(8, 0), (-2, 0), (0, 0), (0, 0)]
        assert res.select == 2

    def test_select2_accepts_two_samples(self):
        res = run_fft(FftConfig.make(2, "exact", 4), [(3, 0), (5, 0)])
        assert spectrum_of(res) == [(8, 0), (-2, 0), (0, 0), (0, 0)]

    def test_select2_quantized_keeps_uniform_scale(self):
        res = run_fft(FftConfig.make(2, "q3", 4), [(3, 0), (5, 0)])
        assert spectrum_of(res) == [(64, 0), (-16, 0), (0, 0), (0, 0)]
        assert res.values == [8, -2, 0, 0]
        assert res.output_width == 11

    def test_uniform_output_width(self, recon_exact, recon_q3):
        for bus in ("X0_re", "X1_im", "X2_re", "X3_im"):
            assert recon_exact.output_width(bus) == 6
            assert recon_q3.output_width(bus) == 11

    def test_sample_count_validation(self):
        cfg4 = FftConfig.make(4, "exact", 4)
        with pytest.raises(ValueError):
            run_fft(cfg4, [(1, 0), (2, 0)])
        with pytest.raises(ValueError):
            run_fft(cfg4, [(1, 0)] * 5)
        with pytest.raises(ValueError):
            run_fft(FftConfig.make(2, "exact", 4), [(1, 0)])

    def test_sample_range_validation(self):
        cfg = FftConfig.make(4, "exact", 4)
        with pytest.raises(ValueError):
            run_fft(cfg, [(9, 0), (0, 0), (0, 0), (0, 0)])

    def test_accepts_fixed_complex_objects(self):
        cfg = FftConfig.make(4, "exact", 4)
        res = run_fft(cfg, [FixedComplex(1, 0)] * 4)
        assert res.values[0] == 4


class TestResultDocuments:
    def test_document_round_trip(self):
        res = run_fft(FftConfig.make(4, "q3", 4), [(1, 0), (2, 0), (3, 0), (4, 0)])
        doc = res.to_document()
        assert doc == {
            "spectrum": [[80, 0], [-16, 14], [-16, 0], [-16, -14]],
            "output_width": 11,
            "scale_log2": -3,
            "select": 4,
        }
        assert res.to_json().endswith("\n")

    def test_sample_document_parsing(self):
        samples, width = parse_samples_document(
            '{"samples": [[1, 0], [2, 0], [3, 0], [4, 0]], "width": 4}'
        )
        assert [s.re for s in samples] == [1, 2, 3, 4]
        assert width == 4
        _, default_width = parse_samples_document('{"samples": [[1, 0]]}')
        assert default_width == 4

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "[1, 2]",
            '{"samples": 3}',
            '{"samples": [[1]]}',
            '{"samples": [[1.5, 0]]}',
            '{"samples": [[1, 0]], "width": "x"}',
        ],
    )
    def test_sample_document_rejection(self, text):
        with pytest.raises(ValueError):
            parse_samples_document(text)

    def test_inline_parsing(self):
        pairs = parse_inline_samples("1,0;-2,3")
        assert [(p.re, p.im) for p in pairs] == [(1, 0), (-2, 3)]
        with pytest.raises(ValueError):
            parse_inline_samples("1,2;3")
        with pytest.raises(ValueError):
            parse_inline_samples("")


class TestUnitCatalog:
    def test_catalog_names_build(self):
        for name in unit_names():
            assert build_unit(name).name == name

    def test_sized_variants(self):
        assert build_unit("fft4_q2").name == "fft4_q2"
        assert build_unit("reconfigurable_q3").name == "reconfigurable_q3"

    def test_unknown_unit(self):
        with pytest.raises(NetlistError):
            build_unit("zzz")
        with pytest.raises(NetlistError):
            build_unit("fft4_q0")
