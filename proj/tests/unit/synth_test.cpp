#include "motiontx/error.hpp"
#include "motiontx/seasonality.hpp"
#include "motiontx/synth.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace motiontx;

TEST(Synth, Deterministic) {
    SynthSpec spec;
    spec.noise_sigma = 0.2;
    spec.trend_slope = 0.01;
    spec.seed = 123;
    const auto a = synth_generate(spec);
    const auto b = synth_generate(spec);
    EXPECT_EQ(a.noisy.columns, b.noisy.columns);
    EXPECT_EQ(a.truth.columns, b.truth.columns);
    spec.seed = 124;
    EXPECT_NE(synth_generate(spec).noisy.columns, a.noisy.columns);
}

TEST(Synth, TruthCompanion) {
    SynthSpec spec;
    spec.noise_sigma = 0.2;
    spec.amplitude = 1.0;
    spec.seed = 7;
    spec.trend_slope = 0.01;
    const auto out = synth_generate(spec);
    const auto expected = oracle::sinusoid(spec.n, spec.period, 1.0, 0.0, 0.01);
    ASSERT_EQ(out.truth.columns.size(), 1u);
    ASSERT_EQ(out.truth.frames, spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) EXPECT_NEAR(out.truth.columns[0][i], expected[i], 1e-12);
    const double noise = oracle::rmse(out.noisy.columns[0], out.truth.columns[0]);
    EXPECT_GT(noise, 0.15);
    EXPECT_LT(noise, 0.25);
    EXPECT_EQ(out.noisy.channel_names, std::vector<std::string>{"theta"});
}

TEST(Synth, PureSinusoidRecoversFrequency) {
    for (double period : {4.0, 8.0, 10.0, 16.0, 20.0}) {
        SynthSpec spec;
        spec.n = 80;
        spec.period = period;
        const auto out = synth_generate(spec);
        EXPECT_EQ(out.noisy.columns, out.truth.columns);
        const auto report = analyze_seasonality(TimeSeries(out.noisy.columns[0]));
        EXPECT_EQ(report.dominant_frequency, static_cast<std::size_t>(80 / period));
        EXPECT_EQ(report.reference_period, period);
    }
}

TEST(Synth, InvalidSpec) {
    const auto code = [](SynthSpec spec) {
        try {
            synth_generate(spec);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    SynthSpec s;
    s.period = 3.0;
    EXPECT_EQ(code(s), ErrorCode::InvalidSpec);
    s = SynthSpec{};
    s.n = 31;
    EXPECT_EQ(code(s), ErrorCode::InvalidSpec);
    s = SynthSpec{};
    s.noise_sigma = -0.1;
    EXPECT_EQ(code(s), ErrorCode::InvalidSpec);
    s = SynthSpec{};
    s.amplitude = std::nan("");
    EXPECT_EQ(code(s), ErrorCode::InvalidSpec);
    s = SynthSpec{};
    s.channel = "";
    EXPECT_EQ(code(s), ErrorCode::InvalidSpec);
}

TEST(GaussianSource, MomentsAndRange) {
    GaussianSource g(2024);
    const int n = 200000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = g.next();
        ASSERT_TRUE(std::isfinite(z));
        sum += z;
        sq += z * z;
    }
    const double mean = sum / n;
    EXPECT_NEAR(mean, 0.0, 0.01);
    EXPECT_NEAR(sq / n - mean * mean, 1.0, 0.02);

    GaussianSource u(1);
    for (int i = 0; i < 10000; ++i) {
        const double x = u.uniform();
        ASSERT_GE(x, 0.0);
        ASSERT_LT(x, 1.0);
    }
}

TEST(GaussianSource, DocumentedTransform) {
    std::mt19937_64 engine(77);
    GaussianSource uniform(77);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(uniform.uniform(), std::ldexp(static_cast<double>(engine() >> 11), -53));
    }
    std::mt19937_64 raw(78);
    GaussianSource normal(78);
    for (int i = 0; i < 100; ++i) {
        const double u1 = std::ldexp(static_cast<double>(raw() >> 11), -53);
        const double u2 = std::ldexp(static_cast<double>(raw() >> 11), -53);
        const double z = std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
        EXPECT_NEAR(normal.next(), z, 1e-15 * std::max(1.0, std::abs(z)));
    }
}
