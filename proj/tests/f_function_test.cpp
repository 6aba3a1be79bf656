#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "bestprox/error.hpp"
#include "bestprox/f_function.hpp"
#include "test_support.hpp"

using namespace bestprox;
using bestprox::proptest::Rng;

namespace {

std::vector<double> decades(int from, int to) {
    std::vector<double> out;
    for (int i = from; i <= to; ++i) out.push_back(std::pow(10.0, -i));
    return out;
}

}  // namespace

TEST(FFunction, ClosedForms) {
    EXPECT_EQ(FFunction::log()(1.0), 0.0);
    EXPECT_EQ(FFunction::neg_inv_sqrt()(4.0), -0.5);
    EXPECT_DOUBLE_EQ(FFunction::log_quadratic()(1.0), std::numbers::ln2);
    EXPECT_DOUBLE_EQ(FFunction::log_plus_linear()(1.0), 1.0);
    EXPECT_DOUBLE_EQ(eval(FFunction::log(), std::numbers::e), 1.0);
    EXPECT_DOUBLE_EQ(FFunction::log_quadratic()(2.0), std::log(6.0));
}

TEST(FFunction, NamesAndExponents) {
    EXPECT_EQ(FFunction::from_name("f1").kind(), FKind::Log);
    EXPECT_EQ(FFunction::from_name("f2").kind(), FKind::LogPlusLinear);
    EXPECT_EQ(FFunction::from_name("f3").kind(), FKind::NegInvSqrt);
    EXPECT_EQ(FFunction::from_name("f4").kind(), FKind::LogQuadratic);
    EXPECT_THROW(FFunction::from_name("f5"), Error);
    EXPECT_EQ(FFunction::log().name(), "f1");
    EXPECT_EQ(FFunction::log().k_exponent(), 0.5);
    EXPECT_EQ(FFunction::log_plus_linear().k_exponent(), 0.5);
    EXPECT_EQ(FFunction::log_quadratic().k_exponent(), 0.5);
    // -alpha^(k - 1/2) vanishes at 0 only for k > 1/2
    EXPECT_GT(FFunction::neg_inv_sqrt().k_exponent(), 0.5);
    EXPECT_LT(FFunction::neg_inv_sqrt().k_exponent(), 1.0);
    EXPECT_EQ(FFunction::log().with_exponent(0.3).k_exponent(), 0.3);
    EXPECT_THROW(FFunction::log().with_exponent(1.0), Error);
    EXPECT_THROW(FFunction::log().with_exponent(0.0), Error);
}

TEST(FFunction, Errors) {
    for (const auto& f : proptest::canonical_fs()) {
        try {
            (void)f(0.0);
            ADD_FAILURE();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NonPositiveArgument);
        }
        EXPECT_THROW((void)f(-1.0), Error);
    }
    const auto table = FFunction::custom({{1, 0}, {2, 1}, {4, 3}});
    EXPECT_EQ(table(2.0), 1.0);
    EXPECT_EQ(table.name(), "custom");
    try {
        (void)table(3.0);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsampledPoint);
    }
    EXPECT_THROW((void)table(5.0), Error);
    EXPECT_THROW(FFunction::custom({{1, 0}, {2, 0}}), Error);
    EXPECT_THROW(FFunction::custom({{2, 0}, {1, 1}}), Error);
    EXPECT_THROW(FFunction::custom({{0, 0}, {1, 1}}), Error);
    EXPECT_THROW(FFunction::custom({}), Error);
}

TEST(ValidateF1, Examples) {
    const std::vector<double> g1 = {0.1, 1, 10};
    EXPECT_TRUE(validate_f1(FFunction::log(), g1).holds);
    const std::vector<double> g3 = {0.25, 1, 4};
    EXPECT_TRUE(validate_f1(FFunction::neg_inv_sqrt(), g3).holds);

    const auto swapped = FFunction::custom_unchecked({{1, 0}, {2, 2}, {3, 1}, {4, 3}});
    const std::vector<double> grid = {1, 2, 3, 4};
    const auto v = validate_f1(swapped, grid);
    EXPECT_FALSE(v.holds);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->first, 2.0);
    EXPECT_EQ(v.witness->second, 3.0);

    const std::vector<double> one = {1};
    EXPECT_THROW(validate_f1(FFunction::log(), one), Error);
    const std::vector<double> neg = {-1, 1};
    EXPECT_THROW(validate_f1(FFunction::log(), neg), Error);
    const std::vector<double> desc = {2, 1};
    EXPECT_THROW(validate_f1(FFunction::log(), desc), Error);
    const std::vector<double> unsampled = {1, 2.5};
    EXPECT_THROW(validate_f1(swapped, unsampled), Error);
}

TEST(ValidateF1Property, CanonicalKindsOnRandomGrids) {
    Rng rng(1101);
    std::uniform_real_distribution<double> exponent(-12.0, 12.0);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> grid;
        const std::size_t n = proptest::uniform(rng, 2, 40);
        for (std::size_t i = 0; i < n; ++i) grid.push_back(std::pow(10.0, exponent(rng)));
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        if (grid.size() < 2) continue;
        for (const auto& f : proptest::canonical_fs()) {
            EXPECT_TRUE(validate_f1(f, grid).holds) << f.name() << " trial " << trial;
        }
    }
}

TEST(FFunctionProperty, MonotoneAndDeterministic) {
    Rng rng(1102);
    std::uniform_real_distribution<double> exponent(-8.0, 8.0);
    for (int trial = 0; trial < 2000; ++trial) {
        double a = std::pow(10.0, exponent(rng));
        double b = std::pow(10.0, exponent(rng));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        for (const auto& f : proptest::canonical_fs()) {
            EXPECT_LT(f(a), f(b)) << f.name() << " at " << a << " < " << b;
            const double first = f(a);
            const double second = f(a);
            EXPECT_EQ(std::memcmp(&first, &second, sizeof(double)), 0);
        }
    }
}

TEST(ProbeF2F3, LogIsConsistent) {
    const auto probe = decades(1, 8);
    const auto rec = probe_f2_f3(FFunction::log(), probe);
    EXPECT_TRUE(rec.decreasing);
    EXPECT_TRUE(rec.unbounded);
    EXPECT_TRUE(rec.weighted_vanishing);
    EXPECT_TRUE(rec.consistent);
    // 1e-4 * ln(1e-8), frozen from an independent evaluation
    EXPECT_NEAR(rec.weighted.back(), -0.0018420680743952368, 1e-15);
    EXPECT_EQ(rec.values.size(), 8u);
}

TEST(ProbeF2F3, CanonicalKindsAreConsistent) {
    const auto probe = decades(1, 8);
    for (const auto& f : proptest::canonical_fs()) {
        EXPECT_TRUE(probe_f2_f3(f, probe).consistent) << f.name();
    }
}

TEST(ProbeF2F3, FlatteningTableIsInconsistent) {
    // ordinates approach -2 geometrically: bounded below
    std::vector<FFunction::Sample> table;
    const auto probe = decades(1, 8);
    for (int i = 8; i >= 1; --i) table.push_back({std::pow(10.0, -i), -2.0 + std::pow(0.5, i)});
    const auto f = FFunction::custom(table);
    const auto rec = probe_f2_f3(f, probe);
    EXPECT_TRUE(rec.decreasing);
    EXPECT_FALSE(rec.unbounded);
    EXPECT_NEAR(rec.projected_limit, -2.0, 1e-9);
    EXPECT_FALSE(rec.consistent);
}

TEST(ProbeF2F3, InputValidation) {
    const std::vector<double> short_probe = {1, 0.1, 0.01, 0.001};
    EXPECT_THROW(probe_f2_f3(FFunction::log(), short_probe), Error);
    const std::vector<double> ascending = {0.1, 0.2, 0.3, 0.4, 0.5};
    EXPECT_THROW(probe_f2_f3(FFunction::log(), ascending), Error);
    const std::vector<double> zero = {1, 0.5, 0.25, 0.125, 0};
    EXPECT_THROW(probe_f2_f3(FFunction::log(), zero), Error);
}
