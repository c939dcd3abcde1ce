#include <doctest.h>

#include <cstdint>
#include <vector>

#include "flatknot/canonical.hpp"
#include "flatknot/gauss_code.hpp"
#include "flatknot/generators.hpp"
#include "flatknot/plane_curve.hpp"

using namespace flatknot;

namespace {

std::size_t count_degree(const PlaneCurve& c, std::size_t degree) {
    std::size_t n = 0;
    for (const auto& f : c.faces())
        if (f.degree() == degree) ++n;
    return n;
}

}  // namespace

TEST_CASE("twist cycles have the advertised size and shape") {
    for (std::uint32_t p = 1; p <= 5; ++p) {
        const PlaneCurve c = torus_2q(p);
        CHECK(c.vertex_count() == 2 * p + 1);
        CHECK(c.validate().ok());
        CHECK(c.faces().size() == c.vertex_count() + 2);
    }
    CHECK(canonical_key(torus_2q(1)) ==
          canonical_key(read_gauss_text("1 2 3 1 2 3\n")));
    CHECK_THROWS_AS(torus_2q(0), CurveError);
}

TEST_CASE("kink chains are rows of monogons on a circle") {
    CHECK(kink_chain(0).is_trivial());
    for (std::uint32_t k = 1; k <= 6; ++k) {
        const PlaneCurve c = kink_chain(k);
        CHECK(c.vertex_count() == k);
        CHECK(c.validate().ok());
        // a lone curl is a figure of two lobes, both monogons on the sphere
        CHECK(count_degree(c, 1) == (k == 1 ? 2 : k));
    }
}

TEST_CASE("pretzel columns close into the documented families") {
    CHECK(canonical_key(pretzel({3})) == canonical_key(torus_2q(1)));
    CHECK(canonical_key(pretzel({1, 1, 1})) == canonical_key(torus_2q(1)));

    const PlaneCurve c = pretzel({2, 3, 5});
    CHECK(c.vertex_count() == 10);
    CHECK(c.validate().ok());

    const PlaneCurve d = pretzel({3, 5, 7});
    CHECK(d.vertex_count() == 15);
    CHECK(d.validate().ok());
}

TEST_CASE("pretzel parameter and component errors") {
    CHECK_THROWS_AS(pretzel({}), CurveError);
    CHECK_THROWS_AS(pretzel({3, 0, 5}), CurveError);
    // two even columns split the rails into separate circuits
    CHECK_THROWS_AS(pretzel({2, 2}), CurveError);
    CHECK_THROWS_AS(pretzel({2, 3, 4}), CurveError);
}

TEST_CASE("two-bridge staircases match their twist totals") {
    CHECK(canonical_key(two_bridge({3})) == canonical_key(torus_2q(1)));
    CHECK(canonical_key(two_bridge({1, 1, 1})) == canonical_key(torus_2q(1)));

    const struct {
        std::vector<std::uint32_t> a;
        std::size_t vertices;
    } rows[] = {
        {{2, 2}, 4}, {{2, 3}, 5}, {{3, 4}, 7}, {{1, 2, 2}, 5}, {{29, 30}, 59},
    };
    for (const auto& row : rows) {
        const PlaneCurve c = two_bridge(row.a);
        CHECK(c.vertex_count() == row.vertices);
        CHECK(c.validate().ok());
    }
}

TEST_CASE("two-bridge lists with an even fraction numerator are rejected") {
    // The plat closure never yields one circuit when the continued-fraction
    // numerator is even, independent of twist handedness; runs of 2s
    // alternate parity with their length.
    CHECK_THROWS_AS(two_bridge({2}), CurveError);
    CHECK_THROWS_AS(two_bridge({1, 1}), CurveError);
    CHECK_THROWS_AS(two_bridge({2, 2, 2}), CurveError);
    for (int k = 1; k <= 10; ++k) {
        const std::vector<std::uint32_t> twos(static_cast<std::size_t>(k), 2);
        if (k % 2 == 0) {
            const PlaneCurve c = two_bridge(twos);
            CHECK(c.vertex_count() == static_cast<std::size_t>(2 * k));
            CHECK(c.validate().ok());
        } else {
            CHECK_THROWS_AS(two_bridge(twos), CurveError);
        }
    }
    CHECK_THROWS_AS(two_bridge({}), CurveError);
    CHECK_THROWS_AS(two_bridge({0, 3}), CurveError);
}

TEST_CASE("clasp chains have 4mn crossings and no free reductions") {
    const struct {
        std::uint32_t m, n;
    } rows[] = {{1, 4}, {2, 4}, {1, 5}, {2, 5}, {3, 4}, {1, 6}, {4, 6}};
    for (const auto& row : rows) {
        const PlaneCurve c = p_family(row.m, row.n);
        CHECK(c.vertex_count() == 4u * row.m * row.n);
        CHECK(c.validate().ok());
        // no monogons and no trigons: the only legal moves on the chain
        // itself grow the curve or spend a bigon removal
        CHECK(count_degree(c, 1) == 0);
        CHECK(count_degree(c, 3) == 0);
        // one clasp eye per pair of adjacent twist crossings
        CHECK(count_degree(c, 2) == 2u * row.n * (2u * row.m - 1u));
    }
    CHECK_THROWS_AS(p_family(0, 4), CurveError);
    CHECK_THROWS_AS(p_family(1, 3), CurveError);
}

TEST_CASE("the frozen sixteen-crossing fixture matches its generator") {
    const PlaneCurve hy = hagge_yazinski();
    CHECK(hy.vertex_count() == 16);
    CHECK(hy.validate().ok());
    CHECK(hy.faces().size() == 18);
    CHECK(canonical_key(hy) == canonical_key(p_family(1, 4)));
}
