#include <doctest.h>

#include <flatknot/canonical.hpp>
#include <flatknot/gauss_code.hpp>
#include <flatknot/moves.hpp>
#include <flatknot/trace.hpp>
#include <flatknot/trace_json.hpp>

#include <string>
#include <vector>

using namespace flatknot;

namespace {

Move first_move(const PlaneCurve& c, MoveKind kind) {
    MovePolicy p{false, false, false, false};
    switch (kind) {
        case MoveKind::r1_plus: p.r1_plus = true; break;
        case MoveKind::r1_minus: p.r1_minus = true; break;
        case MoveKind::r2_minus: p.r2_minus = true; break;
        case MoveKind::r3: p.r3 = true; break;
    }
    const auto moves = enumerate_moves(c, p);
    REQUIRE(!moves.empty());
    return moves.front();
}

// trivial -> kink -> two crossings, then back down by a bigon removal.
Trace up_up_down() {
    Trace t;
    t.initial = PlaneCurve::trivial();
    auto c = t.initial;
    for (int i = 0; i < 2; ++i) {
        const auto m = first_move(c, MoveKind::r1_plus);
        t.steps.push_back(m);
        c = apply_move(c, m);
    }
    const auto moves = enumerate_moves(c, {false, false, true, false});
    if (!moves.empty()) {
        t.steps.push_back(moves.front());
        c = apply_move(c, moves.front());
    }
    t.claimed_final = c;
    return t;
}

}  // namespace

TEST_CASE("empty trace on the trivial curve verifies at cost zero") {
    const Trace t;
    const auto report = verify_trace(t);
    CHECK(report.ok);
    CHECK(report.final_matches);
    CHECK(report.r2_minus_count == 0);
    CHECK(report.steps_replayed == 0);
    CHECK(!report.first_bad_step.has_value());
}

TEST_CASE("kink removal trace verifies at cost zero") {
    const auto k = curve_from_word({0, 0});
    Trace t{k, {first_move(k, MoveKind::r1_minus)}, PlaneCurve::trivial()};
    const auto report = verify_trace(t);
    CHECK(report.ok);
    CHECK(report.r2_minus_count == 0);
    CHECK(report.steps_replayed == 1);
}

TEST_CASE("bigon removal trace costs one") {
    const auto c = curve_from_word({0, 0, 1, 1});
    const auto bigons = enumerate_moves(c, {false, false, true, false});
    REQUIRE(bigons.size() == 1);
    const Trace t{c, {bigons.front()}, apply_move(c, bigons.front())};
    const auto report = verify_trace(t);
    CHECK(report.ok);
    CHECK(report.r2_minus_count == 1);
    CHECK(count_r2_minus(t.steps) == 1);
}

TEST_CASE("a wrong final claim is reported at the post-replay index") {
    const auto k = curve_from_word({0, 0});
    const Trace t{k, {first_move(k, MoveKind::r1_minus)}, k};
    const auto report = verify_trace(t);
    CHECK(!report.ok);
    CHECK(!report.final_matches);
    REQUIRE(report.first_bad_step.has_value());
    CHECK(*report.first_bad_step == 1);
    CHECK(report.issue == "replayed final does not match the claimed final");
}

TEST_CASE("an inapplicable step is reported with its index and reason") {
    const auto k = curve_from_word({0, 0});
    Trace t{k, {first_move(k, MoveKind::r1_minus)}, PlaneCurve::trivial()};
    t.steps.push_back(Move{MoveKind::r3, 0, 0, true});  // no trigon on the trivial curve
    const auto report = verify_trace(t);
    CHECK(!report.ok);
    REQUIRE(report.first_bad_step.has_value());
    CHECK(*report.first_bad_step == 1);
    CHECK(report.issue.find("trigon") != std::string::npos);
    CHECK(report.steps_replayed == 1);
}

TEST_CASE("the final comparison folds mirrors by default but not when oriented") {
    const auto c = curve_from_signed_code({{0, 1, 2, 0, 1, 2}, {'+', '-', '+'}});
    const Trace t{c, {}, c.mirrored()};
    CHECK(verify_trace(t).ok);
    const auto oriented = verify_trace(t, Equivalence::oriented);
    // The standard three-crossing projection happens to be amphichiral, so
    // probe chirality with a kink flower of mixed handedness. If the
    // mirrored copy extracts to the same key the check stays vacuous.
    const auto kinked = curve_from_signed_code({{0, 0, 1, 1, 2, 2}, {'+', '+', '-'}});
    const Trace t2{kinked, {}, kinked.mirrored()};
    CHECK(verify_trace(t2).ok);
    if (canonical_key(kinked, Equivalence::oriented) !=
        canonical_key(kinked.mirrored(), Equivalence::oriented))
        CHECK(!verify_trace(t2, Equivalence::oriented).ok);
    (void)oriented;
}

TEST_CASE("concatenation with an empty trace is the identity up to class") {
    const auto k = curve_from_word({0, 0});
    const Trace a{k, {first_move(k, MoveKind::r1_minus)}, PlaneCurve::trivial()};
    const Trace empty{PlaneCurve::trivial(), {}, PlaneCurve::trivial()};
    const auto joined = concat_traces(a, empty);
    CHECK(joined.steps == a.steps);
    CHECK(canonical_key(joined.claimed_final) == canonical_key(a.claimed_final));
    CHECK(verify_trace(joined).ok);
}

TEST_CASE("concatenation re-anchors the second trace and adds costs") {
    // a: two-kink chain -> bigon removal -> trivial (cost 1).
    // b: trivial -> kink -> trivial (cost 0), stated on its own labels.
    const auto c = curve_from_word({0, 0, 1, 1});
    const Trace a{c, {first_move(c, MoveKind::r2_minus)}, PlaneCurve::trivial()};
    Trace b;
    const auto up = first_move(PlaneCurve::trivial(), MoveKind::r1_plus);
    const auto kinked = apply_move(PlaneCurve::trivial(), up);
    b.initial = PlaneCurve::trivial();
    b.steps = {up, first_move(kinked, MoveKind::r1_minus)};
    b.claimed_final = PlaneCurve::trivial();
    REQUIRE(verify_trace(b).ok);

    const auto joined = concat_traces(a, b);
    CHECK(joined.steps.size() == 3);
    CHECK(count_r2_minus(joined.steps) ==
          count_r2_minus(a.steps) + count_r2_minus(b.steps));
    const auto report = verify_trace(joined);
    CHECK(report.ok);
    CHECK(report.r2_minus_count == 1);
}

TEST_CASE("concatenation rejects mismatched endpoints") {
    const auto k = curve_from_word({0, 0});
    const Trace a{k, {}, k};
    const Trace b{PlaneCurve::trivial(), {}, PlaneCurve::trivial()};
    CHECK_THROWS_WITH_AS(concat_traces(a, b), doctest::Contains("endpoints"), CurveError);
}

TEST_CASE("concatenation rejects a first trace that does not replay to its claim") {
    const auto k = curve_from_word({0, 0});
    const Trace a{k, {first_move(k, MoveKind::r1_minus)}, k};
    const Trace b{k, {}, k};
    CHECK_THROWS_WITH_AS(concat_traces(a, b), doctest::Contains("replay"), CurveError);
}

TEST_CASE("trace JSON round-trips and replays against its own text") {
    for (const Trace& t :
         {up_up_down(),
          Trace{curve_from_word({0, 1, 2, 0, 1, 2}),
                {first_move(curve_from_word({0, 1, 2, 0, 1, 2}), MoveKind::r3)},
                apply_move(curve_from_word({0, 1, 2, 0, 1, 2}),
                           first_move(curve_from_word({0, 1, 2, 0, 1, 2}), MoveKind::r3))}}) {
        REQUIRE(verify_trace(t).ok);
        const auto text = write_trace_json(t);
        const auto back = read_trace_json(text);
        const auto report = verify_trace(back);
        CHECK(report.ok);
        CHECK(report.r2_minus_count == count_r2_minus(t.steps));
        CHECK(back.steps.size() == t.steps.size());
        CHECK(canonical_key(back.initial) == canonical_key(t.initial));
        CHECK(canonical_key(back.claimed_final) == canonical_key(t.claimed_final));
        // A second hop through the codec is bit-stable: the text baseline is
        // its own fixed point.
        CHECK(write_trace_json(back) == text);
    }
}

TEST_CASE("trace JSON preserves step kinds and site shapes") {
    const auto t = up_up_down();
    const auto j = trace_to_json(t);
    REQUIRE(j.at("steps").size() == t.steps.size());
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& step = j.at("steps").at(i);
        CHECK(step.at("kind").get<std::string>() == kind_name(t.steps[i].kind));
        if (t.steps[i].kind == MoveKind::r1_plus)
            CHECK(step.at("site").is_array());
        else
            CHECK(step.at("site").is_number_unsigned());
    }
}

TEST_CASE("an unverifiable final claim survives the codec") {
    const auto k = curve_from_word({0, 0});
    const Trace t{k, {first_move(k, MoveKind::r1_minus)}, k};
    const auto back = read_trace_json(write_trace_json(t));
    const auto report = verify_trace(back);
    CHECK(!report.ok);
    CHECK(!report.final_matches);
}

TEST_CASE("malformed trace JSON is rejected") {
    CHECK_THROWS_WITH_AS(read_trace_json("not json"), doctest::Contains("malformed"),
                         CurveError);
    CHECK_THROWS_WITH_AS(read_trace_json("{\"initial\": \"\\n\"}"),
                         doctest::Contains("malformed"), CurveError);
    CHECK_THROWS_WITH_AS(
        read_trace_json(
            R"({"initial": "\n", "steps": [{"kind": "R9", "site": 0}], "final": "\n"})"),
        doctest::Contains("unknown move kind"), CurveError);
    CHECK_THROWS_WITH_AS(
        read_trace_json(
            R"({"initial": "\n", "steps": [{"kind": "R1+", "site": 0}], "final": "\n"})"),
        doctest::Contains("[dart, side]"), CurveError);
    CHECK_THROWS_WITH_AS(
        read_trace_json(
            R"({"initial": "\n", "steps": [{"kind": "R1+", "site": [0, "X"]}], "final": "\n"})"),
        doctest::Contains("L or R"), CurveError);
    CHECK_THROWS_WITH_AS(
        read_trace_json(
            R"({"initial": "\n", "steps": [{"kind": "R3", "site": [0, "L"]}], "final": "\n"})"),
        doctest::Contains("face index"), CurveError);
}
