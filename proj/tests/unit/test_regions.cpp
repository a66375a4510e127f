#include <doctest.h>

#include "tileasm/oracles.hpp"

using namespace tileasm;
namespace or_ = tileasm::oracle;

namespace {
BiInfinitePath P(const char* s) { return parse_biinfinite(s); }
const char* kWall = "E|@(0,0)|E";
const char* kStep = "E|@(0,0)N|E";

std::set<Point> window_where(Window w, auto pred) {
    std::set<Point> out;
    for (int i = 0; i < w.size(); ++i)
        if (pred(w.at(i))) out.insert(w.at(i));
    return out;
}
}  // namespace

TEST_CASE("bi-infinite path serialization round-trips") {
    CHECK(to_string(P(kStep)) == kStep);
    CHECK(to_string(P("SS|SENES@(1,-2)SWSSW|NW")) == "SS|SENES@(1,-2)SWSSW|NW");
    CHECK_THROWS_AS(P("E|@(0,0)N"), Error);
    CHECK_THROWS_AS(P("E|@(0,0)N|"), Error);
}

TEST_CASE("side_of") {
    Window w{4};
    CHECK(side_of(P(kWall), {0, -1}, w) == Side::Right);
    CHECK(side_of(P(kWall), {0, 1}, w) == Side::Left);
    CHECK(side_of(P(kWall), {3, 0}, w) == Side::On);
    CHECK(side_of(P(kStep), {1, 0}, w) == Side::Right);
    CHECK(or_::side_by_parity(window_path(P(kStep), w), {1, 0}) == Side::Right);
    CHECK_THROWS_AS(side_of(P(kWall), {9, 0}, w), Error);
}

TEST_CASE("window_path rejects re-entry and self-intersection") {
    Window w{3};
    try {
        // Leaves east at y=0, then the period brings it back west at y=1.
        window_path(P("E|@(0,0)EEEENWWWWWWWW|N"), w);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK((e.kind() == ErrorKind::PathReentersWindow || e.kind() == ErrorKind::SimplicityViolation));
    }
    try {
        window_path(P("E|@(0,0)NWS|S"), w);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SimplicityViolation);
    }
    try {
        window_path(P("E|@(5,0)|E"), w);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PointOutsideWindow);
    }
}

TEST_CASE("region_members of the wall") {
    Window w{2};
    auto right = region_members(P(kWall), Side::Right, w);
    auto left = region_members(P(kWall), Side::Left, w);
    CHECK(right == window_where(w, [](Point q) { return q.y <= 0; }));
    CHECK(left == window_where(w, [](Point q) { return q.y >= 0; }));
    std::set<Point> both;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::inserter(both, both.end()));
    CHECK(both == window_where(w, [](Point q) { return q.y == 0; }));
    CHECK_THROWS_AS(region_members(P(kWall), Side::On, w), Error);
}

TEST_CASE("region_interior needs the full 9-neighbourhood") {
    std::set<Point> block = window_where(Window{2}, [](Point q) { return q.y <= 0; });
    auto inner = region_interior(block);
    CHECK(inner.count({0, -1}));
    CHECK_FALSE(inner.count({0, 0}));
    CHECK_FALSE(inner.count({2, -1}));
}

TEST_CASE("line_side") {
    CHECK(line_side({1, 2}, {0, 0}, {1, 0}) == Side::Left);
    CHECK(line_side({5, 0}, {0, 0}, {1, 0}) == Side::On);
    CHECK(line_side({3, -1}, {0, 0}, {1, 0}) == Side::Right);
    CHECK_THROWS_AS(line_side({0, 0}, {0, 0}, {0, 0}), Error);
}

TEST_CASE("ribbon_contains") {
    CHECK(ribbon_contains({0, 1}, {0, 0}, {1, 0}, {5, 0}));
    CHECK_FALSE(ribbon_contains({0, 1}, {0, 0}, {1, 0}, {5, 2}));
    CHECK(ribbon_contains({0, 1}, {0, 0}, {1, 0}, {-3, 1}));
    CHECK_THROWS_AS(ribbon_contains({0, 1}, {0, 0}, {0, 0}, {0, 0}), Error);
    try {
        ribbon_contains({0, 0}, {0, 0}, {1, 0}, {0, 0});
        FAIL("expected DegenerateRibbon");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateRibbon);
    }
    try {
        ribbon_contains({0, -1}, {0, 0}, {1, 0}, {0, 0});
        FAIL("expected DegenerateRibbon");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateRibbon);
    }
}

TEST_CASE("region_intersection_component") {
    Window w{3};
    auto lower = window_where(w, [](Point q) { return q.y <= 0; });
    auto same = region_intersection_component(P(kWall), P(kWall), Side::Right, Side::Right, {0, -1}, w);
    CHECK(same.members == lower);
    CHECK(same.reaches_boundary);

    // Oracle: both parity sides admit the point; the set is the lower half
    // plane, which is connected.
    auto wall = window_path(P(kWall), w), step = window_path(P(kStep), w);
    auto by_parity = window_where(w, [&](Point q) {
        return or_::side_by_parity(wall, q) != Side::Left && or_::side_by_parity(step, q) != Side::Left;
    });
    CHECK(by_parity == lower);
    auto mixed = region_intersection_component(P(kWall), P(kStep), Side::Right, Side::Right, {1, 0}, w);
    CHECK(mixed.members == lower);
    CHECK(mixed.reaches_boundary);

    try {
        region_intersection_component(P(kWall), P(kWall), Side::Right, Side::Right, {0, 1}, w);
        FAIL("expected StartOutsideIntersection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::StartOutsideIntersection);
    }
}

TEST_CASE("property: sides cover the window and meet on the path") {
    or_::Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        Window w{6 + i % 10};
        BiInfinitePath p = or_::random_biinfinite(rng, w);
        auto left = region_members(p, Side::Left, w), right = region_members(p, Side::Right, w);
        RegionMap rm(p, w);
        std::set<Point> path(rm.path().vertices.begin(), rm.path().vertices.end());
        INFO(to_string(p) << " radius " << w.radius);
        for (int k = 0; k < w.size(); ++k) {
            Point q = w.at(k);
            REQUIRE((left.count(q) || right.count(q)));
            REQUIRE((left.count(q) && right.count(q)) == (path.count(q) == 1));
        }
    }
}

TEST_CASE("property: flood fill agrees with crossing parity") {
    or_::Rng rng(4);
    const Window w{20};
    for (int i = 0; i < 200; ++i) {
        BiInfinitePath p = or_::random_biinfinite(rng, w);
        RegionMap rm(p, w);
        INFO(to_string(p));
        for (int k = 0; k < w.size(); ++k) REQUIRE(rm.side(w.at(k)) == or_::side_by_parity(rm.path(), w.at(k)));
    }
}

TEST_CASE("property: vertices directly left of the path are Left") {
    or_::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        Window w{8};
        BiInfinitePath p = or_::random_biinfinite(rng, w);
        RegionMap rm(p, w);
        std::vector<Point> vs{rm.path().enter};
        vs.insert(vs.end(), rm.path().vertices.begin(), rm.path().vertices.end());
        vs.push_back(rm.path().leave);
        INFO(to_string(p));
        for (std::size_t j = 1; j + 1 < vs.size(); ++j) {
            Direction in{}, out{};
            for (Direction d : kDirections) {
                if (vs[j - 1] + unit(d) == vs[j]) in = d;
                if (vs[j] + unit(d) == vs[j + 1]) out = d;
            }
            for (Direction d : {turn_left(in), turn_left(out)}) {
                Point q = vs[j] + unit(d);
                if (!w.contains(q) || rm.side(q) == Side::On) continue;
                REQUIRE(rm.side(q) == Side::Left);
            }
        }
    }
}

TEST_CASE("property: line_side is invariant under translation and positive scaling") {
    or_::Rng rng(6);
    std::uniform_int_distribution<int> c(-50, 50), k(1, 9);
    for (int i = 0; i < 10000; ++i) {
        Point q{c(rng), c(rng)}, base{c(rng), c(rng)};
        Vec2 v{c(rng) % 7, c(rng) % 7}, t{c(rng), c(rng)};
        if (v.is_zero()) continue;
        Side s = line_side(q, base, v);
        REQUIRE(line_side(q + t, base + t, v) == s);
        REQUIRE(line_side(q, base, v * k(rng)) == s);
    }
}
