#include <doctest.h>

#include "tileasm/oracles.hpp"

using namespace tileasm;
namespace or_ = tileasm::oracle;

namespace {

Word W(const char* s) { return parse_word(s); }
std::string S(const Word& w) { return to_string(w); }
Ray fwd(const char* m, const char* p) { return Ray(W(m), W(p)); }
Ray bwd(const char* p, const char* m) { return Ray(W(m), W(p), Orientation::Backward); }

// Side of a half-integer point (given doubled) against the windowed path
// closed through the outer ring, by crossing parity. Used for edge
// midpoints, which never lie on a lattice line crossing.
struct Polygon {
    std::vector<Point> ring;  // doubled coordinates
    explicit Polygon(const WindowedPath& wp) {
        const int q = wp.window.radius + 1;
        std::vector<Point> pts{wp.enter};
        pts.insert(pts.end(), wp.vertices.begin(), wp.vertices.end());
        pts.push_back(wp.leave);
        auto next = [q](Point p) -> Point {
            if (p.y == -q && p.x < q) return {p.x + 1, p.y};
            if (p.x == q && p.y < q) return {p.x, p.y + 1};
            if (p.y == q && p.x > -q) return {p.x - 1, p.y};
            return {p.x, p.y - 1};
        };
        for (Point p = next(wp.leave); p != wp.enter; p = next(p)) pts.push_back(p);
        for (Point p : pts) ring.push_back({2 * p.x, 2 * p.y});
    }
    // Edge midpoint: cast the ray along the edge's own axis offset, so it
    // never runs through a lattice vertex. Vertical edges (x even) cast to
    // +x, horizontal ones (x odd) to +y.
    bool inside2(Point m) const {
        bool in = false;
        const bool east = m.x % 2 == 0;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            Point a = ring[i], b = ring[(i + 1) % ring.size()];
            if (east) {
                if (a.x != b.x || a.x <= m.x) continue;
                if (m.y > std::min(a.y, b.y) && m.y < std::max(a.y, b.y)) in = !in;
            } else {
                if (a.y != b.y || a.y <= m.y) continue;
                if (m.x > std::min(a.x, b.x) && m.x < std::max(a.x, b.x)) in = !in;
            }
        }
        return in;
    }
};

bool on_path(const WindowedPath& wp, Point a, Point b) {
    for (std::size_t i = 0; i + 1 < wp.vertices.size(); ++i)
        if ((wp.vertices[i] == a && wp.vertices[i + 1] == b) || (wp.vertices[i] == b && wp.vertices[i + 1] == a))
            return true;
    auto touches = [&](Point x, Point y) { return (a == x && b == y) || (a == y && b == x); };
    return touches(wp.enter, wp.vertices.front()) || touches(wp.vertices.back(), wp.leave);
}

bool edge_in(const WindowedPath& wp, const Polygon& poly, Point a, Point b, Side s) {
    if (on_path(wp, a, b)) return true;
    bool left = poly.inside2({a.x + b.x, a.y + b.y});
    return (s == Side::Left) == left;
}

// Straight reading of the definition: from the current vertex take the
// rightmost (leftmost) direction whose edge is on f or f2 and lies in both
// regions, never revisiting.
Word brute_cogrow(const or_::CoGrowInstance& in, long max_steps) {
    auto w1 = window_path({{0, 0}, in.b, in.f}, in.window), w2 = window_path({{0, 0}, in.b2, in.f2}, in.window);
    Polygon p1(w1), p2(w2);
    auto edges = [&](const Ray& r) {
        std::set<std::pair<Point, Point>> e;
        auto vs = ray_vertices(r, {0, 0}, 8L * in.window.size());
        for (std::size_t i = 0; i + 1 < vs.size(); ++i) e.insert({vs[i], vs[i + 1]}), e.insert({vs[i + 1], vs[i]});
        return e;
    };
    auto e1 = edges(in.f), e2 = edges(in.f2);
    Word out{in.f.first_direction()};
    Point cur = Point{0, 0} + unit(out[0]);
    std::set<Point> seen{{0, 0}, cur};
    while (static_cast<long>(out.size()) < max_steps) {
        Direction d = out.back();
        auto order = in.side == Side::Right ? std::array{turn_right(d), d, turn_left(d), opposite(d)}
                                            : std::array{turn_left(d), d, turn_right(d), opposite(d)};
        bool moved = false;
        for (Direction c : order) {
            Point nxt = cur + unit(c);
            if (!e1.count({cur, nxt}) && !e2.count({cur, nxt})) continue;
            if (!in.window.contains(nxt)) return out;
            if (seen.count(nxt)) continue;
            if (!edge_in(w1, p1, cur, nxt, in.side) || !edge_in(w2, p2, cur, nxt, in.side)) continue;
            out.push_back(c);
            seen.insert(nxt);
            cur = nxt;
            moved = true;
            break;
        }
        if (!moved) break;
    }
    return out;
}

Ray reflect(const Ray& r) { return Ray(reflect_ns(r.transient), reflect_ns(r.period), r.orientation); }

}  // namespace

TEST_CASE("co-grow of identical paths follows them") {
    auto res = cogrow(Side::Right, bwd("E", ""), fwd("N", "E"), bwd("E", ""), fwd("N", "E"), Window{6}, 200);
    CHECK(res.status == CoGrowStatus::Periodic);
    CHECK(S(res.transient) == "N");
    CHECK(S(res.period) == "E");
    CHECK(S(res.word) == "NEEEEEE");
}

TEST_CASE("right co-grow takes the rightmost branch") {
    or_::CoGrowInstance in{Side::Right, bwd("E", ""), fwd("NES", "E"), bwd("E", ""), fwd("N", "E"), Window{8}};
    Word brute = brute_cogrow(in, 100);
    CHECK(S(Word(brute.begin(), brute.begin() + 4)) == "NESE");
    auto res = cogrow(in.side, in.b, in.f, in.b2, in.f2, in.window, 100);
    CHECK(res.word == brute);
    CHECK(res.status == CoGrowStatus::Periodic);
    CHECK(S(res.transient) == "NES");
    CHECK(S(res.period) == "E");
    CHECK(res.trace[2].on_f_edge);
    CHECK_FALSE(res.trace[2].on_f2_edge);
    CHECK(or_::cogrow_violations(in, res).empty());
}

TEST_CASE("left co-grow of two staircases") {
    or_::CoGrowInstance in{Side::Left, bwd("E", ""), fwd("NNE", "E"), bwd("E", ""), fwd("NEEN", "E"), Window{8}};
    Word brute = brute_cogrow(in, 100);
    auto res = cogrow(in.side, in.b, in.f, in.b2, in.f2, in.window, 100);
    CHECK(res.word == brute);
    CHECK(S(brute) == "NNEEEEEEEE");
    CHECK(res.status == CoGrowStatus::Periodic);
    CHECK(S(res.transient) == "NN");
    CHECK(S(res.period) == "E");
}

TEST_CASE("co-grow input errors") {
    try {
        cogrow(Side::Right, bwd("E", ""), fwd("N", "E"), bwd("E", ""), fwd("E", "E"), Window{4}, 10);
        FAIL("expected MismatchedStart");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MismatchedStart);
    }
    try {
        cogrow(Side::Right, bwd("E", ""), fwd("NWS", "S"), bwd("E", ""), fwd("N", "E"), Window{4}, 10);
        FAIL("expected SimplicityViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SimplicityViolation);
    }
}

TEST_CASE("detect_period") {
    Ray e = fwd("", "E");
    auto single = detect_period(W("EEEEEE"), e, e);
    REQUIRE(single);
    CHECK(S(single->transient) == "");
    CHECK(S(single->period) == "E");

    CHECK_FALSE(detect_period(W("NE"), fwd("N", "E"), fwd("N", "E")));

    Ray ee = fwd("", "EE");
    auto row = detect_period(W("EEEEEEEE"), ee, ee);
    REQUIRE(row);
    CHECK(S(row->period) == "EE");

    auto norm = normalize_period({W("NEE"), W("NE")});
    CHECK(S(norm.transient) == "NE");
    CHECK(S(norm.period) == "EN");
}

TEST_CASE("property: co-grow matches a direct reading of the definition") {
    or_::Rng rng(31);
    for (int i = 0; i < 400; ++i) {
        auto in = or_::random_cogrow_instance(rng, 3, 8);
        long bound = 4L * in.window.size();
        auto res = cogrow(in.side, in.b, in.f, in.b2, in.f2, in.window, bound);
        INFO(in.serialize());
        REQUIRE(res.word == brute_cogrow(in, bound));
    }
}

TEST_CASE("property: co-grow invariants on random instances") {
    or_::Rng rng(32);
    int window_only = 0;
    for (int i = 0; i < 1000; ++i) {
        auto in = or_::random_cogrow_instance(rng, 4, 12);
        auto res = cogrow(in.side, in.b, in.f, in.b2, in.f2, in.window, 4L * in.window.size());
        auto bad = or_::cogrow_violations(in, res, &window_only);
        INFO(in.serialize() << " word " << S(res.word));
        REQUIRE(bad.empty());
    }
    MESSAGE("terminations bounded only by the co-grow window: " << window_only);
}

TEST_CASE("property: left co-grow is the mirror of right co-grow") {
    or_::Rng rng(33);
    for (int i = 0; i < 500; ++i) {
        auto in = or_::random_cogrow_instance(rng, 3, 9);
        long bound = 4L * in.window.size();
        auto res = cogrow(in.side, in.b, in.f, in.b2, in.f2, in.window, bound);
        Side other = in.side == Side::Right ? Side::Left : Side::Right;
        auto mirror =
            cogrow(other, reflect(in.b), reflect(in.f), reflect(in.b2), reflect(in.f2), in.window, bound);
        INFO(in.serialize());
        REQUIRE(reflect_ns(mirror.word) == res.word);
        REQUIRE(mirror.status == res.status);
    }
}
