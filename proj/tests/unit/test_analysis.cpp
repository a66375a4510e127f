#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tileasm/oracles.hpp"

using namespace tileasm;
namespace or_ = tileasm::oracle;

namespace {

Word W(const char* s) { return parse_word(s); }
std::string S(const Word& w) { return to_string(w); }

TAS load(const std::string& name) {
    std::ifstream in(std::string(TILEASM_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tas(ss.str());
}

OffTheWallRecord only_record(const char* word) {
    auto recs = find_off_the_wall(ground(W(word)), 0);
    REQUIRE(recs.size() == 1);
    return recs.front();
}

// Surface by crossing parity: points on or above the wall that the closure
// wE.(x0,0).excursion.Ew leaves on its right, minus the wall tails.
std::set<Point> surface_by_parity(int x0, const Word& ex) {
    int reach = std::abs(x0) + 2;
    for (Point q : ground(ex, {x0, 0}).vertices) reach = std::max({reach, std::abs(q.x) + 2, std::abs(q.y) + 2});
    Window w{reach};
    auto wp = window_path({{x0, 0}, Ray({}, W("E"), Orientation::Backward), Ray(ex, W("E"))}, w);
    const int x1 = x0 + displacement(ex).dx;
    std::set<Point> out;
    for (int i = 0; i < w.size(); ++i) {
        Point q = w.at(i);
        if (q.y < 0 || (q.y == 0 && (q.x < x0 || q.x > x1))) continue;
        if (or_::side_by_parity(wp, q) != Side::Left) out.insert(q);
    }
    return out;
}

bool contains(const std::set<Point>& big, const std::set<Point>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("non_causal on the comb") {
    Assembly a = grow_max(load("comb.tas"), Window{4}).assembly;
    auto nc = non_causal(a, {1, -1});
    CHECK(nc.count({2, -1}));
    CHECK_FALSE(nc.count({0, -1}));
    CHECK_FALSE(nc.count({0, 0}));
    CHECK(nc.count({1, -1}));
    CHECK(nc == or_::non_causal_by_deletion(a, {1, -1}));
    CHECK(non_causal(a, {0, 3}).size() == static_cast<std::size_t>(a.window.size()));
    CHECK(non_causal(a, {0, 0}).size() == static_cast<std::size_t>(a.window.size()));
}

TEST_CASE("verified_extend") {
    TAS tas = load("comb.tas");
    Assembly full = grow_max(tas, Window{4}).assembly;
    Assembly row = seed_assembly(tas, Window{4});
    for (Point p : {Point{0, -1}, Point{1, -1}, Point{2, -1}}) row.cells[p] = full.cells.at(p);

    Assembly ext = verified_extend(row, tas, {2, -1}, W("S"));
    CHECK(ext.at({2, -2})->name == "C");
    CHECK(ext.cells.at({2, -2}) == full.cells.at({2, -2}));

    try {
        verified_extend(row, tas, {1, -1}, W("W"));
        FAIL("expected NonCausalViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonCausalViolation);
    }
    CHECK(verified_extend(row, tas, {1, -1}, W("")).cells == row.cells);
    try {
        verified_extend(row, tas, {1, -1}, W("N"));  // B has no north partner
        FAIL("expected GlueMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GlueMismatch);
    }
    CHECK_THROWS_AS(verified_extend(row, tas, {3, 3}, W("N")), Error);
}

TEST_CASE("find_off_the_wall") {
    auto rec = only_record("WNEES");
    CHECK(rec.ell == 1);
    CHECK(rec.r == 5);
    CHECK(rec.x0 == -1);
    CHECK(rec.delta == 2);
    CHECK(rec.height == 1);
    CHECK(rec.area == 6);
    std::set<Point> want{{-1, 0}, {0, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}};
    CHECK(rec.surface == want);
    CHECK(surface_by_parity(-1, W("NEES")) == want);
    CHECK(S(rec.excursion()) == "NEES");
    CHECK_FALSE(rec.valuation);

    CHECK(find_off_the_wall(ground(W("NN")), 0).empty());

    auto small = only_record("WNES");
    CHECK(small.ell == 1);
    CHECK(small.r == 4);
    CHECK(small.delta == 1);
    CHECK(small.height == 1);

    // With an assembly the wall valuation is read off the endpoints.
    Assembly a = grow_max(load("allg.tas"), Window{3}).assembly;
    auto with = find_off_the_wall(ground(W("WNEES")), 0, &a);
    REQUIRE(with.size() == 1);
    REQUIRE(with[0].valuation);
    CHECK(with[0].valuation->first == "X");
    CHECK(with[0].valuation->second == "X");
}

TEST_CASE("points_of_interest") {
    CHECK(points_of_interest(only_record("WNEES")) == std::vector<int>{2});
    auto flat = find_off_the_wall(ground(W("SWNEE")), 0);
    REQUIRE_FALSE(flat.empty());
    CHECK(flat.back().height == 0);
    CHECK(points_of_interest(flat.back()).empty());
    auto tall = only_record("WNNEESS");
    auto poi = points_of_interest(tall);
    REQUIRE(poi.size() == 2);
    CHECK(tall.path.vertices[poi[0]].y != tall.path.vertices[poi[1]].y);
    CHECK(poi == std::vector<int>{2, 3});
}

TEST_CASE("combine_off_the_wall") {
    auto p = only_record("WNEES"), q = only_record("WNNEESS");
    auto same = combine_off_the_wall(p, p);
    CHECK(same.g == p.excursion());

    auto c = combine_off_the_wall(p, q);
    CHECK(S(c.g) == "NNEESS");
    CHECK(contains(surface_above(p.x0, c.g), p.surface));
    CHECK(contains(surface_above(q.x0, c.g), q.surface));
    CHECK(S(c.combined_p.word) == "WNNEESS");

    auto wide = only_record("WNEEES");
    try {
        combine_off_the_wall(p, wide);
        FAIL("expected WidthMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WidthMismatch);
    }
    auto pv = p, qv = q;
    pv.valuation = std::make_pair(std::string("A"), std::string("B"));
    qv.valuation = std::make_pair(std::string("A"), std::string("C"));
    try {
        combine_off_the_wall(pv, qv);
        FAIL("expected ValuationMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ValuationMismatch);
    }
}

TEST_CASE("ew_index_pairs") {
    CHECK(ew_index_pairs(ground(W("WWNEEES"))) == std::vector<std::pair<int, int>>{{2, 7}});
    CHECK(ew_index_pairs(ground(W("EEE"))).empty());
    CHECK(ew_index_pairs(ground(W("WNES"))).empty());
}

TEST_CASE("rightmost_avoiding_path") {
    TAS tas = load("comb.tas");
    const Window w{6};
    Assembly a = grow_max(tas, w).assembly;
    Ray row({}, W("E"));
    auto r = rightmost_avoiding_path(a, {0, -1}, row, {0, -5}, w);
    CHECK_FALSE(r.stuck);
    CHECK(S(r.path.word) == "EEEEEE");
    CHECK(r.path.vertices.back() == Point{6, -1});

    try {
        rightmost_avoiding_path(a, {0, 2}, row, {0, -5}, w);
        FAIL("expected StartUnoccupied");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::StartUnoccupied);
    }

    // A single column below the seed, cut by the forbidden ray at y = -3.
    TAS column = parse_tas("seed S S=c\ntile C N=c S=c\n");
    Assembly col = grow_max(column, w).assembly;
    auto blocked = rightmost_avoiding_path(col, {0, 0}, row, {-6, -3}, w);
    CHECK(blocked.stuck);
    CHECK(blocked.path.word.empty());
}

TEST_CASE("special_points") {
    const Window w{8};
    GroundedPath row = ground(W("EEEEE"), {0, -1});
    auto sp = special_points(row, {0, -3}, W("E"), w);
    REQUIRE(sp.size() == row.vertices.size());
    for (std::size_t i = 0; i < sp.size(); ++i) {
        CHECK(sp[i].index == static_cast<int>(i));
        CHECK(sp[i].q.empty());
    }
    // Off to the west of the ray: no shift ever meets it.
    CHECK(special_points(ground(W("NNN"), {-3, 2}), {0, -3}, W("E"), w).empty());
    try {
        special_points(row, {0, -3}, W("NS"), w);
        FAIL("expected ZeroPeriodDisplacement");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroPeriodDisplacement);
    }
    try {
        special_points(row, {-2, -1}, W("E"), w);
        FAIL("expected PathIntersectsForbidden");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PathIntersectsForbidden);
    }
}

TEST_CASE("special_points with a finite hit restarts past it") {
    // A bump at x = 2 reaches y = -1 first; the rest of the path stays high.
    const Window w{8};
    GroundedPath p = ground(W("ESSENNEEE"), {0, 1});
    auto sp = special_points(p, {0, -4}, W("E"), w);
    REQUIRE_FALSE(sp.empty());
    CHECK(p.vertices[sp.front().index].y == -1);
    for (std::size_t i = 1; i < sp.size(); ++i) CHECK(sp[i].index > sp[i - 1].index);
}

TEST_CASE("find_periodic_assembly_path") {
    auto comb = find_periodic_assembly_path(load("comb.tas"), Window{8}, 4, 4);
    REQUIRE(comb.certificate);
    CHECK(S(comb.certificate->m) == "S");
    CHECK(S(comb.certificate->p) == "EE");
    CHECK(comb.certificate->tile_period == std::vector<std::string>{"A", "B"});
    CHECK(comb.certificate->verified_depth >= 3);
    CHECK(comb.note == "found");

    auto seed_only = find_periodic_assembly_path(load("seedonly.tas"), Window{8}, 4, 4);
    CHECK_FALSE(seed_only.certificate);
    CHECK(seed_only.note == "finite");

    auto allg = find_periodic_assembly_path(load("allg.tas"), Window{5}, 4, 4);
    REQUIRE(allg.certificate);
    CHECK(S(allg.certificate->p) == "E");
    CHECK(allg.certificate->verified_depth ==
          max_periodic_depth(Window{5}, {0, 0}, allg.certificate->m, allg.certificate->p));

    try {
        find_periodic_assembly_path(load("badseed.tas"), Window{6}, 4, 4);
        FAIL("expected NotConfluent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotConfluent);
    }
}

TEST_CASE("property: dominator NonCausal equals deletion and reachability") {
    or_::Rng rng(51);
    Assembly comb = grow_max(load("comb.tas"), Window{8}).assembly;
    std::vector<Assembly> corpus{comb};
    for (int i = 0; i < 50; ++i) {
        Window w{2 + i % 7};
        corpus.push_back(grow_max(or_::random_confluent_tas(rng, w), w).assembly);
    }
    for (const Assembly& a : corpus) {
        auto brute = or_::all_non_causal_by_deletion(a);
        std::size_t k = 0;
        for (const auto& [site, id] : a.cells) {
            INFO(to_string(site));
            REQUIRE(non_causal(a, site) == brute[k++]);
        }
    }
}

TEST_CASE("property: verified_extend agrees with grow_max") {
    or_::Rng rng(52);
    int extended = 0;
    for (int i = 0; i < 60; ++i) {
        Window w{5};
        TAS tas = or_::random_confluent_tas(rng, w);
        Assembly full = grow_max(tas, w).assembly;
        // A producible partial assembly: the tiles within distance 2.
        Assembly part = seed_assembly(tas, w);
        for (const auto& [p, id] : full.cells)
            if (std::abs(p.x) + std::abs(p.y) <= 2) part.cells[p] = id;
        BindingGraph g = binding_graph(part);
        for (const auto& [A, id] : part.cells) {
            for (int t = 0; t < 4; ++t) {
                Word p = or_::random_word(rng, 1, 4);
                try {
                    Assembly ext = verified_extend(part, tas, A, p);
                    ++extended;
                    for (const auto& [q, tid] : ext.cells) REQUIRE(full.cells.at(q) == tid);
                } catch (const Error& e) {
                    REQUIRE(e.kind() != ErrorKind::InvariantViolation);
                }
            }
        }
    }
    CHECK(extended > 50);
}

TEST_CASE("property: surfaces match crossing parity") {
    or_::Rng rng(53);
    for (int i = 0; i < 300; ++i) {
        GroundedPath gp = or_::random_off_the_wall_path(rng, 2 + i % 4);
        for (const auto& rec : find_off_the_wall(gp, 0)) {
            INFO(S(gp.word) << " ell " << rec.ell << " r " << rec.r);
            REQUIRE(rec.surface == surface_by_parity(rec.x0, rec.excursion()));
            REQUIRE(rec.area == static_cast<int>(rec.surface.size()));
        }
    }
}

TEST_CASE("property: combined surfaces contain both inputs") {
    or_::Rng rng(54);
    for (int i = 0; i < 200; ++i) {
        int delta = 2 + i % 4;
        GroundedPath a = or_::random_off_the_wall_path(rng, delta), b = or_::random_off_the_wall_path(rng, delta);
        auto ra = find_off_the_wall(a, 0).back(), rb = find_off_the_wall(b, 0).back();
        REQUIRE(ra.r == static_cast<int>(a.word.size()));
        REQUIRE(rb.r == static_cast<int>(b.word.size()));
        auto c = combine_off_the_wall(ra, rb);
        INFO(S(a.word) << " + " << S(b.word) << " -> " << S(c.g));
        REQUIRE(displacement(c.g) == Vec2{delta, 0});
        REQUIRE(contains(surface_above(ra.x0, c.g), ra.surface));
        REQUIRE(contains(surface_above(rb.x0, c.g), rb.surface));
        bool again = false;
        for (const auto& rec : find_off_the_wall(c.combined_p, 0))
            again = again || (rec.ell == ra.ell && rec.delta == delta);
        REQUIRE(again);
    }
}

TEST_CASE("property: the largest record of a combine-closed family contains the rest") {
    or_::Rng rng(55);
    for (int fam = 0; fam < 30; ++fam) {
        int delta = 2 + fam % 3;
        // Excursions normalised to x0 = -1 through the prefix "W".
        std::set<Word> words;
        for (int i = 0; i < 4; ++i) {
            auto rec = find_off_the_wall(or_::random_off_the_wall_path(rng, delta), 0).back();
            words.insert(rec.excursion());
        }
        for (bool grew = true; grew;) {
            grew = false;
            std::vector<Word> cur(words.begin(), words.end());
            for (const Word& p : cur)
                for (const Word& q : cur) {
                    auto rp = only_record(("W" + S(p)).c_str()), rq = only_record(("W" + S(q)).c_str());
                    if (words.insert(combine_off_the_wall(rp, rq).g).second) grew = true;
                }
            REQUIRE(words.size() < 200);
        }
        std::vector<OffTheWallRecord> recs;
        for (const Word& w : words) recs.push_back(only_record(("W" + S(w)).c_str()));
        auto best = std::max_element(recs.begin(), recs.end(),
                                     [](const auto& x, const auto& y) { return x.area < y.area; });
        int top = 0;
        for (const auto& r : recs) {
            REQUIRE(contains(best->surface, r.surface));
            top = std::max(top, r.height);
        }
        REQUIRE(best->height == top);
    }
}

TEST_CASE("property: certificates verify and are simple") {
    or_::Rng rng(56);
    int found = 0;
    for (int i = 0; i < 40; ++i) {
        Window w{6};
        TAS tas = or_::random_confluent_tas(rng, w);
        auto s = find_periodic_assembly_path(tas, w, 3, 3);
        if (!s.certificate) continue;
        ++found;
        const auto& c = *s.certificate;
        Assembly a = grow_max(tas, w).assembly;
        REQUIRE(is_ray_simple(Ray(c.m, c.p)));
        REQUIRE(verify_periodic_tiles(a, {0, 0}, c.m, c.p, c.verified_depth));
    }
    CHECK(found > 5);
}

TEST_CASE("property: E/W index pairs are disjoint and ordered") {
    or_::Rng rng(57);
    int nonempty = 0;
    for (int i = 0; i < 3000; ++i) {
        GroundedPath gp = or_::random_walk_path(rng, 30);
        auto pairs = ew_index_pairs(gp);
        nonempty += !pairs.empty();
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            REQUIRE(pairs[k].first < pairs[k].second);
            if (k) REQUIRE(pairs[k - 1].second < pairs[k].first);
        }
    }
    CHECK(nonempty > 20);
}
