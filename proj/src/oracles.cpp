#include "tileasm/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_set>

namespace tileasm::oracle {

bool pumped_simple(const Word& m, int kmax) {
    for (int k = 1; k <= kmax; ++k)
        if (!ground(power(m, k)).simple) return false;
    return true;
}

bool ray_prefix_simple(const Word& m, const Word& p, int copies) {
    return ground(concat(m, power(p, copies))).simple;
}

namespace {

// Ring of Chebyshev radius q walked counter-clockwise starting at `from`.
Point ccw_next(Point p, int q) {
    if (p.y == -q && p.x < q) return {p.x + 1, p.y};
    if (p.x == q && p.y < q) return {p.x, p.y + 1};
    if (p.y == q && p.x > -q) return {p.x - 1, p.y};
    return {p.x, p.y - 1};
}

}  // namespace

Side side_by_parity(const WindowedPath& wp, Point q) {
    for (Point v : wp.vertices)
        if (v == q) return Side::On;
    const int ring = wp.window.radius + 1;
    std::vector<Point> poly;
    poly.push_back(wp.enter);
    poly.insert(poly.end(), wp.vertices.begin(), wp.vertices.end());
    poly.push_back(wp.leave);
    for (Point p = ccw_next(wp.leave, ring); p != wp.enter; p = ccw_next(p, ring)) poly.push_back(p);
    int crossings = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        Point a = poly[i], b = poly[(i + 1) % poly.size()];
        if (a.x != b.x || a.x <= q.x) continue;
        if (std::min(a.y, b.y) == q.y) ++crossings;
    }
    return crossings % 2 ? Side::Left : Side::Right;
}

namespace {

std::set<Point> reachable_without(const Assembly& a, const BindingGraph& g, Point removed) {
    std::set<Point> seen;
    if (removed == Point{0, 0} || !a.occupied({0, 0})) return seen;
    std::deque<Point> queue{{0, 0}};
    seen.insert({0, 0});
    while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        for (Point n : g.adjacency.at(p))
            if (n != removed && seen.insert(n).second) queue.push_back(n);
    }
    return seen;
}

std::set<Point> window_sites(const Window& w) {
    std::set<Point> out;
    for (int i = 0; i < w.size(); ++i) out.insert(w.at(i));
    return out;
}

}  // namespace

std::set<Point> non_causal_by_deletion(const Assembly& a, Point A) {
    if (!a.occupied(A)) return window_sites(a.window);
    BindingGraph g = binding_graph(a);
    std::set<Point> out;
    for (int i = 0; i < a.window.size(); ++i) {
        Point B = a.window.at(i);
        if (B == A || reachable_without(a, g, B).count(A)) out.insert(B);
    }
    return out;
}

std::vector<std::set<Point>> all_non_causal_by_deletion(const Assembly& a) {
    BindingGraph g = binding_graph(a);
    std::map<Point, std::set<Point>> reach;
    for (const auto& [B, id] : a.cells) reach[B] = reachable_without(a, g, B);
    // Removing an empty site changes nothing.
    const auto plain = reachable_without(a, g, Point{a.window.radius + 1, 0});
    auto all = window_sites(a.window);
    std::vector<std::set<Point>> out;
    for (const auto& [A, idA] : a.cells) {
        std::set<Point> nc;
        for (Point B : all)
            if (B == A || (a.occupied(B) ? reach[B] : plain).count(A)) nc.insert(B);
        out.push_back(std::move(nc));
    }
    return out;
}

std::string CoGrowInstance::serialize() const {
    std::ostringstream os;
    os << "side=" << to_string(side) << " radius=" << window.radius << " b=" << to_string(b.period) << '|'
       << to_string(b.transient) << " f=" << to_string(f.transient) << '|' << to_string(f.period)
       << " b2=" << to_string(b2.period) << '|' << to_string(b2.transient) << " f2=" << to_string(f2.transient)
       << '|' << to_string(f2.period);
    return os.str();
}

namespace {

std::set<std::pair<Point, Point>> ray_edges(const Ray& r, const Window& w) {
    Ray o = outward(r);
    long steps = static_cast<long>(o.transient.size()) +
                 static_cast<long>(o.period.size()) * (4L * w.radius + 4 + static_cast<long>(o.transient.size()));
    auto vs = ray_vertices(o, {0, 0}, steps);
    std::set<std::pair<Point, Point>> out;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        out.insert({vs[i], vs[i + 1]});
        out.insert({vs[i + 1], vs[i]});
    }
    return out;
}

}  // namespace

std::vector<std::string> cogrow_violations(const CoGrowInstance& inst, const CoGrowResult& res, int* window_only) {
    std::vector<std::string> bad;
    auto e1 = ray_edges(inst.f, inst.window), e2 = ray_edges(inst.f2, inst.window);
    const auto& vs = res.vertices;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (!e1.count({vs[i], vs[i + 1]}) && !e2.count({vs[i], vs[i + 1]}))
            bad.push_back("step " + std::to_string(i) + " edge is on neither f nor f2");

    std::unordered_set<Point, PointHash> seen;
    for (Point v : vs)
        if (!seen.insert(v).second) bad.push_back("co-grow revisits " + to_string(v));

    WindowedPath w1 = window_path({{0, 0}, inst.b, inst.f}, inst.window);
    WindowedPath w2 = window_path({{0, 0}, inst.b2, inst.f2}, inst.window);
    for (Point v : vs) {
        Side s1 = side_by_parity(w1, v), s2 = side_by_parity(w2, v);
        if ((s1 != Side::On && s1 != inst.side) || (s2 != Side::On && s2 != inst.side))
            bad.push_back("vertex " + to_string(v) + " outside the region intersection (parity)");
    }
    RegionMap r1(w1), r2(w2);
    auto comp = region_intersection_component(r1, r2, inst.side, inst.side, {0, 0});
    for (Point v : vs)
        if (!comp.members.count(v)) bad.push_back("vertex " + to_string(v) + " outside the origin component");

    auto increasing = [](const std::vector<int>& xs) {
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (xs[i] <= xs[i - 1]) return false;
        return true;
    };
    if (!increasing(res.f_indices)) bad.push_back("f indices not increasing");
    if (!increasing(res.f2_indices)) bad.push_back("f2 indices not increasing");
    if (comp.reaches_boundary && res.status == CoGrowStatus::Terminated) {
        const Window big{4 * inst.window.radius};
        auto wide = region_intersection_component({{0, 0}, inst.b, inst.f}, {{0, 0}, inst.b2, inst.f2}, inst.side,
                                                  inst.side, {0, 0}, big);
        if (wide.reaches_boundary)
            bad.push_back("terminated although the origin component reaches the boundary at radius " +
                          std::to_string(big.radius));
        else if (window_only)
            ++*window_only;
    }
    return bad;
}

Word random_word(Rng& rng, int min_len, int max_len) {
    std::uniform_int_distribution<int> len(min_len, max_len), dir(0, 3);
    Word w(len(rng));
    for (auto& d : w) d = static_cast<Direction>(dir(rng));
    return w;
}

Word random_period(Rng& rng, int max_len) {
    while (true) {
        Word p = random_word(rng, 1, max_len);
        if (!displacement(p).is_zero() && is_pumpable(p)) return p;
    }
}

namespace {

// Self-avoiding walk from `start`, avoiding `blocked`, stopping early when
// it gets stuck.
Word random_saw(Rng& rng, Point start, int len, std::unordered_set<Point, PointHash>& blocked,
                std::optional<Direction> first = std::nullopt) {
    Word w;
    Point cur = start;
    blocked.insert(start);
    for (int i = 0; i < len; ++i) {
        std::vector<Direction> opts;
        for (Direction d : kDirections)
            if (!blocked.count(cur + unit(d))) opts.push_back(d);
        if (i == 0 && first) {
            if (!blocked.count(cur + unit(*first))) opts = {*first};
            else break;
        }
        if (opts.empty()) break;
        Direction d = opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)];
        cur = cur + unit(d);
        blocked.insert(cur);
        w.push_back(d);
    }
    return w;
}

bool valid_in(const BiInfinitePath& p, Window w) {
    try {
        window_path(p, w);
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

BiInfinitePath random_biinfinite(Rng& rng, Window w) {
    std::uniform_int_distribution<int> coord(-w.radius / 2, w.radius / 2), tlen(0, w.radius);
    while (true) {
        Point a{coord(rng), coord(rng)};
        std::unordered_set<Point, PointHash> used;
        Word fm = random_saw(rng, a, tlen(rng), used);
        Word back = random_saw(rng, a, tlen(rng), used);  // walked away from the anchor
        BiInfinitePath p{a, Ray(reverse(back), random_period(rng, 4), Orientation::Backward),
                         Ray(fm, random_period(rng, 4), Orientation::Forward)};
        if (valid_in(p, w)) return p;
    }
}

CoGrowInstance random_cogrow_instance(Rng& rng, int min_radius, int max_radius) {
    std::uniform_int_distribution<int> rad(min_radius, max_radius), coin(0, 1);
    while (true) {
        CoGrowInstance inst;
        inst.window = Window{rad(rng)};
        inst.side = coin(rng) ? Side::Right : Side::Left;
        std::uniform_int_distribution<int> tlen(0, inst.window.radius);
        const Point o{0, 0};
        std::unordered_set<Point, PointHash> used_b;
        Word back = random_saw(rng, o, tlen(rng), used_b);
        inst.b = Ray(reverse(back), random_period(rng, 3), Orientation::Backward);
        for (Point q : ray_in_window(inst.b, o, inst.window)) used_b.insert(q);
        auto used_f = used_b;
        used_f.erase(o);
        Word fm = random_saw(rng, o, tlen(rng) + 1, used_f);
        if (fm.empty()) continue;
        inst.f = Ray(fm, random_period(rng, 3));
        if (coin(rng)) {
            inst.b2 = inst.b;
        } else {
            std::unordered_set<Point, PointHash> used_b2;
            Word back2 = random_saw(rng, o, tlen(rng), used_b2);
            inst.b2 = Ray(reverse(back2), random_period(rng, 3), Orientation::Backward);
        }
        std::unordered_set<Point, PointHash> used_f2;
        for (Point q : ray_in_window(inst.b2, o, inst.window)) used_f2.insert(q);
        used_f2.erase(o);
        Word fm2 = random_saw(rng, o, tlen(rng) + 1, used_f2, fm.front());
        if (fm2.empty() || fm2.front() != fm.front()) continue;
        inst.f2 = Ray(fm2, random_period(rng, 3));
        const Window big{4 * inst.window.radius};
        bool ok = true;
        for (Window w : {inst.window, big})
            ok = ok && valid_in({o, inst.b, inst.f}, w) && valid_in({o, inst.b2, inst.f2}, w);
        if (ok) return inst;
    }
}

TAS random_tas(Rng& rng, int min_tiles, int max_tiles, int glue_alphabet) {
    std::uniform_int_distribution<int> nt(min_tiles, max_tiles), glue(0, 2 * glue_alphabet - 1);
    auto random_tile = [&](const std::string& name) {
        TileType t;
        t.name = name;
        for (auto& g : t.glues) {
            int k = glue(rng);
            g = k < glue_alphabet ? std::string(1, static_cast<char>('a' + k)) : Glue{};
        }
        return t;
    };
    TAS tas;
    tas.seed = random_tile("seed");
    int n = nt(rng);
    for (int i = 0; i < n; ++i) tas.tiles.push_back(random_tile(std::string(1, static_cast<char>('A' + i))));
    return tas;
}

TAS random_confluent_tas(Rng& rng, Window w) {
    while (true) {
        TAS tas = random_tas(rng, 2, 5, 3);
        if (!check_confluence(tas, w).confluent) continue;
        if (grow_max(tas, w).assembly.cells.size() < 3) continue;
        return tas;
    }
}

GroundedPath random_off_the_wall_path(Rng& rng, int delta) {
    std::uniform_int_distribution<int> kdist(1, std::max(1, delta - 1)), hdist(1, 4);
    while (true) {
        int k = kdist(rng);
        if (delta <= k) continue;
        int x0 = -k, h = hdist(rng);
        Point from{x0, 1}, to{x0 + delta, 1};
        // Randomised depth-first search inside the box above the wall.
        const int xmin = x0 - 2, xmax = x0 + delta + 2;
        auto inside = [&](Point p) { return p.x >= xmin && p.x <= xmax && p.y >= 1 && p.y <= h; };
        std::set<Point> seen{from};
        std::vector<Point> stack{from};
        std::vector<std::vector<Direction>> todo;
        auto shuffled = [&]() {
            std::vector<Direction> ds(kDirections.begin(), kDirections.end());
            std::shuffle(ds.begin(), ds.end(), rng);
            return ds;
        };
        todo.push_back(shuffled());
        while (!stack.empty() && stack.back() != to) {
            if (todo.back().empty()) {
                stack.pop_back();
                todo.pop_back();
                continue;
            }
            Direction d = todo.back().back();
            todo.back().pop_back();
            Point nxt = stack.back() + unit(d);
            if (!inside(nxt) || !seen.insert(nxt).second) continue;
            stack.push_back(nxt);
            todo.push_back(shuffled());
        }
        if (stack.empty()) continue;
        Word w(k, Direction::W);
        w.push_back(Direction::N);
        for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
            Vec2 v = stack[i + 1] - stack[i];
            for (Direction d : kDirections)
                if (unit(d) == v) w.push_back(d);
        }
        w.push_back(Direction::S);
        return ground(w);
    }
}

GroundedPath random_walk_path(Rng& rng, int length) {
    std::unordered_set<Point, PointHash> used;
    return ground(random_saw(rng, {0, 0}, length, used));
}

}  // namespace tileasm::oracle
