#include "tileasm/regions.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

namespace tileasm {

const char* to_string(Side s) {
    switch (s) {
    case Side::Left: return "Left";
    case Side::Right: return "Right";
    case Side::On: return "On";
    }
    return "?";
}

BiInfinitePath parse_biinfinite(std::string_view text) {
    auto bad = [&](const std::string& why) {
        return Error(ErrorKind::InvalidArgument, "bad bi-infinite path '" + std::string(text) + "': " + why);
    };
    auto bar1 = text.find('|');
    auto at = text.find('@');
    auto open = text.find('(', at == std::string_view::npos ? 0 : at);
    auto close = text.find(')', open == std::string_view::npos ? 0 : open);
    if (bar1 == std::string_view::npos || at == std::string_view::npos || open != at + 1 ||
        close == std::string_view::npos || bar1 > at)
        throw bad("expected <bp>|<bm>@(x,y)<fm>|<fp>");
    auto bar2 = text.find('|', close);
    if (bar2 == std::string_view::npos) throw bad("missing forward '|'");
    Word bp = parse_word(text.substr(0, bar1));
    Word bm = parse_word(text.substr(bar1 + 1, at - bar1 - 1));
    std::string coords(text.substr(open + 1, close - open - 1));
    auto comma = coords.find(',');
    if (comma == std::string::npos) throw bad("anchor needs x,y");
    Point a;
    try {
        std::size_t used = 0;
        a.x = std::stoi(coords.substr(0, comma), &used);
        if (used != comma) throw bad("anchor x");
        std::string ys = coords.substr(comma + 1);
        a.y = std::stoi(ys, &used);
        if (used != ys.size()) throw bad("anchor y");
    } catch (const std::logic_error&) {
        throw bad("anchor coordinates");
    }
    Word fm = parse_word(text.substr(close + 1, bar2 - close - 1));
    Word fp = parse_word(text.substr(bar2 + 1));
    if (bp.empty() || fp.empty()) throw Error(ErrorKind::EmptyWord, "ray periods must be nonempty");
    return {a, Ray(bm, bp, Orientation::Backward), Ray(fm, fp, Orientation::Forward)};
}

std::string to_string(const BiInfinitePath& p) {
    return to_string(p.backward.period) + "|" + to_string(p.backward.transient) + "@" + to_string(p.anchor) +
           to_string(p.forward.transient) + "|" + to_string(p.forward.period);
}

namespace {

// Number of steps after which an outward ray from `anchor` stays outside the
// window forever.
long steps_until_gone(const Ray& outward_ray, Point anchor, Window w) {
    const Word& m = outward_ray.transient;
    const Word& p = outward_ray.period;
    Vec2 v = displacement(p);
    if (v.is_zero()) throw Error(ErrorKind::ZeroPeriodDisplacement, "ray period has zero displacement");
    long vv = static_cast<long>(v.dx) * v.dx + static_cast<long>(v.dy) * v.dy;
    long smax = static_cast<long>(w.radius) * (std::abs(v.dx) + std::abs(v.dy));
    Point base = anchor + displacement(m);
    long smin = 0;
    bool first = true;
    Point cur = base;
    for (std::size_t t = 0; t < p.size(); ++t) {
        long s = static_cast<long>(cur.x) * v.dx + static_cast<long>(cur.y) * v.dy;
        if (first || s < smin) smin = s;
        first = false;
        cur = cur + unit(p[t]);
    }
    long need = smax - smin;
    long copies = need < 0 ? 0 : need / vv + 1;
    return static_cast<long>(m.size()) + (copies + 1) * static_cast<long>(p.size());
}

}  // namespace

std::vector<Point> ray_in_window(const Ray& r, Point anchor, Window w) {
    Ray o = outward(r);
    std::vector<Point> out;
    for (Point q : ray_vertices(o, anchor, steps_until_gone(o, anchor, w)))
        if (w.contains(q)) out.push_back(q);
    return out;
}

WindowedPath window_path(const BiInfinitePath& bp, Window w) {
    if (w.radius < 1) throw Error(ErrorKind::InvalidArgument, "window radius must be >= 1");
    if (!w.contains(bp.anchor)) throw Error(ErrorKind::PointOutsideWindow, "anchor outside window");
    Ray fwd = outward(bp.forward);
    Ray bwd = outward(bp.backward);
    auto fv = ray_vertices(fwd, bp.anchor, steps_until_gone(fwd, bp.anchor, w));
    auto bv = ray_vertices(bwd, bp.anchor, steps_until_gone(bwd, bp.anchor, w));

    // Each list must be: in-window prefix, then outside forever.
    auto cut = [&](const std::vector<Point>& vs, const char* which) {
        std::size_t k = 0;
        while (k < vs.size() && w.contains(vs[k])) ++k;
        for (std::size_t j = k; j < vs.size(); ++j)
            if (w.contains(vs[j]))
                throw Error(ErrorKind::PathReentersWindow,
                            std::string(which) + " ray re-enters the window at " + to_string(vs[j]));
        return k;
    };
    std::size_t kf = cut(fv, "forward");
    std::size_t kb = cut(bv, "backward");

    WindowedPath out;
    out.window = w;
    for (std::size_t j = kb; j-- > 1;) out.vertices.push_back(bv[j]);
    out.anchor_index = static_cast<int>(out.vertices.size());
    for (std::size_t j = 0; j < kf; ++j) out.vertices.push_back(fv[j]);
    out.enter = bv[kb];
    out.leave = fv[kf];

    std::unordered_set<Point, PointHash> seen;
    for (Point q : out.vertices)
        if (!seen.insert(q).second)
            throw Error(ErrorKind::SimplicityViolation, "path repeats vertex " + to_string(q) + " in window");
    if (out.enter == out.leave)
        throw Error(ErrorKind::SimplicityViolation, "path leaves and enters through the same vertex");
    return out;
}

RegionMap::RegionMap(const BiInfinitePath& p, Window w) : window_(w), path_(window_path(p, w)) { build(); }

RegionMap::RegionMap(const WindowedPath& wp) : window_(wp.window), path_(wp) { build(); }

namespace {
Direction dir_between(Point a, Point b) {
    Vec2 d = b - a;
    if (d == Vec2{0, 1}) return Direction::N;
    if (d == Vec2{1, 0}) return Direction::E;
    if (d == Vec2{0, -1}) return Direction::S;
    return Direction::W;
}
unsigned char bit(Direction d) { return static_cast<unsigned char>(1u << static_cast<int>(d)); }
}  // namespace

void RegionMap::build() {
    const int n = window_.size();
    side_.assign(n, -1);
    index_.assign(n, -1);
    left_dirs_.assign(n, 0);
    right_dirs_.assign(n, 0);
    path_dirs_.assign(n, 0);
    const auto& vs = path_.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        int id = window_.index(vs[i]);
        side_[id] = 0;
        index_[id] = static_cast<int>(i);
    }
    std::deque<Point> queue;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Point prev = i == 0 ? path_.enter : vs[i - 1];
        Point next = i + 1 == vs.size() ? path_.leave : vs[i + 1];
        Direction din = dir_between(prev, vs[i]);
        Direction dout = dir_between(vs[i], next);
        int id = window_.index(vs[i]);
        path_dirs_[id] = bit(dout) | bit(opposite(din));
        left_dirs_[id] = bit(turn_left(din)) | bit(turn_left(dout));
        right_dirs_[id] = bit(turn_right(din)) | bit(turn_right(dout));
        for (Direction d : {turn_left(din), turn_left(dout)}) {
            Point q = vs[i] + unit(d);
            if (!window_.contains(q)) continue;
            int qi = window_.index(q);
            if (side_[qi] == 0) continue;
            if (side_[qi] == 2) throw Error(ErrorKind::SimplicityViolation, "vertex seen on both sides");
            if (side_[qi] == -1) {
                side_[qi] = 1;
                queue.push_back(q);
            }
        }
        for (Direction d : {turn_right(din), turn_right(dout)}) {
            Point q = vs[i] + unit(d);
            if (!window_.contains(q)) continue;
            int qi = window_.index(q);
            if (side_[qi] == 0) continue;
            if (side_[qi] == 1) throw Error(ErrorKind::SimplicityViolation, "vertex seen on both sides");
            if (side_[qi] == -1) {
                side_[qi] = 2;
                queue.push_back(q);
            }
        }
    }
    while (!queue.empty()) {
        Point q = queue.front();
        queue.pop_front();
        signed char s = side_[window_.index(q)];
        for (Direction d : kDirections) {
            Point r = q + unit(d);
            if (!window_.contains(r)) continue;
            int ri = window_.index(r);
            if (side_[ri] == -1) {
                side_[ri] = s;
                queue.push_back(r);
            } else if (side_[ri] != 0 && side_[ri] != s) {
                throw Error(ErrorKind::SimplicityViolation, "left and right regions touch at " + to_string(r));
            }
        }
    }
    for (signed char s : side_)
        if (s == -1) throw Error(ErrorKind::SimplicityViolation, "unclassified window vertex");
}

Side RegionMap::side(Point q) const {
    if (!window_.contains(q)) throw Error(ErrorKind::PointOutsideWindow, to_string(q) + " outside window");
    switch (side_[window_.index(q)]) {
    case 0: return Side::On;
    case 1: return Side::Left;
    default: return Side::Right;
    }
}

bool RegionMap::in_region(Point q, Side s) const {
    Side t = side(q);
    return t == Side::On || t == s;
}

int RegionMap::path_index(Point q) const { return window_.contains(q) ? index_[window_.index(q)] : -1; }

bool RegionMap::edge_in_region(Point q, Direction d, Side s) const {
    Point r = q + unit(d);
    if (!window_.contains(q) || !window_.contains(r)) return false;
    if (!in_region(q, s) || !in_region(r, s)) return false;
    int qi = window_.index(q);
    if (side_[qi] != 0 || side_[window_.index(r)] != 0) return true;
    if (path_dirs_[qi] & bit(d)) return true;
    // Chord between two path vertices: it lies on the side it leaves from.
    return ((s == Side::Left ? left_dirs_[qi] : right_dirs_[qi]) & bit(d)) != 0;
}

Side side_of(const BiInfinitePath& p, Point q, Window w) {
    if (!w.contains(q)) throw Error(ErrorKind::PointOutsideWindow, to_string(q) + " outside window");
    return RegionMap(p, w).side(q);
}

std::set<Point> region_members(const BiInfinitePath& p, Side s, Window w) {
    if (s == Side::On) throw Error(ErrorKind::InvalidArgument, "region side must be Left or Right");
    RegionMap rm(p, w);
    std::set<Point> out;
    for (int i = 0; i < w.size(); ++i)
        if (rm.in_region(w.at(i), s)) out.insert(w.at(i));
    return out;
}

std::set<Point> region_interior(const std::set<Point>& region) {
    std::set<Point> out;
    for (Point q : region) {
        bool inside = true;
        for (int dx = -1; dx <= 1 && inside; ++dx)
            for (int dy = -1; dy <= 1 && inside; ++dy)
                if (!region.count({q.x + dx, q.y + dy})) inside = false;
        if (inside) out.insert(q);
    }
    return out;
}

Side line_side(Point q, Point base, Vec2 v) {
    if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "line direction is zero");
    Vec2 d = q - base;
    long dot = -static_cast<long>(d.dx) * v.dy + static_cast<long>(d.dy) * v.dx;
    if (dot > 0) return Side::Left;
    if (dot < 0) return Side::Right;
    return Side::On;
}

bool ribbon_contains(Point a, Point b, Vec2 v, Point q) {
    if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "ribbon direction is zero");
    if (a == b) throw Error(ErrorKind::DegenerateRibbon, "ribbon needs a != b");
    if (line_side(a, b, v) == Side::Right) throw Error(ErrorKind::DegenerateRibbon, "a must be left of line(b, v)");
    return line_side(q, b, v) != Side::Right && line_side(q, a, v) != Side::Left;
}

IntersectionComponent region_intersection_component(const RegionMap& r1, const RegionMap& r2, Side s1,
                                                     Side s2, Point start) {
    const Window& w = r1.window();
    if (w.radius != r2.window().radius) throw Error(ErrorKind::InvalidArgument, "region windows differ");
    if (s1 == Side::On || s2 == Side::On) throw Error(ErrorKind::InvalidArgument, "side must be Left or Right");
    if (!w.contains(start)) throw Error(ErrorKind::PointOutsideWindow, to_string(start) + " outside window");
    if (!r1.in_region(start, s1) || !r2.in_region(start, s2))
        throw Error(ErrorKind::StartOutsideIntersection, to_string(start) + " is not in both regions");
    IntersectionComponent out;
    std::deque<Point> queue{start};
    out.members.insert(start);
    while (!queue.empty()) {
        Point q = queue.front();
        queue.pop_front();
        if (w.on_boundary(q)) out.reaches_boundary = true;
        for (Direction d : kDirections) {
            Point r = q + unit(d);
            if (out.members.count(r)) continue;
            if (!r1.edge_in_region(q, d, s1) || !r2.edge_in_region(q, d, s2)) continue;
            out.members.insert(r);
            queue.push_back(r);
        }
    }
    return out;
}

IntersectionComponent region_intersection_component(const BiInfinitePath& p1, const BiInfinitePath& p2,
                                                     Side s1, Side s2, Point start, Window w) {
    return region_intersection_component(RegionMap(p1, w), RegionMap(p2, w), s1, s2, start);
}

}  // namespace tileasm
