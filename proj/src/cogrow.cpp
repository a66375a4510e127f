#include "tileasm/cogrow.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_set>

namespace tileasm {

const char* to_string(CoGrowStatus s) {
    switch (s) {
    case CoGrowStatus::Terminated: return "Terminated";
    case CoGrowStatus::ReachedStepBound: return "ReachedStepBound";
    case CoGrowStatus::Periodic: return "Periodic";
    }
    return "?";
}

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct Cell {
    Vec2 offset;
    long t = 0;
};

Cell cell_of(Point a, Point base, Vec2 v) {
    Vec2 d = a - base;
    long vv = static_cast<long>(v.dx) * v.dx + static_cast<long>(v.dy) * v.dy;
    long t = floor_div(static_cast<long>(d.dx) * v.dx + static_cast<long>(d.dy) * v.dy, vv);
    return {d - v * static_cast<int>(t), t};
}

// Index of q on the forward part of a windowed path (0 = anchor), -1 if the
// vertex is not on it. The first vertex past the window counts as well.
int forward_index(const RegionMap& rm, Point q) {
    const WindowedPath& wp = rm.path();
    int i = rm.path_index(q);
    if (i >= 0) return i >= wp.anchor_index ? i - wp.anchor_index : -1;
    if (q == wp.leave) return static_cast<int>(wp.vertices.size()) - wp.anchor_index;
    return -1;
}

bool forward_edge(const RegionMap& rm, Point a, Point b) {
    int i = forward_index(rm, a), j = forward_index(rm, b);
    return i >= 0 && j >= 0 && std::abs(i - j) == 1;
}

}  // namespace

PeriodSplit normalize_period(PeriodSplit s) {
    while (!s.transient.empty() && !s.period.empty() && s.transient.back() == s.period.back()) {
        s.transient.pop_back();
        std::rotate(s.period.rbegin(), s.period.rbegin() + 1, s.period.rend());
    }
    return s;
}

std::optional<PeriodSplit> detect_period(const Word& word, const Ray& f, const Ray& f2) {
    Ray of = outward(f), of2 = outward(f2);
    Vec2 v1 = displacement(of.period), v2 = displacement(of2.period);
    if (v1.is_zero() || v2.is_zero()) return std::nullopt;
    Point b1 = Point{0, 0} + displacement(of.transient);
    Point b2 = Point{0, 0} + displacement(of2.transient);
    const long n = static_cast<long>(word.size());
    std::vector<Point> pos(n + 1);
    for (long i = 0; i < n; ++i) pos[i + 1] = pos[i] + unit(word[i]);

    using Key = std::tuple<Vec2, Vec2, Direction>;
    std::map<Key, std::vector<long>> seen;
    std::vector<Cell> c1(n + 1), c2(n + 1);
    for (long i = 1; i <= n; ++i) {
        c1[i] = cell_of(pos[i], b1, v1);
        c2[i] = cell_of(pos[i], b2, v2);
        seen[{c1[i].offset, c2[i].offset, word[i - 1]}].push_back(i);
    }
    // Earliest start first, then shortest period.
    for (long i1 = 1; i1 <= n; ++i1) {
        const auto& same = seen[{c1[i1].offset, c2[i1].offset, word[i1 - 1]}];
        for (long i2 : same) {
            if (i2 <= i1) continue;
            if (c1[i2].t - c1[i1].t < 1 || c2[i2].t - c2[i1].t < 1) continue;
            long L = i2 - i1;
            if (n - i1 < 2 * L) break;
            bool follows = true;
            for (long k = i1; k + L < n && follows; ++k)
                if (word[k] != word[k + L]) follows = false;
            if (!follows) continue;
            PeriodSplit s{Word(word.begin(), word.begin() + i1), Word(word.begin() + i1, word.begin() + i2)};
            return normalize_period(s);
        }
    }
    return std::nullopt;
}

CoGrowResult cogrow(Side side, const Ray& b, const Ray& f, const Ray& b2, const Ray& f2, Window window,
                    long max_steps, CoGrowOptions opts) {
    if (side == Side::On) throw Error(ErrorKind::InvalidArgument, "co-grow side must be Left or Right");
    const Point origin{0, 0};
    if (!opts.free_first_step && f.first_direction() != f2.first_direction())
        throw Error(ErrorKind::MismatchedStart, "f and f2 start with different directions");
    RegionMap r1(BiInfinitePath{origin, b, f}, window);
    RegionMap r2(BiInfinitePath{origin, b2, f2}, window);

    CoGrowResult res;
    res.vertices.push_back(origin);
    res.f_indices.push_back(0);
    res.f2_indices.push_back(0);
    std::unordered_set<Point, PointHash> visited{origin};
    Point cur = origin;

    auto priority = [&](Direction d) {
        if (side == Side::Right) return std::array<Direction, 4>{turn_right(d), d, turn_left(d), opposite(d)};
        return std::array<Direction, 4>{turn_left(d), d, turn_right(d), opposite(d)};
    };
    auto take = [&](Direction c) {
        Point nxt = cur + unit(c);
        CoGrowStep st{c, nxt, forward_index(r1, nxt), forward_index(r2, nxt), forward_edge(r1, cur, nxt),
                      forward_edge(r2, cur, nxt)};
        res.word.push_back(c);
        res.trace.push_back(st);
        res.vertices.push_back(nxt);
        if (st.f_index >= 0) res.f_indices.push_back(st.f_index);
        if (st.f2_index >= 0) res.f2_indices.push_back(st.f2_index);
        visited.insert(nxt);
        cur = nxt;
        ++res.steps;
    };

    bool bounded = false;
    if (max_steps <= 0) {
        bounded = true;
    } else if (!opts.free_first_step) {
        Direction d = f.first_direction();
        if (!window.contains(cur + unit(d))) bounded = true;
        else take(d);
    }
    Direction incoming = opts.free_first_step ? opposite(outward(b).first_direction()) : f.first_direction();

    while (!bounded && (res.steps > 0 || opts.free_first_step)) {
        if (res.steps >= max_steps) {
            bounded = true;
            break;
        }
        if (res.steps > 0) incoming = res.word.back();
        bool moved = false;
        for (Direction c : priority(incoming)) {
            Point nxt = cur + unit(c);
            bool on_f = forward_edge(r1, cur, nxt), on_f2 = forward_edge(r2, cur, nxt);
            if (!on_f && !on_f2) continue;
            if (!window.contains(nxt)) {
                bounded = true;
                break;
            }
            if (visited.count(nxt)) continue;
            if (!r1.edge_in_region(cur, c, side) || !r2.edge_in_region(cur, c, side)) continue;
            if (res.steps > 0 && c == opposite(incoming))
                throw Error(ErrorKind::InvariantViolation, "co-grow selected the reverse direction");
            take(c);
            moved = true;
            break;
        }
        if (!moved) break;
    }

    res.status = bounded ? CoGrowStatus::ReachedStepBound : CoGrowStatus::Terminated;
    if (bounded) {
        if (auto split = detect_period(res.word, f, f2)) {
            res.status = CoGrowStatus::Periodic;
            res.transient = split->transient;
            res.period = split->period;
        }
    }
    return res;
}

}  // namespace tileasm
