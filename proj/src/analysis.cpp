#include "tileasm/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <unordered_set>

#include "tileasm/graph.hpp"

namespace tileasm {

namespace {

struct IndexedGraph {
    std::vector<Point> sites;
    std::map<Point, int> idx;
    std::vector<std::vector<int>> adj;
};

IndexedGraph indexed_binding_graph(const Assembly& a) {
    IndexedGraph g;
    BindingGraph bg = binding_graph(a);
    g.sites = bg.vertices;
    for (std::size_t i = 0; i < g.sites.size(); ++i) g.idx[g.sites[i]] = static_cast<int>(i);
    g.adj.resize(g.sites.size());
    for (std::size_t i = 0; i < g.sites.size(); ++i)
        for (Point q : bg.adjacency.at(g.sites[i])) g.adj[i].push_back(g.idx.at(q));
    return g;
}

std::set<Point> all_sites(const Window& w) {
    std::set<Point> out;
    for (int i = 0; i < w.size(); ++i) out.insert(w.at(i));
    return out;
}

Ray wall_backward() { return Ray({}, {Direction::E}, Orientation::Backward); }
Ray wall_forward(const Word& m) { return Ray(m, {Direction::E}, Orientation::Forward); }

int extent(const std::vector<Point>& vs) {
    int r = 0;
    for (Point q : vs) r = std::max({r, std::abs(q.x), std::abs(q.y)});
    return r;
}

}  // namespace

std::set<Point> non_causal(const Assembly& a, Point A) {
    std::set<Point> out = all_sites(a.window);
    if (!a.occupied(A) || !a.occupied({0, 0}) || A == Point{0, 0}) return out;
    IndexedGraph g = indexed_binding_graph(a);
    auto idom = immediate_dominators(g.adj, g.idx.at({0, 0}));
    int ai = g.idx.at(A);
    if (idom[ai] == -1) return {A};
    for (int v = idom[ai];; v = idom[v]) {
        out.erase(g.sites[v]);
        if (idom[v] == v) break;
    }
    return out;
}

Assembly verified_extend(const Assembly& a, const TAS& tas, Point A, const Word& p) {
    if (p.empty()) return a;
    if (!a.occupied(A)) throw Error(ErrorKind::StartUnoccupied, to_string(A) + " is empty");
    GroundedPath gp = ground(p, A);
    if (!gp.simple) throw Error(ErrorKind::SimplicityViolation, to_string(p) + " is not a free path");
    for (Point q : gp.vertices)
        if (!a.window.contains(q)) throw Error(ErrorKind::WindowExceeded, to_string(q) + " outside window");
    auto nc = non_causal(a, A);
    for (Point q : gp.vertices)
        if (!nc.count(q))
            throw Error(ErrorKind::NonCausalViolation, to_string(q) + " is not in NonCausal" + to_string(A));

    // First glue-consistent tile sequence in tile order; existing tiles
    // along the way must be reused.
    std::vector<int> chosen(p.size(), -1);
    std::function<bool(std::size_t, int)> search = [&](std::size_t k, int prev) -> bool {
        if (k == p.size()) return true;
        Direction d = p[k];
        Point site = gp.vertices[k + 1];
        int existing = a.type_id(site);
        for (std::size_t t = 1; t < a.types.size(); ++t) {
            if (!glues_bind(a.types[prev].glue(d), a.types[t].glue(opposite(d)))) continue;
            if (existing >= 0 && a.types[existing].name != a.types[t].name) continue;
            chosen[k] = static_cast<int>(t);
            if (search(k + 1, static_cast<int>(t))) return true;
        }
        return false;
    };
    if (!search(0, a.type_id(A)))
        throw Error(ErrorKind::GlueMismatch, "no glue-consistent tile sequence along " + to_string(p));

    Assembly out = a;
    for (std::size_t k = 0; k < p.size(); ++k) out.cells[gp.vertices[k + 1]] = chosen[k];

    GrowResult g = grow_max(tas, a.window);
    if (g.unambiguous) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            const TileType* ref = g.assembly.at(gp.vertices[k + 1]);
            if (!ref || ref->name != out.types[chosen[k]].name)
                throw Error(ErrorKind::InvariantViolation,
                            "extension disagrees with the maximal assembly at " + to_string(gp.vertices[k + 1]));
        }
    }
    return out;
}

std::set<Point> surface_above(int x0, const Word& excursion) {
    GroundedPath ex = ground(excursion, {x0, 0});
    Window w{std::max(extent(ex.vertices), 1) + 2};
    Point end = ex.vertices.back();
    RegionMap wall(BiInfinitePath{{0, 0}, wall_backward(), wall_forward({})}, w);
    RegionMap closure(BiInfinitePath{{x0, 0}, wall_backward(), wall_forward(excursion)}, w);
    std::set<Point> out;
    for (int i = 0; i < w.size(); ++i) {
        Point q = w.at(i);
        if (q.y == 0 && (q.x < x0 || q.x > end.x)) continue;  // shared wall tails
        if (wall.in_region(q, Side::Left) && closure.in_region(q, Side::Right)) out.insert(q);
    }
    return out;
}

std::vector<OffTheWallRecord> find_off_the_wall(const GroundedPath& path, std::size_t max_records,
                                                const Assembly* assembly) {
    std::vector<OffTheWallRecord> out;
    const auto& v = path.vertices;
    const int n = static_cast<int>(v.size());
    for (int ell = 1; ell < n; ++ell) {
        if (v[ell].y != 0) continue;
        for (int r = ell + 1; r < n; ++r) {
            if (v[r].y != 0) continue;
            int x0 = v[ell].x, delta = v[r].x - x0;
            if (delta <= 0) continue;
            bool wall_ok = true;
            for (int i = 0; i <= r && wall_ok; ++i)
                if (v[i].y == 0 && (v[i].x < x0 || v[i].x > x0 + delta)) wall_ok = false;
            if (!wall_ok) continue;
            Word ex(path.word.begin() + ell, path.word.begin() + r);
            std::vector<Point> upto(v.begin(), v.begin() + r + 1);
            Window w{extent(upto) + 2};
            Side origin_side;
            try {
                RegionMap closure(BiInfinitePath{v[ell], wall_backward(), wall_forward(ex)}, w);
                origin_side = closure.side({0, 0});
            } catch (const Error&) {
                continue;  // excursion closure is not a simple bi-infinite path
            }
            if (origin_side == Side::Left) continue;

            OffTheWallRecord rec;
            rec.path = ground(Word(path.word.begin(), path.word.begin() + r), path.anchor);
            rec.ell = ell;
            rec.r = r;
            rec.x0 = x0;
            rec.delta = delta;
            rec.height = 0;
            for (int i = ell; i <= r; ++i) rec.height = std::max(rec.height, v[i].y);
            rec.surface = surface_above(x0, ex);
            rec.area = static_cast<int>(rec.surface.size());
            if (assembly) {
                const TileType* a = assembly->at(v[ell]);
                const TileType* b = assembly->at(v[r]);
                if (a && b) rec.valuation = std::make_pair(a->name, b->name);
            }
            out.push_back(std::move(rec));
            if (max_records && out.size() >= max_records) return out;
        }
    }
    return out;
}

std::vector<int> points_of_interest(const OffTheWallRecord& rec) {
    const auto& v = rec.path.vertices;
    std::map<int, int> by_height;  // y -> index
    for (int k = rec.ell; k <= rec.r; ++k) {
        if (v[k].y < 1) continue;
        bool westmost = true;
        for (int i = 0; i <= rec.r && westmost; ++i)
            if (v[i].y == v[k].y && v[i].x < v[k].x) westmost = false;
        if (westmost && !by_height.count(v[k].y)) by_height[v[k].y] = k;
    }
    std::vector<int> out;
    for (auto [y, k] : by_height) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}

Combination combine_off_the_wall(const OffTheWallRecord& rec_p, const OffTheWallRecord& rec_q) {
    if (rec_p.delta != rec_q.delta)
        throw Error(ErrorKind::WidthMismatch,
                    "widths " + std::to_string(rec_p.delta) + " and " + std::to_string(rec_q.delta) + " differ");
    if (rec_p.valuation && rec_q.valuation && *rec_p.valuation != *rec_q.valuation)
        throw Error(ErrorKind::ValuationMismatch, "wall valuations differ");
    Word p = rec_p.excursion(), q = rec_q.excursion();
    int reach = std::max(extent(ground(p).vertices), extent(ground(q).vertices));
    Window w{reach + rec_p.delta + 3};
    CoGrowOptions opts;
    opts.free_first_step = p.front() != q.front();
    CoGrowResult cg = cogrow(Side::Left, wall_backward(), wall_forward(p), wall_backward(), wall_forward(q), w,
                             4L * w.size(), opts);
    const Point target{rec_p.delta, 0};
    auto it = std::find(cg.vertices.begin(), cg.vertices.end(), target);
    if (it == cg.vertices.end())
        throw Error(ErrorKind::InvariantViolation, "left co-grow never reaches the right wall end");
    Combination c;
    c.g = Word(cg.word.begin(), cg.word.begin() + (it - cg.vertices.begin()));
    c.combined_p = ground(concat(Word(rec_p.path.word.begin(), rec_p.path.word.begin() + rec_p.ell), c.g),
                          rec_p.path.anchor);
    c.combined_q = ground(concat(Word(rec_q.path.word.begin(), rec_q.path.word.begin() + rec_q.ell), c.g),
                          rec_q.path.anchor);
    return c;
}

std::vector<std::pair<int, int>> ew_index_pairs(const GroundedPath& path) {
    const auto& v = path.vertices;
    const int n = static_cast<int>(v.size());
    std::vector<char> in_w(n, 0), in_e(n, 0);
    // Index 0 sits on both rays and would pair with anything; positive
    // indices only, as for off-the-wall segments.
    for (int i = 1; i < n; ++i) {
        if (v[i].y != 0) continue;
        if (v[i].x <= 0) {
            bool ok = true;
            for (int j = 0; j < n && ok; ++j)
                if (v[j].y == 0 && v[j].x <= v[i].x && j < i) ok = false;
            in_w[i] = ok;
        }
        if (v[i].x >= 0) {
            bool ok = true;
            for (int j = 0; j < n && ok; ++j)
                if (v[j].y == 0 && v[j].x >= v[i].x && j < i) ok = false;
            in_e[i] = ok;
        }
    }
    std::vector<int> marks;
    for (int i = 0; i < n; ++i)
        if (in_w[i] || in_e[i]) marks.push_back(i);
    std::vector<std::pair<int, int>> out;
    for (std::size_t k = 0; k + 1 < marks.size(); ++k)
        if (in_w[marks[k]] && in_e[marks[k + 1]]) out.push_back({marks[k], marks[k + 1]});
    return out;
}

AvoidingPath rightmost_avoiding_path(const Assembly& a, Point start, const Ray& forbidden, Point forbidden_at,
                                     Window window) {
    if (!a.occupied(start)) throw Error(ErrorKind::StartUnoccupied, to_string(start) + " is empty");
    if (!is_ray_simple(forbidden)) throw Error(ErrorKind::InvalidArgument, "forbidden ray is not simple");
    auto fv = ray_in_window(forbidden, forbidden_at, window);
    std::unordered_set<Point, PointHash> blocked(fv.begin(), fv.end());
    if (blocked.count(start)) throw Error(ErrorKind::PathIntersectsForbidden, "start lies on the forbidden ray");
    BindingGraph bg = binding_graph(a);
    auto bonded = [&](Point p, Point q) {
        const auto& nb = bg.adjacency.at(p);
        return std::find(nb.begin(), nb.end(), q) != nb.end();
    };
    auto reaches_boundary = [&](Point from, const std::unordered_set<Point, PointHash>& avoid) {
        std::unordered_set<Point, PointHash> seen{from};
        std::deque<Point> queue{from};
        while (!queue.empty()) {
            Point p = queue.front();
            queue.pop_front();
            if (window.on_boundary(p)) return true;
            for (Point q : bg.adjacency.at(p)) {
                if (!window.contains(q) || avoid.count(q) || blocked.count(q) || !seen.insert(q).second) continue;
                queue.push_back(q);
            }
        }
        return false;
    };

    AvoidingPath out;
    Word word;
    std::vector<Point> verts{start};
    std::unordered_set<Point, PointHash> used{start};
    Direction incoming = Direction::N;
    Point cur = start;
    while (!window.on_boundary(cur)) {
        bool moved = false;
        for (Direction d : {turn_right(incoming), incoming, turn_left(incoming), opposite(incoming)}) {
            Point nxt = cur + unit(d);
            if (!a.occupied(nxt) || !window.contains(nxt) || used.count(nxt) || blocked.count(nxt)) continue;
            if (!bonded(cur, nxt)) continue;
            if (!reaches_boundary(nxt, used)) continue;
            word.push_back(d);
            verts.push_back(nxt);
            used.insert(nxt);
            cur = nxt;
            incoming = d;
            moved = true;
            break;
        }
        if (!moved) {
            out.stuck = true;
            break;
        }
    }
    out.path = ground(word, start);
    return out;
}

namespace {

// Minimal k >= 0 with v - k*N on anchor.p^omega, plus (n, t) of that hit.
struct RayHit {
    long k;
    long n;
    int t;
};

std::optional<RayHit> lowest_shift(Point v, Point anchor, const Word& p) {
    Vec2 V = displacement(p);
    std::optional<RayHit> best;
    Point off = anchor;
    for (int t = 0; t < static_cast<int>(p.size()); ++t) {
        Vec2 c = v - off;
        std::optional<RayHit> hit;
        if (V.dx != 0) {
            if (c.dx % V.dx == 0 && c.dx / V.dx >= 0) {
                long n = c.dx / V.dx;
                long k = c.dy - n * V.dy;
                if (k >= 0) hit = RayHit{k, n, t};
            }
        } else if (c.dx == 0) {
            if (V.dy > 0) {
                if (c.dy >= 0) hit = RayHit{c.dy % V.dy, c.dy / V.dy, t};
            } else {
                long vy = -V.dy;
                long n = c.dy >= 0 ? 0 : (-c.dy + vy - 1) / vy;
                hit = RayHit{c.dy + n * vy, n, t};
            }
        }
        if (hit && (!best || hit->k < best->k)) best = hit;
        off = off + unit(p[t]);
    }
    return best;
}

}  // namespace

std::vector<SpecialPoint> special_points(const GroundedPath& path, Point A, const Word& p, Window window) {
    if (p.empty()) throw Error(ErrorKind::EmptyWord, "period must be nonempty");
    if (displacement(p).is_zero()) throw Error(ErrorKind::ZeroPeriodDisplacement, "period has zero displacement");
    const auto& v = path.vertices;
    for (Point q : v)
        if (!window.contains(q)) throw Error(ErrorKind::WindowExceeded, to_string(q) + " outside window");
    for (Point q : v) {
        auto h = lowest_shift(q, A, p);
        if (h && h->k == 0) throw Error(ErrorKind::PathIntersectsForbidden, to_string(q) + " lies on A.p^omega");
    }
    std::vector<SpecialPoint> out;
    const int last = static_cast<int>(v.size()) - 1;
    int rem = 0;
    Point cur = A;
    for (int guard = 0; guard <= static_cast<int>(v.size()); ++guard) {
        std::optional<long> kmin;
        for (int j = rem; j <= last; ++j)
            if (auto h = lowest_shift(v[j], cur, p); h && (!kmin || h->k < *kmin)) kmin = h->k;
        if (!kmin) break;
        Point shifted{cur.x, cur.y + static_cast<int>(*kmin)};
        std::vector<std::pair<int, RayHit>> hits;
        for (int j = rem; j <= last; ++j)
            if (auto h = lowest_shift(v[j], shifted, p); h && h->k == 0) hits.push_back({j, *h});
        for (auto& [j, h] : hits) {
            if (!out.empty() && out.back().index >= j) continue;
            out.push_back({j, h.t == 0 ? Word{} : Word(p.begin() + h.t, p.end())});
        }
        if (hits.back().first == last) break;  // the intersection runs to the window edge
        const RayHit& hs = hits.back().second;
        cur = shifted + displacement(p) * static_cast<int>(hs.n + 1);
        rem = hits.back().first;
    }
    return out;
}

PeriodicSearch find_periodic_assembly_path(const TAS& tas, Window window, int max_transient, int max_period) {
    ConfluenceReport rep = check_confluence(tas, window);
    if (!rep.confluent) throw Error(ErrorKind::NotConfluent, "TAS is not confluent within the window");
    PeriodicSearch res;
    res.radius = window.radius;
    GrowResult g = grow_max(tas, window);
    const Assembly& a = g.assembly;
    if (!g.truncated) {
        res.note = "finite";
        return res;
    }
    BindingGraph bg = binding_graph(a);

    std::vector<Point> verts{{0, 0}};
    Word word;
    std::unordered_set<Point, PointHash> on_path{{0, 0}};

    auto try_candidate = [&](int lm) -> std::optional<PeriodicCertificate> {
        const int k1 = lm, k2 = static_cast<int>(word.size());
        if (a.type_id(verts[k1]) != a.type_id(verts[k2])) return std::nullopt;
        Word m(word.begin(), word.begin() + k1), p(word.begin() + k1, word.end());
        if (displacement(p).is_zero() || !is_pumpable(p)) return std::nullopt;
        if (!is_ray_simple(Ray(m, p))) return std::nullopt;
        int depth = max_periodic_depth(window, {0, 0}, m, p);
        if (depth < 1 || !verify_periodic_tiles(a, {0, 0}, m, p, depth)) return std::nullopt;
        auto nc = non_causal(a, verts[k1]);
        for (Point q : ray_in_window(Ray({}, p), verts[k1], window))
            if (!nc.count(q)) return std::nullopt;
        PeriodicCertificate c{m, p, depth, {}};
        for (int i = k1; i < k2; ++i) c.tile_period.push_back(a.at(verts[i])->name);
        return c;
    };

    std::function<std::optional<PeriodicCertificate>(int, int)> dfs =
        [&](int lm, int total) -> std::optional<PeriodicCertificate> {
        if (static_cast<int>(word.size()) == total) return try_candidate(lm);
        Point cur = verts.back();
        for (Direction d : kDirections) {
            Point nxt = cur + unit(d);
            if (on_path.count(nxt) || !a.occupied(nxt)) continue;
            const auto& nb = bg.adjacency.at(cur);
            if (std::find(nb.begin(), nb.end(), nxt) == nb.end()) continue;
            word.push_back(d);
            verts.push_back(nxt);
            on_path.insert(nxt);
            auto found = dfs(lm, total);
            on_path.erase(nxt);
            verts.pop_back();
            word.pop_back();
            if (found) return found;
        }
        return std::nullopt;
    };

    for (int lm = 1; lm <= max_transient; ++lm)
        for (int lp = 1; lp <= max_period; ++lp)
            if (auto c = dfs(lm, lm + lp)) {
                res.certificate = c;
                res.note = "found";
                return res;
            }
    res.note = "not found within window";
    return res;
}

}  // namespace tileasm
