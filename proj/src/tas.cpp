#include "tileasm/tas.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <random>
#include <sstream>
#include <tuple>

#include "tileasm/graph.hpp"

namespace tileasm {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

int side_index(char c) {
    switch (c) {
    case 'N': return 0;
    case 'E': return 1;
    case 'S': return 2;
    case 'W': return 3;
    }
    return -1;
}

}  // namespace

TAS parse_tas(std::string_view text) {
    TAS tas;
    bool have_seed = false;
    std::set<std::string> names;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        auto syntax = [&](int col, const std::string& why) {
            return Error(ErrorKind::SyntaxError,
                         "line " + std::to_string(lineno) + ", column " + std::to_string(col) + ": " + why, lineno,
                         col);
        };
        const std::string& kw = toks[0].text;
        if (kw != "tile" && kw != "seed") throw syntax(toks[0].column, "expected 'tile' or 'seed'");
        if (toks.size() < 2) throw syntax(static_cast<int>(line.size()) + 1, "missing tile name");
        TileType t;
        t.name = toks[1].text;
        if (t.name.find('=') != std::string::npos) throw syntax(toks[1].column, "missing tile name");
        std::array<bool, 4> given{};
        for (std::size_t k = 2; k < toks.size(); ++k) {
            const Token& tk = toks[k];
            if (tk.text.size() < 3 || tk.text[1] != '=' || side_index(tk.text[0]) < 0)
                throw syntax(tk.column, "expected <N|E|S|W>=<glue|->, got '" + tk.text + "'");
            int s = side_index(tk.text[0]);
            if (given[s]) throw syntax(tk.column, std::string("side ") + tk.text[0] + " given twice");
            given[s] = true;
            std::string g = tk.text.substr(2);
            t.glues[s] = g == "-" ? Glue{} : g;
        }
        if (kw == "seed") {
            if (have_seed)
                throw Error(ErrorKind::DuplicateSeed, "line " + std::to_string(lineno) + ": second seed", lineno,
                            toks[0].column);
            have_seed = true;
        }
        if (!names.insert(t.name).second)
            throw Error(ErrorKind::DuplicateTileName,
                        "line " + std::to_string(lineno) + ": duplicate tile name '" + t.name + "'", lineno,
                        toks[1].column);
        if (kw == "seed") tas.seed = t;
        else tas.tiles.push_back(t);
    }
    if (!have_seed) throw Error(ErrorKind::MissingSeed, "no seed statement");
    return tas;
}

std::string format_tas(const TAS& tas) {
    std::ostringstream os;
    auto line = [&](const char* kw, const TileType& t) {
        os << kw << ' ' << t.name;
        for (Direction d : kDirections) os << ' ' << to_char(d) << '=' << (t.glue(d).empty() ? "-" : t.glue(d));
        os << '\n';
    };
    line("seed", tas.seed);
    for (const auto& t : tas.tiles) line("tile", t);
    return os.str();
}

namespace {
template <class F>
TAS map_sides(const TAS& tas, F to) {
    auto conv = [&](const TileType& t) {
        TileType r;
        r.name = t.name;
        for (Direction d : kDirections) r.glues[static_cast<int>(to(d))] = t.glue(d);
        return r;
    };
    TAS out;
    out.seed = conv(tas.seed);
    for (const auto& t : tas.tiles) out.tiles.push_back(conv(t));
    return out;
}
}  // namespace

TAS rotate_tas(const TAS& tas) { return map_sides(tas, [](Direction d) { return turn_right(d); }); }

TAS reflect_tas_ns(const TAS& tas) {
    return map_sides(tas, [](Direction d) {
        if (d == Direction::N) return Direction::S;
        if (d == Direction::S) return Direction::N;
        return d;
    });
}

const TileType* Assembly::at(Point p) const {
    auto it = cells.find(p);
    return it == cells.end() ? nullptr : &types[it->second];
}

int Assembly::type_id(Point p) const {
    auto it = cells.find(p);
    return it == cells.end() ? -1 : it->second;
}

Assembly seed_assembly(const TAS& tas, Window w) {
    Assembly a;
    a.window = w;
    a.types.push_back(tas.seed);
    a.types.insert(a.types.end(), tas.tiles.begin(), tas.tiles.end());
    a.cells[{0, 0}] = 0;
    return a;
}

std::set<int> attachable(const Assembly& a, Point site) {
    if (!a.window.contains(site)) throw Error(ErrorKind::SiteOutsideWindow, to_string(site) + " outside window");
    if (a.occupied(site)) throw Error(ErrorKind::SiteOccupied, to_string(site) + " is occupied");
    std::set<int> out;
    for (Direction d : kDirections) {
        const TileType* nb = a.at(site + unit(d));
        if (!nb) continue;
        const Glue& g = nb->glue(opposite(d));
        for (std::size_t t = 1; t < a.types.size(); ++t)
            if (glues_bind(a.types[t].glue(d), g)) out.insert(static_cast<int>(t));
    }
    return out;
}

std::vector<TileType> attachable_tiles(const Assembly& a, Point site) {
    std::vector<TileType> out;
    for (int id : attachable(a, site)) out.push_back(a.types[id]);
    return out;
}

namespace {

long site_key_dist(Point p) { return std::abs(p.x) + std::abs(p.y); }

// Nearest to the origin first, then (y, x).
struct SiteOrder {
    bool operator()(Point a, Point b) const {
        return std::make_tuple(site_key_dist(a), a.y, a.x) > std::make_tuple(site_key_dist(b), b.y, b.x);
    }
};

bool site_less(Point a, Point b) { return SiteOrder{}(b, a); }

// Greedy producible assembly: frontier sites in SiteOrder, smallest tile
// name among the attachable ones.
Assembly grow_greedy(const TAS& tas, Window w, bool& truncated) {
    Assembly a = seed_assembly(tas, w);
    truncated = false;
    std::priority_queue<Point, std::vector<Point>, SiteOrder> frontier;
    std::set<Point> queued;
    auto push_neighbors = [&](Point s) {
        const TileType& t = *a.at(s);
        for (Direction d : kDirections) {
            Point q = s + unit(d);
            if (a.occupied(q) || t.glue(d).empty()) continue;
            bool any = false;
            for (std::size_t k = 1; k < a.types.size() && !any; ++k)
                any = glues_bind(a.types[k].glue(opposite(d)), t.glue(d));
            if (!any) continue;
            if (!w.contains(q)) {
                truncated = true;
                continue;
            }
            if (queued.insert(q).second) frontier.push(q);
        }
    };
    push_neighbors({0, 0});
    while (!frontier.empty()) {
        Point s = frontier.top();
        frontier.pop();
        auto cand = attachable(a, s);
        if (cand.empty()) continue;
        int best = *cand.begin();
        for (int id : cand)
            if (a.types[id].name < a.types[best].name) best = id;
        a.cells[s] = best;
        push_neighbors(s);
    }
    a.truncated = truncated;
    return a;
}

}  // namespace

namespace {

// Exact disagreement test on the greedy assembly a: X disagrees iff some
// neighbour Y of X that is reachable from the seed without passing X offers
// a glue for a tile other than a(X).
std::optional<Witness> disagreement(const Assembly& a) {
    std::vector<Point> sites;
    std::map<Point, int> idx;
    for (const auto& [p, id] : a.cells) {
        idx[p] = static_cast<int>(sites.size());
        sites.push_back(p);
    }
    std::vector<std::vector<int>> adj(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i)
        for (Direction d : kDirections) {
            Point q = sites[i] + unit(d);
            auto it = idx.find(q);
            if (it == idx.end()) continue;
            if (glues_bind(a.at(sites[i])->glue(d), a.at(q)->glue(opposite(d)))) adj[i].push_back(it->second);
        }
    auto idom = immediate_dominators(adj, idx.at({0, 0}));

    std::optional<Witness> best;
    for (std::size_t x = 0; x < sites.size(); ++x) {
        Point X = sites[x];
        if (X == Point{0, 0}) continue;
        const TileType& here = *a.at(X);
        std::optional<std::string> alt;
        for (Direction d : kDirections) {
            Point Y = X + unit(d);
            auto it = idx.find(Y);
            if (it == idx.end() || dominates(idom, static_cast<int>(x), it->second)) continue;
            const Glue& gy = a.at(Y)->glue(opposite(d));
            for (std::size_t t = 1; t < a.types.size(); ++t) {
                const TileType& cand = a.types[t];
                if (cand.name == here.name || !glues_bind(cand.glue(d), gy)) continue;
                if (!alt || cand.name < *alt) alt = cand.name;
            }
        }
        if (!alt) continue;
        if (!best || site_less(X, best->site)) best = Witness{X, std::min(here.name, *alt), std::max(here.name, *alt)};
    }
    return best;
}

}  // namespace

GrowResult grow_max(const TAS& tas, Window w, std::optional<unsigned> shuffle_seed) {
    GrowResult r;
    std::vector<TileType> types;
    types.push_back(tas.seed);
    types.insert(types.end(), tas.tiles.begin(), tas.tiles.end());

    // (site, tile) closure. It ignores self-avoidance, so with a single
    // candidate per site it is exact and otherwise an over-approximation.
    r.multiplicity[{0, 0}].insert(0);
    std::vector<std::pair<Point, int>> frontier{{{0, 0}, 0}};
    std::mt19937 rng(shuffle_seed.value_or(0));
    while (!frontier.empty()) {
        std::size_t pick = 0;
        if (shuffle_seed) pick = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
        auto [site, id] = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        for (Direction d : kDirections) {
            const Glue& g = types[id].glue(d);
            if (g.empty()) continue;
            Point q = site + unit(d);
            if (q == Point{0, 0}) continue;
            for (std::size_t t = 1; t < types.size(); ++t) {
                if (!glues_bind(types[t].glue(opposite(d)), g)) continue;
                if (!w.contains(q)) continue;
                if (r.multiplicity[q].insert(static_cast<int>(t)).second)
                    frontier.push_back({q, static_cast<int>(t)});
            }
        }
    }
    for (const auto& [site, ids] : r.multiplicity)
        if (ids.size() > 1) r.unambiguous = false;

    bool greedy_truncated = false;
    r.assembly = grow_greedy(tas, w, greedy_truncated);
    if (!r.unambiguous && !disagreement(r.assembly)) {
        // Confluent after all: every producible tile is the greedy one.
        r.unambiguous = true;
        r.multiplicity.clear();
        for (const auto& [p, id] : r.assembly.cells) r.multiplicity[p] = {id};
    }
    r.truncated = greedy_truncated;
    return r;
}

namespace {

// Tile names producible at `target`: the last tiles of self-avoiding glue
// paths from the seed. Stops once `enough` names are known or the budget
// (path extensions) is spent.
std::set<std::string> producible_at(const TAS& tas, Window w, Point target, std::size_t enough, long& budget) {
    if (target == Point{0, 0}) return {tas.seed.name};
    std::set<std::string> names;
    std::set<Point> used{{0, 0}};
    auto done = [&] { return names.size() >= enough || budget <= 0; };
    std::function<void(Point, const TileType&)> walk = [&](Point at, const TileType& t) {
        for (Direction d : kDirections) {
            Point q = at + unit(d);
            if (!w.contains(q) || used.count(q) || t.glue(d).empty()) continue;
            for (const TileType& n : tas.tiles) {
                if (done()) return;
                if (!glues_bind(n.glue(opposite(d)), t.glue(d))) continue;
                --budget;
                if (q == target) {
                    names.insert(n.name);
                    continue;
                }
                used.insert(q);
                walk(q, n);
                used.erase(q);
            }
        }
    };
    walk({0, 0}, tas.seed);
    return names;
}

}  // namespace

ConfluenceReport check_confluence(const TAS& tas, Window w, long search_budget) {
    ConfluenceReport rep;
    rep.radius = w.radius;
    GrowResult g = grow_max(tas, w);
    if (g.unambiguous) return rep;
    rep.confluent = false;
    rep.witness = disagreement(g.assembly);

    // A flagged site is ambiguous, but an ambiguous site can be nearer than
    // every flagged one when its alternative tile needs a detour through
    // other alternatives. Try the nearer sites in order.
    std::vector<Point> nearer;
    for (int i = 0; i < w.size(); ++i)
        if (site_less(w.at(i), rep.witness->site)) nearer.push_back(w.at(i));
    std::sort(nearer.begin(), nearer.end(), site_less);
    long budget = search_budget;
    for (Point x : nearer) {
        auto names = producible_at(tas, w, x, 2, budget);
        if (budget <= 0) {
            rep.witness_nearest = false;
            break;
        }
        if (names.size() >= 2) {
            rep.witness->site = x;
            break;
        }
    }
    long pair_budget = search_budget;
    auto names = producible_at(tas, w, rep.witness->site, tas.tiles.size(), pair_budget);
    if (names.size() >= 2) {
        rep.witness->tile_a = *names.begin();
        rep.witness->tile_b = *std::next(names.begin());
    }
    return rep;
}

BindingGraph binding_graph(const Assembly& a) {
    BindingGraph g;
    for (const auto& [p, id] : a.cells) {
        g.vertices.push_back(p);
        g.adjacency[p];
    }
    for (const auto& [p, id] : a.cells)
        for (Direction d : kDirections) {
            Point q = p + unit(d);
            const TileType* nb = a.at(q);
            if (!nb || !glues_bind(a.types[id].glue(d), nb->glue(opposite(d)))) continue;
            g.adjacency[p].push_back(q);
            if (p < q) g.edges.push_back({p, q});
        }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool is_stable(const Assembly& a) {
    if (a.cells.empty()) return true;
    BindingGraph g = binding_graph(a);
    std::set<Point> seen{g.vertices.front()};
    std::deque<Point> queue{g.vertices.front()};
    while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        for (Point q : g.adjacency[p])
            if (seen.insert(q).second) queue.push_back(q);
    }
    return seen.size() == g.vertices.size();
}

namespace {
std::vector<Point> period_sites(Point anchor, const Word& m, const Word& p, int i) {
    Point base = anchor + displacement(m) + displacement(p) * i;
    std::vector<Point> out;
    for (Direction d : p) {
        out.push_back(base);
        base = base + unit(d);
    }
    return out;
}
}  // namespace

int max_periodic_depth(const Window& w, Point anchor, const Word& m, const Word& p) {
    for (Point q : ground(m, anchor).vertices)
        if (!w.contains(q)) return -1;
    if (p.empty() || displacement(p).is_zero()) return -1;
    int d = -1;
    while (true) {
        for (Point q : period_sites(anchor, m, p, d + 1))
            if (!w.contains(q)) return d;
        ++d;
    }
}

bool verify_periodic_tiles(const Assembly& a, Point anchor, const Word& m, const Word& p, int depth) {
    if (!is_ray_simple(Ray(m, p))) throw Error(ErrorKind::InvalidArgument, "m.p^omega is not a simple ray");
    if (depth > max_periodic_depth(a.window, anchor, m, p))
        throw Error(ErrorKind::WindowExceeded, "anchor.m.p^" + std::to_string(depth) + " leaves the window");
    auto ref = period_sites(anchor, m, p, 0);
    for (int i = 0; i <= depth; ++i) {
        auto cur = period_sites(anchor, m, p, i);
        for (std::size_t k = 0; k < cur.size(); ++k) {
            int t0 = a.type_id(ref[k]), ti = a.type_id(cur[k]);
            if (t0 < 0 || ti < 0 || a.types[t0].name != a.types[ti].name) return false;
        }
    }
    return true;
}

}  // namespace tileasm
