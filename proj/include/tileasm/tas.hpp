#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tileasm/path_algebra.hpp"

namespace tileasm {

// Empty string is the Null glue; it never binds, not even to itself.
using Glue = std::string;

inline bool glues_bind(const Glue& a, const Glue& b) { return !a.empty() && a == b; }

struct TileType {
    std::string name;
    std::array<Glue, 4> glues;  // indexed by Direction

    const Glue& glue(Direction d) const { return glues[static_cast<int>(d)]; }
    bool operator==(const TileType&) const = default;
};

struct TAS {
    std::vector<TileType> tiles;
    TileType seed;
    bool operator==(const TAS&) const = default;
};

TAS parse_tas(std::string_view text);
std::string format_tas(const TAS& tas);

TAS rotate_tas(const TAS& tas);
TAS reflect_tas_ns(const TAS& tas);

// Type id 0 is the seed, id i >= 1 is tas.tiles[i-1].
struct Assembly {
    Window window;
    std::vector<TileType> types;
    std::map<Point, int> cells;
    bool truncated = false;

    bool occupied(Point p) const { return cells.count(p) != 0; }
    const TileType* at(Point p) const;
    int type_id(Point p) const;
};

Assembly seed_assembly(const TAS& tas, Window w);

// Tile ids attachable at an empty site.
std::set<int> attachable(const Assembly& a, Point site);
std::vector<TileType> attachable_tiles(const Assembly& a, Point site);

struct GrowResult {
    Assembly assembly;  // meaningful when `unambiguous`
    std::map<Point, std::set<int>> multiplicity;
    bool unambiguous = true;
    bool truncated = false;
};

// Tiles producible at each site inside the window. When the (site, tile)
// closure is ambiguous an exact dominator test decides confluence; if the
// system is not confluent, `multiplicity` keeps the closure, which may
// over-approximate. A shuffle seed randomises the closure's frontier order;
// the result does not depend on it.
GrowResult grow_max(const TAS& tas, Window w, std::optional<unsigned> shuffle_seed = std::nullopt);

struct Witness {
    Point site;
    std::string tile_a;
    std::string tile_b;
};

struct ConfluenceReport {
    bool confluent = true;
    int radius = 0;
    std::optional<Witness> witness;
    // False when the path search for a nearer ambiguous site ran out of
    // budget; the verdict itself is always exact.
    bool witness_nearest = true;
};

// The witness is the ambiguous site nearest the origin, ties by (y, x). Its
// tiles are the two smallest names producible there.
ConfluenceReport check_confluence(const TAS& tas, Window w, long search_budget = 2'000'000);

struct BindingGraph {
    std::vector<Point> vertices;                 // sorted
    std::map<Point, std::vector<Point>> adjacency;
    std::vector<std::pair<Point, Point>> edges;  // each once, sorted
};

BindingGraph binding_graph(const Assembly& a);
bool is_stable(const Assembly& a);

bool verify_periodic_tiles(const Assembly& a, Point anchor, const Word& m, const Word& p, int depth);
// Largest depth for which anchor.m.p^depth stays inside the window.
int max_periodic_depth(const Window& w, Point anchor, const Word& m, const Word& p);

}  // namespace tileasm
