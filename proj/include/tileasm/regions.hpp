#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tileasm/path_algebra.hpp"

namespace tileasm {

enum class Side { Left, Right, On };
const char* to_string(Side s);

struct BiInfinitePath {
    Point anchor;
    Ray backward;  // orientation Backward
    Ray forward;   // orientation Forward
};

// `<bp>|<bm>@(x,y)<fm>|<fp>`, e.g. `E|@(0,0)N|E`.
BiInfinitePath parse_biinfinite(std::string_view text);
std::string to_string(const BiInfinitePath& p);

// The part of a bi-infinite path seen through a window: the contiguous
// in-window stretch plus the first vertex outside the window on each end.
struct WindowedPath {
    Window window;
    std::vector<Point> vertices;     // in-window vertices in path order
    Point enter;                     // last vertex before the stretch (outside)
    Point leave;                     // first vertex after the stretch (outside)
    int anchor_index = 0;            // index of the anchor in `vertices`
};

// Throws PointOutsideWindow if the anchor is not in the window,
// PathReentersWindow if a ray comes back after leaving, and
// SimplicityViolation if the windowed stretch repeats a vertex.
WindowedPath window_path(const BiInfinitePath& p, Window w);

// All vertices of anchor.r (walking away from the anchor) that fall inside
// the window, in ray order; no contiguity requirement.
std::vector<Point> ray_in_window(const Ray& r, Point anchor, Window w);

// Side classification of every window vertex for one bi-infinite path.
class RegionMap {
public:
    RegionMap(const BiInfinitePath& p, Window w);
    explicit RegionMap(const WindowedPath& wp);

    const Window& window() const { return window_; }
    const WindowedPath& path() const { return path_; }
    Side side(Point q) const;
    bool in_region(Point q, Side s) const;  // path vertices belong to both
    // Edge (q, q+d) as a member of the region subgraph.
    bool edge_in_region(Point q, Direction d, Side s) const;
    // Vertex index on the windowed path, or -1.
    int path_index(Point q) const;

private:
    void build();

    Window window_;
    WindowedPath path_;
    std::vector<signed char> side_;  // 0 On, 1 Left, 2 Right
    std::vector<int> index_;
    std::vector<unsigned char> left_dirs_, right_dirs_, path_dirs_;
};

Side side_of(const BiInfinitePath& p, Point q, Window w);
std::set<Point> region_members(const BiInfinitePath& p, Side s, Window w);
std::set<Point> region_interior(const std::set<Point>& region);

Side line_side(Point q, Point base, Vec2 v);
bool ribbon_contains(Point a, Point b, Vec2 v, Point q);

struct IntersectionComponent {
    std::set<Point> members;
    bool reaches_boundary = false;
};

IntersectionComponent region_intersection_component(const RegionMap& r1, const RegionMap& r2, Side s1,
                                                     Side s2, Point start);
IntersectionComponent region_intersection_component(const BiInfinitePath& p1, const BiInfinitePath& p2,
                                                     Side s1, Side s2, Point start, Window w);

}  // namespace tileasm
