#pragma once

// Reference implementations and random instance generators used by the
// property suites. Each oracle computes its answer along a different route
// from the library operation it checks.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "tileasm/analysis.hpp"
#include "tileasm/cogrow.hpp"
#include "tileasm/regions.hpp"
#include "tileasm/tas.hpp"

namespace tileasm::oracle {

using Rng = std::mt19937_64;

// ground(m^k) simple for every k in [1, kmax].
bool pumped_simple(const Word& m, int kmax);

// m.p^k grounded simple for a long prefix (k up to `copies`).
bool ray_prefix_simple(const Word& m, const Word& p, int copies);

// Side by ray-crossing parity: the windowed stretch is closed into a polygon
// through the ring just outside the window (counter-clockwise from the exit
// back to the entry), then a ray cast east from q counts vertical crossings
// with the half-open rule.
Side side_by_parity(const WindowedPath& wp, Point q);

// NonCausal(A) by deleting each site in turn and testing reachability.
std::set<Point> non_causal_by_deletion(const Assembly& a, Point A);

// Every NonCausal set of an assembly at once: one BFS per deleted site.
// Result is indexed like a.cells iteration order.
std::vector<std::set<Point>> all_non_causal_by_deletion(const Assembly& a);

struct CoGrowInstance {
    Side side = Side::Right;
    Ray b, f, b2, f2;
    Window window;
    std::string serialize() const;
};

// Violations of the co-grow contract on one instance, as readable lines.
// Termination is only flagged when the origin's component of R and R' still
// reaches the boundary of a window four times larger: a finite region can
// outgrow the co-grow's window. Such window-only cases bump *window_only.
std::vector<std::string> cogrow_violations(const CoGrowInstance& inst, const CoGrowResult& res,
                                           int* window_only = nullptr);

// Generators -----------------------------------------------------------

Word random_word(Rng& rng, int min_len, int max_len);
Word random_period(Rng& rng, int max_len);  // pumpable, nonzero displacement
BiInfinitePath random_biinfinite(Rng& rng, Window w);
// Both paths are simple in a window four times larger than inst.window.
CoGrowInstance random_cogrow_instance(Rng& rng, int min_radius, int max_radius);
TAS random_tas(Rng& rng, int min_tiles, int max_tiles, int glue_alphabet);
TAS random_confluent_tas(Rng& rng, Window w);
// A path "W^k . N . (route above the wall) . S" that is off-the-wall.
GroundedPath random_off_the_wall_path(Rng& rng, int delta);
GroundedPath random_walk_path(Rng& rng, int length);

}  // namespace tileasm::oracle
