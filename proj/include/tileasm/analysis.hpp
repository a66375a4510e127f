#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tileasm/cogrow.hpp"
#include "tileasm/regions.hpp"
#include "tileasm/tas.hpp"

namespace tileasm {

// Sites B such that A can be reached from the seed in the binding graph
// without passing through B (A itself included); the whole window when A
// is empty.
std::set<Point> non_causal(const Assembly& a, Point A);

Assembly verified_extend(const Assembly& a, const TAS& tas, Point A, const Word& p);

struct OffTheWallRecord {
    GroundedPath path;  // the off-the-wall path P_0..P_r
    int ell = 0;
    int r = 0;
    int x0 = 0;
    int delta = 0;
    int height = 0;
    std::set<Point> surface;
    int area = 0;
    std::optional<std::pair<std::string, std::string>> valuation;

    Word excursion() const { return Word(path.word.begin() + ell, path.word.begin() + r); }
};

// Every (ell, r) pair of the anchored path that is a rightwards off-the-wall
// segment; with an assembly the wall valuation is filled in.
std::vector<OffTheWallRecord> find_off_the_wall(const GroundedPath& path, std::size_t max_records,
                                                const Assembly* assembly = nullptr);

// Surface above the wall for an excursion word starting at (x0, 0).
std::set<Point> surface_above(int x0, const Word& excursion);

std::vector<int> points_of_interest(const OffTheWallRecord& rec);

struct Combination {
    Word g;
    GroundedPath combined_p;
    GroundedPath combined_q;
};

Combination combine_off_the_wall(const OffTheWallRecord& rec_p, const OffTheWallRecord& rec_q);

std::vector<std::pair<int, int>> ew_index_pairs(const GroundedPath& path);

struct AvoidingPath {
    GroundedPath path;
    bool stuck = false;
};

AvoidingPath rightmost_avoiding_path(const Assembly& a, Point start, const Ray& forbidden, Point forbidden_at,
                                     Window window);

struct SpecialPoint {
    int index;
    Word q;
};

std::vector<SpecialPoint> special_points(const GroundedPath& path, Point A, const Word& p, Window window);

struct PeriodicCertificate {
    Word m;
    Word p;
    int verified_depth = 0;
    std::vector<std::string> tile_period;
};

struct PeriodicSearch {
    std::optional<PeriodicCertificate> certificate;
    std::string note;  // "finite", "found" or "not found within window"
    int radius = 0;
};

PeriodicSearch find_periodic_assembly_path(const TAS& tas, Window window, int max_transient, int max_period);

}  // namespace tileasm
