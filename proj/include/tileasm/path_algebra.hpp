#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tileasm/error.hpp"
#include "tileasm/geometry.hpp"

namespace tileasm {

using Word = std::vector<Direction>;

// Parses a string over {N,E,S,W}; anything else throws InvalidDirection with
// the offending position in the message.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

Word concat(const Word& a, const Word& b);
Word power(const Word& w, int k);

Vec2 displacement(const Word& w);
Word reverse(const Word& w);
std::set<Word> rotations(const Word& w);
Word rotate90(const Word& w);
Word reflect_ns(const Word& w);

struct GroundedPath {
    Point anchor;
    Word word;
    std::vector<Point> vertices;
    bool simple = true;
};

GroundedPath ground(const Word& w, Point anchor = {0, 0});
bool is_free_path(const Word& w);
bool is_pumpable(const Word& m);

// Larger side of the bounding box of ground(w).
int bbox_diameter(const Word& w);

enum class Orientation { Forward, Backward };

// Ultimately periodic ray m.p^omega. A backward ray reads omega(p).m and ends
// at its anchor.
struct Ray {
    Word transient;
    Word period;
    Orientation orientation = Orientation::Forward;

    Ray() = default;
    Ray(Word m, Word p, Orientation o = Orientation::Forward);

    Direction first_direction() const;
};

// Forward ray tracing the same vertices walking away from the anchor; identity
// for forward rays, reverse(m).reverse(p)^omega for backward ones.
Ray outward(const Ray& r);
std::vector<Point> ray_vertices(const Ray& r, Point anchor, long steps);

int ray_verification_bound(const Word& m, const Word& p);
bool is_ray_simple(const Ray& r);

}  // namespace tileasm
