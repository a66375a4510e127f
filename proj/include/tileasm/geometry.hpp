#pragma once

#include <array>
#include <compare>
#include <cstdlib>
#include <functional>
#include <string>

namespace tileasm {

// Enum order doubles as the lexicographic order for words.
enum class Direction : unsigned char { N = 0, E = 1, S = 2, W = 3 };

inline constexpr std::array<Direction, 4> kDirections = {Direction::N, Direction::E, Direction::S,
                                                         Direction::W};

struct Vec2 {
    int dx = 0;
    int dy = 0;
    auto operator<=>(const Vec2&) const = default;
    Vec2 operator-() const { return {-dx, -dy}; }
    Vec2 operator+(Vec2 o) const { return {dx + o.dx, dy + o.dy}; }
    Vec2 operator-(Vec2 o) const { return {dx - o.dx, dy - o.dy}; }
    Vec2 operator*(int k) const { return {dx * k, dy * k}; }
    bool is_zero() const { return dx == 0 && dy == 0; }
};

struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
    Point operator+(Vec2 v) const { return {x + v.dx, y + v.dy}; }
    Point operator-(Vec2 v) const { return {x - v.dx, y - v.dy}; }
    Vec2 operator-(Point o) const { return {x - o.x, y - o.y}; }
};

inline Vec2 unit(Direction d) {
    switch (d) {
    case Direction::N: return {0, 1};
    case Direction::E: return {1, 0};
    case Direction::S: return {0, -1};
    case Direction::W: return {-1, 0};
    }
    return {0, 0};
}

inline Direction opposite(Direction d) { return static_cast<Direction>((static_cast<int>(d) + 2) & 3); }
// Quarter turns: left of N is W, left of E is N.
inline Direction turn_left(Direction d) { return static_cast<Direction>((static_cast<int>(d) + 3) & 3); }
inline Direction turn_right(Direction d) { return static_cast<Direction>((static_cast<int>(d) + 1) & 3); }

inline char to_char(Direction d) { return "NESW"[static_cast<int>(d)]; }

inline std::string to_string(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Square window {|x| <= radius, |y| <= radius}.
struct Window {
    int radius = 1;
    bool contains(Point p) const { return std::abs(p.x) <= radius && std::abs(p.y) <= radius; }
    bool on_boundary(Point p) const {
        return contains(p) && (std::abs(p.x) == radius || std::abs(p.y) == radius);
    }
    int side() const { return 2 * radius + 1; }
    // Dense index for grid-backed sets.
    int index(Point p) const { return (p.y + radius) * side() + (p.x + radius); }
    Point at(int idx) const { return {idx % side() - radius, idx / side() - radius}; }
    int size() const { return side() * side(); }
};

struct PointHash {
    std::size_t operator()(Point p) const noexcept {
        return std::hash<long long>()((static_cast<long long>(p.x) << 32) ^ static_cast<unsigned>(p.y));
    }
};

}  // namespace tileasm
