#include "tileasm/path_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace tileasm {

Word parse_word(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'N': w.push_back(Direction::N); break;
        case 'E': w.push_back(Direction::E); break;
        case 'S': w.push_back(Direction::S); break;
        case 'W': w.push_back(Direction::W); break;
        default:
            throw Error(ErrorKind::InvalidDirection, "invalid direction '" + std::string(1, text[i]) +
                                                         "' at position " + std::to_string(i));
        }
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Direction d : w) s.push_back(to_char(d));
    return s;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word power(const Word& w, int k) {
    Word r;
    r.reserve(w.size() * std::max(k, 0));
    for (int i = 0; i < k; ++i) r.insert(r.end(), w.begin(), w.end());
    return r;
}

Vec2 displacement(const Word& w) {
    Vec2 v;
    for (Direction d : w) v = v + unit(d);
    return v;
}

Word reverse(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(opposite(*it));
    return r;
}

std::set<Word> rotations(const Word& w) {
    if (w.empty()) throw Error(ErrorKind::EmptyWord, "rotations of the empty word");
    std::set<Word> out;
    Word r = w;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.insert(r);
        std::rotate(r.begin(), r.begin() + 1, r.end());
    }
    return out;
}

Word rotate90(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (Direction d : w) r.push_back(turn_right(d));
    return r;
}

Word reflect_ns(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (Direction d : w) {
        if (d == Direction::N) r.push_back(Direction::S);
        else if (d == Direction::S) r.push_back(Direction::N);
        else r.push_back(d);
    }
    return r;
}

GroundedPath ground(const Word& w, Point anchor) {
    GroundedPath g;
    g.anchor = anchor;
    g.word = w;
    g.vertices.reserve(w.size() + 1);
    g.vertices.push_back(anchor);
    std::unordered_set<Point, PointHash> seen{anchor};
    Point cur = anchor;
    for (Direction d : w) {
        cur = cur + unit(d);
        g.vertices.push_back(cur);
        if (!seen.insert(cur).second) g.simple = false;
    }
    return g;
}

bool is_free_path(const Word& w) { return ground(w).simple; }

bool is_pumpable(const Word& m) {
    if (m.empty()) throw Error(ErrorKind::EmptyWord, "is_pumpable of the empty word");
    return ground(concat(m, m)).simple;
}

int bbox_diameter(const Word& w) {
    int minx = 0, maxx = 0, miny = 0, maxy = 0;
    Point cur{0, 0};
    for (Direction d : w) {
        cur = cur + unit(d);
        minx = std::min(minx, cur.x);
        maxx = std::max(maxx, cur.x);
        miny = std::min(miny, cur.y);
        maxy = std::max(maxy, cur.y);
    }
    return std::max(maxx - minx, maxy - miny);
}

Ray::Ray(Word m, Word p, Orientation o) : transient(std::move(m)), period(std::move(p)), orientation(o) {
    if (period.empty()) throw Error(ErrorKind::EmptyWord, "ray period must be nonempty");
}

Direction Ray::first_direction() const {
    Ray o = outward(*this);
    return o.transient.empty() ? o.period.front() : o.transient.front();
}

Ray outward(const Ray& r) {
    if (r.orientation == Orientation::Forward) return r;
    return Ray(reverse(r.transient), reverse(r.period), Orientation::Forward);
}

std::vector<Point> ray_vertices(const Ray& r, Point anchor, long steps) {
    Ray o = outward(r);
    std::vector<Point> out;
    out.reserve(steps + 1);
    out.push_back(anchor);
    Point cur = anchor;
    const long m = static_cast<long>(o.transient.size());
    const long p = static_cast<long>(o.period.size());
    for (long i = 0; i < steps; ++i) {
        Direction d = i < m ? o.transient[i] : o.period[(i - m) % p];
        cur = cur + unit(d);
        out.push_back(cur);
    }
    return out;
}

int ray_verification_bound(const Word& m, const Word& p) {
    Vec2 v = displacement(p);
    int norm = std::max(std::abs(v.dx), std::abs(v.dy));
    int num = bbox_diameter(m) + 2 * bbox_diameter(p);
    int den = std::max(1, norm);
    return (num + den - 1) / den + 2;
}

bool is_ray_simple(const Ray& r) {
    if (r.period.empty()) throw Error(ErrorKind::EmptyWord, "ray period must be nonempty");
    if (displacement(r.period).is_zero())
        throw Error(ErrorKind::ZeroPeriodDisplacement, "period " + to_string(r.period) + " has zero displacement");
    if (!is_pumpable(r.period)) return false;
    Ray o = outward(r);
    int k = ray_verification_bound(o.transient, o.period);
    return ground(concat(o.transient, power(o.period, k))).simple;
}

}  // namespace tileasm
