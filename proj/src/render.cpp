#include "tileasm/render.hpp"

#include <sstream>

namespace tileasm {

std::string render_ascii(const Assembly& a) {
    const int r = a.window.radius;
    std::string out;
    for (int y = r; y >= -r; --y) {
        for (int x = -r; x <= r; ++x) {
            const TileType* t = a.at({x, y});
            out.push_back(t ? (t->name.empty() ? '?' : t->name[0]) : '.');
        }
        out.push_back('\n');
    }
    return out;
}

namespace {

constexpr int kCell = 40;

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Assembly& a, const SvgOverlay& overlay) {
    const int r = a.window.radius;
    const int side = a.window.side() * kCell;
    auto px = [&](int x) { return (x + r) * kCell; };
    auto py = [&](int y) { return (r - y) * kCell; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
       << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n";
    // std::map iteration gives (x, y) order, so output is stable.
    for (const auto& [p, id] : a.cells) {
        const TileType& t = a.types[id];
        const bool seed = id == 0;
        os << "<g class=\"tile\" data-x=\"" << p.x << "\" data-y=\"" << p.y << "\">";
        os << "<rect x=\"" << px(p.x) << "\" y=\"" << py(p.y) << "\" width=\"" << kCell << "\" height=\"" << kCell
           << "\" fill=\"" << (seed ? "#f4c542" : "#cfe2f3") << "\" stroke=\"" << (seed ? "#b8860b" : "#333")
           << "\" stroke-width=\"" << (seed ? 3 : 1) << "\"/>";
        os << "<text x=\"" << px(p.x) + kCell / 2 << "\" y=\"" << py(p.y) + kCell / 2 + 4
           << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(t.name) << "</text>";
        for (Direction d : kDirections) {
            const Glue& g = t.glue(d);
            if (g.empty()) continue;
            Vec2 u = unit(d);
            int cx = px(p.x) + kCell / 2 + u.dx * (kCell / 2 - 6);
            int cy = py(p.y) + kCell / 2 - u.dy * (kCell / 2 - 6);
            int tx = u.dx * 4, ty = -u.dy * 4;
            os << "<line x1=\"" << cx - ty << "\" y1=\"" << cy - tx << "\" x2=\"" << cx + ty << "\" y2=\"" << cy + tx
               << "\" stroke=\"#900\" stroke-width=\"2\"/>";
            os << "<text x=\"" << cx << "\" y=\"" << cy + (u.dy == 0 ? 3 : (u.dy > 0 ? 8 : -2))
               << "\" font-size=\"7\" text-anchor=\"middle\" fill=\"#900\">" << escape(g) << "</text>";
        }
        os << "</g>\n";
    }
    for (Point p : overlay.shaded)
        os << "<rect class=\"surface\" x=\"" << px(p.x) << "\" y=\"" << py(p.y) << "\" width=\"" << kCell
           << "\" height=\"" << kCell << "\" fill=\"#6a5acd\" fill-opacity=\"0.3\"/>\n";
    if (overlay.polyline.size() > 1) {
        os << "<polyline fill=\"none\" stroke=\"#2e8b57\" stroke-width=\"3\" points=\"";
        for (std::size_t i = 0; i < overlay.polyline.size(); ++i) {
            Point p = overlay.polyline[i];
            os << (i ? " " : "") << px(p.x) + kCell / 2 << ',' << py(p.y) + kCell / 2;
        }
        os << "\"/>\n";
    }
    for (Point p : overlay.marks)
        os << "<circle class=\"poi\" cx=\"" << px(p.x) + kCell / 2 << "\" cy=\"" << py(p.y) + kCell / 2
           << "\" r=\"5\" fill=\"#d62728\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace tileasm
