// tileasm: command-line front end for growth, rendering, co-grow traces,
// analysis reports and the property suites.
//
// Exit codes: 0 ok, 1 counterexample, 2 input error, 3 non-confluent input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tileasm/analysis.hpp"
#include "tileasm/render.hpp"
#include "tileasm/verify.hpp"

using namespace tileasm;

namespace {

constexpr int kOk = 0, kCounterexample = 1, kInputError = 2, kNotConfluent = 3;

TAS load_tas(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tas(ss.str());
}

Point parse_point(const std::string& s) {
    int x = 0, y = 0;
    char c = 0;
    std::istringstream is(s);
    if (!(is >> x >> c >> y) || c != ',') throw Error(ErrorKind::InvalidArgument, "bad point '" + s + "', want x,y");
    return {x, y};
}

// "<transient>|<period>" for forward rays, "<period>|<transient>" for
// backward ones, as in the bi-infinite path notation.
Ray parse_ray(const std::string& s, Orientation o) {
    auto bar = s.find('|');
    if (bar == std::string::npos) throw Error(ErrorKind::InvalidArgument, "ray '" + s + "' lacks '|'");
    Word left = parse_word(s.substr(0, bar)), right = parse_word(s.substr(bar + 1));
    return o == Orientation::Forward ? Ray(left, right, o) : Ray(right, left, o);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    out << text;
}

void print_witness(const ConfluenceReport& rep) {
    const Witness& w = *rep.witness;
    std::cout << "verdict=witness radius=" << rep.radius << " site=" << to_string(w.site) << " tile_a=" << w.tile_a
              << " tile_b=" << w.tile_b << '\n';
}

// Grows and insists on confluence; returns nullopt after printing a witness.
std::optional<Assembly> grow_confluent(const TAS& tas, Window w) {
    GrowResult g = grow_max(tas, w);
    if (g.unambiguous) return g.assembly;
    print_witness(check_confluence(tas, w));
    return std::nullopt;
}

std::string points_string(const std::set<Point>& s) {
    std::string out;
    for (Point q : s) out += (out.empty() ? "" : " ") + to_string(q);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temperature-1 tile assembly toolkit"};
    app.require_subcommand(1);

    std::string tas_file, out_format = "ascii", out_file;
    int radius = 10;

    auto* grow = app.add_subcommand("grow", "Grow the maximal assembly inside a window");
    grow->add_option("--tas", tas_file, "TAS file")->required()->check(CLI::ExistingFile);
    grow->add_option("--radius", radius, "Window radius")->check(CLI::PositiveNumber);
    grow->add_option("--out", out_format, "ascii | svg | report")->check(CLI::IsMember({"ascii", "svg", "report"}));
    grow->add_option("--out-file", out_file, "Write SVG here instead of standard output");

    auto* confl = app.add_subcommand("confluence", "Check confluence within a window");
    confl->add_option("--tas", tas_file, "TAS file")->required()->check(CLI::ExistingFile);
    confl->add_option("--radius", radius, "Window radius")->check(CLI::PositiveNumber);

    std::string overlay_site;
    auto* render = app.add_subcommand("render", "Render the maximal assembly as SVG");
    render->add_option("--tas", tas_file, "TAS file")->required()->check(CLI::ExistingFile);
    render->add_option("--radius", radius, "Window radius")->check(CLI::PositiveNumber);
    render->add_option("--out-file", out_file, "SVG output file")->required();
    render->add_option("--noncausal", overlay_site, "Shade NonCausal of this site (x,y)");

    std::string side_name = "right", b_text, f_text, b2_text, f2_text;
    long max_steps = 0;
    auto* cg = app.add_subcommand("cogrow", "Co-grow two bi-infinite paths through the origin");
    cg->add_option("--side", side_name, "right | left")->check(CLI::IsMember({"right", "left"}));
    cg->add_option("--b", b_text, "Backward ray of the first path, period|transient")->required();
    cg->add_option("--f", f_text, "Forward ray of the first path, transient|period")->required();
    cg->add_option("--b2", b2_text, "Backward ray of the second path (defaults to --b)");
    cg->add_option("--f2", f2_text, "Forward ray of the second path")->required();
    cg->add_option("--radius", radius, "Window radius")->check(CLI::PositiveNumber);
    cg->add_option("--max-steps", max_steps, "Step bound (default 4 * window size)");

    auto* analyze = app.add_subcommand("analyze", "Off-the-wall, non-causal and periodic-path analyses");
    analyze->require_subcommand(1);
    int max_transient = 6, max_period = 6;
    auto* periodic = analyze->add_subcommand("periodic", "Search an ultimately periodic assembly path");
    periodic->add_option("--tas", tas_file, "TAS file")->required()->check(CLI::ExistingFile);
    periodic->add_option("--radius", radius, "Window radius")->check(CLI::PositiveNumber);
    periodic->add_option("--max-transient", max_transient, "Longest transient tried");
    periodic->add_option("--max-period", max_period, "Longest period tried");

    std::string word_text;
    std::size_t max_records = 0;
    auto* otw = analyze->add_subcommand("offthewall", "List off-the-wall segments of a path from the origin");
    otw->add_option("--word", word_text, "Path word")->required();
    otw->add_option("--max-records", max_records, "Stop after this many records (0 = all)");
    otw->add_option("--out-file", out_file, "SVG of the first record: surface shaded, points of interest marked");

    std::string site_text;
    auto* nc = analyze->add_subcommand("noncausal", "NonCausal set of a site in the maximal assembly");
    nc->add_option("--tas", tas_file, "TAS file")->required()->check(CLI::ExistingFile);
    nc->add_option("--radius", radius, "Window radius")->check(CLI::PositiveNumber);
    nc->add_option("--site", site_text, "Site x,y")->required();

    std::string suite = "all";
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "Run property suites against independent oracles");
    std::vector<std::string> suite_choices = verify_suite_names();
    suite_choices.push_back("all");
    verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_choices));
    verify->add_option("--samples", samples, "Random instances per suite");
    verify->add_option("--seed", seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        const Window w{radius};
        if (*grow) {
            TAS tas = load_tas(tas_file);
            auto a = grow_confluent(tas, w);
            if (!a) return kNotConfluent;
            std::string note = a->truncated ? "truncated" : "finite";
            if (out_format == "svg") {
                std::string svg = render_svg(*a);
                if (out_file.empty()) std::cout << svg;
                else write_file(out_file, svg);
            } else if (out_format == "report") {
                for (const auto& [p, id] : a->cells) std::cout << "site=" << to_string(p) << " tile=" << a->types[id].name << '\n';
            } else {
                std::cout << render_ascii(*a);
            }
            std::cout << "radius=" << radius << " tiles=" << a->cells.size() << " note=" << note << '\n';
        } else if (*confl) {
            ConfluenceReport rep = check_confluence(load_tas(tas_file), w);
            if (!rep.confluent) {
                print_witness(rep);
                return kNotConfluent;
            }
            std::cout << "verdict=confluent radius=" << rep.radius << '\n';
        } else if (*render) {
            auto a = grow_confluent(load_tas(tas_file), w);
            if (!a) return kNotConfluent;
            SvgOverlay ov;
            if (!overlay_site.empty()) ov.shaded = non_causal(*a, parse_point(overlay_site));
            write_file(out_file, render_svg(*a, ov));
            std::cout << "wrote=" << out_file << '\n';
        } else if (*cg) {
            Side side = side_name == "left" ? Side::Left : Side::Right;
            Ray b = parse_ray(b_text, Orientation::Backward);
            Ray b2 = b2_text.empty() ? b : parse_ray(b2_text, Orientation::Backward);
            Ray f = parse_ray(f_text, Orientation::Forward), f2 = parse_ray(f2_text, Orientation::Forward);
            long bound = max_steps > 0 ? max_steps : 4L * w.size();
            CoGrowResult res = cogrow(side, b, f, b2, f2, w, bound);
            std::cout << "word=" << to_string(res.word) << " status=" << to_string(res.status)
                      << " steps=" << res.steps;
            if (res.status == CoGrowStatus::Periodic)
                std::cout << " transient=" << to_string(res.transient) << " period=" << to_string(res.period);
            std::cout << '\n' << "step dir to f_index f2_index edge_of\n";
            for (std::size_t i = 0; i < res.trace.size(); ++i) {
                const CoGrowStep& s = res.trace[i];
                std::string src = s.on_f_edge && s.on_f2_edge ? "f,f2" : s.on_f_edge ? "f" : "f2";
                std::cout << i << ' ' << to_char(s.dir) << ' ' << to_string(s.to) << ' ' << s.f_index << ' '
                          << s.f2_index << ' ' << src << '\n';
            }
        } else if (*periodic) {
            PeriodicSearch s = find_periodic_assembly_path(load_tas(tas_file), w, max_transient, max_period);
            std::cout << "radius=" << s.radius << " note=" << s.note;
            if (s.certificate) {
                const auto& c = *s.certificate;
                std::cout << " m=" << to_string(c.m) << " p=" << to_string(c.p) << " verified_depth=" << c.verified_depth
                          << " tile_period=";
                for (std::size_t i = 0; i < c.tile_period.size(); ++i) std::cout << (i ? "," : "") << c.tile_period[i];
            }
            std::cout << '\n';
        } else if (*otw) {
            GroundedPath gp = ground(parse_word(word_text));
            auto recs = find_off_the_wall(gp, max_records);
            for (const auto& r : recs) {
                std::cout << "ell=" << r.ell << " r=" << r.r << " x0=" << r.x0 << " delta=" << r.delta
                          << " height=" << r.height << " area=" << r.area << " excursion=" << to_string(r.excursion())
                          << " points_of_interest=";
                auto poi = points_of_interest(r);
                for (std::size_t i = 0; i < poi.size(); ++i) std::cout << (i ? "," : "") << poi[i];
                std::cout << '\n';
            }
            std::cout << "records=" << recs.size() << '\n';
            if (!out_file.empty() && !recs.empty()) {
                const auto& r = recs.front();
                int reach = 1;
                for (Point q : r.path.vertices) reach = std::max({reach, std::abs(q.x), std::abs(q.y)});
                Assembly empty;
                empty.window = Window{reach + 1};
                SvgOverlay ov;
                ov.shaded = r.surface;
                for (int k : points_of_interest(r)) ov.marks.push_back(r.path.vertices[k]);
                ov.polyline = r.path.vertices;
                write_file(out_file, render_svg(empty, ov));
            }
        } else if (*nc) {
            auto a = grow_confluent(load_tas(tas_file), w);
            if (!a) return kNotConfluent;
            Point site = parse_point(site_text);
            auto set = non_causal(*a, site);
            std::cout << "site=" << to_string(site) << " size=" << set.size() << " excluded=";
            std::set<Point> excluded;
            for (int i = 0; i < w.size(); ++i)
                if (!set.count(w.at(i))) excluded.insert(w.at(i));
            std::cout << points_string(excluded) << '\n';
        } else if (*verify) {
            std::size_t bad = run_verify_suite(suite, samples, seed, std::cout);
            return bad ? kCounterexample : kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::NotConfluent ? kNotConfluent : kInputError;
    }
    return kOk;
}
