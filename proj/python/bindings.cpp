// Python bindings. Words cross the boundary as strings, points as (x, y).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tileasm/analysis.hpp"
#include "tileasm/render.hpp"
#include "tileasm/verify.hpp"

namespace py = pybind11;
using namespace tileasm;

namespace {

using PyPoint = std::pair<int, int>;

PyPoint to_py(Point p) { return {p.x, p.y}; }

std::vector<PyPoint> to_py(const std::vector<Point>& ps) {
    std::vector<PyPoint> out;
    out.reserve(ps.size());
    for (Point p : ps) out.push_back(to_py(p));
    return out;
}

std::vector<PyPoint> to_py(const std::set<Point>& ps) { return to_py(std::vector<Point>(ps.begin(), ps.end())); }

Side parse_side(const std::string& s) {
    if (s == "left" || s == "Left") return Side::Left;
    if (s == "right" || s == "Right") return Side::Right;
    throw Error(ErrorKind::InvalidArgument, "side must be 'left' or 'right'");
}

Ray make_ray(const std::string& m, const std::string& p, bool backward) {
    return Ray(parse_word(m), parse_word(p), backward ? Orientation::Backward : Orientation::Forward);
}

py::dict grow(const std::string& tas_text, int radius) {
    GrowResult g = grow_max(parse_tas(tas_text), Window{radius});
    py::dict d;
    d["unambiguous"] = g.unambiguous;
    d["truncated"] = g.truncated;
    py::dict cells;
    if (g.unambiguous)
        for (const auto& [p, id] : g.assembly.cells) cells[py::cast(to_py(p))] = g.assembly.types[id].name;
    d["cells"] = cells;
    d["ascii"] = g.unambiguous ? render_ascii(g.assembly) : std::string();
    return d;
}

py::dict confluence(const std::string& tas_text, int radius) {
    ConfluenceReport r = check_confluence(parse_tas(tas_text), Window{radius});
    py::dict d;
    d["confluent"] = r.confluent;
    d["radius"] = r.radius;
    if (r.witness)
        d["witness"] = py::make_tuple(to_py(r.witness->site), r.witness->tile_a, r.witness->tile_b);
    else
        d["witness"] = py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Temperature-1 tile assembly: paths, regions, co-grow and assembly analysis";

    static py::exception<Error> exc(mod, "TileasmError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            std::string msg = std::string(error_kind_name(e.kind())) + ": " + e.what();
            PyErr_SetString(exc.ptr(), msg.c_str());
        }
    });

    mod.def("parse_word", [](const std::string& s) { return to_string(parse_word(s)); });
    mod.def("reverse", [](const std::string& s) { return to_string(reverse(parse_word(s))); });
    mod.def("rotate90", [](const std::string& s) { return to_string(rotate90(parse_word(s))); });
    mod.def("displacement", [](const std::string& s) {
        Vec2 v = displacement(parse_word(s));
        return PyPoint{v.dx, v.dy};
    });
    mod.def("ground", [](const std::string& s, PyPoint anchor) {
        return to_py(ground(parse_word(s), Point{anchor.first, anchor.second}).vertices);
    }, py::arg("word"), py::arg("anchor") = PyPoint{0, 0});
    mod.def("is_free_path", [](const std::string& s) { return is_free_path(parse_word(s)); });
    mod.def("is_pumpable", [](const std::string& s) { return is_pumpable(parse_word(s)); });

    mod.def("side_of", [](const std::string& path, PyPoint q, int radius) {
        return std::string(to_string(side_of(parse_biinfinite(path), Point{q.first, q.second}, Window{radius})));
    }, py::arg("path"), py::arg("point"), py::arg("radius"));

    mod.def("cogrow", [](const std::string& side, const std::string& b_m, const std::string& b_p,
                         const std::string& f_m, const std::string& f_p, const std::string& b2_m,
                         const std::string& b2_p, const std::string& f2_m, const std::string& f2_p, int radius,
                         long max_steps) {
        Window w{radius};
        CoGrowResult r = tileasm::cogrow(parse_side(side), make_ray(b_m, b_p, true), make_ray(f_m, f_p, false),
                                         make_ray(b2_m, b2_p, true), make_ray(f2_m, f2_p, false), w,
                                         max_steps > 0 ? max_steps : 4L * w.size());
        py::dict d;
        d["word"] = to_string(r.word);
        d["status"] = std::string(to_string(r.status));
        d["transient"] = to_string(r.transient);
        d["period"] = to_string(r.period);
        d["f_indices"] = r.f_indices;
        d["f2_indices"] = r.f2_indices;
        d["vertices"] = to_py(r.vertices);
        return d;
    }, py::arg("side"), py::arg("b_transient"), py::arg("b_period"), py::arg("f_transient"), py::arg("f_period"),
       py::arg("b2_transient"), py::arg("b2_period"), py::arg("f2_transient"), py::arg("f2_period"),
       py::arg("radius") = 12, py::arg("max_steps") = 0);

    mod.def("format_tas", [](const std::string& text) { return format_tas(parse_tas(text)); });
    mod.def("grow", &grow, py::arg("tas"), py::arg("radius") = 10);
    mod.def("confluence", &confluence, py::arg("tas"), py::arg("radius") = 10);
    mod.def("render_svg", [](const std::string& text, int radius) {
        GrowResult g = grow_max(parse_tas(text), Window{radius});
        if (!g.unambiguous) throw Error(ErrorKind::NotConfluent, "system is not confluent");
        return render_svg(g.assembly, SvgOverlay{});
    }, py::arg("tas"), py::arg("radius") = 10);

    mod.def("non_causal", [](const std::string& text, int radius, PyPoint site) {
        GrowResult g = grow_max(parse_tas(text), Window{radius});
        if (!g.unambiguous) throw Error(ErrorKind::NotConfluent, "system is not confluent");
        return to_py(tileasm::non_causal(g.assembly, Point{site.first, site.second}));
    }, py::arg("tas"), py::arg("radius"), py::arg("site"));

    mod.def("find_off_the_wall", [](const std::string& word, std::size_t max_records) {
        py::list out;
        for (const auto& rec : tileasm::find_off_the_wall(ground(parse_word(word)), max_records)) {
            py::dict d;
            d["ell"] = rec.ell;
            d["r"] = rec.r;
            d["x0"] = rec.x0;
            d["delta"] = rec.delta;
            d["height"] = rec.height;
            d["area"] = rec.area;
            d["excursion"] = to_string(rec.excursion());
            d["surface"] = to_py(rec.surface);
            out.append(d);
        }
        return out;
    }, py::arg("word"), py::arg("max_records") = 0);

    mod.def("find_periodic", [](const std::string& text, int radius, int max_transient, int max_period) {
        PeriodicSearch s = find_periodic_assembly_path(parse_tas(text), Window{radius}, max_transient, max_period);
        py::dict d;
        d["note"] = s.note;
        if (s.certificate) {
            d["m"] = to_string(s.certificate->m);
            d["p"] = to_string(s.certificate->p);
            d["verified_depth"] = s.certificate->verified_depth;
            d["tile_period"] = s.certificate->tile_period;
        }
        return d;
    }, py::arg("tas"), py::arg("radius") = 8, py::arg("max_transient") = 6, py::arg("max_period") = 6);

    mod.def("verify_suites", &verify_suite_names);
    mod.def("run_verify_suite", [](const std::string& suite, std::size_t samples, std::uint64_t seed) {
        std::ostringstream os;
        std::size_t bad = tileasm::run_verify_suite(suite, samples, seed, os);
        return py::make_tuple(bad, os.str());
    }, py::arg("suite"), py::arg("samples") = 100, py::arg("seed") = 1);
}
