#include "tileasm/verify.hpp"

#include <algorithm>
#include <map>

#include "tileasm/oracles.hpp"

namespace tileasm {

namespace {

using oracle::Rng;

std::size_t suite_pumping(std::size_t samples, Rng& rng, std::ostream& out) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        Word m = oracle::random_word(rng, 1, 12);
        bool lib = is_pumpable(m), brute = oracle::pumped_simple(m, 20);
        if (lib != brute) {
            ++bad;
            out << "counterexample pumping m=" << to_string(m) << " is_pumpable=" << lib << " brute=" << brute << '\n';
        }
    }
    return bad;
}

std::size_t suite_regions(std::size_t samples, Rng& rng, std::ostream& out) {
    std::size_t bad = 0;
    const Window w{20};
    for (std::size_t i = 0; i < samples; ++i) {
        BiInfinitePath p = oracle::random_biinfinite(rng, w);
        RegionMap rm(p, w);
        for (int k = 0; k < w.size(); ++k) {
            Point q = w.at(k);
            Side a = rm.side(q), b = oracle::side_by_parity(rm.path(), q);
            if (a != b) {
                ++bad;
                out << "counterexample regions path=" << to_string(p) << " radius=" << w.radius
                    << " point=" << to_string(q) << " flood=" << to_string(a) << " parity=" << to_string(b) << '\n';
                break;
            }
        }
    }
    return bad;
}

std::size_t suite_cogrow(std::size_t samples, Rng& rng, std::ostream& out) {
    std::size_t bad = 0;
    int window_only = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        auto inst = oracle::random_cogrow_instance(rng, 4, 12);
        long bound = 4L * inst.window.size();
        CoGrowResult res;
        std::vector<std::string> issues;
        try {
            res = cogrow(inst.side, inst.b, inst.f, inst.b2, inst.f2, inst.window, bound);
            issues = oracle::cogrow_violations(inst, res, &window_only);
        } catch (const Error& e) {
            issues.push_back(std::string("error ") + error_kind_name(e.kind()) + ": " + e.what());
        }
        if (!issues.empty()) {
            ++bad;
            out << "counterexample cogrow " << inst.serialize() << " word=" << to_string(res.word)
                << " status=" << to_string(res.status) << " :: " << issues.front() << '\n';
        }
    }
    out << "note cogrow terminations whose region only reaches the co-grow window: " << window_only << '\n';
    return bad;
}

std::string surface_string(const std::set<Point>& s) {
    std::string out;
    for (Point q : s) out += to_string(q);
    return out;
}

// Record spanning the whole excursion of a generated path.
OffTheWallRecord full_record(const GroundedPath& gp) {
    const int last = static_cast<int>(gp.vertices.size()) - 1;
    for (auto& rec : find_off_the_wall(gp, 0))
        if (rec.r == last && gp.vertices[rec.ell].y == 0 && gp.word[rec.ell] == Direction::N) return rec;
    throw Error(ErrorKind::InvariantViolation, "generated path " + to_string(gp.word) + " is not off-the-wall");
}

std::size_t suite_combination(std::size_t samples, Rng& rng, std::ostream& out) {
    std::size_t bad = 0;
    std::uniform_int_distribution<int> ddist(2, 5);
    for (std::size_t i = 0; i < samples; ++i) {
        int delta = ddist(rng);
        GroundedPath a = oracle::random_off_the_wall_path(rng, delta);
        GroundedPath b = oracle::random_off_the_wall_path(rng, delta);
        std::string issue;
        try {
            OffTheWallRecord ra = full_record(a), rb = full_record(b);
            Combination c = combine_off_the_wall(ra, rb);
            for (const OffTheWallRecord* rec : {&ra, &rb}) {
                auto s = surface_above(rec->x0, c.g);
                if (!std::includes(s.begin(), s.end(), rec->surface.begin(), rec->surface.end()))
                    issue = "combined surface misses part of " + surface_string(rec->surface);
            }
            for (const GroundedPath* gp : {&c.combined_p, &c.combined_q}) {
                bool found = false;
                for (auto& rec : find_off_the_wall(*gp, 0))
                    if (rec.r == static_cast<int>(gp->word.size()) && rec.delta == delta) found = true;
                if (!found) issue = "combined path " + to_string(gp->word) + " is not off-the-wall";
            }
        } catch (const Error& e) {
            issue = std::string("error ") + error_kind_name(e.kind()) + ": " + e.what();
        }
        if (!issue.empty()) {
            ++bad;
            out << "counterexample combination p=" << to_string(a.word) << " q=" << to_string(b.word)
                << " :: " << issue << '\n';
        }
    }
    return bad;
}

std::size_t suite_noncausal(std::size_t samples, Rng& rng, std::ostream& out) {
    std::size_t bad = 0;
    std::uniform_int_distribution<int> rdist(2, 8);
    for (std::size_t i = 0; i < samples; ++i) {
        Window w{rdist(rng)};
        TAS tas = oracle::random_confluent_tas(rng, w);
        Assembly a = grow_max(tas, w).assembly;
        auto brute = oracle::all_non_causal_by_deletion(a);
        std::size_t k = 0;
        for (const auto& [site, id] : a.cells) {
            if (non_causal(a, site) != brute[k++]) {
                ++bad;
                std::string text = format_tas(tas);
                std::replace(text.begin(), text.end(), '\n', ';');
                out << "counterexample noncausal radius=" << w.radius << " site=" << to_string(site)
                    << " tas=" << text << '\n';
                break;
            }
        }
    }
    return bad;
}

using SuiteFn = std::size_t (*)(std::size_t, Rng&, std::ostream&);

const std::map<std::string, SuiteFn>& suites() {
    static const std::map<std::string, SuiteFn> table = {
        {"pumping", suite_pumping},   {"regions", suite_regions},   {"cogrow", suite_cogrow},
        {"combination", suite_combination}, {"noncausal", suite_noncausal},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"pumping", "regions", "cogrow", "combination", "noncausal"};
    return names;
}

std::size_t run_verify_suite(const std::string& suite, std::size_t samples, std::uint64_t seed, std::ostream& out) {
    if (suite == "all") {
        std::size_t total = 0;
        for (const auto& name : verify_suite_names()) total += run_verify_suite(name, samples, seed, out);
        return total;
    }
    auto it = suites().find(suite);
    if (it == suites().end()) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
    Rng rng(seed);
    std::size_t bad = it->second(samples, rng, out);
    out << "suite " << suite << " samples=" << samples << " seed=" << seed << " counterexamples=" << bad << '\n';
    return bad;
}

}  // namespace tileasm
