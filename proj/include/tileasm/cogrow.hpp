#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tileasm/regions.hpp"

namespace tileasm {

enum class CoGrowStatus { Terminated, ReachedStepBound, Periodic };
const char* to_string(CoGrowStatus s);

struct CoGrowStep {
    Direction dir;
    Point to;
    int f_index = -1;   // index of `to` on grounded f, -1 if off f
    int f2_index = -1;  // same for f2
    bool on_f_edge = false;
    bool on_f2_edge = false;
};

struct CoGrowResult {
    Word word;
    CoGrowStatus status = CoGrowStatus::Terminated;
    Word transient;  // set when Periodic
    Word period;     // set when Periodic
    long steps = 0;
    std::vector<int> f_indices;   // f positions met, in co-grow order (origin = 0)
    std::vector<int> f2_indices;
    std::vector<CoGrowStep> trace;
    std::vector<Point> vertices;  // grounded co-grow, starting at the origin
};

struct CoGrowOptions {
    // Select the first step like any other step, relative to the direction
    // in which b enters the origin, instead of requiring f and f2 to agree.
    bool free_first_step = false;
};

CoGrowResult cogrow(Side side, const Ray& b, const Ray& f, const Ray& b2, const Ray& f2, Window window,
                    long max_steps, CoGrowOptions opts = {});

// State-repeat detection over a finished trace. The state of a vertex is its
// offset to the periodic cell of each ray plus the incoming direction; a
// repeat whose translation is a common forward period of both rays, and
// which the remaining trace actually follows, yields (transient, period).
struct PeriodSplit {
    Word transient;
    Word period;
};
std::optional<PeriodSplit> detect_period(const Word& word, const Ray& f, const Ray& f2);

// Shortens the transient by rotating the period backwards while possible.
PeriodSplit normalize_period(PeriodSplit s);

}  // namespace tileasm
