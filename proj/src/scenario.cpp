#include "nscert/scenario.hpp"

#include <limits>
#include <string>

namespace nscert {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw DimensionCap("scenario event count overflows 64 bits");
        r *= base;
    }
    return r;
}

void check_labels(const std::vector<int>& labels, int runs, int bound, const char* what) {
    if (static_cast<int>(labels.size()) != runs)
        throw LabelOutOfRange(std::string(what) + ": expected " + std::to_string(runs) +
                              " labels, got " + std::to_string(labels.size()));
    for (int v : labels)
        if (v < 0 || v >= bound)
            throw LabelOutOfRange(std::string(what) + ": label " + std::to_string(v) +
                                  " outside [0," + std::to_string(bound) + ")");
}

} // namespace

std::uint64_t SequentialScenario::event_count() const {
    std::uint64_t per_run =
        static_cast<std::uint64_t>(inputs_per_run) * static_cast<std::uint64_t>(outputs_per_run);
    return checked_pow(per_run, runs_a + runs_b);
}

SequentialScenario build_scenario(int runs, int inputs, int outputs) {
    return build_scenario(runs, runs, inputs, outputs);
}

SequentialScenario build_scenario(int runs_a, int runs_b, int inputs, int outputs) {
    if (runs_a < 1 || runs_b < 1 || inputs < 1 || outputs < 1)
        throw ZeroParameter("scenario parameters must all be >= 1");
    SequentialScenario s{runs_a, runs_b, inputs, outputs};
    s.event_count(); // trips DimensionCap early on absurd sizes
    return s;
}

std::uint64_t event_index(const SequentialScenario& s, const Event& e) {
    check_labels(e.inputs_a, s.runs_a, s.inputs_per_run, "inputs_a");
    check_labels(e.inputs_b, s.runs_b, s.inputs_per_run, "inputs_b");
    check_labels(e.outputs_a, s.runs_a, s.outputs_per_run, "outputs_a");
    check_labels(e.outputs_b, s.runs_b, s.outputs_per_run, "outputs_b");

    std::uint64_t idx = 0;
    auto mix = [&idx](const std::vector<int>& labels, int radix) {
        for (int v : labels)
            idx = idx * static_cast<std::uint64_t>(radix) + static_cast<std::uint64_t>(v);
    };
    mix(e.inputs_a, s.inputs_per_run);
    mix(e.inputs_b, s.inputs_per_run);
    mix(e.outputs_a, s.outputs_per_run);
    mix(e.outputs_b, s.outputs_per_run);
    return idx;
}

Event event_at(const SequentialScenario& s, std::uint64_t index) {
    if (index >= s.event_count())
        throw LabelOutOfRange("event index " + std::to_string(index) + " outside [0, n_seq)");

    Event e;
    e.inputs_a.resize(s.runs_a);
    e.inputs_b.resize(s.runs_b);
    e.outputs_a.resize(s.runs_a);
    e.outputs_b.resize(s.runs_b);

    auto split = [&index](std::vector<int>& labels, int radix) {
        for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
            *it = static_cast<int>(index % static_cast<std::uint64_t>(radix));
            index /= static_cast<std::uint64_t>(radix);
        }
    };
    split(e.outputs_b, s.outputs_per_run);
    split(e.outputs_a, s.outputs_per_run);
    split(e.inputs_b, s.inputs_per_run);
    split(e.inputs_a, s.inputs_per_run);
    return e;
}

} // namespace nscert
