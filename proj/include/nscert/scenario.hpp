#pragma once

#include <cstdint>
#include <vector>

#include "nscert/errors.hpp"

namespace nscert {

/// A sequential Bell scenario: each party measures for a fixed number of runs,
/// every run offering the same number of settings and outcomes.
struct SequentialScenario {
    int runs_a = 1;
    int runs_b = 1;
    int inputs_per_run = 1;
    int outputs_per_run = 1;

    /// Number of measurement events, (inputs*outputs)^(runs_a+runs_b).
    std::uint64_t event_count() const;

    bool operator==(const SequentialScenario&) const = default;
};

/// One measurement event: the full setting and outcome history of both parties.
struct Event {
    std::vector<int> inputs_a;
    std::vector<int> inputs_b;
    std::vector<int> outputs_a;
    std::vector<int> outputs_b;

    bool operator==(const Event&) const = default;
};

SequentialScenario build_scenario(int runs, int inputs, int outputs);
SequentialScenario build_scenario(int runs_a, int runs_b, int inputs, int outputs);

/// Canonical bijection between events and box-vector indices. Ordering is
/// lexicographic on (inputs_a, inputs_b, outputs_a, outputs_b), first
/// component most significant, run 1 most significant within a component.
std::uint64_t event_index(const SequentialScenario& s, const Event& e);
Event event_at(const SequentialScenario& s, std::uint64_t index);

} // namespace nscert
