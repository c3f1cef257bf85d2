#include "nscert/polytope.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>

#include "nscert/detail/tuples.hpp"
#include "nscert/simplex.hpp"

namespace nscert {

namespace {

void require_same_scenario(const SequentialScenario& a, const SequentialScenario& b) {
    if (!(a == b))
        throw ScenarioMismatch("boxes/constraints belong to different scenarios");
}

Rat row_residual_rational(const ConstraintRow& row, const std::vector<Rat>& p) {
    Rat acc = -row.rhs;
    for (const auto& [idx, c] : row.coeffs)
        acc += c * p[idx];
    return acc;
}

double row_residual_float(const ConstraintRow& row, const std::vector<double>& p) {
    double acc = -to_double(row.rhs);
    for (const auto& [idx, c] : row.coeffs)
        acc += to_double(c) * p[idx];
    return acc;
}

} // namespace

std::size_t BoxVector::size() const {
    return mode == BoxMode::Rational ? rational_entries.size() : float_entries.size();
}

double BoxVector::entry_as_double(std::size_t i) const {
    return mode == BoxMode::Rational ? to_double(rational_entries[i]) : float_entries[i];
}

std::vector<double> BoxVector::as_doubles() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = entry_as_double(i);
    return out;
}

BoxVector BoxVector::to_float() const {
    if (mode == BoxMode::Float)
        return *this;
    return make_float_box(scenario, as_doubles());
}

BoxVector make_rational_box(const SequentialScenario& s, std::vector<Rat> entries) {
    if (entries.size() != s.event_count())
        throw DimensionMismatch("box has " + std::to_string(entries.size()) +
                                " entries, scenario needs " + std::to_string(s.event_count()));
    BoxVector b;
    b.scenario = s;
    b.mode = BoxMode::Rational;
    b.rational_entries = std::move(entries);
    return b;
}

BoxVector make_float_box(const SequentialScenario& s, std::vector<double> entries) {
    if (entries.size() != s.event_count())
        throw DimensionMismatch("box has " + std::to_string(entries.size()) +
                                " entries, scenario needs " + std::to_string(s.event_count()));
    BoxVector b;
    b.scenario = s;
    b.mode = BoxMode::Float;
    b.float_entries = std::move(entries);
    return b;
}

BoxVector uniform_box(const SequentialScenario& s) {
    Rat outputs_per_context = 1;
    for (int i = 0; i < s.runs_a + s.runs_b; ++i)
        outputs_per_context *= s.outputs_per_run;
    std::vector<Rat> entries(s.event_count(), 1 / outputs_per_context);
    return make_rational_box(s, std::move(entries));
}

BoxVector chsh_pr_box() {
    const SequentialScenario s = build_scenario(1, 2, 2);
    std::vector<Rat> entries(16, Rat(0));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if ((a ^ b) == (x & y)) {
                        const Event e{{x}, {y}, {a}, {b}};
                        entries[event_index(s, e)] = Rat(1, 2);
                    }
    return make_rational_box(s, std::move(entries));
}

std::size_t ConstraintSystem::count(RowKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [kind](const auto& r) { return r.kind == kind; }));
}

ConstraintSystem build_constraints(const SequentialScenario& s, const BuildOptions& opt) {
    const std::uint64_t n = s.event_count();
    if (n > opt.dimension_cap)
        throw DimensionCap("n_seq " + std::to_string(n) + " exceeds constraint cap " +
                           std::to_string(opt.dimension_cap));

    ConstraintSystem cs;
    cs.scenario = s;

    for (std::uint64_t i = 0; i < n; ++i) {
        ConstraintRow row;
        row.kind = RowKind::NonNeg;
        row.coeffs = {{i, Rat(-1)}};
        row.rhs = 0;
        row.equality = false;
        cs.rows.push_back(std::move(row));
    }

    const int m = s.inputs_per_run;
    const int d = s.outputs_per_run;

    // One normalization row per setting pair: all outputs of that context.
    detail::for_each_tuple(s.runs_a, m, [&](const std::vector<int>& ia) {
        detail::for_each_tuple(s.runs_b, m, [&](const std::vector<int>& ib) {
            ConstraintRow row;
            row.kind = RowKind::Norm;
            row.rhs = 1;
            row.equality = true;
            detail::for_each_tuple(s.runs_a, d, [&](const std::vector<int>& oa) {
                detail::for_each_tuple(s.runs_b, d, [&](const std::vector<int>& ob) {
                    row.coeffs.emplace_back(event_index(s, Event{ia, ib, oa, ob}), Rat(1));
                });
            });
            std::sort(row.coeffs.begin(), row.coeffs.end());
            cs.rows.push_back(std::move(row));
        });
    });

    // Time-ordered no-signaling, in saturated clique form: the level-k marginal
    // for one party must not depend on that party's settings from run k on.
    // Each row sums three blocks of events to 1:
    //   1. fixed outcome prefix, probed setting suffix, fixed other-party context,
    //   2. every other outcome prefix at the reference setting suffix,
    //   3. every event with a different other-party outcome at the all-zero setting.
    auto emit_party_rows = [&](bool party_a) {
        const int runs_self = party_a ? s.runs_a : s.runs_b;
        const int runs_other = party_a ? s.runs_b : s.runs_a;
        const std::vector<int> ref_setting(static_cast<std::size_t>(runs_self), 0);

        auto make_event = [&](const std::vector<int>& i_self, const std::vector<int>& o_self,
                              const std::vector<int>& i_other, const std::vector<int>& o_other) {
            return party_a ? Event{i_self, i_other, o_self, o_other}
                           : Event{i_other, i_self, o_other, o_self};
        };

        for (int k = 1; k <= runs_self; ++k) {
            const int suffix_len = runs_self - k + 1;
            detail::for_each_tuple(k - 1, m, [&](const std::vector<int>& iprefix) {
                detail::for_each_tuple(k - 1, d, [&](const std::vector<int>& oprefix) {
                    detail::for_each_tuple(suffix_len, m, [&](const std::vector<int>& isuffix) {
                        if (std::all_of(isuffix.begin(), isuffix.end(),
                                        [](int v) { return v == 0; }))
                            return; // reference suffix
                        std::vector<int> probed = iprefix;
                        probed.insert(probed.end(), isuffix.begin(), isuffix.end());
                        std::vector<int> reference = iprefix;
                        reference.resize(static_cast<std::size_t>(runs_self), 0);

                        detail::for_each_tuple(runs_other, m, [&](const std::vector<int>& i_oth) {
                            detail::for_each_tuple(runs_other, d, [&](const std::vector<int>& o_oth) {
                                ConstraintRow row;
                                row.kind = RowKind::Tons;
                                row.rhs = 1;
                                row.equality = true;
                                // Block 1: probed suffix, fixed outcome prefix.
                                detail::for_each_tuple(suffix_len, d, [&](const std::vector<int>& osuf) {
                                    std::vector<int> o = oprefix;
                                    o.insert(o.end(), osuf.begin(), osuf.end());
                                    row.coeffs.emplace_back(
                                        event_index(s, make_event(probed, o, i_oth, o_oth)), Rat(1));
                                });
                                // Block 2: reference suffix, every other outcome prefix.
                                detail::for_each_tuple(k - 1, d, [&](const std::vector<int>& opre2) {
                                    if (opre2 == oprefix)
                                        return;
                                    detail::for_each_tuple(
                                        suffix_len, d, [&](const std::vector<int>& osuf) {
                                            std::vector<int> o = opre2;
                                            o.insert(o.end(), osuf.begin(), osuf.end());
                                            row.coeffs.emplace_back(
                                                event_index(s, make_event(reference, o, i_oth, o_oth)),
                                                Rat(1));
                                        });
                                });
                                // Block 3: all-zero own setting, other-party outcome differs.
                                detail::for_each_tuple(runs_other, d, [&](const std::vector<int>& o_oth2) {
                                    if (o_oth2 == o_oth)
                                        return;
                                    detail::for_each_tuple(
                                        runs_self, d, [&](const std::vector<int>& o_any) {
                                            row.coeffs.emplace_back(
                                                event_index(
                                                    s, make_event(ref_setting, o_any, i_oth, o_oth2)),
                                                Rat(1));
                                        });
                                });
                                std::sort(row.coeffs.begin(), row.coeffs.end());
                                cs.rows.push_back(std::move(row));
                            });
                        });
                    });
                });
            });
        }
    };
    emit_party_rows(true);
    emit_party_rows(false);

    return cs;
}

ValidationReport validate_box(const ConstraintSystem& cs, const BoxVector& p, double float_tol) {
    require_same_scenario(cs.scenario, p.scenario);
    ValidationReport report;
    for (std::size_t r = 0; r < cs.rows.size(); ++r) {
        const auto& row = cs.rows[r];
        if (p.mode == BoxMode::Rational) {
            const Rat res = row_residual_rational(row, p.rational_entries);
            const bool bad = row.equality ? res != 0 : res > 0;
            if (bad)
                report.violations.push_back({r, row.kind, res, to_double(res)});
        } else {
            const double res = row_residual_float(row, p.float_entries);
            const bool bad = row.equality ? std::abs(res) > float_tol : res > float_tol;
            if (bad)
                report.violations.push_back({r, row.kind, Rat(0), res});
        }
    }
    return report;
}

std::vector<std::size_t> tight_rows(const ConstraintSystem& cs, const BoxVector& p,
                                    double float_tol) {
    if (!validate_box(cs, p, float_tol).valid())
        throw InvalidBox("box violates the constraint system");
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < cs.rows.size(); ++r) {
        const auto& row = cs.rows[r];
        bool tight;
        if (p.mode == BoxMode::Rational)
            tight = row_residual_rational(row, p.rational_entries) == 0;
        else
            tight = std::abs(row_residual_float(row, p.float_entries)) <= float_tol;
        if (tight)
            out.push_back(r);
    }
    return out;
}

VertexReport is_vertex(const ConstraintSystem& cs, const BoxVector& p) {
    if (p.mode != BoxMode::Rational)
        throw InvalidMode("the vertex rank test needs a rational-mode box");
    const auto tight = tight_rows(cs, p);
    const std::uint64_t n = cs.scenario.event_count();

    std::vector<std::vector<Rat>> dense;
    dense.reserve(tight.size());
    for (std::size_t r : tight) {
        std::vector<Rat> row(n, Rat(0));
        for (const auto& [idx, c] : cs.rows[r].coeffs)
            row[idx] = c;
        dense.push_back(std::move(row));
    }

    VertexReport report;
    report.n_seq = n;
    report.tight_row_count = tight.size();
    report.rank = rational_rank(dense);
    report.is_vertex = report.rank == n;

    if (n <= 2048 && !dense.empty()) {
        Eigen::MatrixXd a(dense.size(), n);
        for (std::size_t i = 0; i < dense.size(); ++i)
            for (std::uint64_t j = 0; j < n; ++j)
                a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    to_double(dense[i][j]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.transpose() * a);
        report.min_eigenvalue_tight_gram = es.eigenvalues().minCoeff();
    } else {
        report.min_eigenvalue_tight_gram = std::numeric_limits<double>::quiet_NaN();
    }
    return report;
}

std::vector<BoxVector> enumerate_deterministic(const SequentialScenario& s,
                                               const EnumOptions& opt) {
    const int m = s.inputs_per_run;
    const int d = s.outputs_per_run;

    // A time-ordered strategy is one output table per run j, indexed by the
    // first j settings (past outputs are redundant for deterministic players).
    auto strategy_count = [&](int runs) -> std::uint64_t {
        std::uint64_t total = 1;
        std::uint64_t table = 1;
        for (int j = 1; j <= runs; ++j) {
            table *= static_cast<std::uint64_t>(m);
            for (std::uint64_t c = 0; c < table; ++c) {
                if (total > opt.strategy_cap)
                    throw DimensionCap("deterministic strategy count exceeds cap");
                total *= static_cast<std::uint64_t>(d);
            }
        }
        return total;
    };

    auto enumerate_party = [&](int runs) {
        std::size_t cells = 0;
        std::uint64_t radix_stride = 1;
        std::vector<std::size_t> run_offset(static_cast<std::size_t>(runs) + 1, 0);
        for (int j = 1; j <= runs; ++j) {
            radix_stride *= static_cast<std::uint64_t>(m);
            run_offset[j] = run_offset[j - 1] + radix_stride;
        }
        cells = run_offset[static_cast<std::size_t>(runs)];

        const std::uint64_t total = strategy_count(runs);
        std::vector<std::vector<int>> tables;
        tables.reserve(total);
        std::vector<int> cur(cells, 0);
        while (true) {
            tables.push_back(cur);
            std::size_t pos = cells;
            while (pos > 0 && cur[pos - 1] == d - 1)
                cur[--pos] = 0;
            if (pos == 0)
                break;
            ++cur[pos - 1];
        }
        return std::pair{tables, run_offset};
    };

    auto apply = [&](const std::vector<int>& table, const std::vector<std::size_t>& offsets,
                     const std::vector<int>& settings) {
        std::vector<int> outputs(settings.size());
        std::uint64_t prefix = 0;
        for (std::size_t j = 0; j < settings.size(); ++j) {
            prefix = prefix * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(settings[j]);
            outputs[j] = table[offsets[j] + prefix];
        }
        return outputs;
    };

    const auto [tables_a, offsets_a] = enumerate_party(s.runs_a);
    const auto [tables_b, offsets_b] = enumerate_party(s.runs_b);
    if (static_cast<std::uint64_t>(tables_a.size()) * tables_b.size() > opt.strategy_cap)
        throw DimensionCap("deterministic box count exceeds cap");

    std::vector<BoxVector> boxes;
    boxes.reserve(tables_a.size() * tables_b.size());
    for (const auto& ta : tables_a) {
        for (const auto& tb : tables_b) {
            std::vector<Rat> entries(s.event_count(), Rat(0));
            detail::for_each_tuple(s.runs_a, m, [&](const std::vector<int>& ia) {
                const auto oa = apply(ta, offsets_a, ia);
                detail::for_each_tuple(s.runs_b, m, [&](const std::vector<int>& ib) {
                    const auto ob = apply(tb, offsets_b, ib);
                    entries[event_index(s, Event{ia, ib, oa, ob})] = 1;
                });
            });
            boxes.push_back(make_rational_box(s, std::move(entries)));
        }
    }
    return boxes;
}

LocalMembership local_membership(const BoxVector& p, const std::vector<BoxVector>& generators) {
    if (generators.empty())
        throw EmptyGenerators("local membership needs at least one generator box");
    if (p.mode != BoxMode::Rational)
        throw InvalidMode("local membership runs on rational-mode boxes");
    for (const auto& g : generators) {
        require_same_scenario(p.scenario, g.scenario);
        if (g.mode != BoxMode::Rational)
            throw InvalidMode("local membership needs rational-mode generators");
    }

    const std::size_t n = p.size();
    std::vector<std::vector<Rat>> columns;
    columns.reserve(generators.size());
    for (const auto& g : generators) {
        std::vector<Rat> col = g.rational_entries;
        col.push_back(1); // convexity row
        columns.push_back(std::move(col));
    }
    std::vector<Rat> rhs = p.rational_entries;
    rhs.push_back(1);

    const EqFeasibility lp = solve_equality_feasibility(columns, rhs);
    if (lp.feasible)
        return InHull{lp.solution};

    Separated sep;
    sep.functional.assign(lp.farkas.begin(), lp.farkas.begin() + static_cast<long>(n));

    // Scale to a primitive integer vector for readability; separation is
    // invariant under positive scaling.
    mpz_class denom_lcm = 1;
    for (const auto& f : sep.functional)
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), f.get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& f : sep.functional) {
        mpz_class scaled_num = f.get_num() * (denom_lcm / f.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rat scale(denom_lcm, num_gcd == 0 ? 1 : num_gcd);
    scale.canonicalize();
    if (scale != 0)
        for (auto& f : sep.functional)
            f *= scale;

    sep.value = dot(sep.functional, p.rational_entries);
    bool first = true;
    for (const auto& g : generators) {
        const Rat v = dot(sep.functional, g.rational_entries);
        if (first || v > sep.classical_bound)
            sep.classical_bound = v;
        first = false;
    }
    if (sep.value <= sep.classical_bound)
        throw Error("internal: Farkas certificate failed to separate");
    return sep;
}

} // namespace nscert
