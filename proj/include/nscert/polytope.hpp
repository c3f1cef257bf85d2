#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nscert/rational.hpp"
#include "nscert/scenario.hpp"

namespace nscert {

enum class BoxMode { Rational, Float };

/// A behavior: one probability per measurement event, in canonical index order.
/// Rational mode is exact and is what every polytope decision runs on; float
/// mode exists for the theta-body solvers and uses absolute tolerance 1e-10.
struct BoxVector {
    SequentialScenario scenario;
    BoxMode mode = BoxMode::Rational;
    std::vector<Rat> rational_entries;  // used when mode == Rational
    std::vector<double> float_entries;  // used when mode == Float

    std::size_t size() const;
    double entry_as_double(std::size_t i) const;
    std::vector<double> as_doubles() const;
    BoxVector to_float() const;
};

BoxVector make_rational_box(const SequentialScenario& s, std::vector<Rat> entries);
BoxVector make_float_box(const SequentialScenario& s, std::vector<double> entries);

/// Interior point: every event of a context gets equal weight.
BoxVector uniform_box(const SequentialScenario& s);

/// The CHSH-scenario Popescu-Rohrlich box: 1/2 iff o_A xor o_B = i_A * i_B.
BoxVector chsh_pr_box();

enum class RowKind { NonNeg, Norm, Tons };

/// One constraint row, stored sparse. NonNeg rows are -P_i <= 0; Norm and Tons
/// rows are equalities over their support (every support coefficient is +1 and
/// the right-hand side is 1, i.e. the saturated clique form).
struct ConstraintRow {
    RowKind kind;
    std::vector<std::pair<std::uint64_t, Rat>> coeffs; // sorted by index
    Rat rhs;
    bool equality;
};

struct ConstraintSystem {
    SequentialScenario scenario;
    std::vector<ConstraintRow> rows;

    std::size_t count(RowKind kind) const;
};

struct BuildOptions {
    std::uint64_t dimension_cap = 65536;
};

/// Emits non-negativity rows, one normalization row per setting pair, and the
/// time-ordered no-signaling equalities in saturated clique form: for each
/// party, truncation level k, setting/outcome prefix, non-reference setting
/// suffix and full context of the other party, the support below sums to 1.
/// For single-run scenarios these reduce to the usual no-signaling rows.
ConstraintSystem build_constraints(const SequentialScenario& s, const BuildOptions& opt = {});

struct RowViolation {
    std::size_t row;
    RowKind kind;
    Rat residual;       // rational mode
    double residual_f;  // float mode
};

struct ValidationReport {
    std::vector<RowViolation> violations;
    bool valid() const { return violations.empty(); }
};

ValidationReport validate_box(const ConstraintSystem& cs, const BoxVector& p,
                              double float_tol = 1e-10);

/// Indices of the rows satisfied with equality at p (all equality rows plus
/// the non-negativity rows whose entry vanishes).
std::vector<std::size_t> tight_rows(const ConstraintSystem& cs, const BoxVector& p,
                                    double float_tol = 1e-10);

struct VertexReport {
    bool is_vertex = false;
    std::size_t tight_row_count = 0;
    std::size_t rank = 0;
    std::uint64_t n_seq = 0;
    /// Diagnostic only: smallest eigenvalue of A~^T A~ for the tight submatrix.
    double min_eigenvalue_tight_gram = 0.0;
};

/// Tight-submatrix rank test for extremality; the rank is computed exactly
/// over the rationals, so the verdict carries no floating-point caveat.
VertexReport is_vertex(const ConstraintSystem& cs, const BoxVector& p);

struct EnumOptions {
    std::uint64_t strategy_cap = 1u << 20;
};

/// All boxes arising from pairs of time-ordered deterministic strategies,
/// where the run-j output may depend on the party's first j settings.
std::vector<BoxVector> enumerate_deterministic(const SequentialScenario& s,
                                               const EnumOptions& opt = {});

struct InHull {
    std::vector<Rat> weights; // nonnegative, sum to one, indexed like the generators
};

struct Separated {
    std::vector<Rat> functional;
    Rat classical_bound; // max of the functional over the generators
    Rat value;           // functional at the tested box, strictly above the bound
};

using LocalMembership = std::variant<InHull, Separated>;

/// Exact LP membership of p in the convex hull of the given boxes; on failure
/// returns the Farkas separating functional extracted from the phase-1 dual.
LocalMembership local_membership(const BoxVector& p, const std::vector<BoxVector>& generators);

struct VertexEnumOptions {
    std::uint64_t dimension_cap = 32;
};

struct EnumeratedVertex {
    BoxVector box;
    bool nonlocal = false; // some entry is neither 0 nor 1
};

/// Complete vertex list of the polytope described by cs, by double description
/// after eliminating the equality rows; output sorted lexicographically.
std::vector<EnumeratedVertex> enumerate_vertices(const ConstraintSystem& cs,
                                                 const VertexEnumOptions& opt = {});

} // namespace nscert
