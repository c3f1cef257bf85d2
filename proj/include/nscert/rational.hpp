#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nscert/errors.hpp"

namespace nscert {

/// Exact rational scalar. All polytope decisions are made over this type.
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" (base 10) and canonicalizes, so "3/6" becomes 1/2.
Rat parse_rational(const std::string& text);

/// Canonical string form, e.g. "0", "1/2", "-3/4".
std::string rational_to_string(const Rat& value);

double to_double(const Rat& value);

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// Row rank of a dense rational matrix, by fraction-exact Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rat>> rows);

/// Orthogonal-free kernel basis of the row space: returns vectors z with M z = 0.
std::vector<std::vector<Rat>> rational_kernel(const std::vector<std::vector<Rat>>& rows,
                                              std::size_t cols);

} // namespace nscert
