#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qg {

// Exact rational; mpq_class keeps num/den canonical after every operation.
using Scalar = mpq_class;

// Accepts "p/q", "p", with optional sign. Throws Error(InvalidArgument).
Scalar parse_scalar(const std::string& text);

// External format: always "p/q", den > 0.
std::string to_string(const Scalar& s);

// Human format: "p" when integral, otherwise "p/q".
std::string to_display(const Scalar& s);

std::optional<Scalar> rational_sqrt(const Scalar& s);

}  // namespace qg
