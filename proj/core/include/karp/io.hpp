#pragma once

// JSON and plain-text formats. Matrix indices are 1-based here.

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "karp/arcs.hpp"
#include "karp/matrices.hpp"
#include "karp/region.hpp"
#include "karp/verify.hpp"

namespace karp {

/// {"order": k, "entries": [{"row": i, "col": j, "weight": "ONE"|"ALPHA"|"BETA"}]}
nlohmann::json to_json(const ParametricStochasticMatrix& m);

/// {"order": k, "alpha": a, "rows": [[...], ...]}
nlohmann::json to_json(const Matrix& m, double alpha);

/// {"arc": "lo:hi", "n", "p", "q", "r", "s", "floor_nq", "type", "matrix_order", "conjugate"}
nlohmann::json to_json(const ArcDescriptor& desc);

/// {"check", "n", "arc", "max_abs_residual", "pass"}
nlohmann::json to_json(const CheckReport& r);

nlohmann::json to_json(const PowerCheckReport& r);
nlohmann::json to_json(const ConvexityReport& r);
nlohmann::json to_json(const DifferentiabilityReport& r);

/// Reads the symbolic form written by to_json(ParametricStochasticMatrix).
/// Throws DomainError on malformed input.
ParametricStochasticMatrix matrix_from_json(const nlohmann::json& j);

/// "arc_<p>_<q>__<r>_<s>.dat" from the lo and hi endpoints.
std::string trace_filename(const ArcDescriptor& desc);

/// One "x y" line (Re, Im) per sample, 17 significant digits.
void write_trace(std::ostream& out, const ArcTrace& trace);

/// "a+bi", "a-bi", "a", "bi", "i", with optional whitespace.
/// Throws DomainError on anything else.
std::complex<double> parse_complex(std::string_view text);

}  // namespace karp
