#include "karp/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <limits>

#include "karp/error.hpp"

namespace karp {

using nlohmann::json;

json to_json(const ParametricStochasticMatrix& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) {
    entries.push_back({{"row", e.row + 1}, {"col", e.col + 1}, {"weight", to_string(e.weight)}});
  }
  return {{"order", m.order()}, {"entries", std::move(entries)}};
}

json to_json(const Matrix& m, double alpha) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return {{"order", m.rows()}, {"alpha", alpha}, {"rows", std::move(rows)}};
}

json to_json(const ArcDescriptor& d) {
  return {{"arc", d.name()},
          {"n", d.n},
          {"p", d.pq.p()},
          {"q", d.pq.q()},
          {"r", d.rs.p()},
          {"s", d.rs.q()},
          {"floor_nq", d.floor_nq},
          {"type", to_string(d.type)},
          {"matrix_order", d.matrix_order()},
          {"conjugate", d.conjugate}};
}

json to_json(const CheckReport& r) {
  return {{"check", r.check}, {"n", r.n}, {"arc", r.arc}, {"max_abs_residual", r.max_abs_residual}, {"pass", r.pass}};
}

json to_json(const PowerCheckReport& r) {
  return {{"check", "power"},
          {"n", r.n},
          {"m", r.m},
          {"d", r.d},
          {"k", r.k},
          {"case", r.divides_m ? "d | m" : "d | m-1"},
          {"source", r.source.name()},
          {"arc", r.target.name()},
          {"target_type", to_string(r.target.type)},
          {"max_abs_residual", r.max_coeff_error},
          {"max_spectrum_error", r.max_spectrum_error},
          {"hausdorff_probe", r.hausdorff_probe},
          {"pass", r.pass}};
}

json to_json(const ConvexityReport& r) {
  return {{"check", "convexity"},
          {"n", r.desc.n},
          {"arc", r.desc.name()},
          {"steps", r.steps},
          {"min_second_difference", r.min_second_difference},
          {"alpha_at_min", r.alpha_at_min},
          {"strictly_convex", r.strictly_convex},
          {"convex_within_tolerance", r.convex_within_tolerance},
          {"violations", r.violations}};
}

json to_json(const DifferentiabilityReport& r) {
  json arcs = json::array();
  for (const auto& a : r.arcs) {
    arcs.push_back({{"arc", a.desc.name()},
                    {"min_abs_ft", a.min_abs_ft},
                    {"min_separation", a.min_separation},
                    {"encounters", a.encounters},
                    {"known_smooth", a.known_smooth}});
  }
  return {{"check", "differentiability"},
          {"n", r.n},
          {"steps", r.steps},
          {"total_encounters", r.total_encounters},
          {"known_smooth_encounters", r.known_smooth_encounters},
          {"arcs", std::move(arcs)}};
}

ParametricStochasticMatrix matrix_from_json(const json& j) {
  try {
    const int order = j.at("order").get<int>();
    std::vector<MatrixEntry> entries;
    for (const auto& e : j.at("entries")) {
      const auto w = e.at("weight").get<std::string>();
      Weight weight;
      if (w == "ONE") {
        weight = Weight::One;
      } else if (w == "ALPHA") {
        weight = Weight::Alpha;
      } else if (w == "BETA") {
        weight = Weight::Beta;
      } else {
        throw DomainError("unknown weight '" + w + "'");
      }
      entries.push_back({e.at("row").get<int>() - 1, e.at("col").get<int>() - 1, weight});
    }
    return ParametricStochasticMatrix(order, std::move(entries));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed matrix JSON: ") + e.what());
  }
}

std::string trace_filename(const ArcDescriptor& d) {
  return "arc_" + std::to_string(d.lo.p()) + "_" + std::to_string(d.lo.q()) + "__" + std::to_string(d.hi.p()) + "_" +
         std::to_string(d.hi.q()) + ".dat";
}

void write_trace(std::ostream& out, const ArcTrace& trace) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& s : trace.samples) out << s.lambda.real() << ' ' << s.lambda.imag() << '\n';
  out.precision(old);
}

namespace {

double parse_number(std::string_view s, std::string_view whole) {
  if (s == "" || s == "+") return 1.0;
  if (s == "-") return -1.0;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("malformed complex number '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (const char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty complex number");

  if (s.back() != 'i') {
    if (s == "+" || s == "-") throw DomainError("malformed complex number '" + std::string(text) + "'");
    return {parse_number(s, text), 0.0};
  }
  s.pop_back();
  // the sign that starts the imaginary part; skip exponent signs
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_number(s, text)};
  const std::string_view view(s);
  const std::string_view re = view.substr(0, split);
  if (re.empty() || re == "+" || re == "-") throw DomainError("malformed complex number '" + std::string(text) + "'");
  return {parse_number(re, text), parse_number(view.substr(split), text)};
}

}  // namespace karp
