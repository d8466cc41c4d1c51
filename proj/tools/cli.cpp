#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "karp/karp.hpp"

namespace karp::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Options {
  int n = 0;
  int steps = 256;
  double tol = 1e-6;
  double alpha = -1.0;
  std::string format;
  std::string arc;
  std::string out;
  std::string z;
  int m = 0;
  int d = 0;
  bool timestamp = false;
};

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_arcs(const Options& o, std::ostream& out) {
  const auto arcs = enumerate_arcs(o.n);
  if (o.format == "json") {
    json list = json::array();
    for (const auto& d : arcs) list.push_back(to_json(d));
    print_json(out, list);
    return kOk;
  }
  out << "arc,p,q,r,s,type,floor_nq,matrix_order,conjugate\n";
  for (const auto& d : arcs) {
    out << d.name() << ',' << d.pq.p() << ',' << d.pq.q() << ',' << d.rs.p() << ',' << d.rs.q() << ','
        << to_string(d.type) << ',' << d.floor_nq << ',' << d.matrix_order() << ',' << (d.conjugate ? 1 : 0) << '\n';
  }
  return kOk;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const auto desc = parse_arc(o.n, o.arc);
  const auto sym = realizing_matrix(desc);
  if (o.alpha < 0.0) {
    print_json(out, to_json(sym));
    return kOk;
  }
  const Matrix m = sym.evaluate(o.alpha);
  if (o.format == "csv") {
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j);
      out << '\n';
    }
    return kOk;
  }
  print_json(out, to_json(m, o.alpha));
  return kOk;
}

void write_file(const fs::path& path, const ArcTrace& tr) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path.string());
  write_trace(f, tr);
}

int cmd_trace(const Options& o, std::ostream& out) {
  const auto desc = parse_arc(o.n, o.arc);
  const ArcTrace tr = trace_arc(desc, o.steps);
  const fs::path path = o.out.empty() ? fs::path(trace_filename(desc)) : fs::path(o.out);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_file(path, tr);
  print_json(out, {{"arc", desc.name()},
                   {"file", path.string()},
                   {"samples", tr.samples.size()},
                   {"refinements", tr.refinement_events.size()},
                   {"collisions", tr.collision_events}});
  return kOk;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int cmd_region(const Options& o, std::ostream& out) {
  const auto model = boundary(o.n, o.steps);
  const fs::path dir(o.out);
  fs::create_directories(dir);

  json arcs = json::array();
  const auto emit = [&](const ArcTrace& tr) {
    const std::string file = trace_filename(tr.desc);
    write_file(dir / file, tr);
    arcs.push_back({{"arc", tr.desc.name()},
                    {"type", to_string(tr.desc.type)},
                    {"conjugate", tr.desc.conjugate},
                    {"file", file},
                    {"samples", tr.samples.size()},
                    {"refinements", tr.refinement_events.size()},
                    {"collisions", tr.collision_events.size()}});
  };
  for (const auto& desc : enumerate_arcs(o.n)) {
    if (!desc.conjugate) {
      for (const auto& tr : model.traces)
        if (tr.desc == desc) emit(tr);
      continue;
    }
    const ArcDescriptor mirror = desc.mirror();
    for (const auto& tr : model.traces) {
      if (!(tr.desc == mirror)) continue;
      ArcTrace c = tr;
      c.desc = desc;
      for (auto& s : c.samples) s.lambda = std::conj(s.lambda);
      emit(c);
    }
  }

  json manifest = {{"n", o.n}, {"steps", o.steps}, {"arc_count", arcs.size()}, {"arcs", arcs}};
  if (o.timestamp) manifest["generated_at"] = utc_now();
  std::ofstream f(dir / "manifest.json");
  if (!f) throw Error("cannot write " + (dir / "manifest.json").string());
  f << manifest.dump(2) << '\n';
  print_json(out, {{"n", o.n}, {"out", dir.string()}, {"arc_count", arcs.size()}});
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, const Hooks& hooks) {
  const auto reports = verify_order(o.n, hooks.verify_hook);
  bool pass = true;
  json list = json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    list.push_back(to_json(r));
  }
  print_json(out, {{"n", o.n}, {"pass", pass}, {"reports", list}});
  return pass ? kOk : kCheckFailed;
}

int cmd_member(const Options& o, std::ostream& out) {
  const auto z = parse_complex(o.z);
  const auto model = boundary(o.n, o.steps);
  out << to_string(membership(z, o.n, model, o.tol)) << '\n';
  return kOk;
}

int cmd_power(const Options& o, std::ostream& out) {
  const auto rep = power_arc_check(o.n, o.m, o.d, alpha_grid21(), o.steps);
  print_json(out, to_json(rep));
  return rep.pass ? kOk : kCheckFailed;
}

int cmd_resultant(const Options& o, std::ostream& out) {
  if (o.n < 4) throw DomainError("the multiple-root analysis needs n >= 4, got " + std::to_string(o.n));
  if (o.n % 2 == 0) {
    out << "even n: roots always distinct\n";
    return kOk;
  }
  const double a = find_pi_root(o.n);
  const auto w = multiple_root_witness(o.n, a);
  json j = {{"n", o.n}, {"alpha_star", a}, {"pi", resultant_pi(o.n, a)}, {"double_root", w.has_value()}};
  if (w) {
    const RealPolynomial f = basic_family(o.n, a);
    j["lambda"] = w->lambda;
    j["multiplicity"] = w->multiplicity;
    j["f"] = f(w->lambda);
    j["df"] = f.derivative()(w->lambda);
  }
  print_json(out, j);
  return w ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Boundary arcs and realizing matrices of the stochastic eigenvalue region"};
  app.name("karp");
  app.require_subcommand(1);

  Options o;
  const auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "order")->required()->check(CLI::Range(2, 64)); };
  const auto add_steps = [&](CLI::App* sub) {
    sub->add_option("--steps", o.steps, "samples per arc")->envname("KARP_STEPS")->check(CLI::Range(8, 1 << 20));
  };

  auto* arcs = app.add_subcommand("arcs", "list the arcs of order n");
  add_n(arcs);
  arcs->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* matrix = app.add_subcommand("matrix", "realizing matrix of an arc, symbolic or at --alpha");
  add_n(matrix);
  matrix->add_option("--arc", o.arc, "p/q:r/s")->required();
  matrix->add_option("--alpha", o.alpha, "evaluate at alpha")->check(CLI::Range(0.0, 1.0));
  matrix->add_option("--format", o.format, "json or csv (evaluated only)")->check(CLI::IsMember({"json", "csv"}));

  auto* trace = app.add_subcommand("trace", "trace one arc into a .dat file");
  add_n(trace);
  trace->add_option("--arc", o.arc, "p/q:r/s")->required();
  add_steps(trace);
  trace->add_option("--out", o.out, "output file (default arc_<p>_<q>__<r>_<s>.dat)");

  auto* region = app.add_subcommand("region", "trace every arc and write a manifest");
  add_n(region);
  add_steps(region);
  region->add_option("--out", o.out, "output directory")->required();
  region->add_flag("--timestamp", o.timestamp, "record the generation time in the manifest");

  auto* verify = app.add_subcommand("verify", "identity suite for the realizing matrices");
  add_n(verify);

  auto* member = app.add_subcommand("member", "classify a point against the region");
  add_n(member);
  member->add_option("--z", o.z, "point as a+bi")->required();
  member->add_option("--tol", o.tol, "boundary tolerance")->check(CLI::PositiveNumber);
  add_steps(member);

  auto* power = app.add_subcommand("power", "check that powers of a Type I matrix realize another arc");
  add_n(power);
  power->add_option("--m", o.m, "size of the Type I matrix")->required();
  power->add_option("--d", o.d, "power")->required();
  add_steps(power);

  auto* resultant = app.add_subcommand("resultant", "double root of t^n - beta t - alpha");
  resultant->add_option("--n", o.n, "order")->required();

  std::vector<std::string> argv_store{"karp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }

  try {
    if (arcs->parsed()) return cmd_arcs(o, out);
    if (matrix->parsed()) return cmd_matrix(o, out);
    if (trace->parsed()) return cmd_trace(o, out);
    if (region->parsed()) return cmd_region(o, out);
    if (verify->parsed()) return cmd_verify(o, out, hooks);
    if (member->parsed()) return cmd_member(o, out);
    if (power->parsed()) return cmd_power(o, out);
    if (resultant->parsed()) return cmd_resultant(o, out);
  } catch (const TraceError& e) {
    err << "error: " << e.what() << " (alpha = " << e.alpha() << ")\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kBadArguments;
}

}  // namespace karp::cli
