// horncone: membership tests, inequality lists and sweeps for Horn(n),
// Horn(p,q) and S(p,q).

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "horncone/horn_classical.hpp"
#include "horncone/horn_pq.hpp"
#include "horncone/json_io.hpp"
#include "horncone/parallel.hpp"
#include "horncone/polyhedra.hpp"
#include "horncone/schubert.hpp"
#include "horncone/sweep.hpp"

namespace {

using namespace horncone;
using io::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<int> pq;
  int n = 0;
  std::string triple;
  std::string input;
  std::string route;
  bool hol = false;
  bool recursive = false;
  bool filter = false;
  bool transport = false;
  std::string format = "json";
  std::string output;
  int bound = 2;
  int r = 0;
  std::vector<int> box;
  std::string product;
  std::vector<int> euler;
  std::string cache_dir;
  int jobs = 0;
  bool pretty = false;
  bool compact = false;
};

std::string render(const json& doc, const Options& opt) {
  const bool pretty = opt.pretty || (!opt.compact && isatty(STDOUT_FILENO));
  return pretty ? doc.dump(2) : doc.dump();
}

void emit(const std::string& text, const Options& opt) {
  if (opt.output.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(opt.output, std::ios::trunc);
  if (!out) throw UsageError("cannot write " + opt.output);
  out << text << '\n';
}

std::pair<int, int> require_pq(const Options& opt) {
  if (opt.pq.size() != 2) throw UsageError("--pq takes two integers");
  const int p = opt.pq[0], q = opt.pq[1];
  if (!(p >= q && q >= 1)) throw UsageError("need p >= q >= 1 (transpose the data when p < q)");
  return {p, q};
}

std::vector<json> load_triple(const Options& opt) {
  if (!opt.triple.empty() && !opt.input.empty()) throw UsageError("use either --triple or --input");
  if (!opt.triple.empty()) return io::parse_inline_triple(opt.triple);
  if (opt.input.empty()) throw UsageError("a triple is required (--triple or --input)");
  std::ifstream in(opt.input);
  if (!in) throw UsageError("cannot read " + opt.input);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON input: ") + e.what());
  }
  if (doc.is_object()) return {doc.at("A"), doc.at("B"), doc.at("C")};
  if (doc.is_array() && doc.size() == 3) return {doc[0], doc[1], doc[2]};
  throw UsageError("input must be an array of three values or an object with A, B, C");
}

SpectrumPair pair_from_json(const json& j, int p, int q) {
  if (!j.is_array() || j.size() != 2) throw UsageError("each element of a Horn(p,q) triple is [[x'...],[x''...]]");
  SpectrumPair x{io::spectrum_from_json(j[0]), io::spectrum_from_json(j[1])};
  if (x.first.size() != p || x.second.size() != q)
    throw UsageError("spectra must have lengths (" + std::to_string(p) + "," + std::to_string(q) + ")");
  return x;
}

GLWeight integral(const Spectrum& x) {
  std::vector<int> parts;
  for (const auto& v : x.values()) {
    if (denominator(v) != 1) throw UsageError("the oracle route needs integer entries");
    parts.push_back(numerator(v).convert_to<int>());
  }
  return GLWeight(std::move(parts));
}

json certificate_json(const std::optional<InequalitySpec>& spec, int p, int q) {
  return spec ? io::to_json(*spec, p, q) : json(nullptr);
}

int cmd_check(const Options& opt) {
  const auto values = load_triple(opt);
  const std::string route = opt.route.empty() ? "theorem" : opt.route;
  json report;
  bool member = false;

  if (opt.n > 0) {
    if (!opt.pq.empty()) throw UsageError("use either --pq or --n");
    if (opt.hol) throw UsageError("--hol applies to Horn(p,q) only");
    const int n = opt.n;
    std::vector<Spectrum> xs;
    for (const auto& v : values) {
      xs.push_back(io::spectrum_from_json(v));
      if (xs.back().size() != n) throw UsageError("spectra must have length " + std::to_string(n));
    }
    report["n"] = n;
    report["route"] = route;
    if (route == "theorem") {
      const auto verdict = horn_n_cone(xs[0], xs[1], xs[2], n, opt.recursive);
      member = verdict.member;
      report["certificate"] = verdict.certificate ? io::to_json(*verdict.certificate) : json(nullptr);
    } else if (route == "oracle") {
      const GLWeight a = integral(xs[0]), b = integral(xs[1]), c = integral(xs[2]);
      member = horn_n_semigroup(a, b, c, n);
      report["multiplicity"] = io::to_json(gl_multiplicity(c, a, b, n));
    } else {
      throw UsageError("route for --n must be theorem or oracle");
    }
    report["member"] = member;
  } else {
    const auto [p, q] = require_pq(opt);
    const SpectrumPair A = pair_from_json(values[0], p, q), B = pair_from_json(values[1], p, q),
                       C = pair_from_json(values[2], p, q);
    report["p"] = p;
    report["q"] = q;
    report["route"] = route;
    if (route == "theorem") {
      const auto verdict = horn_pq_cone(A, B, C, p, q);
      member = verdict.member;
      report["certificate"] = certificate_json(verdict.certificate, p, q);
    } else if (route == "summary") {
      const auto image = theta(SpectrumTriple{A, B, C});
      const auto verdict = s_pq_cone(image.a, image.b, image.c, p, q);
      member = verdict.member;
      report["certificate"] = verdict.certificate
                                  ? io::to_json(theta_transport(*verdict.certificate, p, q), p, q)
                                  : json(nullptr);
      report["s_certificate"] = certificate_json(verdict.certificate, p, q);
    } else if (route == "oracle") {
      const WeightPair a{integral(A.first), integral(A.second)}, b{integral(B.first), integral(B.second)},
          c{integral(C.first), integral(C.second)};
      const auto witness = horn_pq_semigroup(a, b, c, p, q);
      member = witness.has_value();
      report["witness"] = witness ? io::to_json(*witness) : json(nullptr);
    } else {
      throw UsageError("route must be theorem, summary or oracle");
    }
    if (opt.hol) {
      report["horn_member"] = member;
      member = member && horn_hol_membership(A, B, C, p, q);
    }
    report["member"] = member;
  }
  emit(render(report, opt), opt);
  return member ? kOk : kNegative;
}

int cmd_inequalities(const Options& opt) {
  const auto [p, q] = require_pq(opt);
  const std::string route = opt.route.empty() ? "theorem" : opt.route;
  if (route != "theorem" && route != "summary") throw UsageError("route must be theorem or summary");
  if (opt.transport && route != "summary") throw UsageError("--transport applies to the summary route");
  if (opt.format != "json" && opt.format != "csv") throw UsageError("format must be json or csv");

  std::vector<InequalitySpec> specs =
      route == "theorem" ? generate_inequalities(p, q, opt.jobs) : generate_s_inequalities(p, q, opt.jobs);
  if (opt.transport)
    for (auto& spec : specs) spec = theta_transport(spec, p, q);
  json issues = json::array();
  if (opt.filter) {
    const auto result = filter_redundant(to_system(specs, p, q), chamber_context(p, q));
    std::vector<InequalitySpec> kept;
    for (std::size_t i : result.kept) kept.push_back(specs[i]);
    for (const auto& issue : result.issues) issues.push_back({{"index", issue.row}, {"message", issue.message}});
    specs = std::move(kept);
  }
  if (opt.format == "csv") {
    if (opt.output.empty()) {
      std::cout << io::to_csv(specs, p, q);
    } else {
      std::ofstream out(opt.output, std::ios::trunc);
      if (!out) throw UsageError("cannot write " + opt.output);
      out << io::to_csv(specs, p, q);
    }
  } else {
    json list = json::array();
    for (const auto& spec : specs) list.push_back(io::to_json(spec, p, q));
    json doc{{"p", p},
             {"q", q},
             {"route", route},
             {"transported", opt.transport},
             {"filtered", opt.filter},
             {"count", specs.size()},
             {"inequalities", list}};
    if (opt.filter) doc["issues"] = issues;
    emit(render(doc, opt), opt);
  }
  return issues.empty() ? kOk : kNegative;
}

json mismatch_json(const SweepMismatch& m) {
  json weights = json::array();
  for (const auto& w : m.weights) weights.push_back(io::to_json(w));
  return {{"check", m.check}, {"weights", weights}};
}

int cmd_sweep(const Options& opt) {
  if (opt.bound < 0) throw UsageError("--bound must be >= 0");
  const std::string route = opt.route.empty() ? "cone" : opt.route;
  SweepReport report;
  json doc;
  if (opt.n > 0) {
    if (route != "cone") throw UsageError("the classical sweep supports route cone only");
    report = sweep_n(opt.n, opt.bound, opt.jobs);
    doc["n"] = opt.n;
    doc["range"] = {0, opt.bound};
  } else {
    const auto [p, q] = require_pq(opt);
    if (route != "cone" && route != "theta") throw UsageError("route must be cone or theta");
    report = sweep_pq(p, q, opt.bound, route == "cone" ? SweepRoute::cone : SweepRoute::theta, opt.jobs);
    doc["p"] = p;
    doc["q"] = q;
    doc["range"] = {-opt.bound, opt.bound};
  }
  json mismatches = json::array();
  for (const auto& m : report.mismatches) mismatches.push_back(mismatch_json(m));
  doc["route"] = route;
  doc["checked"] = report.checked;
  doc["members"] = report.members;
  doc["mismatch_count"] = report.mismatches.size();
  doc["mismatches"] = mismatches;
  emit(render(doc, opt), opt);
  return report.mismatches.empty() ? kOk : kNegative;
}

CacheConfig cache_config(const Options& opt) {
  CacheConfig cache = CacheConfig::from_environment();
  if (!opt.cache_dir.empty()) cache.directory = opt.cache_dir;
  return cache;
}

int cmd_table(const Options& opt) {
  if (opt.n < 2 || opt.r < 1 || opt.r > opt.n - 1) throw UsageError("need n >= 2 and 1 <= r <= n-1");
  const auto table = horn_triple_table(opt.n, opt.r, cache_config(opt), opt.jobs);
  json doc = io::to_json(table);
  doc["count"] = table.triples.size();
  emit(render(doc, opt), opt);
  return kOk;
}

int cmd_schubert(const Options& opt) {
  json doc;
  std::optional<CohomologyClass> cls;
  if (!opt.euler.empty()) {
    if (opt.euler.size() != 4) throw UsageError("--euler takes p q r s");
    if (!opt.box.empty() || !opt.product.empty()) throw UsageError("use either --euler or --box/--product");
    const int p = opt.euler[0], q = opt.euler[1], r = opt.euler[2], s = opt.euler[3];
    cls = euler_class_vrs(p, q, r, s);
    doc["euler"] = {p, q, r, s};
    doc["rings"] = {{r, p - r}, {q - s, s}};
  } else {
    if (opt.box.size() != 2) throw UsageError("--box takes m n");
    if (opt.product.empty()) throw UsageError("--product needs at least one partition");
    const GrassmannianRing ring{opt.box[0], opt.box[1]};
    if (ring.m < 0 || ring.n < 0) throw UsageError("box dimensions must be >= 0");
    cls = CohomologyClass::unit({ring});
    json factors = json::array();
    for (const auto& v : io::parse_inline_values(opt.product)) {
      const Partition lambda = io::partition_from_json(v);
      if (!ring.contains(lambda)) throw UsageError(to_string(lambda) + " does not fit the box");
      cls = cup_product(*cls, CohomologyClass::schubert(ring, lambda));
      factors.push_back(v);
    }
    doc["ring"] = {ring.m, ring.n};
    doc["factors"] = factors;
  }
  doc["class"] = io::to_json(*cls);
  const auto k = is_point_multiple(*cls);
  doc["point_multiple"] = k ? io::to_json(*k) : json(nullptr);
  emit(render(doc, opt), opt);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Horn cones of U(p,q): membership, inequality lists and oracle sweeps"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--jobs", opt.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--pretty", opt.pretty, "indent JSON output");
  app.add_flag("--compact", opt.compact, "single-line JSON output");
  app.add_option("--output", opt.output, "write the result to this file");

  auto* check = app.add_subcommand("check", "decide membership of a triple");
  auto* pq_opt = check->add_option("--pq", opt.pq, "Horn(p,q) with p >= q >= 1")->expected(2);
  check->add_option("--n", opt.n, "classical Horn(n)")->excludes(pq_opt);
  check->add_option("--triple", opt.triple, R"(inline triple, e.g. "[[1],[0]] [[1],[0]] [[2],[0]]")");
  check->add_option("--input", opt.input, "JSON file with [A, B, C] or {\"A\":..,\"B\":..,\"C\":..}");
  check->add_option("--route", opt.route, "theorem | summary | oracle")
      ->check(CLI::IsMember({"theorem", "summary", "oracle"}));
  check->add_flag("--hol", opt.hol, "also require strict interlacing (holomorphic Horn cone)");
  check->add_flag("--recursive", opt.recursive, "classical route: decide Horn(r) gates recursively");

  auto* ineq = app.add_subcommand("inequalities", "emit the recursive inequality list");
  ineq->add_option("--pq", opt.pq, "p q with p >= q >= 1")->expected(2)->required();
  ineq->add_option("--route", opt.route, "theorem (Horn(p,q)) | summary (S(p,q))")
      ->check(CLI::IsMember({"theorem", "summary"}));
  ineq->add_flag("--transport", opt.transport, "summary route: map each condition to Horn(p,q) coordinates");
  ineq->add_flag("--filter", opt.filter, "drop redundant inequalities (exact LP, chamber as context)");
  ineq->add_option("--format", opt.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* sweep = app.add_subcommand("sweep", "compare routes on every integer triple in a box");
  auto* spq = sweep->add_option("--pq", opt.pq, "Horn(p,q), entries in [-B, B]")->expected(2);
  sweep->add_option("--n", opt.n, "classical Horn(n), entries in [0, B]")->excludes(spq);
  sweep->add_option("--bound", opt.bound, "entry bound B")->required();
  sweep->add_option("--route", opt.route, "cone | theta")->check(CLI::IsMember({"cone", "theta"}));

  auto* table = app.add_subcommand("table", "dump the Horn triple table for (n, r)");
  table->add_option("--n", opt.n, "n")->required();
  table->add_option("--r", opt.r, "r")->required();
  table->add_option("--cache-dir", opt.cache_dir, "cache directory (default: $HORNCONE_CACHE or ./.horncone-cache)");

  auto* schubert = app.add_subcommand("schubert", "cup products and Euler classes");
  schubert->add_option("--box", opt.box, "m n for H*(G(m,n))")->expected(2);
  schubert->add_option("--product", opt.product, R"(partitions to multiply, e.g. "[1] [1]")");
  schubert->add_option("--euler", opt.euler, "p q r s for Eul(V^r_s)")->expected(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (opt.jobs == 0) opt.jobs = default_jobs();

  try {
    if (*check) return cmd_check(opt);
    if (*ineq) return cmd_inequalities(opt);
    if (*sweep) return cmd_sweep(opt);
    if (*table) return cmd_table(opt);
    if (*schubert) return cmd_schubert(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
