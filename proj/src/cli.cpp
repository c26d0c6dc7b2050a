#include "unitarea/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "unitarea/counting.hpp"
#include "unitarea/curve_json.hpp"
#include "unitarea/curves.hpp"
#include "unitarea/error.hpp"
#include "unitarea/incidence.hpp"
#include "unitarea/point_io.hpp"
#include "unitarea/scans.hpp"

namespace unitarea {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input;
  std::string output;
  std::string kind = "lattice";
  std::string method = "pairline";
  std::string area;
  std::string pair1;
  std::string pair2;
  std::string sizes;
  std::size_t n = 0;
  std::size_t k = 2;
  long bound = -1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t lines = 0;
  std::size_t per_line = 0;
  long spacing = 1;
  std::size_t trials = 500;
  std::size_t matching_limit = 60;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool require_q_in_s = false;
  bool no_timing = false;
};

Rational area_of(const Config& c, const std::string& fallback) {
  const std::string& text = c.area.empty() ? fallback : c.area;
  Rational a;
  if (!try_parse_rational(text, a)) throw UsageError("--area: '" + text + "' is not an integer or num/den");
  if (sgn(a) <= 0) throw UsageError("--area: must be positive, got " + text);
  return a;
}

void check_k(const Config& c) {
  if (c.k < 2) throw UsageError("--k: must be >= 2, got " + std::to_string(c.k));
}

IncidencePairParam pair_of(const std::string& flag, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  Rational v[3];
  if (parts.size() != 3) throw UsageError(flag + ": expected a,b,kappa, got '" + text + "'");
  for (int i = 0; i < 3; ++i) {
    if (!try_parse_rational(parts[i], v[i])) throw UsageError(flag + ": '" + parts[i] + "' is not a rational");
  }
  return IncidencePairParam::from_triple(v[0], v[1], v[2]);
}

std::vector<std::size_t> sizes_of(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--sizes: '" + item + "' is not a size");
    }
  }
  if (out.empty()) throw UsageError("--sizes: empty list");
  return out;
}

std::vector<Point> input_points(const Config& c) {
  if (c.input.empty()) throw UsageError("--input: required");
  return read_points_file(c.input);
}

std::string read_file(const std::string& flag, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(flag + ": cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --out when given, else to out.
template <class Emit>
void emit(const Config& c, std::ostream& out, Emit&& body) {
  if (c.output.empty()) {
    body(out);
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw UsageError("--out: cannot write " + c.output);
  body(f);
}

GeneratorKind kind_of(const Config& c) {
  const auto k = parse_generator_kind(c.kind);
  if (!k) throw UsageError("--kind: expected lattice|random|grid|parallel, got '" + c.kind + "'");
  return *k;
}

int cmd_gen(const Config& c, std::ostream& out) {
  const GeneratorKind kind = kind_of(c);
  std::vector<Point> pts;
  switch (kind) {
    case GeneratorKind::Lattice:
      if (c.n < 4) throw UsageError("--n: lattice sections need n >= 4");
      pts = gen_lattice_section(c.n);
      break;
    case GeneratorKind::Random:
      pts = c.bound >= 0 ? gen_random(c.n, c.bound, c.seed) : generate(kind, c.n, c.seed);
      break;
    case GeneratorKind::Grid:
      pts = c.rows > 0 && c.cols > 0 ? gen_grid(c.rows, c.cols) : generate(kind, c.n, c.seed);
      break;
    case GeneratorKind::Parallel:
      pts = c.lines > 0 && c.per_line > 0 ? gen_parallel_lines(c.lines, c.per_line, c.spacing)
                                          : generate(kind, c.n, c.seed);
      break;
  }
  emit(c, out, [&](std::ostream& o) { write_points(o, pts); });
  return 0;
}

int cmd_count(const Config& c, std::ostream& out) {
  const Rational area = area_of(c, "1");
  if (c.method != "brute" && c.method != "pairline") {
    throw UsageError("--method: expected brute|pairline, got '" + c.method + "'");
  }
  const auto pts = input_points(c);
  const auto count = c.method == "brute" ? count_brute(pts, area, c.threads) : count_pairline(pts, area, c.threads);
  out << count << '\n';
  return 0;
}

int cmd_rich_lines(const Config& c, std::ostream& out) {
  check_k(c);
  const auto pts = input_points(c);
  emit(c, out, [&](std::ostream& o) {
    o << "A,B,C,points\n";
    for (const SpannedLine& l : rich_lines(pts, c.k)) {
      o << to_string(l.line.a()) << ',' << to_string(l.line.b()) << ',' << to_string(l.line.c()) << ','
        << l.members.size() << '\n';
    }
  });
  return 0;
}

int cmd_stats(const Config& c, std::ostream& out) {
  check_k(c);
  const auto st = incidence_stats(input_points(c), c.k);
  out << "n,k,m,N,ratio_m,ratio_N\n"
      << st.n << ',' << st.k << ',' << st.m << ',' << st.N << ',' << to_string(st.ratio_m) << ','
      << to_string(st.ratio_N) << '\n';
  return 0;
}

int cmd_matching(const Config& c, std::ostream& out) {
  check_k(c);
  const Rational area = area_of(c, "1");
  const auto pts = input_points(c);
  const auto mc = matching_count(pts, c.k, area, c.require_q_in_s, c.threads);
  out << "n,k,A,N,M\n" << pts.size() << ',' << c.k << ',' << to_string(area) << ',' << mc.N << ',' << mc.M << '\n';
  return 0;
}

int cmd_tally(const Config& c, std::ostream& out) {
  check_k(c);
  const Rational area = area_of(c, "1");
  const auto pts = input_points(c);
  const auto mi = matching_identity_check(pts, c.k, area, c.threads);
  const auto& t = mi.tally;
  out << "n,k,A,T0,T1,T2,T3,total,N,M,M_unfiltered,holds\n"
      << pts.size() << ',' << c.k << ',' << to_string(area) << ',' << t.T0 << ',' << t.T1 << ',' << t.T2 << ','
      << t.T3 << ',' << t.total << ',' << mi.N << ',' << mi.M << ',' << mi.M_unfiltered << ','
      << (mi.holds ? "true" : "false") << '\n';
  return mi.holds ? 0 : 1;
}

int cmd_curve(const Config& c, std::ostream& out) {
  if (c.pair1.empty() || c.pair2.empty()) throw UsageError("--pair1 and --pair2 are required");
  const auto p1 = pair_of("--pair1", c.pair1);
  const auto p2 = pair_of("--pair2", c.pair2);
  if (p1 == p2) throw UsageError("--pair2: must differ from --pair1");
  const std::string doc = curve_to_json(gamma_star(p1, p2));
  emit(c, out, [&](std::ostream& o) { o << doc; });
  return 0;
}

int cmd_reconstruct(const Config& c, std::ostream& out) {
  if (c.input.empty()) throw UsageError("--in: required");
  const auto f = curve_from_json(read_file("--in", c.input));
  const auto [p, q] = reconstruct_generators(f);
  out << to_string(p) << '\n' << to_string(q) << '\n';
  return 0;
}

int cmd_bezout(const Config& c, std::ostream& out) {
  const auto s = bezout_scan(c.trials, c.seed, c.threads);
  out << "trials,checked,shared_component,max_upper_bound,violations\n"
      << s.trials << ',' << s.checked << ',' << s.shared_component << ',' << s.max_upper_bound << ',' << s.violations
      << '\n';
  return s.violations == 0 ? 0 : 1;
}

int cmd_k310(const Config& c, std::ostream& out) {
  const auto s = k310_scan(c.trials, c.seed, c.threads);
  out << "trials,checked,degenerate,unresolved,max_upper_bound,max_common_in_q,violations\n"
      << s.trials << ',' << s.checked << ',' << s.degenerate << ',' << s.unresolved << ',' << s.max_upper_bound
      << ',' << s.max_common_in_q
      << ',' << s.violations << '\n';
  return s.violations == 0 ? 0 : 1;
}

int cmd_scaling(const Config& c, std::ostream& out, std::ostream& err) {
  check_k(c);
  const GeneratorKind kind = kind_of(c);
  // The minimal lattice triangle area is the natural fixed area on a lattice.
  const Rational area = area_of(c, kind == GeneratorKind::Lattice ? "1/2" : "1");
  ScalingOptions opt;
  opt.threads = c.threads;
  opt.matching_limit = c.matching_limit;
  opt.timing = !c.no_timing;
  const auto result = scaling_experiment(kind, sizes_of(c.sizes), c.k, area, c.seed, opt);
  emit(c, out, [&](std::ostream& o) { write_experiment_csv(o, result.rows); });
  if (result.trend_non_decreasing && !*result.trend_non_decreasing) {
    err << "invariant violated: count/n^2 decreases across the lattice sizes\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fixed-area triangle counting, incidence and cubic-curve tools", "unitarea"};
  app.require_subcommand(1);
  Config c;

  auto add_threads = [&](CLI::App* s) { s->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber); };
  auto add_k = [&](CLI::App* s) { s->add_option("--k", c.k, "richness threshold (>= 2)"); };
  auto add_area = [&](CLI::App* s) { s->add_option("--area", c.area, "triangle area as n or num/den"); };
  auto add_input = [&](CLI::App* s) { s->add_option("--input", c.input, "point-set file")->required(); };

  auto* gen = app.add_subcommand("gen", "generate a point set");
  gen->add_option("--kind", c.kind, "lattice|random|grid|parallel");
  gen->add_option("--n", c.n, "number of points");
  gen->add_option("--seed", c.seed, "random seed");
  gen->add_option("--bound", c.bound, "random: coordinate bound");
  gen->add_option("--rows", c.rows, "grid: rows");
  gen->add_option("--cols", c.cols, "grid: columns");
  gen->add_option("--lines", c.lines, "parallel: number of lines");
  gen->add_option("--per-line", c.per_line, "parallel: points per line");
  gen->add_option("--spacing", c.spacing, "parallel: line spacing");
  gen->add_option("--out", c.output, "output file (default stdout)");

  auto* count = app.add_subcommand("count", "count fixed-area triangles");
  add_input(count);
  add_area(count);
  count->add_option("--method", c.method, "brute|pairline");
  add_threads(count);

  auto* rich = app.add_subcommand("rich-lines", "list k-rich lines");
  add_input(rich);
  add_k(rich);
  rich->add_option("--out", c.output, "output file (default stdout)");

  auto* stats = app.add_subcommand("stats", "incidence statistics");
  add_input(stats);
  add_k(stats);

  auto* matching = app.add_subcommand("matching", "count ordered matching pairs of Q");
  add_input(matching);
  add_k(matching);
  add_area(matching);
  matching->add_flag("--require-q-in-s", c.require_q_in_s, "count only pairs whose third vertex is in S");
  add_threads(matching);

  auto* tally = app.add_subcommand("tally", "richness tally and the matching identity");
  add_input(tally);
  add_k(tally);
  add_area(tally);
  add_threads(tally);

  auto* curve = app.add_subcommand("curve", "projected curve of two incidence pairs");
  curve->add_option("--pair1", c.pair1, "a,b,kappa")->required();
  curve->add_option("--pair2", c.pair2, "a,b,kappa")->required();
  curve->add_option("--out", c.output, "output file (default stdout)");

  auto* reconstruct = app.add_subcommand("reconstruct", "recover the generating pairs of a curve");
  reconstruct->add_option("--in", c.input, "curve JSON file")->required();

  auto* bezout = app.add_subcommand("bezout", "random curve-pair intersection bounds");
  bezout->add_option("--trials", c.trials, "number of trials");
  bezout->add_option("--seed", c.seed, "random seed");
  add_threads(bezout);

  auto* k310 = app.add_subcommand("k310-scan", "random surface-triple common-point bounds");
  k310->add_option("--trials", c.trials, "number of trials");
  k310->add_option("--seed", c.seed, "random seed");
  add_threads(k310);

  auto* scaling = app.add_subcommand("scaling", "scaling experiment CSV");
  scaling->add_option("--kind", c.kind, "lattice|random|grid|parallel");
  scaling->add_option("--sizes", c.sizes, "ascending comma-separated sizes")->required();
  add_k(scaling);
  add_area(scaling);
  scaling->add_option("--seed", c.seed, "random seed");
  scaling->add_option("--matching-limit", c.matching_limit, "largest n that also gets the tally and M");
  scaling->add_flag("--no-timing", c.no_timing, "write 0 in the seconds column");
  scaling->add_option("--out", c.output, "CSV file (default stdout)");
  add_threads(scaling);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(c, out);
    if (*count) return cmd_count(c, out);
    if (*rich) return cmd_rich_lines(c, out);
    if (*stats) return cmd_stats(c, out);
    if (*matching) return cmd_matching(c, out);
    if (*tally) return cmd_tally(c, out);
    if (*curve) return cmd_curve(c, out);
    if (*reconstruct) return cmd_reconstruct(c, out);
    if (*bezout) return cmd_bezout(c, out);
    if (*k310) return cmd_k310(c, out);
    if (*scaling) return cmd_scaling(c, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::InvariantViolation ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace unitarea
