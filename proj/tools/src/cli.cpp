#include "algdiag_cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "algdiag/annihilator.hpp"
#include "algdiag/automaton.hpp"
#include "algdiag/cartier.hpp"
#include "algdiag/diagrat.hpp"
#include "algdiag/errors.hpp"
#include "algdiag/exprparse.hpp"
#include "algdiag/extract.hpp"
#include "algdiag/roots.hpp"

namespace algdiag::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::size_t kDefaultN = 256;
constexpr std::size_t kVerifyN = 256;
constexpr std::size_t kRootsPrefix = 32;

struct Options {
  std::string field = "F2";
  std::size_t n = kDefaultN;
  std::string format = "text";
  std::string poly;
  std::string num;
  std::string den;
  std::string from_poly;
  std::string automaton;
  std::string dot_path;
  std::string json_path;
  bool check = false;
  bool diagonal = false;
  std::uint64_t seed = 1;
  std::size_t max_states = 8;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Temp file in the target directory, then rename, so readers never see a
// partially written artifact.
void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    f.close();
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename to " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::schema_error, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void print_series(std::ostream& out, const TruncSeries1& s, std::size_t from, const std::string& format) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t n = from; n <= s.order(); ++n) arr.push_back(s[n].to_string());
    out << arr.dump() << '\n';
    return;
  }
  for (std::size_t n = from; n <= s.order(); ++n) out << n << '\t' << s[n].to_string() << '\n';
}

int cmd_extract(const Options& o, std::ostream& out, std::ostream& err) {
  const Field& field = parse_field_spec(o.field);
  const FixedPointProblem prob(parse_poly(o.poly, field));
  const TruncSeries1 f = fs_coefficients(prob, o.n);
  print_series(out, f, 1, o.format);
  if (!o.check) return kOk;
  const TruncSeries1 g = fixed_point_coefficients(prob, o.n);
  for (std::size_t n = 0; n <= o.n; ++n) {
    if (!(f[n] == g[n])) {
      err << "check: mismatch at n=" << n << ": " << f[n].to_string() << " vs " << g[n].to_string() << '\n';
      return kVerificationFailed;
    }
  }
  err << "check: fixed-point iteration agrees for n <= " << o.n << '\n';
  return kOk;
}

int cmd_diagonal(const Options& o, std::ostream& out, std::ostream&) {
  if (o.from_poly.empty() && o.num.empty()) throw Error(Errc::syntax_error, "need --num/--den or --from-poly");
  const Field& field = parse_field_spec(o.field);
  DiagonalRep rep = [&] {
    if (!o.from_poly.empty()) return furstenberg_rep(parse_poly(o.from_poly, field));
    return make_diagonal_rep(parse_poly(o.num, field), parse_poly(o.den, field));
  }();
  if (!o.from_poly.empty() && o.format == "text") {
    out << "num: " << rep.num.to_string() << '\n';
    out << "den: " << rep.den.to_string() << '\n';
  }
  print_series(out, diagonal_coeffs(rep, o.n), 0, o.format);
  return kOk;
}

int cmd_kernel(const Options& o, std::ostream& out, std::ostream&) {
  const Field& field = parse_field_spec(o.field);
  const BiPoly num = parse_poly(o.num, field);
  const BiPoly den = parse_poly(o.den, field);
  const KernelAutomaton2D aut = rational_kernel(num, den);
  std::string json;
  std::string dot;
  std::string summary = "states: " + std::to_string(aut.states.size()) + "\ndegree bound: " +
                        std::to_string(aut.degree_bound) + "\n";
  if (o.diagonal) {
    const Dfao d = minimize(diagonal_automaton(aut));
    summary += "diagonal states: " + std::to_string(d.size()) + "\n";
    json = to_json(d);
    dot = export_dot(d);
  } else {
    json = kernel_to_json(aut);
    dot = kernel_to_dot(aut);
  }
  if (!o.json_path.empty()) write_atomic(o.json_path, json);
  if (!o.dot_path.empty()) write_atomic(o.dot_path, dot);
  if (o.format == "json") {
    out << json;
  } else if (o.format == "dot") {
    out << dot;
  } else {
    out << summary;
  }
  return kOk;
}

int cmd_annihilate(const Options& o, std::ostream& out, std::ostream&) {
  const Dfao a = from_json(read_file(o.automaton));
  FrobeniusRelation rel;
  try {
    rel = frobenius_relation(a, o.max_states);
  } catch (const Error& e) {
    if (e.code() == Errc::no_relation) throw VerificationFailure(e.what());
    throw;
  }
  long max_deg = 0;
  for (const auto& c : rel.coeffs) max_deg = std::max(max_deg, c.degree());
  const bool ok = verify_relation(rel, generate(a, kVerifyN + static_cast<std::size_t>(max_deg)));
  out << rel.to_string() << '\n';
  out << "verified at N=" << kVerifyN << ": " << (ok ? "yes" : "no") << '\n';
  return ok ? kOk : kVerificationFailed;
}

int cmd_roots(const Options& o, std::ostream& out, std::ostream& err) {
  const Field& field = parse_field_spec(o.field);
  const RootsResult res = roots_automata(parse_poly(o.poly, field), o.n);
  for (const auto& w : res.warnings) err << "warning: " << w << '\n';
  out << "relation: " << res.relation.to_string() << '\n';
  out << "module states: " << res.skeleton.states.size() << '\n';
  bool all_ok = true;
  for (std::size_t i = 0; i < res.branches.size(); ++i) {
    const RootBranchResult& b = res.branches[i];
    all_ok = all_ok && b.verified;
    out << "branch " << i << ": a0=" << b.branch.a0.to_string() << " states=" << b.automaton.size()
        << " verified=" << (b.verified ? "yes" : "no") << '\n';
    out << " ";
    const std::size_t len = std::min(kRootsPrefix, b.branch.series.order() + 1);
    for (std::size_t n = 0; n < len; ++n) out << ' ' << b.branch.series[n].to_string();
    out << '\n';
    const std::string stem = "branch" + std::to_string(i);
    if (!o.json_path.empty()) {
      fs::create_directories(o.json_path);
      write_atomic(fs::path(o.json_path) / (stem + ".json"), to_json(b.automaton));
    }
    if (!o.dot_path.empty()) {
      fs::create_directories(o.dot_path);
      write_atomic(fs::path(o.dot_path) / (stem + ".dot"), export_dot(b.automaton));
    }
  }
  return all_ok ? kOk : kVerificationFailed;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream&) {
  const Dfao a = from_json(read_file(o.automaton));
  const TruncSeries1 s = generate(a, o.n);
  if (o.format == "json") {
    print_series(out, s, 0, o.format);
    return kOk;
  }
  for (std::size_t n = 0; n <= o.n; ++n) out << (n ? " " : "") << s[n].to_string();
  out << '\n';
  return kOk;
}

// Random fixed-point problems over small fields; both extraction routes and
// the diagonal route must agree.
int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err) {
  std::mt19937_64 rng(o.seed);
  static constexpr std::pair<unsigned, unsigned> kMonomials[] = {
      {1, 0}, {2, 0}, {3, 0}, {4, 0}, {0, 2}, {0, 3}, {0, 4}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}};
  const std::size_t n = std::min<std::size_t>(o.n, 32);
  std::size_t checked = 0;
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const Field& field = Field::finite(q);
    for (int t = 0; t < 5; ++t) {
      BiPoly p(field);
      p.add_term(kMonomials[rng() % 4].first, 0, field.from_code(1 + rng() % (q - 1)));
      for (unsigned k = rng() % 4; k > 0; --k) {
        const auto& m = kMonomials[rng() % std::size(kMonomials)];
        p.add_term(m.first, m.second, field.from_code(1 + rng() % (q - 1)));
      }
      if (!fixed_point_violation(p).empty()) continue;
      const FixedPointProblem prob(p);
      const TruncSeries1 a = fs_coefficients(prob, n);
      const TruncSeries1 b = fixed_point_coefficients(prob, n);
      const TruncSeries1 c = diagonal_coeffs(furstenberg_rep(p - BiPoly::y(field)), n);
      if (!(a == b) || !(a == c)) {
        err << "selftest: disagreement for P = " << p.to_string() << " over " << field.name() << '\n';
        return kVerificationFailed;
      }
      ++checked;
    }
  }
  out << "selftest: " << checked << " problems agree (seed " << o.seed << ")\n";
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Algebraic series, diagonals and automata over finite fields", "algdiag"};
  app.require_subcommand(1);

  auto add_field = [&](CLI::App* c) { c->add_option("--field", o.field, "Field spec: Q, F<q>, F<p>^k[:modulus]"); };
  auto add_n = [&](CLI::App* c) {
    c->add_option("-n", o.n, "Precision N")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  };

  CLI::App* extract = app.add_subcommand("extract", "Coefficients of the root of f = P(X, f)");
  add_field(extract);
  extract->add_option("--poly", o.poly, "P(X, Y)")->required();
  add_n(extract);
  add_format(extract);
  extract->add_flag("--check", o.check, "Compare against fixed-point iteration");

  CLI::App* diagonal = app.add_subcommand("diagonal", "Diagonal coefficients of a rational function");
  add_field(diagonal);
  auto* num_opt = diagonal->add_option("--num", o.num, "Numerator");
  auto* den_opt = diagonal->add_option("--den", o.den, "Denominator");
  auto* from_opt = diagonal->add_option("--from-poly", o.from_poly, "Q(X, Y) with a simple root at Y = 0");
  num_opt->needs(den_opt)->excludes(from_opt);
  den_opt->needs(num_opt)->excludes(from_opt);
  add_n(diagonal);
  add_format(diagonal);

  CLI::App* kernel = app.add_subcommand("kernel", "Cartier kernel automaton of num/den");
  add_field(kernel);
  kernel->add_option("--num", o.num, "Numerator")->required();
  kernel->add_option("--den", o.den, "Denominator")->required();
  kernel->add_option("--dot", o.dot_path, "Write DOT to FILE");
  kernel->add_option("--json", o.json_path, "Write JSON to FILE");
  kernel->add_flag("--diagonal", o.diagonal, "Emit the minimized diagonal automaton instead");
  add_format(kernel);

  CLI::App* annihilate = app.add_subcommand("annihilate", "Frobenius relation of an automatic series");
  annihilate->add_option("--automaton", o.automaton, "DFAO JSON file")->required();
  annihilate->add_option("--max-states", o.max_states, "Largest minimized automaton accepted");

  CLI::App* roots = app.add_subcommand("roots", "Automata for the power-series roots of P(X, Y) = 0");
  add_field(roots);
  roots->add_option("--poly", o.poly, "P(X, Y)")->required();
  add_n(roots);
  roots->add_option("--dot", o.dot_path, "Write branch<i>.dot into DIR");
  roots->add_option("--json", o.json_path, "Write branch<i>.json into DIR");

  CLI::App* gen = app.add_subcommand("gen", "Run an automaton on n = 0..N");
  gen->add_option("--automaton", o.automaton, "DFAO JSON file")->required();
  add_n(gen);
  add_format(gen);

  CLI::App* selftest = app.add_subcommand("selftest", "Randomized cross-checks of the extraction routes");
  selftest->add_option("--seed", o.seed, "RNG seed");
  add_n(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*extract) return cmd_extract(o, out, err);
    if (*diagonal) return cmd_diagonal(o, out, err);
    if (*kernel) return cmd_kernel(o, out, err);
    if (*annihilate) return cmd_annihilate(o, out, err);
    if (*roots) return cmd_roots(o, out, err);
    if (*gen) return cmd_gen(o, out, err);
    if (*selftest) return cmd_selftest(o, out, err);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace algdiag::cli
