#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "partible/verifier.hpp"

using namespace partible;
using nlohmann::ordered_json;

namespace {

// Inclusive "lo..hi" ranges and comma lists, e.g. "0..5" or "-2,-1,1..3".
std::vector<long> parse_range(const std::string& text) {
  std::vector<long> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw CLI::ValidationError("empty range item");
    size_t dots = item.find("..", 1);  // skip a leading minus sign
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stol(item));
      } else {
        long lo = std::stol(item.substr(0, dots));
        long hi = std::stol(item.substr(dots + 2));
        if (hi < lo) throw CLI::ValidationError("range " + item + " is empty");
        for (long x = lo; x <= hi; ++x) out.push_back(x);
      }
    } catch (const std::invalid_argument&) {
      throw CLI::ValidationError("malformed range: " + item);
    } catch (const std::out_of_range&) {
      throw CLI::ValidationError("range value out of bounds: " + item);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("empty range");
  return out;
}

Rational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)),
                         BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("malformed rational: " + text);
  }
}

std::vector<int> parse_eps(const std::string& text) {
  std::vector<int> out;
  for (long e : parse_range(text)) {
    if (e != 1 && e != -1)
      throw CLI::ValidationError("--epsilon accepts 1 and -1");
    out.push_back(static_cast<int>(e));
  }
  return out;
}

int run_seq(const std::string& family, const std::string& n_range,
            const std::string& z_str, unsigned r, long b, long c, bool json) {
  std::vector<long> ns = parse_range(n_range);
  Rational z = parse_rational(z_str);
  for (long n : ns)
    if (n < 0) throw CLI::ValidationError("sequence index must be >= 0");

  // Recurrence-backed families reuse one stream across a nondecreasing walk.
  DelannoyStream<Rational> delannoy(z);
  TrinomialStream tri((BigInt(b)), BigInt(c));
  std::vector<std::string> values;
  for (long n : ns) {
    unsigned long un = static_cast<unsigned long>(n);
    Rational val;
    if (family == "delannoy") {
      if (un < delannoy.index()) delannoy = DelannoyStream<Rational>(z);
      while (delannoy.index() < un) delannoy.advance();
      val = delannoy.value();
    } else if (family == "trinomial") {
      if (un < tri.index()) tri = TrinomialStream(BigInt(b), BigInt(c));
      while (tri.index() < un) tri.advance();
      val = Rational(tri.value());
    } else if (family == "schroder") {
      val = schroder_poly_at(un, z);
    } else if (family == "schmidt") {
      val = schmidt_poly(r, un, z);
    } else {
      throw CLI::ValidationError("unknown family: " + family);
    }
    values.push_back(val.get_str());
  }
  if (json) {
    std::cout << ordered_json(values).dump() << "\n";
  } else {
    for (const std::string& v : values) std::cout << v << "\n";
  }
  return 0;
}

ShiftOperator build_operator(int eps, const std::optional<std::string>& z) {
  ShiftOperator L = delannoy_operator(eps);
  if (z) return L.specialize_z(parse_rational(*z));
  return L;
}

int run_op_inspect(int eps, const std::optional<std::string>& z) {
  ShiftOperator L = build_operator(eps, z);
  PartibilityReport rep = inspect_operator(L);
  ordered_json j;
  j["J"] = rep.order;
  ordered_json a = ordered_json::array();
  for (const KPoly& p : rep.a) a.push_back(p.str("k"));
  j["a"] = a;
  j["d"] = rep.deg.degree == KPoly::kDegNegInf
               ? ordered_json(nullptr)
               : ordered_json(rep.deg.degree);
  ordered_json bl = ordered_json::array();
  for (const KPoly& p : rep.deg.b) bl.push_back(p.str("k"));
  j["b"] = bl;
  j["indicial"] = rep.nondeg.indicial.str("s");
  j["identically_degenerate"] = rep.nondeg.identically_zero;
  j["R_L"] = rep.nondeg.roots;
  j["nondegenerate"] = rep.nondeg.nondegenerate;
  ordered_json excz = ordered_json::array();
  for (const Rational& q : rep.nondeg.exceptional_z) excz.push_back(q.get_str());
  j["exceptional_z"] = excz;
  j["gamma"] = rep.gamma ? ordered_json(rep.gamma->get_str())
                         : ordered_json(nullptr);
  j["symmetry_condition"] = rep.condition_holds;
  j["power_partible"] = rep.condition_holds && rep.nondeg.nondegenerate;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_constants(unsigned vmax, bool json) {
  ConstantTable t = ConstantTable::build(vmax);
  if (json) {
    ordered_json j;
    j["vmax"] = vmax;
    ordered_json c, ct, rho, rhot;
    for (unsigned v = 0; v <= vmax; ++v) {
      c.push_back(t.c[v].str());
      ct.push_back(t.ct[v].str());
      rho.push_back(t.rho[v].get_str());
      rhot.push_back(t.rhot[v].get_str());
    }
    j["c"] = c;
    j["ct"] = ct;
    j["rho"] = rho;
    j["rhot"] = rhot;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"v", "c_v", "ct_v", "rho_v", "rhot_v"});
  for (unsigned v = 0; v <= vmax; ++v)
    rows.push_back({std::to_string(v), t.c[v].str(), t.ct[v].str(),
                    t.rho[v].get_str(), t.rhot[v].get_str()});
  std::array<size_t, 5> width{};
  for (const auto& row : rows)
    for (size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < 5; ++i) {
      line += row[i];
      if (i + 1 < 5) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
  return 0;
}

int run_reduce(unsigned m, int eps, const std::optional<std::string>& z) {
  ShiftOperator L = build_operator(eps, z);
  std::optional<Rational> gamma = find_gamma(L);
  if (!gamma) {
    std::cerr << "no rational symmetry center found for this operator\n";
    return 1;
  }
  ReductionCertificate cert = general_reduce(L, *gamma, m);
  ordered_json j;
  j["epsilon"] = eps;
  j["m"] = m;
  j["gamma"] = gamma->get_str();
  j["basis"] =
      KPoly::affine(RatFunc(2), RatFunc(Rational(-2) * *gamma)).str("k");
  j["witness"] = cert.witness.str("k");
  ordered_json rem = ordered_json::object();
  for (const auto& [i, lambda] : cert.remainder)
    rem[std::to_string(i)] = lambda.str();
  j["remainder"] = rem;
  j["verified"] = cert.verify(L);
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct VerifyOptions {
  std::string claim;
  std::optional<std::string> n, z, v, a, p, b, c, m, eps;
  unsigned jobs = 0;
  std::string format = "text";
  std::string out_path;
  bool exploratory = false;
};

int run_verify(const VerifyOptions& opt) {
  SweepSpec spec = SweepSpec::defaults(opt.claim);
  if (opt.claim == "all" &&
      (opt.n || opt.z || opt.v || opt.a || opt.p || opt.b || opt.c || opt.m ||
       opt.eps))
    throw CLI::ValidationError(
        "--claim all runs the default sweeps; range flags apply to single "
        "claims only");
  if (opt.n) spec.n_range = parse_range(*opt.n);
  if (opt.z) spec.z_range = parse_range(*opt.z);
  if (opt.v) spec.v_range = parse_range(*opt.v);
  if (opt.a) spec.a_range = parse_range(*opt.a);
  if (opt.p) spec.p_range = parse_range(*opt.p);
  if (opt.b) spec.b_range = parse_range(*opt.b);
  if (opt.c) spec.c_range = parse_range(*opt.c);
  if (opt.m) spec.m_range = parse_range(*opt.m);
  if (opt.eps) spec.eps_range = parse_eps(*opt.eps);
  spec.exploratory = opt.exploratory;
  if (spec.exploratory && spec.claim != "thm1.3")
    throw CLI::ValidationError("--exploratory applies to --claim thm1.3 only");
  if (spec.exploratory && spec.n_range.empty())
    throw CLI::ValidationError("--exploratory needs an explicit --n range");

  unsigned vmax = 0;
  for (long v : spec.v_range) {
    if (v < 0 || v > 64)
      throw CLI::ValidationError("--v values must lie in [0, 64]");
    vmax = std::max(vmax, static_cast<unsigned>(v));
  }
  ConstantTable table = ConstantTable::build(std::max(vmax, 5u));

  unsigned jobs = opt.jobs ? opt.jobs
                           : std::max(1u, std::thread::hardware_concurrency());
  SweepResult result = run_sweep(spec, jobs, table);

  std::ofstream file;
  std::ostream* dst = &std::cout;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) throw CLI::ValidationError("cannot open " + opt.out_path);
    dst = &file;
  }
  if (opt.format == "csv") *dst << kCsvHeader << "\n";
  for (const CongruenceReport& r : result.reports) {
    if (opt.format == "json")
      *dst << report_json_line(r) << "\n";
    else if (opt.format == "csv")
      *dst << report_csv_row(r) << "\n";
    else
      *dst << report_text_line(r) << "\n";
  }
  std::cout << result.summary() << "\n";
  return result.any_failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for Delannoy congruences"};
  app.require_subcommand(1);

  auto* seq = app.add_subcommand("seq", "print sequence terms");
  std::string family, n_range, z_str = "1";
  unsigned schmidt_r = 1;
  long tri_b = 1, tri_c = 1;
  bool seq_json = false;
  seq->add_option("family", family, "delannoy | schroder | schmidt | trinomial")
      ->required();
  seq->add_option("--n", n_range, "index range, e.g. 0..10 or 0,2,4")
      ->required();
  seq->add_option("--z", z_str, "evaluation point (integer or p/q)");
  seq->add_option("--r", schmidt_r, "Schmidt exponent r >= 1");
  seq->add_option("--b", tri_b, "trinomial parameter b");
  seq->add_option("--c", tri_c, "trinomial parameter c");
  seq->add_flag("--json", seq_json, "emit a JSON array");

  auto* op = app.add_subcommand("op", "shift-operator tools");
  auto* inspect = op->add_subcommand("inspect", "degree, R_L, symmetry center");
  int op_eps = 1;
  std::optional<std::string> op_z;
  inspect->add_option("--epsilon", op_eps, "sign 1 or -1")
      ->check(CLI::IsMember({1, -1}));
  inspect->add_option("--z", op_z, "specialize z (default symbolic)");

  auto* constants = app.add_subcommand("constants", "c_v, ct_v, rho_v, rhot_v");
  unsigned vmax = 5;
  bool const_json = false;
  constants->add_option("--vmax", vmax, "largest v")->required();
  constants->add_flag("--json", const_json, "emit JSON");

  auto* reduce = app.add_subcommand("reduce", "power reduction certificate");
  unsigned reduce_m = 1;
  int reduce_eps = 1;
  std::optional<std::string> reduce_z;
  reduce->add_option("--m", reduce_m, "power to reduce")->required();
  reduce->add_option("--epsilon", reduce_eps, "sign 1 or -1")
      ->check(CLI::IsMember({1, -1}));
  reduce->add_option("--z", reduce_z, "specialize z (default symbolic)");

  auto* verify = app.add_subcommand("verify", "congruence sweeps");
  VerifyOptions vopt;
  verify->add_option("--claim", vopt.claim,
                     "thm1.1 | thm1.2 | thm1.3 | power2 | trinomial | all")
      ->required();
  verify->add_option("--n", vopt.n, "n range");
  verify->add_option("--z", vopt.z, "z range");
  verify->add_option("--v", vopt.v, "v range");
  verify->add_option("--a", vopt.a, "a range (n = 2^a)");
  verify->add_option("--p", vopt.p, "prime range (non-primes are skipped)");
  verify->add_option("--b", vopt.b, "trinomial b range");
  verify->add_option("--c", vopt.c, "trinomial c range");
  verify->add_option("--m", vopt.m, "trinomial m range");
  verify->add_option("--epsilon", vopt.eps, "1, -1 or 1,-1");
  verify->add_option("--jobs", vopt.jobs, "worker threads (default: hardware)");
  verify->add_option("--format", vopt.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--out", vopt.out_path, "write reports to a file");
  verify->add_flag("--exploratory", vopt.exploratory,
                   "observe thm1.3 sums for arbitrary n (never fails)");

  try {
    app.parse(argc, argv);
    if (*seq)
      return run_seq(family, n_range, z_str, schmidt_r, tri_b, tri_c, seq_json);
    if (*op) {
      if (*inspect) return run_op_inspect(op_eps, op_z);
      std::cerr << "usage: op inspect [--epsilon E] [--z Z]\n";
      return 2;
    }
    if (*constants) return run_constants(vmax, const_json);
    if (*reduce) return run_reduce(reduce_m, reduce_eps, reduce_z);
    if (*verify) return run_verify(vopt);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
