#include "fubm/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "fubm/alternating.hpp"
#include "fubm/cumulants.hpp"
#include "fubm/errors.hpp"
#include "fubm/laplace.hpp"
#include "fubm/moments.hpp"
#include "fubm/ncpart.hpp"
#include "fubm/rdiag.hpp"
#include "fubm/verify.hpp"

namespace fubm {

namespace {

struct Options {
  unsigned prec = kDefaultPrecisionBits;
  std::string format = "text";
  std::string style = "xy";
};

std::string real_to_string(const Real& x, unsigned bits) {
  const auto digits = static_cast<std::streamsize>(std::floor(bits * 0.30102999566398120));
  return x.str(digits);
}

std::string render(const QuasiPoly& f, const Options& o) {
  if (o.format == "latex") return o.style == "t" ? to_latex_t(f) : to_latex_xy(f);
  return o.style == "t" ? to_text_t(f) : to_text_xy(f);
}

Distribution load_distribution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot open q-cumulant file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw StructureError(std::string("q-cumulant file is not valid JSON: ") + e.what());
  }
  return Distribution::from_json(j);
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rational_to_string(q));
  return a;
}

NCPartition parse_partition(const std::string& s) {
  try {
    return partition_from_json(Json::parse(s));
  } catch (const Json::parse_error&) {
    throw StructureError("partition must look like [[1,4,5],[2,3]]");
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// ------------------------------------------------------------------ commands

int cmd_zpoly(const Options& o, const std::string& word, const std::string& method, const std::optional<std::string>& t,
              const std::optional<int>& grade, std::ostream& out, std::ostream& err) {
  const Word w = parse_word(word);
  QuasiPoly z;
  if (method == "mobius") {
    z = z_mobius(w);
  } else if (method == "recursive") {
    z = z_recursive(w);
  } else {
    z = z_mobius(w);
    const QuasiPoly r = z_recursive(w);
    if (!(z == r)) {
      err << "MISMATCH for " << word_to_string(w) << "\n  mobius:    " << to_text_xy(z) << "\n  recursive: " << to_text_xy(r)
          << "\n";
      return kExitFailure;
    }
  }
  if (grade) {
    const Poly g = z.grade(*grade);
    if (o.format == "json") {
      Json j;
      j["word"] = word_to_string(w);
      j["grade"] = *grade;
      j["coeffs"] = poly_to_json(g);
      out << j.dump() << "\n";
    } else {
      out << poly_to_string(g) << "\n";
    }
    return kExitOk;
  }
  if (t) {
    const Real v = eval(z, *t, o.prec);
    if (o.format == "json") {
      Json j;
      j["word"] = word_to_string(w);
      j["t"] = *t;
      j["value"] = real_to_string(v, o.prec);
      out << j.dump() << "\n";
    } else {
      out << real_to_string(v, o.prec) << "\n";
    }
    return kExitOk;
  }
  if (o.format == "json") {
    Json j;
    j["word"] = word_to_string(w);
    j["method"] = method;
    j["z"] = to_json(z);
    out << j.dump() << "\n";
  } else {
    out << render(z, o) << "\n";
  }
  return kExitOk;
}

int cmd_xi(const Options& o, int n, const std::string& method, std::ostream& out) {
  std::vector<XiSequence> runs;
  if (method == "recursion" || method == "all") runs.push_back(xi_by_recursion(n));
  if (method == "mobius" || method == "all") runs.push_back(xi_by_mobius(n));
  if (method == "inversion" || method == "all") runs.push_back(xi_by_inversion(n));
  bool consistent = true;
  for (const auto& r : runs)
    if (r.entries != runs.front().entries) consistent = false;

  Options ot = o;
  if (ot.style == "xy" && o.format != "latex") ot.style = "t";
  if (o.format == "json") {
    Json j;
    for (const auto& r : runs) {
      Json a = Json::array();
      for (const auto& x : r.entries) a.push_back(to_json(x));
      j[to_string(r.method)] = std::move(a);
    }
    if (runs.size() > 1) j["consistent"] = consistent;
    out << j.dump() << "\n";
  } else {
    for (const auto& r : runs) {
      if (runs.size() > 1) out << "[" << to_string(r.method) << "]\n";
      for (std::size_t i = 0; i < r.entries.size(); ++i) out << "xi_" << i + 1 << " = " << render(r.entries[i], ot) << "\n";
    }
    if (runs.size() > 1) out << (consistent ? "CONSISTENT" : "INCONSISTENT") << "\n";
  }
  return consistent ? kExitOk : kExitFailure;
}

int cmd_special(const Options& o, int k, int l, std::ostream& out) {
  const Poly u = u_poly(k, l), v = v_poly(k, l);
  const QuasiPoly z = z_from_laplace(k, l);
  if (o.format == "json") {
    Json j;
    j["k"] = k;
    j["l"] = l;
    j["U"] = poly_to_json(u);
    j["V"] = poly_to_json(v);
    j["z"] = to_json(z);
    out << j.dump() << "\n";
  } else {
    out << "U = " << poly_to_string(u) << "\n";
    out << "V = " << poly_to_string(v) << "\n";
    out << "Z = " << render(z, o) << "\n";
  }
  return kExitOk;
}

int cmd_fcheck(const Options& o, int order, std::ostream& out) {
  const FIdentityReport rep = check_f_identity(order);
  if (o.format == "json") {
    Json j;
    j["order"] = order;
    j["checked"] = rep.checked;
    j["coeff11"] = to_json(rep.coeff11);
    Json bad = Json::array();
    for (const auto& [k, l] : rep.nonzero) bad.push_back({k, l});
    j["nonzero"] = std::move(bad);
    j["ok"] = rep.ok;
    out << j.dump() << "\n";
  } else {
    out << "coefficient (1,1): " << to_text_xy(rep.coeff11) << "\n";
    out << "coefficients checked: " << rep.checked << "\n";
    out << "nonzero off (1,1): " << rep.nonzero.size() << "\n";
    for (const auto& [k, l] : rep.nonzero) out << "  (" << k << "," << l << ")\n";
    out << (rep.ok ? "OK" : "FAILED") << "\n";
  }
  return rep.ok ? kExitOk : kExitFailure;
}

int cmd_pde(const Options& o, int n, const std::string& ts, const std::string& zs, std::ostream& out) {
  const PdeReport rep = pde_residual(n, split_list(ts), split_list(zs), o.prec);
  const bool exact = rep.first_nonzero_order == 0 || rep.first_nonzero_order > n;
  const bool ok = exact && rep.initial_condition;
  if (o.format == "json") {
    Json j;
    j["n"] = n;
    j["exact_through"] = n;
    j["exact_ok"] = exact;
    j["first_nonzero_order"] = rep.first_nonzero_order;
    j["initial_condition"] = rep.initial_condition;
    j["max_residual"] = real_to_string(rep.max_residual, 64);
    out << j.dump() << "\n";
  } else {
    out << "z^1..z^" << n << " coefficients: " << (exact ? "zero" : "NONZERO") << "\n";
    out << "first nonzero order (truncation): " << rep.first_nonzero_order << "\n";
    out << "H(0,z) = 1/2: " << (rep.initial_condition ? "yes" : "no") << "\n";
    out << "max |residual|: " << real_to_string(rep.max_residual, 64) << "\n";
    out << (ok ? "OK" : "FAILED") << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_haar(const Options& o, const std::string& word, std::ostream& out) {
  const Word w = parse_word(word);
  const Rational lim = haar_limit(w), der = haar_derivative(w);
  if (o.format == "json") {
    Json j;
    j["word"] = word_to_string(w);
    j["alternating"] = is_alternating(w);
    j["limit"] = rational_to_string(lim);
    j["derivative"] = rational_to_string(der);
    out << j.dump() << "\n";
  } else {
    out << "alternating: " << (is_alternating(w) ? "yes" : "no") << "\n";
    out << "limit: " << lim << "\n";
    out << "derivative: " << der << "\n";
  }
  return kExitOk;
}

void print_sequence(const Options& o, const std::string& name, const std::vector<Rational>& v, std::ostream& out) {
  if (o.format == "json") {
    Json j;
    j[name] = rationals_json(v);
    out << j.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) out << name << "_" << i + 1 << " = " << v[i] << "\n";
}

int cmd_alpha(const Options& o, int k, const std::string& file, std::ostream& out) {
  print_sequence(o, "alpha", alpha_sequence(load_distribution(file), k), out);
  return kExitOk;
}

std::vector<Rational> beta_by_enumeration(const Distribution& d, int k_max) {
  std::vector<Rational> out;
  for (int k = 1; k <= k_max; ++k) {
    const OmegaNC omega = 4 * k - 2 <= 14 ? nc_omega(alternating_odd(k)) : nc_omega_structured(k);
    out.push_back(beta_from_omega(d, omega));
  }
  return out;
}

int cmd_beta(const Options& o, int k, const std::string& file, const std::string& method, std::ostream& out,
             std::ostream& err) {
  const Distribution d = load_distribution(file);
  if (method == "mobius") {
    print_sequence(o, "beta", beta_mobius(d, k), out);
    return kExitOk;
  }
  const auto en = beta_by_enumeration(d, k);
  if (method == "enumeration") {
    print_sequence(o, "beta", en, out);
    return kExitOk;
  }
  const auto mo = beta_mobius(d, k);
  print_sequence(o, "beta", mo, out);
  if (mo != en) {
    for (int i = 0; i < k; ++i)
      if (mo[i] != en[i]) err << "MISMATCH beta_" << i + 1 << ": mobius " << mo[i] << ", enumeration " << en[i] << "\n";
    return kExitFailure;
  }
  if (o.format != "json") out << "CONSISTENT\n";
  return kExitOk;
}

int cmd_ncw(const Options& o, const std::string& word, bool count_only, std::ostream& out) {
  const OmegaNC omega = nc_omega(parse_word(word));
  if (o.format == "json") {
    Json j;
    j["word"] = word_to_string(omega.word);
    j["U"] = omega.u_set;
    j["Q"] = omega.q_set;
    j["count"] = omega.partitions.size();
    if (!count_only) {
      Json a = Json::array();
      for (const auto& p : omega.partitions) a.push_back(to_json(p));
      j["partitions"] = std::move(a);
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  if (count_only) {
    out << omega.partitions.size() << "\n";
    return kExitOk;
  }
  for (const auto& p : omega.partitions) out << to_string(p) << "\n";
  return kExitOk;
}

int cmd_nc(const Options& o, int n, bool count_only, const std::string& kr, const std::vector<std::string>& jn,
           const std::string& moeb, std::ostream& out) {
  if (!kr.empty()) {
    out << to_string(kreweras(parse_partition(kr))) << "\n";
    return kExitOk;
  }
  if (!jn.empty()) {
    out << to_string(join(parse_partition(jn.at(0)), parse_partition(jn.at(1)))) << "\n";
    return kExitOk;
  }
  if (!moeb.empty()) {
    const NCPartition p = parse_partition(moeb);
    if (o.format == "json") {
      Json j;
      j["from_zero"] = rational_to_string(moebius_from_zero(p));
      j["to_one"] = rational_to_string(moebius_to_one(p));
      out << j.dump() << "\n";
    } else {
      out << "Moeb(0,p) = " << moebius_from_zero(p) << "\n";
      out << "Moeb(p,1) = " << moebius_to_one(p) << "\n";
    }
    return kExitOk;
  }
  if (n < 1) throw SizeError("nc needs --n, --kreweras, --join or --moebius");
  if (count_only) {
    out << count_nc(n) << "\n";
    return kExitOk;
  }
  for (NCEnumerator e(n); !e.done(); e.next()) out << to_string(e.current()) << "\n";
  return kExitOk;
}

int cmd_moments(const Options& o, int n, const std::string& word, const std::optional<std::string>& s,
                std::ostream& out) {
  if (!word.empty()) {
    const QuasiPoly m = m_poly(parse_word(word));
    if (o.format == "json") {
      Json j;
      j["word"] = word;
      j["m"] = to_json(m);
      out << j.dump() << "\n";
    } else {
      out << render(m, o) << "\n";
    }
    return kExitOk;
  }
  if (n < 1) throw SizeError("moments needs --n or --word");
  if (o.format == "json") {
    Json j;
    j["n"] = n;
    j["Q"] = poly_to_json(biane_Q(n));
    j["lambert"] = rational_to_string(lambert_coeff(n));
    j["diag_cumulant"] = to_json(diag_cumulant(n));
    j["exp_neg_sW"] = poly_to_json(exp_neg_sW_poly(n));
    if (s) j["exp_neg_sW_at_s"] = rational_to_string(exp_neg_sW_coeff(parse_rational(*s), n));
    out << j.dump() << "\n";
  } else {
    out << "Q_" << n << " = " << poly_to_string(biane_Q(n), "t") << "\n";
    out << "lambert_" << n << " = " << lambert_coeff(n) << "\n";
    out << "kappa_" << n << "(u_t,...,u_t) = " << render(diag_cumulant(n), o) << "\n";
    out << "[y^" << n << "] exp(-sW(y)) = " << poly_to_string(exp_neg_sW_poly(n), "s") << "\n";
    if (s) out << "  at s = " << *s << ": " << exp_neg_sW_coeff(parse_rational(*s), n) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, const std::string& suite, int max_n, std::uint64_t seed, bool timing,
               std::ostream& out) {
  std::vector<VerifyReport> reports;
  if (suite == "all")
    reports = verify_all(max_n, seed);
  else
    reports.push_back(run_verify_suite(suite, max_n, seed));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (o.format == "json") {
    Json j;
    j["seed"] = seed;
    Json a = Json::array();
    for (const auto& r : reports) {
      Json x = to_json(r);
      if (timing) x["seconds"] = r.seconds;
      a.push_back(std::move(x));
    }
    j["suites"] = std::move(a);
    j["passed"] = ok;
    out << j.dump() << "\n";
  } else {
    out << "seed: " << seed << "\n";
    for (const auto& r : reports) {
      out << (r.ok() ? "PASS " : "FAIL ") << r.suite << " (" << r.cases << " cases";
      if (timing) out << ", " << r.seconds << " s";
      out << ")\n";
      std::size_t shown = 0;
      for (const auto& f : r.failures) {
        if (++shown > 20) {
          out << "  ... " << r.failures.size() - 20 << " more\n";
          break;
        }
        out << "  input: " << f.input << "\n    expected: " << f.expected << "\n    got:      " << f.got << "\n";
      }
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact free cumulants of free unitary Brownian motion"};
  app.name(args.empty() ? "fubm" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--prec", o.prec, "Working precision in bits for numeric output")->check(CLI::Range(16U, 1U << 20));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "latex", "json"}));
  app.add_option("--style", o.style, "Quasi-polynomial style: xy (powers of y = e^{-t/2}) or t")
      ->check(CLI::IsMember({"xy", "t"}));

  std::string word, method = "mobius";
  std::optional<std::string> eval_at;
  std::optional<int> grade;
  auto* zp = app.add_subcommand("zpoly", "Cumulant Z_w of a word");
  zp->add_option("word", word, "Word such as 1*1 or uu*u")->required();
  zp->add_option("--eval", eval_at, "Evaluate at t");
  zp->add_option("--grade", grade, "Emit the coefficient of y^m")->check(CLI::NonNegativeNumber);
  zp->add_option("--method", method)->check(CLI::IsMember({"mobius", "recursive", "both"}));

  int n = 0;
  std::string xi_method = "recursion";
  auto* xi = app.add_subcommand("xi", "Alternating cumulants xi_1..xi_n");
  xi->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  xi->add_option("--method", xi_method)->check(CLI::IsMember({"recursion", "mobius", "inversion", "all"}));

  int k = 0, l = 0;
  auto* sp = app.add_subcommand("special", "U, V and Z for the word 1^k *^l");
  sp->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  sp->add_option("--l", l)->required()->check(CLI::PositiveNumber);

  int order = 6;
  auto* fc = app.add_subcommand("fcheck", "Bivariate generating function identity");
  fc->add_option("--order", order)->check(CLI::Range(1, kMaxBivariateOrder));

  int pde_n = 6;
  std::string t_list, z_list;
  auto* pde = app.add_subcommand("pde-check", "Burgers equation for H(t,z)");
  pde->add_option("--n", pde_n)->check(CLI::PositiveNumber);
  pde->add_option("--t", t_list, "Comma-separated t grid");
  pde->add_option("--z", z_list, "Comma-separated z grid");

  auto* hr = app.add_subcommand("haar", "Limit and derivative at t = infinity");
  hr->add_option("--word", word)->required();

  std::string qfile;
  auto* al = app.add_subcommand("alpha", "Determining sequence of uq");
  al->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  al->add_option("--q-cumulants", qfile)->required();

  std::string beta_method = "mobius";
  auto* be = app.add_subcommand("beta", "Infinitesimal determining sequence of u_t q");
  be->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  be->add_option("--q-cumulants", qfile)->required();
  be->add_option("--method", beta_method)->check(CLI::IsMember({"mobius", "enumeration", "both"}));

  bool count_only = false;
  auto* nw = app.add_subcommand("ncw", "Partitions NC_w(2n)");
  nw->add_option("--word", word)->required();
  nw->add_flag("--count-only", count_only);

  std::string kr, moeb;
  std::vector<std::string> jn;
  auto* nc = app.add_subcommand("nc", "Non-crossing partitions");
  nc->add_option("--n", n)->check(CLI::Range(1, kMaxEnumeration));
  nc->add_flag("--count-only", count_only);
  nc->add_option("--kreweras", kr, "Kreweras complement of a partition")->allow_extra_args(false);
  nc->add_option("--join", jn, "Join of two partitions")->expected(2)->allow_extra_args(false);
  nc->add_option("--moebius", moeb, "Moebius values of a partition")->allow_extra_args(false);

  std::string word_m, s_val_raw;
  std::optional<std::string> s_val;
  auto* mo = app.add_subcommand("moments", "Moment polynomials and diagonal cumulants");
  mo->add_option("--n", n)->check(CLI::PositiveNumber);
  mo->add_option("--word", word_m);
  mo->add_option("--s", s_val, "Evaluate the exp(-sW) coefficient at s");

  std::string suite = "all";
  int max_n = 0;
  std::uint64_t seed = kDefaultSeed;
  bool timing = false;
  auto* ve = app.add_subcommand("verify", "Run identity suites");
  std::vector<std::string> suites = verify_suite_names();
  suites.push_back("all");
  ve->add_option("--suite", suite)->check(CLI::IsMember(suites));
  ve->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);
  ve->add_option("--seed", seed);
  ve->add_flag("--timing", timing);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("fubm");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (zp->parsed()) return cmd_zpoly(o, word, method, eval_at, grade, out, err);
    if (xi->parsed()) return cmd_xi(o, n, xi_method, out);
    if (sp->parsed()) return cmd_special(o, k, l, out);
    if (fc->parsed()) return cmd_fcheck(o, order, out);
    if (pde->parsed()) return cmd_pde(o, pde_n, t_list, z_list, out);
    if (hr->parsed()) return cmd_haar(o, word, out);
    if (al->parsed()) return cmd_alpha(o, k, qfile, out);
    if (be->parsed()) return cmd_beta(o, k, qfile, beta_method, out, err);
    if (nw->parsed()) return cmd_ncw(o, word, count_only, out);
    if (nc->parsed()) return cmd_nc(o, n, count_only, kr, jn, moeb, out);
    if (mo->parsed()) return cmd_moments(o, n, word_m, s_val, out);
    if (ve->parsed()) return cmd_verify(o, suite, max_n, seed, timing, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const InsufficientDataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fubm
