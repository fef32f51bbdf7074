#include "fubm/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "fubm/alternating.hpp"
#include "fubm/cumulants.hpp"
#include "fubm/laplace.hpp"
#include "fubm/moments.hpp"
#include "fubm/ncpart.hpp"
#include "fubm/rdiag.hpp"

namespace fubm {

namespace {

using Check = std::function<void(VerifyReport&, int, std::uint64_t)>;

void expect(VerifyReport& r, bool ok, const std::string& input, const std::string& expected, const std::string& got) {
  ++r.cases;
  if (!ok) r.failures.push_back({input, expected, got});
}

void expect_eq(VerifyReport& r, const std::string& input, const QuasiPoly& expected, const QuasiPoly& got) {
  const bool ok = expected == got;
  expect(r, ok, input, ok ? "" : to_text_xy(expected), ok ? "" : to_text_xy(got));
}

void expect_eq(VerifyReport& r, const std::string& input, const Rational& expected, const Rational& got) {
  expect(r, expected == got, input, expected.get_str(), got.get_str());
}

std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    Word w;
    for (int i = 0; i < n; ++i) w.push_back((mask >> i) & 1U ? Letter::Star : Letter::One);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<NCPartition> collect(int n) {
  std::vector<NCPartition> v;
  for_each_nc(n, [&](const NCPartition& p) { v.push_back(p); });
  return v;
}

Rational signed_catalan(unsigned m) {
  Rational c(catalan(m));
  return m % 2 == 0 ? c : Rational(-c);
}

// ------------------------------------------------------------------ suites

void suite_ncpart(VerifyReport& r, int max_n, std::uint64_t) {
  for (int n = 1; n <= max_n; ++n) {
    const auto all = collect(n);
    const std::string tag = "n=" + std::to_string(n);
    expect(r, Integer(static_cast<unsigned long>(all.size())) == catalan(static_cast<unsigned>(n)), tag + " count",
           catalan(static_cast<unsigned>(n)).get_str(), std::to_string(all.size()));
    // Moebius values by recursion over the order relation.
    std::vector<Rational> mu0(all.size()), mu1(all.size());
    std::vector<std::size_t> order(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return all[a].size() > all[b].size(); });
    for (std::size_t i : order) {
      Rational s = 0;
      for (std::size_t j : order) {
        if (j == i) break;
        if (leq(all[j], all[i])) s += mu0[j];
      }
      mu0[i] = all[i].size() == static_cast<std::size_t>(n) ? Rational(1) : Rational(-s);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Rational s = 0;
      for (auto jt = order.rbegin(); jt != it; ++jt)
        if (leq(all[*it], all[*jt])) s += mu1[*jt];
      mu1[*it] = all[*it].size() == 1 ? Rational(1) : Rational(-s);
    }
    Rational total = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& p = all[i];
      const auto kr = kreweras(p);
      expect(r, kr.size() == static_cast<std::size_t>(n) + 1 - p.size(), tag + " |Kr " + to_string(p) + "|",
             std::to_string(n + 1 - static_cast<int>(p.size())), std::to_string(kr.size()));
      expect_eq(r, "Moeb(0," + to_string(p) + ")", mu0[i], moebius_from_zero(p));
      expect_eq(r, "Moeb(" + to_string(p) + ",1)", mu1[i], moebius_to_one(p));
      total += moebius_from_zero(p);
    }
    if (n >= 2) expect_eq(r, tag + " sum Moeb(0,.)", Rational(0), total);
    if (n > 6) continue;
    for (const auto& p : all) {
      for (const auto& q : all) {
        const bool anti = leq(p, q) == leq(kreweras(q), kreweras(p));
        expect(r, anti, "Kr anti-iso " + to_string(p) + " " + to_string(q), "true", anti ? "true" : "false");
        const auto j = join(p, q);
        bool ok = true;
        for (const auto& s : all)
          if ((leq(p, s) && leq(q, s)) != leq(j, s)) ok = false;
        expect(r, ok, "join " + to_string(p) + " " + to_string(q), "least upper bound", to_string(j));
      }
    }
  }
}

void suite_two_path(VerifyReport& r, int max_n, std::uint64_t) {
  for (int n = 1; n <= max_n; ++n)
    for (const auto& w : all_words(n)) expect_eq(r, word_to_string(w), z_mobius(w), z_recursive(w));
}

void suite_thm37(VerifyReport& r, int max_n, std::uint64_t) {
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& w : all_words(n)) {
      const QuasiPoly z = z_mobius(w);
      const int sw = switch_number(w);
      bool ok = z.exp2_parity_is(n % 2);
      for (const auto& [e, p] : z.terms()) {
        const int m = -e;
        if (m < 0 || m > n || n - m > sw) ok = false;
      }
      expect(r, ok, word_to_string(w), "grades n-2j with 2j <= " + std::to_string(sw), to_text_xy(z));
    }
  }
}

void suite_prop62(VerifyReport& r, int max_n, std::uint64_t) {
  for (int n = 2; n <= max_n; n += 2) {
    for (const auto& w : all_words(n)) {
      const Poly g = z_mobius(w).grade(0);
      expect(r, g.degree() <= 0, word_to_string(w) + " grade 0 constant", "degree <= 0", poly_to_string(g));
      expect_eq(r, word_to_string(w) + " grade 0", haar_cumulant(w), g.coeff(0));
    }
  }
}

void suite_thm63(VerifyReport& r, int max_n, std::uint64_t) {
  for (int n = 1; n <= max_n; n += 2) {
    for (const auto& w : all_words(n)) {
      const Poly g = z_mobius(w).grade(1);
      expect(r, g.degree() <= 0, word_to_string(w) + " grade 1 constant", "degree <= 0", poly_to_string(g));
      const Rational closed = is_alternating(w) ? signed_catalan(static_cast<unsigned>((n + 1) / 2 - 1)) : Rational(0);
      expect_eq(r, word_to_string(w) + " grade 1", closed, g.coeff(0));
    }
  }
}

void suite_laplace(VerifyReport& r, int max_n, std::uint64_t) {
  for (int k = 1; k < max_n; ++k) {
    for (int l = 1; k + l <= max_n; ++l) {
      const std::string tag = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
      expect_eq(r, "Z" + tag, z_mobius(ones_then_stars(k, l)), z_from_laplace(k, l));
      expect(r, u_poly(k, l).has_integer_coeffs() && v_poly(k, l).has_integer_coeffs(), "U,V" + tag + " integral",
             "integer coefficients", poly_to_string(u_poly(k, l)) + " ; " + poly_to_string(v_poly(k, l)));
      expect(r, u_poly(k, l) == u_poly(l, k) && v_poly(k, l) == v_poly(l, k), "U,V" + tag + " symmetric", "symmetric",
             "asymmetric");
    }
  }
  for (int k = 1; k <= max_n - 1; ++k) {
    const bool ok = v_k1_closed(k) == v_poly(k, 1);
    expect(r, ok, "V_{" + std::to_string(k) + ",1}", poly_to_string(v_k1_closed(k)), poly_to_string(v_poly(k, 1)));
  }
}

void suite_remark45(VerifyReport& r, int max_n, std::uint64_t) {
  const QuasiPoly y = QuasiPoly::y_power(1, Poly::constant(1));
  const QuasiPoly y2 = y * y;
  const QuasiPoly ny = -y;
  const std::vector<QuasiPoly> table = {
      QuasiPoly(1) - y2,
      ny * (QuasiPoly(1) - y2 * QuasiPoly::term(0, Poly{1, 1})),
      ny.pow(2) * (QuasiPoly::term(0, Poly{1, 1}) - y2 * QuasiPoly::term(0, Poly{1, 2, ratio(3, 2)})),
      ny.pow(3) * (QuasiPoly::term(0, Poly{1, 2, ratio(3, 2)}) - y2 * QuasiPoly::term(0, Poly{1, 3, 4, ratio(8, 3)})),
  };
  for (int k = 1; k <= std::min<int>(max_n, 4); ++k) {
    const std::string tag = "kappa_" + std::to_string(k + 1);
    expect_eq(r, tag + " table", table[k - 1], suffix_star_cumulant(k));
    expect_eq(r, tag + " mobius", z_mobius(ones_then_stars(k, 1)), suffix_star_cumulant(k));
  }
  for (int k = 5; k <= max_n; ++k)
    expect_eq(r, "kappa_" + std::to_string(k + 1) + " mobius", z_mobius(ones_then_stars(k, 1)), suffix_star_cumulant(k));
}

void suite_xi(VerifyReport& r, int max_n, std::uint64_t) {
  const auto rec = xi_by_recursion(max_n + 1);
  const auto inv = xi_by_inversion(max_n + 1);
  const auto mob = xi_by_mobius(std::min(max_n, kMaxMobiusWord / 2));
  for (int n = 1; n <= max_n + 1; ++n) {
    const std::string tag = "xi_" + std::to_string(n);
    expect_eq(r, tag + " inversion", rec.entries[n - 1], inv.entries[n - 1]);
    if (n <= static_cast<int>(mob.entries.size())) expect_eq(r, tag + " mobius", rec.entries[n - 1], mob.entries[n - 1]);
    expect(r, rec.entries[n - 1].at_zero() == 0, tag + "(0)", "0", rec.entries[n - 1].at_zero().get_str());
  }
}

void suite_pde(VerifyReport& r, int max_n, std::uint64_t) {
  const PdeReport p = pde_residual(max_n);
  for (int n = 0; n <= max_n; ++n)
    expect(r, p.coeffs[n].is_zero(), "z^" + std::to_string(n) + " coefficient", "0", to_text_t(p.coeffs[n]));
  expect(r, p.initial_condition, "H(0,z)", "1/2", "different");
  const bool small = p.max_residual < Real("1e-15");
  expect(r, small, "numeric residual", "< 1e-15", p.max_residual.str(6));
}

void suite_chi(VerifyReport& r, int max_n, std::uint64_t) {
  const TruncSeries1 chi = chi_expansion(max_n);
  const TruncSeries1 lam = lambda_series(max_n);
  const TruncSeries1 id = compose(chi, lam);
  for (int n = 0; n <= max_n; ++n) {
    const QuasiPoly want = n == 1 ? QuasiPoly(1) : QuasiPoly();
    expect_eq(r, "chi(1 + L(z)) [z^" + std::to_string(n) + "]", want, id.coeffs[n]);
  }
  expect_eq(r, "chi w^1", QuasiPoly::term(2, Poly::constant(ratio(-1, 2))), chi.coeffs[1]);
  expect_eq(r, "lambda_1", QuasiPoly::term(-2, Poly::constant(-2)), lam.coeffs[1]);
}

Distribution random_distribution(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
  std::vector<Rational> c;
  for (int i = 0; i < order; ++i) c.push_back(ratio(num(rng), den(rng)));
  return Distribution(std::move(c));
}

void suite_prop67(VerifyReport& r, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<OmegaNC> omegas;
  for (int k = 1; k <= max_n; ++k) omegas.push_back(4 * k - 2 <= 14 ? nc_omega(alternating_odd(k)) : nc_omega_structured(k));
  for (int trial = 0; trial < 20; ++trial) {
    const Distribution d = random_distribution(rng, 2 * max_n);
    const auto beta = beta_mobius(d, max_n);
    for (int k = 1; k <= max_n; ++k)
      expect_eq(r, "trial " + std::to_string(trial) + " k=" + std::to_string(k), beta[k - 1], beta_from_omega(d, omegas[k - 1]));
  }
  std::vector<Rational> c(static_cast<std::size_t>(2 * max_n), 0);
  c[0] = 1;
  const auto beta1 = beta_mobius(Distribution(c), max_n);
  for (int k = 1; k <= max_n; ++k) expect_eq(r, "q=1 beta_" + std::to_string(k), signed_catalan(k - 1), beta1[k - 1]);
}

void suite_lemma611(VerifyReport& r, int max_n, std::uint64_t) {
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& w : all_words(n)) {
      if (w.front() != Letter::One || w.back() != Letter::One) continue;
      const auto o = nc_omega(w);
      if (is_alternating(w) && n % 2 == 1) {
        expect(r, !o.partitions.empty(), word_to_string(w), "non-empty", "empty");
      } else {
        expect(r, o.partitions.empty(), word_to_string(w), "empty", std::to_string(o.partitions.size()) + " partitions");
      }
    }
  }
  for (int k = 1; k <= std::min(max_n, 3); ++k) {
    const auto brute = nc_omega(alternating_odd(k));
    const auto fast = nc_omega_structured(k);
    expect(r, brute.partitions == fast.partitions, "structured k=" + std::to_string(k),
           std::to_string(brute.partitions.size()) + " partitions", std::to_string(fast.partitions.size()) + " partitions");
  }
}

void suite_example69(VerifyReport& r, int, std::uint64_t) {
  const auto o = nc_omega(parse_word("1*1"));
  std::vector<NCPartition> want = {
      NCPartition::from_blocks(6, {{1, 4, 5}, {2, 3}, {6}}), NCPartition::from_blocks(6, {{1, 4, 5}, {2}, {3}, {6}}),
      NCPartition::from_blocks(6, {{1}, {2, 3, 6}, {4, 5}}), NCPartition::from_blocks(6, {{1}, {2, 3}, {4, 5}, {6}}),
      NCPartition::from_blocks(6, {{1}, {2, 6}, {3}, {4, 5}})};
  std::sort(want.begin(), want.end());
  expect(r, o.partitions.size() == 5, "|NC_w(6)|", "5", std::to_string(o.partitions.size()));
  std::string got;
  for (const auto& p : o.partitions) got += to_string(p) + " ";
  expect(r, o.partitions == want, "NC_w(6) partitions", "figure partitions", got);
}

struct SuiteSpec {
  int default_size;
  Check run;
};

const std::map<std::string, SuiteSpec>& registry() {
  static const std::map<std::string, SuiteSpec> reg = {
      {"ncpart-lattice", {6, suite_ncpart}}, {"z-two-path", {8, suite_two_path}},
      {"thm3.7", {8, suite_thm37}},          {"prop6.2", {8, suite_prop62}},
      {"thm6.3", {7, suite_thm63}},          {"laplace-cross", {9, suite_laplace}},
      {"remark4.5", {4, suite_remark45}},    {"xi-three-path", {5, suite_xi}},
      {"pde-coeff", {6, suite_pde}},         {"chi-roundtrip", {6, suite_chi}},
      {"prop6.7-cross", {3, suite_prop67}},  {"lemma6.11", {6, suite_lemma611}},
      {"example6.9", {3, suite_example69}},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"ncpart-lattice", "z-two-path",    "thm3.7",        "prop6.2",
                                                 "thm6.3",         "laplace-cross", "remark4.5",     "xi-three-path",
                                                 "pde-coeff",      "chi-roundtrip", "prop6.7-cross", "lemma6.11",
                                                 "example6.9"};
  return names;
}

int verify_default_size(const std::string& suite) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second.default_size;
}

VerifyReport run_verify_suite(const std::string& suite, int max_n, std::uint64_t seed) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  VerifyReport rep;
  rep.suite = suite;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    it->second.run(rep, max_n > 0 ? max_n : it->second.default_size, seed);
  } catch (const std::exception& e) {
    rep.failures.push_back({"suite aborted", "no exception", e.what()});
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<VerifyReport> verify_all(int max_n, std::uint64_t seed) {
  std::vector<VerifyReport> out;
  for (const auto& name : verify_suite_names()) out.push_back(run_verify_suite(name, max_n, seed));
  return out;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["cases"] = r.cases;
  j["passed"] = r.ok();
  Json f = Json::array();
  for (const auto& x : r.failures) {
    Json e;
    e["input"] = x.input;
    e["expected"] = x.expected;
    e["got"] = x.got;
    f.push_back(std::move(e));
  }
  j["failures"] = std::move(f);
  return j;
}

}  // namespace fubm
