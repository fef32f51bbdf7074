#include "fubm/qpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "fubm/errors.hpp"

namespace fubm {

namespace {

unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits10_(Real::default_precision()) {
  Real::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw StructureError("empty rational literal");
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw StructureError("malformed rational literal: '" + std::string(text) + "'");
  if (q.get_den() == 0) throw StructureError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Real to_real(const Rational& q) {
  Real num(q.get_num().get_str());
  Real den(q.get_den().get_str());
  return num / den;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

bool Poly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
  if (is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
  return Poly(std::move(out));
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real Poly::evaluate(const Real& x) const {
  Real acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------- QuasiPoly

QuasiPoly::QuasiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, Poly::constant(c));
}

QuasiPoly QuasiPoly::term(int exp2, Poly p) {
  QuasiPoly q;
  if (!p.is_zero()) q.terms_.emplace(exp2, std::move(p));
  return q;
}

QuasiPoly QuasiPoly::y_power(int m, Poly p) { return term(-m, std::move(p)); }

QuasiPoly QuasiPoly::t() { return term(0, Poly{0, 1}); }

Poly QuasiPoly::at_exp2(int exp2) const {
  auto it = terms_.find(exp2);
  return it == terms_.end() ? Poly{} : it->second;
}

int QuasiPoly::min_exp2() const {
  if (terms_.empty()) throw InternalError("min_exp2 of the zero quasi-polynomial");
  return terms_.begin()->first;
}

int QuasiPoly::max_exp2() const {
  if (terms_.empty()) throw InternalError("max_exp2 of the zero quasi-polynomial");
  return terms_.rbegin()->first;
}

bool QuasiPoly::exp2_parity_is(int parity) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [parity](const auto& kv) { return ((kv.first - parity) % 2 + 2) % 2 == 0; });
}

void QuasiPoly::add_term(int exp2, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp2, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QuasiPoly& QuasiPoly::operator+=(const QuasiPoly& other) {
  for (const auto& [e, p] : other.terms_) add_term(e, p);
  return *this;
}

QuasiPoly& QuasiPoly::operator-=(const QuasiPoly& other) {
  for (const auto& [e, p] : other.terms_) add_term(e, -p);
  return *this;
}

QuasiPoly& QuasiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, p] : terms_) p *= c;
  return *this;
}

QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b) {
  QuasiPoly out;
  for (const auto& [ea, pa] : a.terms_)
    for (const auto& [eb, pb] : b.terms_) out.add_term(ea + eb, pa * pb);
  return out;
}

QuasiPoly& QuasiPoly::operator*=(const QuasiPoly& other) {
  *this = *this * other;
  return *this;
}

QuasiPoly QuasiPoly::operator-() const {
  QuasiPoly r = *this;
  for (auto& [e, p] : r.terms_) p = -p;
  return r;
}

QuasiPoly QuasiPoly::shifted_exp(int exp2) const {
  QuasiPoly r;
  for (const auto& [e, p] : terms_) r.terms_.emplace(e + exp2, p);
  return r;
}

QuasiPoly QuasiPoly::pow(unsigned e) const {
  QuasiPoly result(1);
  QuasiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

QuasiPoly QuasiPoly::ddt() const {
  QuasiPoly r;
  for (const auto& [e, p] : terms_) r.add_term(e, p.derivative() + p * ratio(e, 2));
  return r;
}

QuasiPoly QuasiPoly::integrate_from_zero() const {
  QuasiPoly r;
  Rational constant = 0;
  for (const auto& [e, p] : terms_) {
    if (e == 0) {
      r.add_term(0, p.antiderivative());
      continue;
    }
    // Repeated integration by parts: int p e^{ct} = e^{ct} sum_k (-1)^k p^(k) / c^{k+1}.
    const Rational c = ratio(e, 2);
    Poly anti;
    Poly deriv = p;
    Rational factor = 1 / c;
    while (!deriv.is_zero()) {
      anti += deriv * factor;
      deriv = deriv.derivative();
      factor = -factor / c;
    }
    constant -= anti.coeff(0);
    r.add_term(e, anti);
  }
  r += QuasiPoly(constant);
  return r;
}

Rational QuasiPoly::at_zero() const {
  Rational acc = 0;
  for (const auto& [e, p] : terms_) acc += p.coeff(0);
  return acc;
}

Real QuasiPoly::evaluate(const Real& t) const {
  Real acc = 0;
  for (const auto& [e, p] : terms_) {
    Real c = Real(e) / 2;
    acc += p.evaluate(t) * boost::multiprecision::exp(c * t);
  }
  return acc;
}

bool QuasiPoly::is_unit() const { return terms_.size() == 1 && terms_.begin()->second.degree() == 0; }

QuasiPoly QuasiPoly::unit_inverse() const {
  if (!is_unit()) throw InternalError("quasi-polynomial is not invertible");
  const auto& [e, p] = *terms_.begin();
  return term(-e, Poly::constant(1 / p.coeff(0)));
}

Real eval(const QuasiPoly& f, const Real& t, unsigned bits) {
  PrecisionScope scope(bits);
  Real tt(t, bits_to_digits10(bits));
  return f.evaluate(tt);
}

Real eval(const QuasiPoly& f, std::string_view t, unsigned bits) {
  PrecisionScope scope(bits);
  Real tt{std::string(t)};
  return f.evaluate(tt);
}

// ---------------------------------------------------------------- emitters

namespace {

std::string monomial_text(const Rational& c, int power, std::string_view var, bool latex) {
  // c != 0; returns e.g. "3/2*x^2", "-x", "5".
  std::string out;
  Rational mag = abs(c);
  const bool neg = c < 0;
  if (power == 0) {
    if (latex && mag.get_den() != 1)
      out = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    else
      out = mag.get_str();
  } else {
    if (mag != 1) {
      if (latex && mag.get_den() != 1)
        out = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "} ";
      else
        out = mag.get_str() + (latex ? " " : "*");
    }
    out += var;
    if (power > 1) out += latex ? "^{" + std::to_string(power) + "}" : "^" + std::to_string(power);
  }
  return neg ? "-" + out : out;
}

std::string join_signed(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].front() == '-')
      out += " - " + parts[i].substr(1);
    else
      out += " + " + parts[i];
  }
  return out;
}

std::string poly_text(const Poly& p, std::string_view var, bool latex) {
  std::vector<std::string> parts;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational c = p.coeff(i);
    if (c != 0) parts.push_back(monomial_text(c, i, var, latex));
  }
  return join_signed(parts);
}

// Renders poly * factor as one signed summand. An empty factor means 1.
std::string term_text(const Poly& p, const std::string& factor, std::string_view var, bool latex) {
  if (factor.empty()) return poly_text(p, var, latex);
  const std::string sep = latex ? " " : "*";
  std::size_t nonzero = 0;
  int single = 0;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) {
      ++nonzero;
      single = i;
    }
  if (nonzero == 1) {
    const Rational c = p.coeff(single);
    if (single == 0 && abs(c) == 1) return (c < 0 ? "-" : "") + factor;
    return monomial_text(c, single, var, latex) + sep + factor;
  }
  const bool neg = p.coeff(p.degree()) < 0;
  const std::string open = latex ? "\\left(" : "(";
  const std::string close = latex ? "\\right)" : ")";
  return (neg ? "-" : "") + open + poly_text(neg ? -p : p, var, latex) + close + sep + factor;
}

std::string y_factor(int exp2, bool latex) {
  const int m = -exp2;
  if (m == 0) return "";
  if (m == 1) return "y";
  return latex ? "y^{" + std::to_string(m) + "}" : "y^" + std::to_string(m);
}

std::string exp_factor(int exp2, bool latex) {
  if (exp2 == 0) return "";
  const Rational c = ratio(exp2, 2);
  std::string body;
  const Rational mag = abs(c);
  const std::string sign = c < 0 ? "-" : "";
  if (mag == 1)
    body = sign + "t";
  else if (mag.get_den() == 1)
    body = sign + mag.get_str() + (latex ? "t" : "*t");
  else if (mag.get_num() == 1)
    body = sign + "t/" + mag.get_den().get_str();
  else
    body = sign + mag.get_num().get_str() + (latex ? "t/" : "*t/") + mag.get_den().get_str();
  return latex ? "e^{" + body + "}" : "exp(" + body + ")";
}

template <typename FactorFn>
std::string render(const QuasiPoly& f, std::string_view var, bool latex, FactorFn factor) {
  std::vector<std::string> parts;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    parts.push_back(term_text(it->second, factor(it->first, latex), var, latex));
  return join_signed(parts);
}

}  // namespace

std::string poly_to_string(const Poly& p, std::string_view var) { return poly_text(p, var, false); }

std::string to_text_xy(const QuasiPoly& f) { return render(f, "x", false, y_factor); }
std::string to_text_t(const QuasiPoly& f) { return render(f, "t", false, exp_factor); }
std::string to_latex_xy(const QuasiPoly& f) { return render(f, "x", true, y_factor); }
std::string to_latex_t(const QuasiPoly& f) { return render(f, "t", true, exp_factor); }

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rational_to_string(c));
  return arr;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw StructureError("polynomial coefficients must be a JSON array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (c.is_string())
      coeffs.push_back(parse_rational(c.get<std::string>()));
    else if (c.is_number_integer())
      coeffs.emplace_back(c.get<long>());
    else
      throw StructureError("coefficient must be a \"p/q\" string");
  }
  return Poly(std::move(coeffs));
}

Json to_json(const QuasiPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, p] : f.terms()) {
    Json t;
    t["exp2"] = e;
    t["coeffs"] = poly_to_json(p);
    terms.push_back(std::move(t));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

QuasiPoly quasipoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw StructureError("quasi-polynomial JSON needs a \"terms\" array");
  QuasiPoly out;
  for (const auto& t : j["terms"]) {
    if (!t.contains("exp2") || !t["exp2"].is_number_integer() || !t.contains("coeffs"))
      throw StructureError("each term needs integer \"exp2\" and \"coeffs\"");
    out += QuasiPoly::term(t["exp2"].get<int>(), poly_from_json(t["coeffs"]));
  }
  return out;
}

}  // namespace fubm
