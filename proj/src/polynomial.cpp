#include "polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace gklo {

Monomial Monomial::var(Variable v, int exp) {
  Monomial m;
  if (exp < 0) throw Error("monomial exponent must be nonnegative");
  if (exp > 0) m.e_.emplace_back(v, exp);
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : e_) d += e;
  return d;
}

int Monomial::degree_in(Variable v) const {
  for (const auto& [w, e] : e_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial m;
  m.e_.reserve(e_.size() + o.e_.size());
  auto a = e_.begin(), ae = e_.end();
  auto b = o.e_.begin(), be = o.e_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      m.e_.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      m.e_.push_back(*b++);
    } else {
      m.e_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return m;
}

std::pair<int, Monomial> Monomial::split(Variable v) const {
  Monomial rest;
  int k = 0;
  rest.e_.reserve(e_.size());
  for (const auto& ent : e_) {
    if (ent.first == v)
      k = ent.second;
    else
      rest.e_.push_back(ent);
  }
  return {k, rest};
}

std::string Monomial::str() const {
  if (e_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : e_) {
    if (!first) os << "*";
    first = false;
    os << v.str();
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(Monomial(), std::move(c));
  return p;
}

Polynomial Polynomial::variable(Variable v) {
  Polynomial p;
  p.terms_.emplace_back(Monomial::var(v), Rational(1));
  return p;
}

Polynomial Polynomial::from_linear(const LinearForm& f) {
  Polynomial p;
  for (const auto& [v, c] : f.coeffs()) p.terms_.emplace_back(Monomial::var(v), c);
  if (f.constant_term() != 0) p.terms_.emplace_back(Monomial(), f.constant_term());
  p.normalize();
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  size_t out = 0;
  for (size_t i = 0; i < terms_.size();) {
    size_t j = i + 1;
    Rational acc = std::move(terms_[i].second);
    while (j < terms_.size() && terms_[j].first == terms_[i].first) {
      acc += terms_[j].second;
      ++j;
    }
    if (acc != 0) {
      terms_[out].first = std::move(terms_[i].first);
      terms_[out].second = std::move(acc);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].first.is_one()) return terms_[0].second;
  throw Error("constant_value: polynomial is not constant");
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == ae || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = std::move(a->second);
      c += b->second;
      if (c != 0) merged.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (b.terms_.size() == 1) {
    Polynomial p(a);
    p.mul_monomial(b.terms_[0].first);
    p.mul_scalar(b.terms_[0].second);
    return p;
  }
  std::vector<Polynomial::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma.times(mb), ca * cb);
  return Polynomial::from_terms(std::move(prods));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::mul_scalar(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial& Polynomial::mul_monomial(const Monomial& m) {
  for (auto& [mm, c] : terms_) mm = mm.times(m);
  // multiplying by a fixed monomial preserves the term order
  return *this;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw Error("pow: negative exponent");
  Polynomial acc = Polynomial::constant(Rational(1));
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

int Polynomial::degree_in(Variable v) const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

std::map<int, Polynomial> Polynomial::coefficients_in(Variable v) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& [m, c] : terms_) {
    auto [k, rest] = m.split(v);
    buckets[k].emplace_back(std::move(rest), c);
  }
  std::map<int, Polynomial> out;
  for (auto& [k, terms] : buckets) out.emplace(k, Polynomial::from_terms(std::move(terms)));
  return out;
}

Polynomial Polynomial::substituted(const std::map<Variable, LinearForm>& map) const {
  // Split each monomial into substituted and untouched parts; expand powers of
  // the substituted forms with a per-variable power cache.
  std::map<Variable, std::vector<Polynomial>> powers;  // v -> [L^0, L^1, ...]
  auto power_of = [&](Variable v, int e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(Rational(1)));
    while ((int)cache.size() <= e) {
      cache.push_back(cache.back() * Polynomial::from_linear(map.at(v)));
    }
    return cache[e];
  };

  Polynomial result;
  std::vector<Term> plain;  // terms untouched by the substitution
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    Polynomial factor = Polynomial::constant(c);
    bool touched = false;
    for (const auto& [v, e] : m.entries()) {
      if (map.count(v)) {
        touched = true;
        factor *= power_of(v, e);
      } else {
        rest = rest.times(Monomial::var(v, e));
      }
    }
    if (!touched) {
      plain.emplace_back(m, c);
    } else {
      factor.mul_monomial(rest);
      result += factor;
    }
  }
  result += Polynomial::from_terms(std::move(plain));
  return result;
}

Rational Polynomial::evaluate(const std::map<Variable, Rational>& point) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.entries()) {
      auto it = point.find(v);
      if (it == point.end()) throw Error("evaluate: unassigned variable " + v.str());
      t *= pow_rational(it->second, e);
    }
    acc += t;
  }
  return acc;
}

void Polynomial::collect_support(std::set<Variable>& out) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.entries()) out.insert(v);
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m.is_one()) {
      os << rational_str(a);
    } else {
      if (a != 1) os << rational_str(a) << "*";
      os << m.str();
    }
  }
  return os.str();
}

Polynomial expand_product(const std::vector<LinearForm>& forms) {
  Polynomial p = Polynomial::constant(Rational(1));
  for (const auto& f : forms) p *= Polynomial::from_linear(f);
  return p;
}

}  // namespace gklo
