#include "rational_function.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace gklo {

RationalFunction RationalFunction::constant(Rational c) {
  RationalFunction f;
  f.num_ = Polynomial::constant(std::move(c));
  return f;
}

RationalFunction RationalFunction::from_poly(Polynomial p) {
  RationalFunction f;
  f.num_ = std::move(p);
  f.canonicalize_zero();
  return f;
}

RationalFunction RationalFunction::from_linear(const LinearForm& lf) {
  return from_poly(Polynomial::from_linear(lf));
}

RationalFunction RationalFunction::fraction(Polynomial num, const std::vector<LinearForm>& den) {
  RationalFunction f = from_poly(std::move(num));
  for (const auto& d : den) f.div_linear(d);
  return f;
}

RationalFunction RationalFunction::reciprocal(const LinearForm& lf) {
  return fraction(Polynomial::constant(Rational(1)), {lf});
}

RationalFunction RationalFunction::ratio(const std::vector<LinearForm>& top,
                                         const std::vector<LinearForm>& bottom, Rational scale) {
  RationalFunction f = from_poly(expand_product(top));
  f.mul_scalar(scale);
  for (const auto& d : bottom) f.div_linear(d);
  return f;
}

Polynomial RationalFunction::as_polynomial() const {
  if (!den_.empty()) throw Error("as_polynomial: nontrivial denominator");
  Polynomial p = num_;
  p.mul_scalar(scalar_);
  return p;
}

void RationalFunction::canonicalize_zero() {
  if (num_.is_zero()) {
    scalar_ = 1;
    den_.clear();
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f(*this);
  if (!f.is_zero()) f.scalar_ = -f.scalar_;
  return f;
}

RationalFunction& RationalFunction::mul_scalar(const Rational& s) {
  if (s == 0) {
    *this = RationalFunction();
    return *this;
  }
  if (!is_zero()) scalar_ *= s;
  return *this;
}

RationalFunction& RationalFunction::mul_poly(const Polynomial& p) {
  num_ *= p;
  canonicalize_zero();
  return *this;
}

RationalFunction& RationalFunction::div_linear(const LinearForm& lf, int mult) {
  if (lf.is_zero()) throw SubstitutionDegenerate("division by the zero linear form");
  if (mult == 0 || is_zero()) return *this;
  if (mult < 0) throw Error("div_linear: negative multiplicity");
  if (lf.is_constant()) {
    scalar_ /= pow_rational(lf.constant_term(), mult);
    return *this;
  }
  auto [monic, lead] = lf.monic();
  scalar_ /= pow_rational(lead, mult);
  auto it = std::lower_bound(den_.begin(), den_.end(), monic,
                             [](const Factor& f, const LinearForm& x) { return f.form < x; });
  if (it != den_.end() && it->form == monic)
    it->mult += mult;
  else
    den_.insert(it, Factor{monic, mult});
  return *this;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  RationalFunction f;
  f.scalar_ = a.scalar_ * b.scalar_;
  f.num_ = a.num_ * b.num_;
  f.den_.reserve(a.den_.size() + b.den_.size());
  auto i = a.den_.begin(), ie = a.den_.end();
  auto j = b.den_.begin(), je = b.den_.end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->form < j->form)) {
      f.den_.push_back(*i++);
    } else if (i == ie || j->form < i->form) {
      f.den_.push_back(*j++);
    } else {
      f.den_.push_back(Factor{i->form, i->mult + j->mult});
      ++i;
      ++j;
    }
  }
  return f;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = *this * o;
  return *this;
}

RationalFunction RationalFunction::sum(std::span<const RationalFunction> fs) {
  // Common denominator: union with max multiplicity over all summands.
  std::map<LinearForm, int> common;
  for (const auto& f : fs)
    for (const auto& [form, mult] : f.den_) {
      auto [it, fresh] = common.emplace(form, mult);
      if (!fresh && it->second < mult) it->second = mult;
    }

  Polynomial num;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    Polynomial part = f.num_;
    part.mul_scalar(f.scalar_);
    for (const auto& [form, mult] : common) {
      int have = 0;
      for (const auto& fac : f.den_)
        if (fac.form == form) {
          have = fac.mult;
          break;
        }
      // multiply one linear factor at a time; keeps intermediate sizes small
      for (int k = have; k < mult; ++k) part *= Polynomial::from_linear(form);
    }
    num += part;
  }

  RationalFunction out = from_poly(std::move(num));
  if (!out.is_zero())
    for (const auto& [form, mult] : common) out.den_.push_back(Factor{form, mult});
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const RationalFunction terms[2] = {std::move(*this), o};
  *this = sum(terms);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

bool RationalFunction::equals(const RationalFunction& o) const {
  if (is_zero()) return o.is_zero();
  if (o.is_zero()) return false;
  if (scalar_ == o.scalar_ && den_ == o.den_ && num_ == o.num_) return true;
  return (*this - o).is_zero();
}

RationalFunction RationalFunction::substituted(const std::map<Variable, LinearForm>& map) const {
  if (is_zero()) return RationalFunction();
  RationalFunction f;
  f.scalar_ = scalar_;
  f.num_ = num_.substituted(map);
  for (const auto& [form, mult] : den_) {
    LinearForm image = form.substituted(map);
    if (image.is_zero())
      throw SubstitutionDegenerate("denominator factor (" + form.str() +
                                   ") maps to the zero form");
    f.div_linear(image, mult);
  }
  f.canonicalize_zero();
  return f;
}

std::optional<Rational> RationalFunction::evaluate(
    const std::map<Variable, Rational>& point) const {
  Rational d(1);
  for (const auto& [form, mult] : den_) {
    Rational val = form.evaluate(point);
    if (val == 0) return std::nullopt;
    d *= pow_rational(val, mult);
  }
  return scalar_ * num_.evaluate(point) / d;
}

namespace {

uint64_t splitmix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Rational seeded_point_value(uint64_t seed, int attempt, Variable v) {
  // The value depends only on (seed, attempt, variable), so any two functions
  // probed at the same seed see the same point on their shared variables.
  uint64_t h = splitmix64(seed ^ splitmix64((uint64_t(attempt) << 32) ^ v.hash_code()));
  long num = static_cast<long>(h % 2000001ull) - 1000000;
  long den = static_cast<long>((h >> 32) % 64ull) + 1;
  return rational(num, den);
}

std::map<Variable, Rational> seeded_point(uint64_t seed, int attempt,
                                          const std::set<Variable>& support) {
  std::map<Variable, Rational> point;
  for (Variable v : support) point.emplace(v, seeded_point_value(seed, attempt, v));
  return point;
}

std::optional<Rational> RationalFunction::random_eval(uint64_t seed, int retries) const {
  std::set<Variable> support;
  collect_support(support);
  for (int attempt = 0; attempt < retries; ++attempt) {
    if (auto val = evaluate(seeded_point(seed, attempt, support))) return val;
  }
  return std::nullopt;
}

bool random_refutes(const RationalFunction& a, const RationalFunction& b, uint64_t seed,
                    int retries) {
  std::set<Variable> support;
  a.collect_support(support);
  b.collect_support(support);
  for (int attempt = 0; attempt < retries; ++attempt) {
    auto point = seeded_point(seed, attempt, support);
    auto va = a.evaluate(point);
    auto vb = b.evaluate(point);
    if (va && vb) return *va != *vb;
  }
  return false;  // never got a clean sample; no verdict
}

void RationalFunction::collect_support(std::set<Variable>& out) const {
  num_.collect_support(out);
  for (const auto& [form, mult] : den_)
    for (const auto& [v, c] : form.coeffs()) out.insert(v);
}

std::string RationalFunction::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (scalar_ != 1) os << "(" << rational_str(scalar_) << ") * ";
  os << "(" << num_.str() << ")";
  if (!den_.empty()) {
    os << " / (";
    bool first = true;
    for (const auto& [form, mult] : den_) {
      if (!first) os << "*";
      first = false;
      os << "(" << form.str() << ")";
      if (mult != 1) os << "^" << mult;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace gklo
