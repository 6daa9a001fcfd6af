#include "linear_form.hpp"

#include <algorithm>
#include <sstream>

namespace gklo {

std::string rational_str(const Rational& r) { return r.get_str(); }

LinearForm LinearForm::constant(Rational c) {
  LinearForm f;
  f.constant_ = std::move(c);
  return f;
}

LinearForm LinearForm::variable(Variable v) {
  LinearForm f;
  f.coeffs_.emplace_back(v, Rational(1));
  return f;
}

Rational LinearForm::coeff_of(Variable v) const {
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), v,
                             [](const Coeff& c, Variable x) { return c.first < x; });
  if (it != coeffs_.end() && it->first == v) return it->second;
  return Rational(0);
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant_ += o.constant_;
  std::vector<Coeff> merged;
  merged.reserve(coeffs_.size() + o.coeffs_.size());
  auto a = coeffs_.begin(), ae = coeffs_.end();
  auto b = o.coeffs_.begin(), be = o.coeffs_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  coeffs_ = std::move(merged);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += o.scaled(Rational(-1)); }

LinearForm LinearForm::scaled(const Rational& s) const {
  LinearForm f;
  if (s == 0) return f;
  f.constant_ = constant_ * s;
  f.coeffs_.reserve(coeffs_.size());
  for (const auto& [v, c] : coeffs_) f.coeffs_.emplace_back(v, c * s);
  return f;
}

LinearForm& LinearForm::add_term(Variable v, const Rational& c) {
  LinearForm t;
  if (c != 0) t.coeffs_.emplace_back(v, c);
  return *this += t;
}

LinearForm& LinearForm::add_constant(const Rational& c) {
  constant_ += c;
  return *this;
}

const Rational& LinearForm::leading_coeff() const {
  if (coeffs_.empty()) return constant_;
  return coeffs_.front().second;
}

std::pair<LinearForm, Rational> LinearForm::monic() const {
  if (is_constant()) throw Error("monic(): constant linear form");
  Rational lead = coeffs_.front().second;
  return {scaled(Rational(1) / lead), lead};
}

LinearForm LinearForm::substituted(const std::map<Variable, LinearForm>& map) const {
  LinearForm out = LinearForm::constant(constant_);
  for (const auto& [v, c] : coeffs_) {
    auto it = map.find(v);
    if (it == map.end()) {
      out.add_term(v, c);
    } else {
      out += it->second.scaled(c);
    }
  }
  return out;
}

Rational LinearForm::evaluate(const std::map<Variable, Rational>& point) const {
  Rational acc = constant_;
  for (const auto& [v, c] : coeffs_) {
    auto it = point.find(v);
    if (it == point.end()) throw Error("evaluate: unassigned variable " + v.str());
    acc += c * it->second;
  }
  return acc;
}

std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  for (size_t k = 0; k < a.coeffs_.size(); ++k) {
    if (auto c = a.coeffs_[k].first <=> b.coeffs_[k].first; c != 0) return c;
    if (auto c = cmp(a.coeffs_[k].second, b.coeffs_[k].second); c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int c = cmp(a.constant_, b.constant_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string LinearForm::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : coeffs_) {
    if (first) {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << rational_str(c) << "*";
      first = false;
    } else {
      if (c > 0)
        os << " + ";
      else
        os << " - ";
      Rational a = abs(c);
      if (a != 1) os << rational_str(a) << "*";
    }
    os << v.str();
  }
  if (constant_ != 0) {
    if (first) {
      os << rational_str(constant_);
    } else {
      os << (constant_ > 0 ? " + " : " - ") << rational_str(abs(constant_));
    }
  }
  return os.str();
}

}  // namespace gklo
