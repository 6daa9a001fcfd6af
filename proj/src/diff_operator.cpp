#include "diff_operator.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gklo {

ShiftMonomial ShiftMonomial::unit(Variable xvar, int exp) {
  if (xvar.kind() != VarKind::X) throw Error("shift monomial slots are x variables");
  ShiftMonomial m;
  if (exp != 0) m.e_.emplace_back(xvar, exp);
  return m;
}

int ShiftMonomial::exponent_of(Variable xvar) const {
  for (const auto& [v, e] : e_)
    if (v == xvar) return e;
  return 0;
}

ShiftMonomial ShiftMonomial::times(const ShiftMonomial& o) const {
  ShiftMonomial m;
  m.e_.reserve(e_.size() + o.e_.size());
  auto a = e_.begin(), ae = e_.end();
  auto b = o.e_.begin(), be = o.e_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      m.e_.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      m.e_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) m.e_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return m;
}

ShiftMonomial ShiftMonomial::inverse() const {
  ShiftMonomial m(*this);
  for (auto& [v, e] : m.e_) e = -e;
  return m;
}

std::string ShiftMonomial::str() const {
  if (e_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : e_) {
    if (!first) os << "*";
    first = false;
    os << "D[" << v.vertex() << "," << v.slot() << "]";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

RationalFunction shift_action(const ShiftMonomial& lambda, const RationalFunction& f) {
  if (lambda.is_identity() || f.is_zero()) return f;
  std::map<Variable, LinearForm> subst;
  for (const auto& [xvar, e] : lambda.entries()) {
    LinearForm img = LinearForm::variable(xvar);
    img.add_term(Variable::hbar(), Rational(e));
    subst.emplace(xvar, std::move(img));
  }
  return f.substituted(subst);
}

DiffOperator DiffOperator::identity() {
  return scalar(RationalFunction::constant(Rational(1)));
}

DiffOperator DiffOperator::scalar(RationalFunction f) {
  return term(ShiftMonomial(), std::move(f));
}

DiffOperator DiffOperator::term(ShiftMonomial m, RationalFunction f) {
  DiffOperator op;
  if (!f.is_zero()) op.terms_.emplace_back(std::move(m), std::move(f));
  return op;
}

DiffOperator DiffOperator::from_terms(std::vector<Term> terms) {
  DiffOperator op;
  op.terms_ = std::move(terms);
  op.normalize();
  return op;
}

void DiffOperator::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (size_t i = 0; i < terms_.size();) {
    size_t j = i + 1;
    while (j < terms_.size() && terms_[j].first == terms_[i].first) ++j;
    if (j == i + 1) {
      if (!terms_[i].second.is_zero()) out.push_back(std::move(terms_[i]));
    } else {
      std::vector<RationalFunction> parts;
      parts.reserve(j - i);
      for (size_t k = i; k < j; ++k) parts.push_back(std::move(terms_[k].second));
      RationalFunction c = RationalFunction::sum(parts);
      if (!c.is_zero()) out.emplace_back(std::move(terms_[i].first), std::move(c));
    }
    i = j;
  }
  terms_ = std::move(out);
}

RationalFunction DiffOperator::coefficient(const ShiftMonomial& m) const {
  for (const auto& [sm, f] : terms_)
    if (sm == m) return f;
  return RationalFunction();
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator op(*this);
  for (auto& [m, f] : op.terms_) f = -f;
  return op;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  std::vector<Term> all;
  all.reserve(terms_.size() + o.terms_.size());
  for (auto& t : terms_) all.push_back(std::move(t));
  for (const auto& t : o.terms_) all.push_back(t);
  *this = from_terms(std::move(all));
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) { return *this += -o; }

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
  std::vector<DiffOperator::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [la, fa] : a.terms_)
    for (const auto& [lb, fb] : b.terms_)
      prods.emplace_back(la.times(lb), fa * shift_action(la, fb));
  return DiffOperator::from_terms(std::move(prods));
}

DiffOperator& DiffOperator::operator*=(const DiffOperator& o) {
  *this = *this * o;
  return *this;
}

DiffOperator DiffOperator::scaled_left(const RationalFunction& f) const {
  DiffOperator out;
  if (f.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, f * c);
  return out;
}

DiffOperator& DiffOperator::mul_scalar(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, f] : terms_) f.mul_scalar(s);
  return *this;
}

DiffOperator DiffOperator::substituted(const std::map<Variable, LinearForm>& map) const {
  DiffOperator out;
  out.terms_.reserve(terms_.size());
  for (const auto& [m, f] : terms_) {
    RationalFunction g = f.substituted(map);
    if (!g.is_zero()) out.terms_.emplace_back(m, std::move(g));
  }
  return out;
}

bool DiffOperator::equals(const DiffOperator& o) const { return (*this - o).is_zero(); }

bool DiffOperator::equals(const DiffOperator& o, uint64_t seed) const {
  if (seed != 0 && random_refutes_equal(*this, o, seed)) return false;
  return equals(o);
}

bool random_refutes_equal(const DiffOperator& a, const DiffOperator& b, uint64_t seed) {
  for (const auto& [m, f] : a.terms())
    if (random_refutes(f, b.coefficient(m), seed)) return true;
  for (const auto& [m, f] : b.terms())
    if (a.coefficient(m).is_zero() && random_refutes(f, RationalFunction(), seed)) return true;
  return false;
}

std::string DiffOperator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, f] : terms_) {
    if (!first) os << "  +  ";
    first = false;
    os << f.str();
    if (!m.is_identity()) os << " " << m.str();
  }
  return os.str();
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) { return a * b - b * a; }

DiffOperator anticommutator(const DiffOperator& a, const DiffOperator& b) {
  return a * b + b * a;
}

}  // namespace gklo
