#include "braidspan/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace braidspan {

const char* var_pair_name(VarPair vars) {
  return vars == VarPair::qs ? "(q,s)" : "(qh,th)";
}

const char* variable_name(Variable v) {
  switch (v) {
    case Variable::q: return "q";
    case Variable::s: return "s";
    case Variable::qh: return "qh";
    case Variable::th: return "th";
  }
  return "?";
}

VarPair pair_of(Variable v) {
  return (v == Variable::q || v == Variable::s) ? VarPair::qs : VarPair::qhth;
}

namespace {

bool exponent_less(const Term& x, const Term& y) {
  return x.a < y.a || (x.a == y.a && x.b < y.b);
}

void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), exponent_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    BigInt sum = std::move(terms[i].c);
    while (j < terms.size() && terms[j].a == terms[i].a && terms[j].b == terms[i].b) {
      sum += terms[j].c;
      ++j;
    }
    if (sum != 0) {
      terms[out].a = terms[i].a;
      terms[out].b = terms[i].b;
      terms[out].c = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

LaurentPoly LaurentPoly::constant(const BigInt& c, VarPair vars) {
  return monomial(c, 0, 0, vars);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int a, int b, VarPair vars) {
  LaurentPoly p(vars);
  if (c != 0) p.terms_.push_back(Term{a, b, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms, VarPair vars) {
  LaurentPoly p(vars);
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].a == 0 && terms_[0].b == 0 && terms_[0].c == 1;
}

bool LaurentPoly::is_unit_monomial() const {
  return terms_.size() == 1 && (terms_[0].c == 1 || terms_[0].c == -1);
}

BigInt LaurentPoly::coefficient(int a, int b) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{a, b, 0}, exponent_less);
  if (it != terms_.end() && it->a == a && it->b == b) return it->c;
  return 0;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c, int da, int db) const {
  LaurentPoly out(vars_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back(Term{t.a + da, t.b + db, t.c * c});
  return out;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit_monomial())
    throw std::domain_error("unit_inverse: " + to_string() + " is not a unit monomial");
  return monomial(terms_[0].c, -terms_[0].a, -terms_[0].b, vars_);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (Term& t : out.terms_) t.c = -t.c;
  return out;
}

void LaurentPoly::require_same(const LaurentPoly& r) const {
  if (vars_ != r.vars_)
    throw TagMismatch(std::string("mixing polynomials over ") + var_pair_name(vars_) +
                      " and " + var_pair_name(r.vars_));
}

void LaurentPoly::add_scaled(const LaurentPoly& r, int sign) {
  require_same(r);
  if (r.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + r.terms_.size());
  auto i = terms_.begin();
  auto j = r.terms_.begin();
  while (i != terms_.end() || j != r.terms_.end()) {
    if (j == r.terms_.end() || (i != terms_.end() && exponent_less(*i, *j))) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || exponent_less(*j, *i)) {
      merged.push_back(Term{j->a, j->b, sign > 0 ? BigInt(j->c) : BigInt(-j->c)});
      ++j;
    } else {
      BigInt c = sign > 0 ? BigInt(i->c + j->c) : BigInt(i->c - j->c);
      if (c != 0) merged.push_back(Term{i->a, i->b, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
  add_scaled(r, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
  add_scaled(r, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& r) {
  *this = *this * r;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r) {
  p.require_same(r);
  if (p.is_zero() || r.is_zero()) return LaurentPoly(p.vars_);
  if (r.terms_.size() == 1) return p.scaled(r.terms_[0].c, r.terms_[0].a, r.terms_[0].b);
  if (p.terms_.size() == 1) return r.scaled(p.terms_[0].c, p.terms_[0].a, p.terms_[0].b);
  std::vector<Term> prod;
  prod.reserve(p.terms_.size() * r.terms_.size());
  for (const Term& x : p.terms_)
    for (const Term& y : r.terms_) prod.push_back(Term{x.a + y.a, x.b + y.b, x.c * y.c});
  return LaurentPoly::from_terms(std::move(prod), p.vars_);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  const char* x = vars_ == VarPair::qs ? "q" : "qh";
  const char* y = vars_ == VarPair::qs ? "s" : "th";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) os << " + ";
    os << terms_[k].c.get_str() << '*' << x << '^' << terms_[k].a << '*' << y << '^'
       << terms_[k].b;
  }
  return os.str();
}

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }

std::pair<int, int> degree_span(const LaurentPoly& p, Variable which) {
  if (pair_of(which) != p.vars())
    throw TagMismatch(std::string("variable ") + variable_name(which) +
                      " does not belong to " + var_pair_name(p.vars()));
  if (p.is_zero())
    throw ZeroPolynomialError("degree of the zero polynomial is undefined");
  const bool first = which == Variable::q || which == Variable::qh;
  int lo = first ? p.terms().front().a : p.terms().front().b;
  int hi = lo;
  for (const Term& t : p.terms()) {
    const int e = first ? t.a : t.b;
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  return {lo, hi};
}

LaurentPoly specialize_entry(const LaurentPoly& p) {
  if (p.vars() != VarPair::qs)
    throw TagMismatch("specialize_entry expects a polynomial over (q,s)");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) {
    if (t.a % 2 != 0 || t.b % 2 != 0)
      throw ParityError("odd exponent in term " + t.c.get_str() + "*q^" + std::to_string(t.a) +
                        "*s^" + std::to_string(t.b) + " of " + p.to_string());
    const int half_a = t.a / 2;
    BigInt c = (half_a % 2 == 0) ? BigInt(t.c) : BigInt(-t.c);
    out.push_back(Term{t.b / 2, -half_a, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(out), VarPair::qhth);
}

}  // namespace braidspan
