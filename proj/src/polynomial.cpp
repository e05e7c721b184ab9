#include "matgerm/polynomial.hpp"

#include <sstream>

namespace matgerm {

Polynomial Polynomial::constant(int varcount, const Rat& c) {
  Polynomial p(varcount);
  p.add_term(Monomial(varcount), c);
  return p;
}

Polynomial Polynomial::variable(int varcount, int index) {
  if (index < 0 || index >= varcount)
    throw std::out_of_range("variable index out of range");
  Monomial m(varcount);
  m[index] = 1;
  Polynomial p(varcount);
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rat& c) {
  Polynomial p(int(m.nvars()));
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (int(m.nvars()) != varcount_)
    throw std::invalid_argument("monomial varcount mismatch");
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Polynomial::constant_term() const {
  auto it = terms_.find(Monomial(varcount_));
  return it == terms_.end() ? Rat(0) : it->second;
}

long Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  // graded order: the last term has maximal total degree
  return terms_.rbegin()->first.total_degree();
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (o.varcount_ != varcount_)
    throw std::invalid_argument("polynomial varcount mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  r -= o;
  return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(varcount_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(varcount_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial r(varcount_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return varcount_ == o.varcount_ && terms_ == o.terms_;
}

Polynomial Polynomial::derivative(int var_index) const {
  if (var_index < 0 || var_index >= varcount_)
    throw std::out_of_range("derivative index out of range");
  Polynomial r(varcount_);
  for (const auto& [m, c] : terms_) {
    uint32_t e = m[var_index];
    if (e == 0) continue;
    Monomial d(m);
    d[var_index] = e - 1;
    r.add_term(d, c * long(e));
  }
  return r;
}

Polynomial Polynomial::truncate(long max_total_degree) const {
  Polynomial r(varcount_);
  for (const auto& [m, c] : terms_) {
    if (m.total_degree() > max_total_degree) break;  // graded order
    r.terms_.emplace(m, c);
  }
  return r;
}

std::optional<long> Polynomial::filtration(const WeightSystem& w) const {
  std::optional<long> fil;
  for (const auto& [m, c] : terms_) {
    long d = m.weighted_degree(w);
    if (!fil || d < *fil) fil = d;
  }
  return fil;
}

bool Polynomial::is_weighted_homogeneous(const WeightSystem& w) const {
  if (terms_.empty()) return false;
  long d = terms_.begin()->first.weighted_degree(w);
  for (const auto& [m, c] : terms_)
    if (m.weighted_degree(w) != d) return false;
  return true;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  if (int(point.size()) != varcount_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  Rat sum = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < m.nvars(); ++i)
      for (uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    sum += t;
  }
  return sum;
}

namespace {

void append_rat(std::ostringstream& os, const Rat& c) {
  os << c.get_num();
  if (c.get_den() != 1) os << "/" << c.get_den();
}

}  // namespace

std::string to_string(const Polynomial& p, const std::vector<std::string>& varnames) {
  if (int(varnames.size()) != p.varcount())
    throw std::invalid_argument("varname list length mismatch");
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // canonical order: descending graded-lex
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Monomial& m = it->first;
    Rat c = it->second;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    Rat a = neg ? Rat(-c) : c;
    bool wrote_coeff = false;
    if (a != 1 || m.total_degree() == 0) {
      append_rat(os, a);
      wrote_coeff = true;
    }
    bool wrote_var = false;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (wrote_coeff || wrote_var) os << "*";
      os << varnames[i];
      if (m[i] > 1) os << "^" << m[i];
      wrote_var = true;
    }
  }
  return os.str();
}

}  // namespace matgerm
