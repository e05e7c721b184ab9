#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace matgerm {

using Rat = mpq_class;

class WeightSystem {
public:
  WeightSystem() = default;
  explicit WeightSystem(std::vector<long> w) : w_(std::move(w)) {
    for (long a : w_)
      if (a < 1) throw std::invalid_argument("weights must be >= 1");
  }
  std::size_t size() const { return w_.size(); }
  long operator[](std::size_t i) const { return w_.at(i); }
  const std::vector<long>& weights() const { return w_; }

private:
  std::vector<long> w_;
};

/// Exponent vector of a single monomial x^alpha.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<uint32_t> e) : e_(std::move(e)) {}

  std::size_t nvars() const { return e_.size(); }
  uint32_t operator[](std::size_t i) const { return e_.at(i); }
  uint32_t& operator[](std::size_t i) { return e_.at(i); }

  long total_degree() const {
    long d = 0;
    for (uint32_t a : e_) d += a;
    return d;
  }

  long weighted_degree(const WeightSystem& w) const {
    if (w.size() != e_.size())
      throw std::invalid_argument("weight vector length mismatch");
    long d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += w[i] * long(e_[i]);
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    if (o.nvars() != nvars()) throw std::invalid_argument("varcount mismatch");
    Monomial m(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

  /// Graded lexicographic order: total degree first, then lex on the
  /// exponent vector (earlier variables more significant).
  struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      long da = a.total_degree(), db = b.total_degree();
      if (da != db) return da < db;
      return a.e_ < b.e_;
    }
  };

private:
  std::vector<uint32_t> e_;
};

/// Sparse exact multivariate polynomial over the rationals.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rat, Monomial::GradedLexLess>;

  Polynomial() : varcount_(0) {}
  explicit Polynomial(int varcount) : varcount_(varcount) {}

  static Polynomial zero(int varcount) { return Polynomial(varcount); }
  static Polynomial constant(int varcount, const Rat& c);
  static Polynomial variable(int varcount, int index);
  static Polynomial monomial(const Monomial& m, const Rat& c);

  int varcount() const { return varcount_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c*x^m, erasing the term if the coefficient cancels.
  void add_term(const Monomial& m, const Rat& c);

  Rat constant_term() const;
  long total_degree() const;  // -1 for the zero polynomial

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const;

  Polynomial derivative(int var_index) const;
  Polynomial truncate(long max_total_degree) const;

  /// Minimum weighted degree over the terms; nullopt encodes +infinity
  /// (the zero polynomial).
  std::optional<long> filtration(const WeightSystem& w) const;

  /// True when every term has the same weighted degree (vacuously false
  /// for the zero polynomial, whose filtration is infinite).
  bool is_weighted_homogeneous(const WeightSystem& w) const;

  Rat evaluate(const std::vector<Rat>& point) const;

private:
  void check_compatible(const Polynomial& o) const;

  int varcount_;
  TermMap terms_;
};

std::string to_string(const Polynomial& p, const std::vector<std::string>& varnames);

}  // namespace matgerm
