#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "matgerm/matrix.hpp"

namespace matgerm {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Basis bookkeeping for Mat_(n,p) tensor O_r / M^(d+1): one coordinate per
/// (monomial of total degree <= d) x (entry position), enumerated
/// graded-lex x row-major.
struct JetIndex {
  int r = 0, n = 0, p = 0;
  long d = 0;
  std::vector<Monomial> monomials;  // ascending graded-lex

  static JetIndex build(int r, int n, int p, long d, long dim_limit = 2'000'000);

  long dim() const { return long(monomials.size()) * n * p; }
  long index_of(const Monomial& m, int i, int j) const;
  std::vector<Rat> flatten(const PolyMatrix& mat) const;

private:
  std::map<Monomial, long, Monomial::GradedLexLess> mono_index_;
};

/// A generator together with the minimal total degree of the monomial
/// multipliers used when spanning (0 = all of O, 1 = maximal-ideal
/// multiples, 2 = square of the maximal ideal).
struct GenSpec {
  PolyMatrix gen;
  int min_mult_degree = 0;
};

/// Echelonized subspace of a truncated matrix space, exact over Q.
class JetSubspace {
public:
  JetSubspace() = default;

  /// Spans {x^alpha * G mod M^(d+1)} for each generator and each monomial
  /// multiplier of total degree in [min_mult_degree, d]. With
  /// track_coordinates, membership can report coordinates over the
  /// spanning vectors. Absorption stops early once the span is full.
  static JetSubspace span_from_generators(const std::vector<GenSpec>& gens,
                                          const JetIndex& index,
                                          bool track_coordinates = false);

  const JetIndex& index() const { return idx_; }
  long rank() const { return long(rows_.size()); }
  long quotient_dimension() const { return idx_.dim() - rank(); }
  bool is_full() const { return rank() == idx_.dim(); }

  struct Membership {
    bool contained = false;
    /// (spanning-vector index, coefficient) pairs reproducing the target;
    /// populated only when the subspace tracks coordinates.
    std::vector<std::pair<long, Rat>> coords;
  };
  Membership membership(const PolyMatrix& target) const;

private:
  bool insert(std::vector<Rat> v, std::vector<Rat> combo);

  JetIndex idx_;
  std::vector<std::vector<Rat>> rows_;  // reduced row echelon, pivot = 1
  std::vector<long> pivots_;            // strictly increasing
  bool track_ = false;
  long nvecs_ = 0;
  std::vector<std::vector<Rat>> combos_;
};

/// Same construction over F_p (word-size prime), used as a fast
/// pre-screen. valid() goes false when some rational coefficient has a
/// denominator divisible by p; results must then be discarded.
class FpJetSubspace {
public:
  static constexpr uint64_t kDefaultPrime = 2147483647ull;  // 2^31 - 1

  static FpJetSubspace span_from_generators(const std::vector<GenSpec>& gens,
                                            const JetIndex& index,
                                            uint64_t prime = kDefaultPrime);

  bool valid() const { return valid_; }
  long rank() const { return long(rows_.size()); }
  bool is_full() const { return rank() == idx_.dim(); }
  /// Membership verdict mod p; false negatives are impossible for a valid
  /// prime, false positives are caught by the rational confirmation.
  bool membership(const PolyMatrix& target) const;

private:
  bool insert(std::vector<uint64_t> v);
  std::optional<std::vector<uint64_t>> flatten(const PolyMatrix& mat) const;

  uint64_t p_ = kDefaultPrime;
  JetIndex idx_;
  std::vector<std::vector<uint64_t>> rows_;
  std::vector<long> pivots_;
  bool valid_ = true;
};

}  // namespace matgerm
