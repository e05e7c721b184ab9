#include "matgerm/jetspace.hpp"

#include <algorithm>
#include <functional>

namespace matgerm {

namespace {

void enumerate_monomials(int r, long d, std::vector<Monomial>& out) {
  // all exponent vectors with total degree <= d, collected then sorted
  Monomial cur(r);
  // iterative odometer over exponents bounded by remaining degree
  std::vector<long> stack;
  std::function<void(int, long)> rec = [&](int var, long left) {
    if (var == r) {
      out.push_back(cur);
      return;
    }
    for (long e = 0; e <= left; ++e) {
      cur[var] = uint32_t(e);
      rec(var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return Monomial::GradedLexLess{}(a, b);
  });
}

}  // namespace

JetIndex JetIndex::build(int r, int n, int p, long d, long dim_limit) {
  if (r < 1 || n < 1 || p < 1 || d < 0) throw std::invalid_argument("bad jet index shape");
  JetIndex idx;
  idx.r = r;
  idx.n = n;
  idx.p = p;
  idx.d = d;
  enumerate_monomials(r, d, idx.monomials);
  if (idx.dim() > dim_limit)
    throw ResourceLimitError("jet space dimension " + std::to_string(idx.dim()) +
                             " exceeds limit");
  for (long i = 0; i < long(idx.monomials.size()); ++i)
    idx.mono_index_.emplace(idx.monomials[i], i);
  return idx;
}

long JetIndex::index_of(const Monomial& m, int i, int j) const {
  auto it = mono_index_.find(m);
  if (it == mono_index_.end()) throw std::out_of_range("monomial outside jet index");
  return it->second * (long(n) * p) + long(i) * p + j;
}

std::vector<Rat> JetIndex::flatten(const PolyMatrix& mat) const {
  if (mat.rows() != n || mat.cols() != p || mat.varcount() != r)
    throw std::invalid_argument("matrix shape incompatible with jet index");
  std::vector<Rat> v(dim(), Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j)
      for (const auto& [m, c] : mat.at(i, j).terms()) {
        if (m.total_degree() > d) break;  // graded order
        v[index_of(m, i, j)] += c;
      }
  return v;
}

bool JetSubspace::insert(std::vector<Rat> v, std::vector<Rat> combo) {
  // forward reduction against the echelon
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const Rat& c = v[pivots_[t]];
    if (c == 0) continue;
    Rat f = c;  // pivot entries are 1
    const auto& row = rows_[t];
    for (long i = pivots_[t]; i < long(v.size()); ++i)
      if (row[i] != 0) v[i] -= f * row[i];
    if (track_)
      for (std::size_t i = 0; i < combo.size(); ++i)
        if (combos_[t][i] != 0) combo[i] -= f * combos_[t][i];
  }
  long piv = -1;
  for (long i = 0; i < long(v.size()); ++i)
    if (v[i] != 0) {
      piv = i;
      break;
    }
  if (piv < 0) return false;
  Rat inv = 1 / v[piv];
  for (long i = piv; i < long(v.size()); ++i)
    if (v[i] != 0) v[i] *= inv;
  if (track_)
    for (auto& c : combo) c *= inv;
  // back-substitute to keep the basis reduced
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    Rat c = rows_[t][piv];
    if (c == 0) continue;
    for (long i = piv; i < long(v.size()); ++i)
      if (v[i] != 0) rows_[t][i] -= c * v[i];
    if (track_)
      for (std::size_t i = 0; i < combo.size(); ++i)
        if (combo[i] != 0) combos_[t][i] -= c * combo[i];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  if (track_) combos_.insert(combos_.begin() + pos, std::move(combo));
  return true;
}

JetSubspace JetSubspace::span_from_generators(const std::vector<GenSpec>& gens,
                                              const JetIndex& index,
                                              bool track_coordinates) {
  JetSubspace s;
  s.idx_ = index;
  s.track_ = track_coordinates;
  long nvecs = 0;
  for (const auto& gs : gens) {
    for (const auto& m : index.monomials)
      if (m.total_degree() >= gs.min_mult_degree) ++nvecs;
  }
  s.nvecs_ = nvecs;
  long vec_id = 0;
  for (const auto& gs : gens) {
    if (gs.gen.rows() != index.n || gs.gen.cols() != index.p)
      throw std::invalid_argument("generator shape mismatch");
    for (const auto& m : index.monomials) {
      if (m.total_degree() < gs.min_mult_degree) continue;
      long id = vec_id++;
      if (s.is_full()) continue;  // span already everything
      PolyMatrix mult = gs.gen.scaled(Polynomial::monomial(m, 1)).truncated(index.d);
      if (mult.is_zero()) continue;
      std::vector<Rat> combo;
      if (track_coordinates) {
        combo.assign(nvecs, Rat(0));
        combo[id] = 1;
      }
      s.insert(index.flatten(mult), std::move(combo));
    }
  }
  return s;
}

JetSubspace::Membership JetSubspace::membership(const PolyMatrix& target) const {
  std::vector<Rat> v = idx_.flatten(target.truncated(idx_.d));
  std::vector<Rat> combo;
  if (track_) combo.assign(nvecs_, Rat(0));
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const Rat& c = v[pivots_[t]];
    if (c == 0) continue;
    Rat f = c;
    for (long i = pivots_[t]; i < long(v.size()); ++i)
      if (rows_[t][i] != 0) v[i] -= f * rows_[t][i];
    if (track_)
      for (std::size_t i = 0; i < combo.size(); ++i)
        if (combos_[t][i] != 0) combo[i] += f * combos_[t][i];
  }
  Membership res;
  res.contained = std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
  if (res.contained && track_)
    for (long i = 0; i < long(combo.size()); ++i)
      if (combo[i] != 0) res.coords.emplace_back(i, combo[i]);
  return res;
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::optional<uint64_t> rat_mod(const Rat& c, uint64_t p) {
  uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
  uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
  if (den == 0) return std::nullopt;
  return mulmod(num, powmod(den, p - 2, p), p);
}

}  // namespace

std::optional<std::vector<uint64_t>> FpJetSubspace::flatten(const PolyMatrix& mat) const {
  std::vector<uint64_t> v(idx_.dim(), 0);
  for (int i = 0; i < idx_.n; ++i)
    for (int j = 0; j < idx_.p; ++j)
      for (const auto& [m, c] : mat.at(i, j).terms()) {
        if (m.total_degree() > idx_.d) break;
        auto red = rat_mod(c, p_);
        if (!red) return std::nullopt;
        long pos = idx_.index_of(m, i, j);
        v[pos] = (v[pos] + *red) % p_;
      }
  return v;
}

bool FpJetSubspace::insert(std::vector<uint64_t> v) {
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    uint64_t c = v[pivots_[t]];
    if (c == 0) continue;
    const auto& row = rows_[t];
    for (long i = pivots_[t]; i < long(v.size()); ++i)
      if (row[i] != 0) v[i] = (v[i] + p_ - mulmod(c, row[i], p_)) % p_;
  }
  long piv = -1;
  for (long i = 0; i < long(v.size()); ++i)
    if (v[i] != 0) {
      piv = i;
      break;
    }
  if (piv < 0) return false;
  uint64_t inv = powmod(v[piv], p_ - 2, p_);
  for (long i = piv; i < long(v.size()); ++i) v[i] = mulmod(v[i], inv, p_);
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    uint64_t c = rows_[t][piv];
    if (c == 0) continue;
    for (long i = piv; i < long(v.size()); ++i)
      if (v[i] != 0) rows_[t][i] = (rows_[t][i] + p_ - mulmod(c, v[i], p_)) % p_;
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

FpJetSubspace FpJetSubspace::span_from_generators(const std::vector<GenSpec>& gens,
                                                  const JetIndex& index, uint64_t prime) {
  FpJetSubspace s;
  s.p_ = prime;
  s.idx_ = index;
  for (const auto& gs : gens) {
    for (const auto& m : index.monomials) {
      if (m.total_degree() < gs.min_mult_degree) continue;
      if (s.is_full()) return s;
      PolyMatrix mult = gs.gen.scaled(Polynomial::monomial(m, 1)).truncated(index.d);
      if (mult.is_zero()) continue;
      auto v = s.flatten(mult);
      if (!v) {
        s.valid_ = false;
        return s;
      }
      s.insert(std::move(*v));
    }
  }
  return s;
}

bool FpJetSubspace::membership(const PolyMatrix& target) const {
  auto vo = flatten(target.truncated(idx_.d));
  if (!vo) return false;
  std::vector<uint64_t> v = std::move(*vo);
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    uint64_t c = v[pivots_[t]];
    if (c == 0) continue;
    for (long i = pivots_[t]; i < long(v.size()); ++i)
      if (rows_[t][i] != 0) v[i] = (v[i] + p_ - mulmod(c, rows_[t][i], p_)) % p_;
  }
  return std::all_of(v.begin(), v.end(), [](uint64_t c) { return c == 0; });
}

}  // namespace matgerm
