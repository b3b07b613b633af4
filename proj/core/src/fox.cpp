/* Copyright 2026 The alexinv Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "alexinv/fox.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

#include "alexinv/errors.hpp"
#include "alexinv/linalg.hpp"

namespace alexinv {

namespace {

void check_same_genus(int a, int b) {
  if (a != b) throw std::invalid_argument("genus mismatch");
}

}  // namespace

AlexVector::AlexVector(int genus) : genus_(genus) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
  entries_.assign(2 * static_cast<std::size_t>(genus), LaurentPoly(genus));
}

AlexVector::AlexVector(int genus, std::vector<LaurentPoly> entries)
    : genus_(genus), entries_(std::move(entries)) {
  if (entries_.size() != 2 * static_cast<std::size_t>(genus))
    throw std::invalid_argument("module vector needs 2g entries");
  for (const LaurentPoly& p : entries_) check_same_genus(p.genus(), genus);
}

const LaurentPoly& AlexVector::entry(int index) const {
  if (index < 1 || index > 2 * genus_)
    throw std::invalid_argument("entry index out of range 1..2g");
  return entries_[static_cast<std::size_t>(index - 1)];
}

bool AlexVector::is_zero() const {
  for (const LaurentPoly& p : entries_)
    if (!p.is_zero()) return false;
  return true;
}

AlexVector& AlexVector::operator+=(const AlexVector& v) {
  check_same_genus(genus_, v.genus_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += v.entries_[i];
  return *this;
}

AlexVector& AlexVector::operator-=(const AlexVector& v) {
  check_same_genus(genus_, v.genus_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] -= v.entries_[i];
  return *this;
}

AlexVector operator+(AlexVector a, const AlexVector& b) {
  a += b;
  return a;
}

AlexVector operator-(AlexVector a, const AlexVector& b) {
  a -= b;
  return a;
}

AlexVector AlexVector::operator-() const {
  AlexVector out(genus_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = -entries_[i];
  return out;
}

LaurentPoly fox_derivative(int index, const FreeWord& w) {
  const int g = w.genus();
  if (index < 1 || index > 2 * g)
    throw std::invalid_argument("derivative index out of range 1..2g");
  LaurentPoly d(g);
  ExpVec prefix(2 * static_cast<std::size_t>(g), 0);
  for (const Letter& l : w.letters()) {
    if (l.sign > 0) {
      if (l.index == index)
        d += LaurentPoly::monomial(g, prefix, 1);
      prefix[l.index - 1] += 1;
    } else {
      prefix[l.index - 1] -= 1;
      if (l.index == index)
        d += LaurentPoly::monomial(g, prefix, -1);
    }
  }
  return d;
}

AlexVector fox_vector(const FreeWord& w) {
  const int g = w.genus();
  std::vector<LaurentPoly> entries(2 * static_cast<std::size_t>(g),
                                   LaurentPoly(g));
  ExpVec prefix(2 * static_cast<std::size_t>(g), 0);
  for (const Letter& l : w.letters()) {
    if (l.sign > 0) {
      entries[l.index - 1] += LaurentPoly::monomial(g, prefix, 1);
      prefix[l.index - 1] += 1;
    } else {
      prefix[l.index - 1] -= 1;
      entries[l.index - 1] += LaurentPoly::monomial(g, prefix, -1);
    }
  }
  return AlexVector(g, std::move(entries));
}

LaurentPoly abelianization_monomial(const FreeWord& w) {
  std::vector<long> ab = abelianize(w);
  ExpVec e(ab.size());
  for (std::size_t i = 0; i < ab.size(); ++i) e[i] = static_cast<int>(ab[i]);
  return LaurentPoly::monomial(w.genus(), e, 1);
}

AlexVector theta_relator(int genus) {
  AlexVector v(genus);
  std::vector<LaurentPoly> entries;
  entries.reserve(2 * static_cast<std::size_t>(genus));
  for (int j = 1; j <= genus; ++j) {
    entries.push_back(LaurentPoly::constant(genus, 1) -
                      LaurentPoly::variable(genus, genus + j));
  }
  for (int j = 1; j <= genus; ++j) {
    entries.push_back(LaurentPoly::variable(genus, j) -
                      LaurentPoly::constant(genus, 1));
  }
  return AlexVector(genus, std::move(entries));
}

AlexVector alexander_class(const FreeWord& w) {
  for (long e : abelianize(w)) {
    if (e != 0)
      throw std::invalid_argument(
          "alexander_class needs a word with trivial abelianization");
  }
  return fox_vector(w);
}

std::optional<LaurentPoly> theta_multiple_witness(const AlexVector& v) {
  const int g = v.genus();
  std::optional<LaurentPoly> r = divide_by_one_minus(v.entry(1), g + 1);
  if (!r) return std::nullopt;
  AlexVector candidate = module_scalar(*r, theta_relator(g));
  if (candidate == v) return r;
  return std::nullopt;
}

bool is_multiple_of_theta(const AlexVector& v) {
  return theta_multiple_witness(v).has_value();
}

bool equal_mod_theta(const AlexVector& u, const AlexVector& v) {
  return is_multiple_of_theta(u - v);
}

AlexVector theta_normal_form(const AlexVector& v) {
  const int g = v.genus();
  LaurentPoly first = v.entry(1);
  LaurentPoly drop = first - evaluate_at_one(first, g + 1);
  std::optional<LaurentPoly> q = divide_by_one_minus(drop, g + 1);
  if (!q) throw std::logic_error("theta normal form: division must be exact");
  return v - module_scalar(*q, theta_relator(g));
}

AlexVector module_scalar(const LaurentPoly& p, const AlexVector& v) {
  check_same_genus(p.genus(), v.genus());
  std::vector<LaurentPoly> entries;
  entries.reserve(v.entries().size());
  for (const LaurentPoly& e : v.entries()) entries.push_back(p * e);
  return AlexVector(v.genus(), std::move(entries));
}

std::vector<AlexVector> koszul_generators(int genus) {
  if (genus < 2) throw std::invalid_argument("koszul_generators needs g >= 2");
  std::vector<AlexVector> out;
  for (int i = 1; i <= 2 * genus; ++i) {
    for (int j = i + 1; j <= 2 * genus; ++j) {
      out.push_back(fox_vector(commutator(FreeWord::generator(genus, i),
                                          FreeWord::generator(genus, j))));
    }
  }
  return out;
}

namespace {

// Column key for the truncated module model: coordinate in e_1..e_{2g} plus
// a shifted-monomial exponent. Ordered by total degree, then exponent, then
// coordinate, so leading entries are lowest-degree.
struct ModuleKey {
  int coord;  // 0-based
  ExpVec exp;
  friend bool operator==(const ModuleKey&, const ModuleKey&) = default;
};

struct ModuleKeyLess {
  bool operator()(const ModuleKey& a, const ModuleKey& b) const {
    int da = total_degree(a.exp), db = total_degree(b.exp);
    if (da != db) return da < db;
    if (a.exp != b.exp) return a.exp < b.exp;
    return a.coord < b.coord;
  }
};

using ModuleEchelon = SparseEchelon<ModuleKey, ModuleKeyLess>;
using ModuleRow = ModuleEchelon::Row;

void for_each_exponent_of_degree(
    int nvars, int degree, const std::function<void(const ExpVec&)>& fn) {
  ExpVec e(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nvars - 1) {
      e[static_cast<std::size_t>(pos)] = left;
      fn(e);
      e[static_cast<std::size_t>(pos)] = 0;
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
    e[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, degree);
}

ModuleRow vector_row(const AlexVector& v, int m) {
  ModuleRow row;
  for (int c = 0; c < 2 * v.genus(); ++c) {
    ShiftedTruncation exp = shifted_expand(v.entry(c + 1), m);
    for (const auto& [e, coeff] : exp.terms())
      row.emplace(ModuleKey{c, e}, coeff);
  }
  return row;
}

// Downward scan over the truncated J-adic filtration at bound m. Theta
// multiples (present in every layer) are inserted at construction; Koszul
// rows are inserted level by level, highest exponent degree first, so that
// after insert_level(d) the echelon spans exactly the truncated image of
// J^d A + (Theta).
class JadicScan {
 public:
  JadicScan(int genus, int m) : genus_(genus), m_(m) {
    const int nv = 2 * genus;
    for (int d = 0; d <= m - 2; ++d) {
      for_each_exponent_of_degree(nv, d, [&](const ExpVec& e) {
        ModuleRow row;
        for (int j = 1; j <= genus_; ++j) {
          ExpVec e1 = e;
          e1[static_cast<std::size_t>(genus_ + j - 1)] += 1;
          row.emplace(ModuleKey{j - 1, e1}, Rational(-1));
          ExpVec e2 = e;
          e2[static_cast<std::size_t>(j - 1)] += 1;
          row.emplace(ModuleKey{genus_ + j - 1, e2}, Rational(1));
        }
        ech_.insert(std::move(row));
      });
    }
  }

  // Inserts the rows y^e * kappa_{ij} with |e| = level.
  void insert_level(int level) {
    const int nv = 2 * genus_;
    for_each_exponent_of_degree(nv, level, [&](const ExpVec& e) {
      for (int i = 1; i <= nv; ++i) {
        for (int j = i + 1; j <= nv; ++j) {
          // kappa_{ij} = -y_j e_i + y_i e_j
          ModuleRow row;
          ExpVec e1 = e;
          e1[static_cast<std::size_t>(j - 1)] += 1;
          row.emplace(ModuleKey{i - 1, e1}, Rational(-1));
          ExpVec e2 = e;
          e2[static_cast<std::size_t>(i - 1)] += 1;
          row.emplace(ModuleKey{j - 1, e2}, Rational(1));
          ech_.insert(std::move(row));
        }
      }
    });
  }

  std::size_t rank() const { return ech_.rank(); }
  bool contains(const ModuleRow& row) const {
    return ech_.reduces_to_zero(row);
  }
  bool insert_vector(const AlexVector& v) {
    return ech_.insert(vector_row(v, m_));
  }

 private:
  int genus_;
  int m_;
  ModuleEchelon ech_;
};

int graded_dimension_at(int genus, int n, int m) {
  JadicScan scan(genus, m);
  std::vector<std::size_t> rank_of(static_cast<std::size_t>(m), scan.rank());
  for (int d = m - 2; d >= 0; --d) {
    scan.insert_level(d);
    rank_of[static_cast<std::size_t>(d)] = scan.rank();
  }
  std::size_t high = (n + 1 <= m - 2) ? rank_of[static_cast<std::size_t>(n + 1)]
                                      : rank_of[static_cast<std::size_t>(m - 1)];
  return static_cast<int>(rank_of[static_cast<std::size_t>(n)] - high);
}

// Returns the valuation in 0..max_n, or -1 when the vector is not in the
// truncated module span at all.
int a_valuation_at(const AlexVector& v, int max_n, int m) {
  ModuleRow row = vector_row(v, m);
  JadicScan scan(v.genus(), m);
  for (int d = m - 2; d >= 0; --d) {
    scan.insert_level(d);
    if (d <= max_n && scan.contains(row)) return std::min(d, max_n);
  }
  return -1;
}

}  // namespace

int graded_dimension(int genus, int n, int m) {
  if (genus < 2) throw std::invalid_argument("graded_dimension needs g >= 2");
  if (n < 0) throw std::invalid_argument("graded degree must be >= 0");
  if (m < n + 2)
    throw std::invalid_argument("graded_dimension needs truncation m >= n+2");
  int at_m = graded_dimension_at(genus, n, m);
  int at_m1 = graded_dimension_at(genus, n, m + 1);
  if (at_m != at_m1)
    throw TruncationUnstable("graded dimension g=" + std::to_string(genus) +
                                 " n=" + std::to_string(n),
                             m);
  return at_m;
}

int a_valuation(const AlexVector& v, int max_n, int m) {
  if (max_n < 0) throw std::invalid_argument("valuation cap must be >= 0");
  if (m < max_n + 2)
    throw std::invalid_argument("a_valuation needs truncation m >= max_n+2");
  int at_m = a_valuation_at(v, max_n, m);
  int at_m1 = a_valuation_at(v, max_n, m + 1);
  if (at_m != at_m1)
    throw TruncationUnstable("module valuation", m);
  if (at_m < 0)
    throw std::invalid_argument(
        "vector is outside the truncated module span");
  return at_m;
}

bool in_jadic_span(const AlexVector& v, int n, int m) {
  if (n < 0 || m < n + 2)
    throw std::invalid_argument("in_jadic_span needs m >= n+2 and n >= 0");
  ModuleRow row = vector_row(v, m);
  JadicScan scan(v.genus(), m);
  for (int d = m - 2; d >= n; --d) scan.insert_level(d);
  return scan.contains(row);
}

int added_rank_over_jadic(const std::vector<AlexVector>& vs, int n, int m) {
  if (n < 0 || m < n + 2)
    throw std::invalid_argument("added_rank_over_jadic needs m >= n+2");
  if (vs.empty()) return 0;
  JadicScan scan(vs.front().genus(), m);
  for (int d = m - 2; d >= n; --d) scan.insert_level(d);
  std::size_t base = scan.rank();
  for (const AlexVector& v : vs) scan.insert_vector(v);
  return static_cast<int>(scan.rank() - base);
}

}  // namespace alexinv
