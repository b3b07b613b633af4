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

#include "alexinv/magnus.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "alexinv/linalg.hpp"

namespace alexinv {

namespace {

void check_genus(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
}

void check_bound(int bound) {
  if (bound < 2)
    throw std::invalid_argument("series truncation bound must be >= 2");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int genus, int bound)
    : genus_(genus), bound_(bound) {
  check_genus(genus);
  check_bound(bound);
}

TruncatedSeries TruncatedSeries::one(int genus, int bound) {
  TruncatedSeries s(genus, bound);
  s.add_term(NcWord{}, 1);
  return s;
}

TruncatedSeries TruncatedSeries::letter(int genus, int bound, int index) {
  if (index < 1 || index > 2 * genus)
    throw std::invalid_argument("letter index out of range 1..2g");
  TruncatedSeries s(genus, bound);
  s.add_term(NcWord{static_cast<std::uint8_t>(index)}, 1);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int genus, int bound,
                                          const NcWord& w, const Rational& c) {
  TruncatedSeries s(genus, bound);
  for (std::uint8_t l : w) {
    if (l < 1 || l > 2 * genus)
      throw std::invalid_argument("letter index out of range 1..2g");
  }
  s.add_term(w, c);
  return s;
}

void TruncatedSeries::add_term(const NcWord& w, const Rational& c) {
  if (c == 0 || static_cast<int>(w.size()) >= bound_) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& q) {
  if (genus_ != q.genus_ || bound_ != q.bound_)
    throw std::invalid_argument("series shape mismatch");
  for (const auto& [w, c] : q.terms_) add_term(w, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& q) {
  if (genus_ != q.genus_ || bound_ != q.bound_)
    throw std::invalid_argument("series shape mismatch");
  for (const auto& [w, c] : q.terms_) add_term(w, -c);
  return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
  a += b;
  return a;
}

TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
  a -= b;
  return a;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.genus_ != b.genus_ || a.bound_ != b.bound_)
    throw std::invalid_argument("series shape mismatch");
  TruncatedSeries out(a.genus_, a.bound_);
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      if (static_cast<int>(u.size() + v.size()) >= a.bound_) continue;
      NcWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, cu * cv);
    }
  }
  return out;
}

TruncatedSeries operator*(const Rational& c, TruncatedSeries s) {
  if (c == 0) return TruncatedSeries(s.genus_, s.bound_);
  for (auto& [w, v] : s.terms_) v *= c;
  return s;
}

TruncatedSeries TruncatedSeries::degree_component(int d) const {
  TruncatedSeries out(genus_, bound_);
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) == d) out.add_term(w, c);
  }
  return out;
}

int TruncatedSeries::min_degree() const {
  if (terms_.empty()) return bound_;
  return static_cast<int>(terms_.begin()->first.size());
}

TruncatedSeries bracket(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * b - b * a;
}

TruncatedSeries magnus_expand(const FreeWord& w, int bound) {
  check_bound(bound);
  const int g = w.genus();
  TruncatedSeries out = TruncatedSeries::one(g, bound);
  for (const Letter& l : w.letters()) {
    TruncatedSeries factor(g, bound);
    if (l.sign > 0) {
      factor = TruncatedSeries::one(g, bound) +
               TruncatedSeries::letter(g, bound, l.index);
    } else {
      // truncated geometric series: 1 - X + X^2 - ...
      NcWord mono;
      Rational sign = 1;
      for (int k = 0; k < bound; ++k) {
        factor += TruncatedSeries::monomial(g, bound, mono, sign);
        mono.push_back(static_cast<std::uint8_t>(l.index));
        sign = -sign;
      }
    }
    out = out * factor;
  }
  return out;
}

int free_lcs_depth(const FreeWord& w, int bound) {
  return (magnus_expand(w, bound) - TruncatedSeries::one(w.genus(), bound))
      .min_degree();
}

// ---------------------------------------------------------------------------
// Surface relation ideal

using SeriesEchelon = SparseEchelon<NcWord, NcWordLess>;

struct SurfaceAlgebra::Impl {
  SeriesEchelon echelon;
};

namespace {

SeriesEchelon::Row series_row(const TruncatedSeries& s) {
  SeriesEchelon::Row row;
  for (const auto& [w, c] : s.terms()) row.emplace(w, c);
  return row;
}

TruncatedSeries row_series(int genus, int bound,
                           const SeriesEchelon::Row& row) {
  TruncatedSeries out(genus, bound);
  for (const auto& [w, c] : row)
    out += TruncatedSeries::monomial(genus, bound, w, c);
  return out;
}

void enumerate_words(int genus, int degree,
                     const std::function<void(const NcWord&)>& fn) {
  NcWord w(static_cast<std::size_t>(degree), 1);
  if (degree == 0) {
    fn(w);
    return;
  }
  while (true) {
    fn(w);
    int pos = degree - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] ==
                           static_cast<std::uint8_t>(2 * genus)) {
      w[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++w[static_cast<std::size_t>(pos)];
  }
}

}  // namespace

SurfaceAlgebra::SurfaceAlgebra(int genus, int bound)
    : genus_(genus), bound_(bound) {
  check_genus(genus);
  check_bound(bound);
  auto impl = std::make_shared<Impl>();
  TruncatedSeries relator =
      magnus_expand(surface_relator(genus), bound) -
      TruncatedSeries::one(genus, bound);
  // Span of the truncated two-sided ideal: monomial * relator * monomial for
  // every degree split. Insertion order is fixed, so the echelon (and hence
  // the canonical reduction) is deterministic.
  for (int s = 0; s + 2 < bound; ++s) {
    for (int left = 0; left <= s; ++left) {
      const int right = s - left;
      enumerate_words(genus, left, [&](const NcWord& u) {
        TruncatedSeries us =
            TruncatedSeries::monomial(genus, bound, u, 1) * relator;
        enumerate_words(genus, right, [&](const NcWord& v) {
          TruncatedSeries row =
              us * TruncatedSeries::monomial(genus, bound, v, 1);
          impl->echelon.insert(series_row(row));
        });
      });
    }
  }
  impl_ = std::move(impl);
}

TruncatedSeries SurfaceAlgebra::reduce(const TruncatedSeries& s) const {
  if (s.genus() != genus_ || s.bound() != bound_)
    throw std::invalid_argument("series shape mismatch with surface algebra");
  return row_series(genus_, bound_, impl_->echelon.normal_form(series_row(s)));
}

int SurfaceAlgebra::depth(const FreeWord& w) const {
  TruncatedSeries m = magnus_expand(w, bound_) -
                      TruncatedSeries::one(w.genus(), bound_);
  return reduce(m).min_degree();
}

std::vector<int> SurfaceAlgebra::pivot_counts_by_degree() const {
  std::vector<int> counts(static_cast<std::size_t>(bound_), 0);
  for (const auto& [lead, row] : impl_->echelon.pivots())
    counts[lead.size()] += 1;
  return counts;
}

const SurfaceAlgebra& surface_algebra(int genus, int bound) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<SurfaceAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{genus, bound}];
  if (!slot) slot = std::make_unique<SurfaceAlgebra>(genus, bound);
  return *slot;
}

TruncatedSeries surface_reduce(const TruncatedSeries& s) {
  return surface_algebra(s.genus(), s.bound()).reduce(s);
}

int surface_lcs_depth(const FreeWord& w, int bound) {
  return surface_algebra(w.genus(), bound).depth(w);
}

// ---------------------------------------------------------------------------
// Graded Lie algebra dimensions

std::vector<std::vector<int>> lyndon_words(int alphabet, int length) {
  // Duval's generation algorithm.
  std::vector<std::vector<int>> out;
  if (length < 1) return out;
  std::vector<int> w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == length) out.push_back(w);
    std::size_t n = w.size();
    while (w.size() < static_cast<std::size_t>(length))
      w.push_back(w[w.size() % n]);
    while (!w.empty() && w.back() == alphabet) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

namespace {

TruncatedSeries omega_tensor(int genus, int bound) {
  TruncatedSeries out(genus, bound);
  for (int i = 1; i <= genus; ++i) {
    out += bracket(TruncatedSeries::letter(genus, bound, i),
                   TruncatedSeries::letter(genus, bound, genus + i));
  }
  return out;
}

}  // namespace

std::vector<long> graded_lie_dims(int genus, int max_degree) {
  check_genus(genus);
  if (max_degree < 1)
    throw std::invalid_argument("max_degree must be >= 1");
  const int bound = max_degree + 1;
  std::vector<long> dims;
  dims.push_back(2 * genus);
  if (max_degree == 1) return dims;

  // The Lie ideal generated by omega, degree by degree: the ideal starts as
  // the line through omega, and the next layer is spanned by brackets of the
  // current layer with the degree-one part.
  std::vector<TruncatedSeries> layer{omega_tensor(genus, bound)};
  for (int n = 2; n <= max_degree; ++n) {
    SeriesEchelon ech;
    std::vector<TruncatedSeries> basis;
    for (const TruncatedSeries& v : layer) {
      if (ech.insert(series_row(v))) basis.push_back(v);
    }
    long free_dim = static_cast<long>(lyndon_words(2 * genus, n).size());
    dims.push_back(free_dim - static_cast<long>(ech.rank()));
    if (n == max_degree) break;
    std::vector<TruncatedSeries> next;
    next.reserve(basis.size() * 2 * static_cast<std::size_t>(genus));
    for (const TruncatedSeries& v : basis) {
      for (int j = 1; j <= 2 * genus; ++j)
        next.push_back(bracket(v, TruncatedSeries::letter(genus, bound, j)));
    }
    layer = std::move(next);
  }
  return dims;
}

std::vector<long> lie_dims_from_series(int genus, int max_degree) {
  check_genus(genus);
  if (max_degree < 1)
    throw std::invalid_argument("max_degree must be >= 1");
  // Coefficients of E(t) = 1/(1 - 2g t + t^2).
  std::vector<Rational> e(static_cast<std::size_t>(max_degree) + 1);
  e[0] = 1;
  for (int d = 1; d <= max_degree; ++d) {
    Rational v = Rational(2 * genus) * e[static_cast<std::size_t>(d - 1)];
    if (d >= 2) v -= e[static_cast<std::size_t>(d - 2)];
    e[static_cast<std::size_t>(d)] = v;
  }
  // log E: d*e_d = sum_{i=1..d} i c_i e_{d-i}.
  std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 1; d <= max_degree; ++d) {
    Rational acc = Rational(d) * e[static_cast<std::size_t>(d)];
    for (int i = 1; i < d; ++i)
      acc -= Rational(i) * c[static_cast<std::size_t>(i)] *
             e[static_cast<std::size_t>(d - i)];
    c[static_cast<std::size_t>(d)] = acc / d;
  }
  // E = prod_n (1 - t^n)^{-l_n}: d c_d = sum_{n | d} n l_n.
  std::vector<long> l(static_cast<std::size_t>(max_degree) + 1, 0);
  std::vector<long> out;
  for (int d = 1; d <= max_degree; ++d) {
    Rational acc = Rational(d) * c[static_cast<std::size_t>(d)];
    for (int n = 1; n < d; ++n) {
      if (d % n == 0) acc -= Rational(n * l[static_cast<std::size_t>(n)]);
    }
    Rational ln = acc / d;
    if (ln.get_den() != 1)
      throw std::logic_error("series inversion did not come out integral");
    l[static_cast<std::size_t>(d)] = static_cast<long>(ln.get_num().get_si());
    out.push_back(l[static_cast<std::size_t>(d)]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Johnson homomorphisms

std::map<int, TruncatedSeries> johnson_tau(const EndoImages& e, int n,
                                           int bound) {
  if (!fixes_homology(e))
    throw std::invalid_argument("johnson_tau needs an endomorphism fixing H");
  if (n < 1) throw std::invalid_argument("johnson_tau needs n >= 1");
  if (bound < n + 2)
    throw std::invalid_argument("johnson_tau needs bound >= n+2");
  const SurfaceAlgebra& algebra = surface_algebra(e.genus(), bound);
  std::map<int, TruncatedSeries> out;
  for (int i = 1; i <= 2 * e.genus(); ++i) {
    FreeWord x = FreeWord::generator(e.genus(), i);
    FreeWord diff = apply_endo(e, x) * x.inverse();
    TruncatedSeries reduced = algebra.reduce(
        magnus_expand(diff, bound) - TruncatedSeries::one(e.genus(), bound));
    out.emplace(i, reduced.degree_component(n + 1));
  }
  return out;
}

int johnson_depth(const EndoImages& e, int bound) {
  if (!fixes_homology(e))
    throw std::invalid_argument(
        "johnson_depth needs an endomorphism fixing H");
  check_bound(bound);
  const SurfaceAlgebra& algebra = surface_algebra(e.genus(), bound);
  int min_depth = bound;
  for (int i = 1; i <= 2 * e.genus(); ++i) {
    FreeWord x = FreeWord::generator(e.genus(), i);
    min_depth = std::min(min_depth,
                         algebra.depth(apply_endo(e, x) * x.inverse()));
  }
  return min_depth - 1;
}

std::string to_string(const TruncatedSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : s.terms()) {
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::uint8_t l : w) {
      if (!mono.empty()) mono += '*';
      mono += 'X' + std::to_string(l);
    }
    if (mono.empty()) mono = "1";
    if (a != 1) out += a.get_str() + "*";
    out += mono;
  }
  return out;
}

}  // namespace alexinv
