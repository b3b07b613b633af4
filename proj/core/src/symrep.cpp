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

#include "alexinv/symrep.hpp"

#include <stdexcept>
#include <utility>

namespace alexinv {

namespace {

void check_genus(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
}

std::string letter_name(int genus, int id) {
  if (id < genus) return "a" + std::to_string(id + 1);
  return "b" + std::to_string(id - genus + 1);
}

}  // namespace

std::vector<int> DominantWeight::coords() const {
  std::vector<int> c(static_cast<std::size_t>(genus), 0);
  int acc = 0;
  for (int i = genus - 1; i >= 0; --i) {
    acc += fund[static_cast<std::size_t>(i)];
    c[static_cast<std::size_t>(i)] = acc;
  }
  return c;
}

bool DominantWeight::dominant() const {
  if (static_cast<int>(fund.size()) != genus) return false;
  for (int a : fund)
    if (a < 0) return false;
  return true;
}

std::string DominantWeight::to_string() const {
  std::string out;
  for (int i = 0; i < genus; ++i) {
    int a = fund[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    if (!out.empty()) out += '+';
    if (a != 1) out += std::to_string(a) + "*";
    out += "l" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

DominantWeight fundamental_weight(int genus, int k, int coefficient) {
  check_genus(genus);
  if (k < 1 || k > genus)
    throw std::invalid_argument("fundamental weight index out of range");
  DominantWeight w{genus, std::vector<int>(static_cast<std::size_t>(genus), 0)};
  w.fund[static_cast<std::size_t>(k - 1)] = coefficient;
  return w;
}

DominantWeight weight_sum(const DominantWeight& a, const DominantWeight& b) {
  if (a.genus != b.genus) throw std::invalid_argument("genus mismatch");
  DominantWeight out = a;
  for (std::size_t i = 0; i < out.fund.size(); ++i) out.fund[i] += b.fund[i];
  return out;
}

long weyl_dim(const DominantWeight& lambda) {
  if (!lambda.dominant())
    throw std::invalid_argument("weyl_dim needs a dominant weight");
  const int g = lambda.genus;
  std::vector<int> lam = lambda.coords();
  std::vector<int> rho(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) rho[static_cast<std::size_t>(i)] = g - i;

  Rational dim = 1;
  auto factor = [&](long num, long den) {
    dim *= make_rational(num, den);
  };
  for (int i = 0; i < g; ++i) {
    for (int j = i + 1; j < g; ++j) {
      // roots e_i - e_j and e_i + e_j
      factor((lam[i] + rho[i]) - (lam[j] + rho[j]), rho[i] - rho[j]);
      factor((lam[i] + rho[i]) + (lam[j] + rho[j]), rho[i] + rho[j]);
    }
    // root 2 e_i; the pairing scales both sides equally, so e_i suffices
    factor(lam[i] + rho[i], rho[i]);
  }
  if (dim.get_den() != 1)
    throw std::logic_error("Weyl dimension did not come out integral");
  return static_cast<long>(dim.get_num().get_si());
}

TensorElement::TensorElement(int genus, int sym_degree)
    : genus_(genus), sym_degree_(sym_degree) {
  check_genus(genus);
  if (sym_degree < 0)
    throw std::invalid_argument("symmetric degree must be >= 0");
}

TensorElement TensorElement::basis(int genus, const ExpVec& sym, int p, int q,
                                   const Rational& c) {
  TensorElement t(genus, total_degree(sym));
  t.add_term(sym, p, q, c);
  return t;
}

void TensorElement::add_term(const ExpVec& sym, int p, int q,
                             const Rational& c) {
  if (c == 0) return;
  if (sym.size() != 2 * static_cast<std::size_t>(genus_))
    throw std::invalid_argument("symmetric exponent has wrong length");
  if (total_degree(sym) != sym_degree_)
    throw std::invalid_argument("symmetric degree mismatch");
  if (p < 0 || q < 0 || p >= 2 * genus_ || q >= 2 * genus_)
    throw std::invalid_argument("wedge letter out of range");
  if (p == q) return;  // v ^ v = 0
  Rational coeff = c;
  if (p > q) {
    std::swap(p, q);
    coeff = -coeff;
  }
  Key key{sym, p, q};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& t) {
  if (genus_ != t.genus_ || sym_degree_ != t.sym_degree_)
    throw std::invalid_argument("tensor shape mismatch");
  for (const auto& [k, c] : t.terms_) add_term(k.sym, k.p, k.q, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& t) {
  if (genus_ != t.genus_ || sym_degree_ != t.sym_degree_)
    throw std::invalid_argument("tensor shape mismatch");
  for (const auto& [k, c] : t.terms_) add_term(k.sym, k.p, k.q, -c);
  return *this;
}

TensorElement operator+(TensorElement a, const TensorElement& b) {
  a += b;
  return a;
}

TensorElement operator-(TensorElement a, const TensorElement& b) {
  a -= b;
  return a;
}

TensorElement operator*(const Rational& c, TensorElement t) {
  if (c == 0) return TensorElement(t.genus_, t.sym_degree_);
  for (auto& [k, v] : t.terms_) v *= c;
  return t;
}

TensorElement TensorElement::sym_multiply(int letter) const {
  if (letter < 0 || letter >= 2 * genus_)
    throw std::invalid_argument("letter out of range");
  TensorElement out(genus_, sym_degree_ + 1);
  for (const auto& [k, c] : terms_) {
    ExpVec sym = k.sym;
    sym[static_cast<std::size_t>(letter)] += 1;
    out.add_term(sym, k.p, k.q, c);
  }
  return out;
}

TensorElement symplectic_form_tensor(int genus) {
  check_genus(genus);
  TensorElement t(genus, 0);
  ExpVec zero(2 * static_cast<std::size_t>(genus), 0);
  for (int i = 0; i < genus; ++i) t.add_term(zero, i, genus + i, 1);
  return t;
}

namespace {

// Action of a generator on the basis letters of H, as a sparse list of
// (source letter) -> (target letter, coefficient).
std::vector<std::pair<int, std::pair<int, int>>> letter_action(
    int genus, const SpGenerator& x) {
  if (x.index < 1 || x.index > genus)
    throw std::invalid_argument("generator index out of range 1..g");
  const int i = x.index - 1;  // 0-based
  std::vector<std::pair<int, std::pair<int, int>>> act;
  switch (x.kind) {
    case SpGenKind::cartan:
      act.push_back({i, {i, 1}});
      act.push_back({genus + i, {genus + i, -1}});
      break;
    case SpGenKind::raise:
      if (x.index < genus) {
        // root e_i - e_{i+1}: a_{i+1} -> a_i, b_i -> -b_{i+1}
        act.push_back({i + 1, {i, 1}});
        act.push_back({genus + i, {genus + i + 1, -1}});
      } else {
        // root 2 e_g: b_g -> a_g
        act.push_back({2 * genus - 1, {genus - 1, 1}});
      }
      break;
    case SpGenKind::lower:
      if (x.index < genus) {
        // a_i -> a_{i+1}, b_{i+1} -> -b_i
        act.push_back({i, {i + 1, 1}});
        act.push_back({genus + i + 1, {genus + i, -1}});
      } else {
        // a_g -> b_g
        act.push_back({genus - 1, {2 * genus - 1, 1}});
      }
      break;
  }
  return act;
}

}  // namespace

TensorElement sp_act(const SpGenerator& x, const TensorElement& t) {
  const int g = t.genus();
  auto act = letter_action(g, x);
  TensorElement out(g, t.sym_degree());
  for (const auto& [key, c] : t.terms()) {
    for (const auto& [src, img] : act) {
      const auto& [dst, s] = img;
      // Leibniz over the symmetric factor.
      int mult = key.sym[static_cast<std::size_t>(src)];
      if (mult > 0) {
        ExpVec sym = key.sym;
        sym[static_cast<std::size_t>(src)] -= 1;
        sym[static_cast<std::size_t>(dst)] += 1;
        out.add_term(sym, key.p, key.q, c * s * mult);
      }
      // Leibniz over the wedge factor.
      if (key.p == src) out.add_term(key.sym, dst, key.q, c * s);
      if (key.q == src) out.add_term(key.sym, key.p, dst, c * s);
    }
  }
  return out;
}

bool verify_highest_weight(const TensorElement& t,
                           const DominantWeight& lambda) {
  if (t.is_zero())
    throw std::invalid_argument("verify_highest_weight needs a nonzero input");
  if (t.genus() != lambda.genus)
    throw std::invalid_argument("genus mismatch");
  std::vector<int> lam = lambda.coords();
  for (int i = 1; i <= t.genus(); ++i) {
    TensorElement h = sp_act(SpGenerator{SpGenKind::cartan, i}, t);
    if (h != Rational(lam[static_cast<std::size_t>(i - 1)]) * t) return false;
  }
  for (int i = 1; i <= t.genus(); ++i) {
    if (!sp_act(SpGenerator{SpGenKind::raise, i}, t).is_zero()) return false;
  }
  return true;
}

DecompositionReport decomposition_check(int genus, int n) {
  if (genus < 2) throw std::invalid_argument("decomposition needs g >= 2");
  if (n < 1) throw std::invalid_argument("decomposition needs n >= 1");
  auto l = [&](int k, int c) { return fundamental_weight(genus, k, c); };

  DecompositionReport report;
  auto push = [&](const DominantWeight& w, int mult) {
    long d = weyl_dim(w);
    report.summands.push_back(Summand{w, mult, d});
    report.total += mult * d;
  };
  push(weight_sum(l(1, n), l(2, 1)), 1);
  push(l(1, n), 2);
  if (genus >= 3) push(weight_sum(l(1, n - 1), l(3, 1)), 1);
  if (n >= 2) push(weight_sum(l(1, n - 2), l(2, 1)), 1);

  // dim Sym^n(H) (x) Lambda^2 H = C(2g+n-1, n) * g(2g-1)
  Integer amb = binomial(2 * genus + n - 1, n) *
                Integer(genus * (2 * genus - 1));
  report.ambient = static_cast<long>(amb.get_si());
  report.pass = report.total == report.ambient;
  return report;
}

namespace {

// i(x^y^z) = x (x) y^z + y (x) z^x + z (x) x^y, for distinct basis letters.
TensorElement i_map(int genus, int x, int y, int z) {
  TensorElement out(genus, 1);
  if (x == y || y == z || x == z) return out;
  auto unit = [&](int letter) {
    ExpVec e(2 * static_cast<std::size_t>(genus), 0);
    e[static_cast<std::size_t>(letter)] = 1;
    return e;
  };
  out.add_term(unit(x), y, z, 1);
  out.add_term(unit(y), z, x, 1);
  out.add_term(unit(z), x, y, 1);
  return out;
}

// i(v ^ theta) = sum_j i(v ^ a_j ^ b_j) for a basis letter v.
TensorElement i_map_theta(int genus, int v) {
  TensorElement out(genus, 1);
  for (int j = 0; j < genus; ++j) out += i_map(genus, v, j, genus + j);
  return out;
}

TensorElement sym_power_multiply(const TensorElement& t, int letter,
                                 int power) {
  TensorElement out = t;
  for (int i = 0; i < power; ++i) out = out.sym_multiply(letter);
  return out;
}

}  // namespace

std::vector<std::pair<TensorElement, DominantWeight>> highest_weight_catalog(
    int genus, int n) {
  if (genus < 2) throw std::invalid_argument("catalog needs g >= 2");
  if (n < 0) throw std::invalid_argument("catalog needs n >= 0");
  auto l = [&](int k, int c) { return fundamental_weight(genus, k, c); };
  std::vector<std::pair<TensorElement, DominantWeight>> out;

  const int a1 = 0, a2 = 1, a3 = 2;
  ExpVec a1n(2 * static_cast<std::size_t>(genus), 0);
  a1n[0] = n;

  // a_1^n (x) a_1 ^ a_2, weight n*l1 + l2
  out.emplace_back(TensorElement::basis(genus, a1n, a1, a2),
                   weight_sum(l(1, n), l(2, 1)));
  // a_1^n (x) theta, weight n*l1
  out.emplace_back(sym_power_multiply(symplectic_form_tensor(genus), a1, n),
                   l(1, n));
  if (n >= 1) {
    // a_1^{n-1} * i(a_1 ^ theta), weight n*l1
    out.emplace_back(sym_power_multiply(i_map_theta(genus, a1), a1, n - 1),
                     l(1, n));
    if (genus >= 3) {
      // a_1^{n-1} * i(a_1 ^ a_2 ^ a_3), weight (n-1)*l1 + l3
      out.emplace_back(
          sym_power_multiply(i_map(genus, a1, a2, a3), a1, n - 1),
          weight_sum(l(1, n - 1), l(3, 1)));
    }
  }
  if (n >= 2) {
    // a_1^{n-2} a_2 * i(a_1 ^ theta) - a_1^{n-1} * i(a_2 ^ theta),
    // weight (n-2)*l1 + l2
    TensorElement v =
        sym_power_multiply(i_map_theta(genus, a1).sym_multiply(a2), a1,
                           n - 2) -
        sym_power_multiply(i_map_theta(genus, a2), a1, n - 1);
    out.emplace_back(std::move(v), weight_sum(l(1, n - 2), l(2, 1)));
  }
  return out;
}

AlexVector grading_map(const TensorElement& t) {
  const int g = t.genus();
  AlexVector out(g);
  for (const auto& [key, c] : t.terms()) {
    LaurentPoly scale = LaurentPoly::constant(g, c);
    for (std::size_t i = 0; i < key.sym.size(); ++i) {
      LaurentPoly shift = LaurentPoly::variable(g, static_cast<int>(i) + 1) -
                          LaurentPoly::constant(g, 1);
      for (int k = 0; k < key.sym[i]; ++k) scale = scale * shift;
    }
    AlexVector cls = alexander_class(
        commutator(FreeWord::generator(g, key.p + 1),
                   FreeWord::generator(g, key.q + 1)));
    out += module_scalar(scale, cls);
  }
  return out;
}

std::string to_string(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : t.terms()) {
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += a.get_str() + "*";
    std::string sym;
    for (std::size_t i = 0; i < key.sym.size(); ++i) {
      if (key.sym[i] == 0) continue;
      if (!sym.empty()) sym += '*';
      sym += letter_name(t.genus(), static_cast<int>(i));
      if (key.sym[i] != 1) sym += '^' + std::to_string(key.sym[i]);
    }
    if (sym.empty()) sym = "1";
    out += sym + " (x) " + letter_name(t.genus(), key.p) + "^" +
           letter_name(t.genus(), key.q);
  }
  return out;
}

}  // namespace alexinv
