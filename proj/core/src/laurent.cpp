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

#include "alexinv/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace alexinv {

namespace {

void check_genus(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
}

void check_same_genus(int a, int b) {
  if (a != b) throw std::invalid_argument("genus mismatch");
}

void check_index(int genus, int index) {
  if (index < 1 || index > 2 * genus)
    throw std::invalid_argument("variable index out of range 1..2g");
}

std::string monomial_string(const ExpVec& e, char var) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var;
    out += std::to_string(i + 1);
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string terms_string(const std::map<ExpVec, Rational, GrlexLess>& terms,
                         char var) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms) {
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono = monomial_string(e, var);
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(int genus) : genus_(genus) { check_genus(genus); }

LaurentPoly LaurentPoly::constant(int genus, const Rational& c) {
  LaurentPoly p(genus);
  p.add_term(ExpVec(2 * static_cast<std::size_t>(genus), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int genus, const ExpVec& exp,
                                  const Rational& c) {
  LaurentPoly p(genus);
  if (exp.size() != 2 * static_cast<std::size_t>(genus))
    throw std::invalid_argument("exponent vector has wrong length");
  p.add_term(exp, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int genus, int index, int power) {
  check_genus(genus);
  check_index(genus, index);
  ExpVec e(2 * static_cast<std::size_t>(genus), 0);
  e[index - 1] = power;
  return monomial(genus, e, 1);
}

void LaurentPoly::add_term(const ExpVec& exp, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& p) {
  check_same_genus(genus_, p.genus_);
  for (const auto& [e, c] : p.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& p) {
  check_same_genus(genus_, p.genus_);
  for (const auto& [e, c] : p.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
  a += b;
  return a;
}

LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
  a -= b;
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_genus(a.genus_, b.genus_);
  LaurentPoly out(a.genus_);
  ExpVec e(2 * static_cast<std::size_t>(a.genus_), 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
  LaurentPoly out(p.genus_);
  if (c == 0) return out;
  for (const auto& [e, v] : p.terms_) out.terms_.emplace(e, c * v);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  return Rational(-1) * (*this);
}

Rational augmentation(const LaurentPoly& p) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c;
  return sum;
}

ShiftedTruncation::ShiftedTruncation(int genus, int bound)
    : genus_(genus), bound_(bound) {
  check_genus(genus);
  if (bound < 1) throw std::invalid_argument("truncation bound must be >= 1");
}

ShiftedTruncation ShiftedTruncation::monomial(int genus, int bound,
                                              const ExpVec& exp,
                                              const Rational& c) {
  ShiftedTruncation p(genus, bound);
  if (exp.size() != 2 * static_cast<std::size_t>(genus))
    throw std::invalid_argument("exponent vector has wrong length");
  for (int v : exp) {
    if (v < 0)
      throw std::invalid_argument("shifted monomials need exponents >= 0");
  }
  p.add_term(exp, c);
  return p;
}

void ShiftedTruncation::add_term(const ExpVec& exp, const Rational& c) {
  if (c == 0 || total_degree(exp) >= bound_) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ShiftedTruncation& ShiftedTruncation::operator+=(const ShiftedTruncation& q) {
  check_same_genus(genus_, q.genus_);
  if (bound_ != q.bound_)
    throw std::invalid_argument("truncation bound mismatch");
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

ShiftedTruncation operator+(ShiftedTruncation a, const ShiftedTruncation& b) {
  a += b;
  return a;
}

ShiftedTruncation operator*(const ShiftedTruncation& a,
                            const ShiftedTruncation& b) {
  check_same_genus(a.genus_, b.genus_);
  if (a.bound_ != b.bound_)
    throw std::invalid_argument("truncation bound mismatch");
  ShiftedTruncation out(a.genus_, a.bound_);
  ExpVec e(2 * static_cast<std::size_t>(a.genus_), 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      if (total_degree(ea) + total_degree(eb) >= a.bound_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

ShiftedTruncation operator*(const Rational& c, ShiftedTruncation p) {
  if (c == 0) return ShiftedTruncation(p.genus_, p.bound_);
  for (auto& [e, v] : p.terms_) v *= c;
  return p;
}

int ShiftedTruncation::min_degree() const {
  if (terms_.empty()) return bound_;
  return total_degree(terms_.begin()->first);  // grlex: first term is minimal
}

ShiftedTruncation shifted_expand(const LaurentPoly& p, int bound) {
  ShiftedTruncation out(p.genus(), bound);
  const std::size_t nv = static_cast<std::size_t>(p.nvars());
  for (const auto& [exp, coeff] : p.terms()) {
    // x^exp = prod_i (1 + y_i)^{exp_i}, each factor expanded by the
    // (generalized, for negative exponents) binomial series below degree
    // `bound`.
    ShiftedTruncation term(p.genus(), bound);
    term += ShiftedTruncation::monomial(p.genus(), bound, ExpVec(nv, 0),
                                        coeff);
    for (std::size_t i = 0; i < nv; ++i) {
      if (exp[i] == 0) continue;
      ShiftedTruncation factor(p.genus(), bound);
      for (int k = 0; k < bound; ++k) {
        Integer b = binomial(exp[i], k);
        if (b == 0) continue;
        ExpVec e(nv, 0);
        e[i] = k;
        factor += ShiftedTruncation::monomial(p.genus(), bound, e,
                                              Rational(b));
      }
      term = term * factor;
    }
    out += term;
  }
  return out;
}

int j_valuation(const LaurentPoly& p, int bound) {
  return shifted_expand(p, bound).min_degree();
}

LaurentPoly evaluate_at_one(const LaurentPoly& p, int index) {
  check_index(p.genus(), index);
  LaurentPoly out(p.genus());
  for (const auto& [e, c] : p.terms()) {
    ExpVec e2 = e;
    e2[index - 1] = 0;
    out += LaurentPoly::monomial(p.genus(), e2, c);
  }
  return out;
}

std::optional<LaurentPoly> divide_by_one_minus(const LaurentPoly& p,
                                               int index) {
  check_index(p.genus(), index);
  if (p.is_zero()) return LaurentPoly(p.genus());
  // Clear negative powers of x_index: (1 - x) | p  iff  (1 - x) | x^s p.
  int min_exp = 0;
  for (const auto& [e, c] : p.terms())
    min_exp = std::min(min_exp, e[index - 1]);
  LaurentPoly work =
      LaurentPoly::variable(p.genus(), index, -min_exp) * p;
  // Repeatedly eliminate the top x_index-degree d > 0 with quotient term
  // -c x^{d-1}: (1 - x)(-c x^{d-1}) = c x^d - c x^{d-1}.
  LaurentPoly quotient(p.genus());
  while (true) {
    int top = 0;
    for (const auto& [e, c] : work.terms())
      top = std::max(top, e[index - 1]);
    if (top == 0) break;
    LaurentPoly step(p.genus());
    for (const auto& [e, c] : work.terms()) {
      if (e[index - 1] != top) continue;
      ExpVec e2 = e;
      e2[index - 1] = top - 1;
      step += LaurentPoly::monomial(p.genus(), e2, -c);
    }
    quotient += step;
    LaurentPoly one_minus = LaurentPoly::constant(p.genus(), 1) -
                            LaurentPoly::variable(p.genus(), index);
    work -= one_minus * step;
  }
  if (!work.is_zero()) return std::nullopt;  // constant-in-x remainder
  return LaurentPoly::variable(p.genus(), index, min_exp) * quotient;
}

namespace {

// Recursive-descent parser for the polynomial expression syntax.
class PolyParser {
 public:
  PolyParser(int genus, std::string_view text) : genus_(genus), text_(text) {}

  LaurentPoly parse() {
    LaurentPoly p = expression();
    skip_ws();
    if (pos_ != text_.size())
      throw std::invalid_argument("trailing input in polynomial expression");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(
                                      text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  LaurentPoly expression() {
    LaurentPoly p = eat('-') ? -term() : term();
    while (true) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  LaurentPoly factor() {
    LaurentPoly base = atom();
    if (eat('^')) {
      long e = integer();
      if (e >= 0) {
        LaurentPoly out = LaurentPoly::constant(genus_, 1);
        for (long i = 0; i < e; ++i) out = out * base;
        return out;
      }
      // Negative powers only make sense for single Laurent monomials.
      if (base.terms().size() != 1)
        throw std::invalid_argument(
            "negative powers are limited to monomials");
      const auto& [exp, c] = *base.terms().begin();
      if (c != 1 && c != -1)
        throw std::invalid_argument(
            "negative powers are limited to monomials with coefficient +-1");
      ExpVec ne(exp.size());
      for (std::size_t i = 0; i < exp.size(); ++i)
        ne[i] = static_cast<int>(e) * exp[i];
      Rational nc = (c == -1 && (e % 2) != 0) ? Rational(-1) : Rational(1);
      return LaurentPoly::monomial(genus_, ne, nc);
    }
    return base;
  }

  LaurentPoly atom() {
    skip_ws();
    if (eat('(')) {
      LaurentPoly p = expression();
      if (!eat(')'))
        throw std::invalid_argument("missing ')' in polynomial expression");
      return p;
    }
    char c = peek();
    if (c == 'x' || c == 'a' || c == 'b') {
      ++pos_;
      long n = integer();
      int index = 0;
      if (c == 'x') {
        index = static_cast<int>(n);
      } else {
        if (n < 1 || n > genus_)
          throw std::invalid_argument("alias index out of range 1..g");
        index = c == 'a' ? a_index_local(static_cast<int>(n))
                         : b_index_local(static_cast<int>(n));
      }
      check_index(genus_, index);
      return LaurentPoly::variable(genus_, index);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      if (eat('/')) {
        long den = integer();
        if (den == 0) throw std::invalid_argument("zero denominator");
        return LaurentPoly::constant(genus_, make_rational(num, den));
      }
      return LaurentPoly::constant(genus_, Rational(num));
    }
    throw std::invalid_argument("unexpected character in polynomial: " +
                                std::string(1, c));
  }

  long integer() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw std::invalid_argument("expected integer in polynomial expression");
    long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  int a_index_local(int i) const { return i; }
  int b_index_local(int i) const { return genus_ + i; }

  int genus_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(int genus, std::string_view text) {
  return PolyParser(genus, text).parse();
}

std::string to_string(const LaurentPoly& p) {
  return terms_string(p.terms(), 'x');
}

std::string to_string(const ShiftedTruncation& p) {
  return terms_string(p.terms(), 'y');
}

}  // namespace alexinv
