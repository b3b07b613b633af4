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

#include "alexinv/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace alexinv {

namespace {

void check_genus(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
}

void check_letter(int genus, const Letter& l) {
  if (l.index < 1 || l.index > 2 * genus)
    throw std::invalid_argument("generator index out of range 1..2g");
  if (l.sign != 1 && l.sign != -1)
    throw std::invalid_argument("letter sign must be +1 or -1");
}

// Stack-based free reduction: one pass, cancelling adjacent inverse pairs.
std::vector<Letter> reduce_letters(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!out.empty() && out.back().index == l.index &&
        out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

FreeWord::FreeWord(int genus) : genus_(genus) { check_genus(genus); }

FreeWord::FreeWord(int genus, const std::vector<Letter>& raw) : genus_(genus) {
  check_genus(genus);
  for (const Letter& l : raw) check_letter(genus, l);
  letters_ = reduce_letters(raw);
}

FreeWord FreeWord::generator(int genus, int index, int sign) {
  return FreeWord(genus, {Letter{index, sign}});
}

FreeWord FreeWord::inverse() const {
  FreeWord out(genus_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(Letter{it->index, -it->sign});
  return out;  // reversal of a reduced word is reduced
}

FreeWord FreeWord::pow(int n) const {
  FreeWord base = n >= 0 ? *this : inverse();
  FreeWord out(genus_);
  for (int i = 0; i < std::abs(n); ++i) out = out * base;
  return out;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  if (u.genus_ != v.genus_)
    throw std::invalid_argument("genus mismatch in word product");
  FreeWord out(u.genus_);
  out.letters_ = u.letters_;
  for (const Letter& l : v.letters_) {
    if (!out.letters_.empty() && out.letters_.back().index == l.index &&
        out.letters_.back().sign == -l.sign) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return u * v * u.inverse() * v.inverse();
}

FreeWord conjugate(const FreeWord& a, const FreeWord& b) {
  return b.inverse() * a * b;
}

std::vector<long> abelianize(const FreeWord& w) {
  std::vector<long> e(2 * static_cast<std::size_t>(w.genus()), 0);
  for (const Letter& l : w.letters()) e[l.index - 1] += l.sign;
  return e;
}

FreeWord surface_relator(int genus) {
  FreeWord out(genus);
  for (int i = 1; i <= genus; ++i) {
    out = out * commutator(FreeWord::generator(genus, i),
                           FreeWord::generator(genus, genus + i));
  }
  return out;
}

FreeWord cyclic_reduce(const FreeWord& w) {
  std::vector<Letter> ls = w.letters();
  while (ls.size() >= 2 && ls.front().index == ls.back().index &&
         ls.front().sign == -ls.back().sign) {
    ls.erase(ls.begin());
    ls.pop_back();
  }
  return FreeWord(w.genus(), ls);
}

bool conjugate_as_cyclic_words(const FreeWord& u, const FreeWord& v) {
  if (u.genus() != v.genus())
    throw std::invalid_argument("genus mismatch in conjugacy check");
  const std::vector<Letter> cu = cyclic_reduce(u).letters();
  const std::vector<Letter> cv = cyclic_reduce(v).letters();
  if (cu.size() != cv.size()) return false;
  if (cu.empty()) return true;
  for (std::size_t shift = 0; shift < cu.size(); ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < cu.size(); ++i) {
      if (!(cu[(shift + i) % cu.size()] == cv[i])) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

EndoImages EndoImages::identity(int genus) {
  std::vector<FreeWord> images;
  images.reserve(2 * static_cast<std::size_t>(genus));
  for (int i = 1; i <= 2 * genus; ++i)
    images.push_back(FreeWord::generator(genus, i));
  return EndoImages(genus, std::move(images));
}

EndoImages::EndoImages(int genus, std::vector<FreeWord> images)
    : genus_(genus), images_(std::move(images)) {
  check_genus(genus);
  if (images_.size() != 2 * static_cast<std::size_t>(genus))
    throw std::invalid_argument("endomorphism needs 2g generator images");
  for (const FreeWord& w : images_) {
    if (w.genus() != genus)
      throw std::invalid_argument("genus mismatch in endomorphism images");
  }
}

const FreeWord& EndoImages::image(int index) const {
  if (index < 1 || index > 2 * genus_)
    throw std::invalid_argument("generator index out of range 1..2g");
  return images_[static_cast<std::size_t>(index - 1)];
}

FreeWord apply_endo(const EndoImages& e, const FreeWord& w) {
  if (e.genus() != w.genus())
    throw std::invalid_argument("genus mismatch in endomorphism application");
  FreeWord out(w.genus());
  for (const Letter& l : w.letters()) {
    const FreeWord& img = e.image(l.index);
    out = out * (l.sign > 0 ? img : img.inverse());
  }
  return out;
}

EndoImages compose(const EndoImages& e, const EndoImages& f) {
  if (e.genus() != f.genus())
    throw std::invalid_argument("genus mismatch in endomorphism composition");
  std::vector<FreeWord> images;
  images.reserve(2 * static_cast<std::size_t>(e.genus()));
  for (int i = 1; i <= 2 * e.genus(); ++i)
    images.push_back(apply_endo(e, f.image(i)));
  return EndoImages(e.genus(), std::move(images));
}

bool fixes_homology(const EndoImages& e) {
  for (int i = 1; i <= 2 * e.genus(); ++i) {
    std::vector<long> ab = abelianize(e.image(i));
    for (int j = 1; j <= 2 * e.genus(); ++j) {
      if (ab[j - 1] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

FreeWord parse_word(int genus, std::string_view text) {
  check_genus(genus);
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    std::string_view t = tok;
    auto caret = t.find('^');
    if (caret != std::string_view::npos) {
      std::string_view exp = t.substr(caret + 1);
      if (exp == "-1") {
        sign = -1;
      } else if (exp != "1") {
        throw std::invalid_argument("word token exponent must be 1 or -1: " +
                                    tok);
      }
      t = t.substr(0, caret);
    }
    if (t.size() < 2)
      throw std::invalid_argument("malformed word token: " + tok);
    char kind = t[0];
    int num = 0;
    auto [ptr, ec] =
        std::from_chars(t.data() + 1, t.data() + t.size(), num);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw std::invalid_argument("malformed word token: " + tok);
    int index = 0;
    if (kind == 'x') {
      index = num;
    } else if (kind == 'a') {
      index = a_index(genus, num);
      if (num < 1 || num > genus)
        throw std::invalid_argument("alias a<i> needs 1 <= i <= g: " + tok);
    } else if (kind == 'b') {
      index = b_index(genus, num);
      if (num < 1 || num > genus)
        throw std::invalid_argument("alias b<i> needs 1 <= i <= g: " + tok);
    } else {
      throw std::invalid_argument("malformed word token: " + tok);
    }
    letters.push_back(Letter{index, sign});
  }
  return FreeWord(genus, letters);
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace alexinv
