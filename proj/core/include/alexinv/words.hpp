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

#ifndef ALEXINV_WORDS_HPP
#define ALEXINV_WORDS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace alexinv {

// One letter of a free-group word: generator index in 1..2g and sign +-1.
// Convention throughout: a_i = x_i and b_i = x_{g+i}, so the genus-g surface
// relator is [x_1, x_{g+1}] ... [x_g, x_{2g}].
struct Letter {
  int index;
  int sign;
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline int a_index(int /*genus*/, int i) { return i; }
inline int b_index(int genus, int i) { return genus + i; }

// A freely reduced word in the free group on 2g generators. Every
// constructor reduces, so a FreeWord is reduced at all times; all operations
// preserve that invariant. Pure value type, safe for concurrent use.
class FreeWord {
 public:
  explicit FreeWord(int genus);
  // Reduces the raw letter sequence. Throws std::invalid_argument if a
  // letter index is out of 1..2g or a sign is not +-1.
  FreeWord(int genus, const std::vector<Letter>& raw);

  static FreeWord generator(int genus, int index, int sign = 1);

  int genus() const { return genus_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord pow(int n) const;

  friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  int genus_;
  std::vector<Letter> letters_;
};

// [u, v] = u v u^-1 v^-1
FreeWord commutator(const FreeWord& u, const FreeWord& v);
// a^b = b^-1 a b
FreeWord conjugate(const FreeWord& a, const FreeWord& b);

// Total exponent of each generator; the abelianization map onto Z^{2g}.
std::vector<long> abelianize(const FreeWord& w);

// The surface relator [x_1, x_{g+1}] ... [x_g, x_{2g}].
FreeWord surface_relator(int genus);

FreeWord cyclic_reduce(const FreeWord& w);
// True iff u and v are literal conjugates detected by cyclic reduction plus
// rotation matching. Sufficient for relator-image checks, where the image is
// always a literal conjugate of the relator.
bool conjugate_as_cyclic_words(const FreeWord& u, const FreeWord& v);

// Generator images defining a substitution endomorphism of the free group.
// No automorphy is assumed at construction; dedicated predicates below check
// the properties the rest of the library needs.
class EndoImages {
 public:
  static EndoImages identity(int genus);
  EndoImages(int genus, std::vector<FreeWord> images);

  int genus() const { return genus_; }
  const FreeWord& image(int index) const;  // index 1..2g

 private:
  int genus_;
  std::vector<FreeWord> images_;
};

FreeWord apply_endo(const EndoImages& e, const FreeWord& w);
// (e after f): x -> e(f(x))
EndoImages compose(const EndoImages& e, const EndoImages& f);
// True iff every generator image abelianizes to that generator.
bool fixes_homology(const EndoImages& e);

// Word literal syntax: whitespace-separated tokens `x<k>` or `x<k>^-1`, with
// aliases `a<i>` = `x<i>` and `b<i>` = `x<g+i>`. The empty string denotes the
// identity.
FreeWord parse_word(int genus, std::string_view text);
std::string to_string(const FreeWord& w);

}  // namespace alexinv

#endif  // ALEXINV_WORDS_HPP
