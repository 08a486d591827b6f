#include "vogel/permutation.hpp"

#include "vogel/errors.hpp"

namespace vogel {

Permutation Permutation::from_word(std::string_view word) {
  if (word.size() != 3) throw ParseError("permutation must be a 3-letter word: " + std::string(word));
  std::array<std::size_t, 3> map{};
  std::array<bool, 3> seen{};
  for (std::size_t j = 0; j < 3; ++j) {
    char ch = word[j];
    if (ch < 'a' || ch > 'c') throw ParseError("bad permutation letter in: " + std::string(word));
    std::size_t slot = static_cast<std::size_t>(ch - 'a');
    if (seen[slot]) throw ParseError("repeated letter in permutation: " + std::string(word));
    seen[slot] = true;
    map[j] = slot;
  }
  return Permutation(map);
}

const std::array<Permutation, 6>& Permutation::all() {
  static const std::array<Permutation, 6> elements = {
      from_word("abc"), from_word("acb"), from_word("bac"),
      from_word("bca"), from_word("cab"), from_word("cba")};
  return elements;
}

std::string Permutation::word() const {
  std::string out(3, 'a');
  for (std::size_t j = 0; j < 3; ++j) out[j] = static_cast<char>('a' + map_[j]);
  return out;
}

bool Permutation::is_identity() const {
  return map_[0] == 0 && map_[1] == 1 && map_[2] == 2;
}

Permutation Permutation::compose(const Permutation& inner) const {
  std::array<std::size_t, 3> map{};
  for (std::size_t j = 0; j < 3; ++j) map[j] = map_[inner.map_[j]];
  return Permutation(map);
}

Permutation Permutation::inverse() const {
  std::array<std::size_t, 3> map{};
  for (std::size_t j = 0; j < 3; ++j) map[map_[j]] = j;
  return Permutation(map);
}

LinForm Permutation::apply(const LinForm& form) const {
  std::array<Rational, 3> out;
  for (std::size_t j = 0; j < 3; ++j) out[map_[j]] = form[j];
  return LinForm(out[0], out[1], out[2]);
}

}  // namespace vogel
