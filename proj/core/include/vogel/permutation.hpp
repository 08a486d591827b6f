#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "vogel/linform.hpp"

namespace vogel {

/// Element of S3 acting on the slots (alpha, beta, gamma).
///
/// Written as a word over {a,b,c}: letter j names the point coordinate that
/// feeds formula slot j. "abc" is the identity, "bca" feeds beta into the
/// first slot, gamma into the second and alpha into the third.
class Permutation {
 public:
  Permutation() = default;

  /// Throws ParseError unless `word` is one of abc, acb, bac, bca, cab, cba.
  static Permutation from_word(std::string_view word);
  /// All six elements in lexicographic word order.
  static const std::array<Permutation, 6>& all();

  std::size_t operator[](std::size_t slot) const { return map_[slot]; }
  std::string word() const;
  bool is_identity() const;

  /// (this o inner): applying the result equals applying inner, then this.
  Permutation compose(const Permutation& inner) const;
  Permutation inverse() const;

  /// Moves the coefficient of slot j to slot map[j].
  LinForm apply(const LinForm& form) const;

  /// (sigma . x)_{map[j]} = x_j.
  template <class Triple>
  Triple act(const Triple& x) const {
    Triple out = x;
    for (std::size_t j = 0; j < 3; ++j) out[map_[j]] = x[j];
    return out;
  }
  /// sigma^{-1} . x, i.e. y_j = x_{map[j]}. Evaluating apply(form) at x
  /// equals evaluating form at pullback(x).
  template <class Triple>
  Triple pullback(const Triple& x) const {
    Triple out = x;
    for (std::size_t j = 0; j < 3; ++j) out[j] = x[map_[j]];
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.map_ == b.map_;
  }

 private:
  explicit Permutation(std::array<std::size_t, 3> map) : map_(map) {}
  std::array<std::size_t, 3> map_{0, 1, 2};
};

inline LinForm apply_permutation(const Permutation& sigma, const LinForm& form) {
  return sigma.apply(form);
}

}  // namespace vogel
