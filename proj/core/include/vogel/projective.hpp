#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "vogel/linform.hpp"
#include "vogel/permutation.hpp"
#include "vogel/rational.hpp"

namespace vogel {

using Vec3 = std::array<Rational, 3>;

/// Projective point (alpha:beta:gamma). The given representative is kept
/// as-is; equality is proportionality.
class PPoint {
 public:
  /// Throws vogel::Error when all three coordinates vanish.
  explicit PPoint(Vec3 coords);
  PPoint(Rational alpha, Rational beta, Rational gamma);
  static PPoint from_ints(long alpha, long beta, long gamma);

  /// "a,b,c" with rational entries.
  static PPoint parse(std::string_view text);

  const Vec3& coords() const { return coords_; }
  const Rational& operator[](std::size_t slot) const { return coords_[slot]; }

  Rational t() const { return coords_[0] + coords_[1] + coords_[2]; }

  PPoint scaled(const Rational& lambda) const;
  bool is_integral() const;

  std::string to_string() const;

  friend bool operator==(const PPoint& a, const PPoint& b);

 private:
  Vec3 coords_;
};

PPoint act(const Permutation& sigma, const PPoint& p);
PPoint pullback(const Permutation& sigma, const PPoint& p);

bool proportional(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);
/// p + t*v, componentwise.
Vec3 shifted(const Vec3& p, const Rational& t, const Vec3& v);

Rational eval_form(const LinForm& form, const Vec3& point);
Rational eval_form(const LinForm& form, const PPoint& point);

enum class LineName { sl, so, sp, exc };

std::string_view line_name_string(LineName name);
std::optional<LineName> parse_line_name(std::string_view text);
/// Base form of a distinguished line before any slot permutation.
LinForm line_base_form(LineName name);

/// Zero set of a nonzero linear form, optionally tagged with a distinguished
/// name and the slot permutation used to place it.
class PLine {
 public:
  explicit PLine(LinForm form);
  static PLine named(LineName name, const Permutation& perm = Permutation());

  const LinForm& form() const { return form_; }
  const std::optional<LineName>& name() const { return name_; }
  const Permutation& perm() const { return perm_; }

  bool contains(const PPoint& p) const { return eval_form(form_, p) == 0; }

  /// "so", "so:cba" or the bare form.
  std::string label() const;

 private:
  LinForm form_;
  std::optional<LineName> name_;
  Permutation perm_;
};

/// A direction v along `line` through p, not proportional to p.
/// Throws NotOnLine when p is off the line.
Vec3 line_direction(const PLine& line, const PPoint& p);

}  // namespace vogel
