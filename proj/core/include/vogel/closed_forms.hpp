#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vogel/permutation.hpp"
#include "vogel/projective.hpp"
#include "vogel/sinh_product.hpp"

namespace vogel {

/// Classical series restricted to their distinguished line:
/// A = sl_{N+1}, B = so_{2N+1}, C = sp_{2N}, D = so_{2N}.
enum class Family { A, B, C, D };

std::string_view family_string(Family family);

/// Point, slot permutation and line the closed forms are written for.
struct FamilySetup {
  Permutation sigma;
  PLine line;
  /// Symbolic line factor appearing in some displays (zero on the line);
  /// absent for C.
  std::optional<LinForm> flag_form;
  long min_rank;
};

const FamilySetup& family_setup(Family family);
PPoint family_point(Family family, long N);

/// Hand-written closed form of Z(k,l) on the family line, with numeric
/// sinh arguments in units of x/4.
struct ClosedForm {
  std::string case_id;
  int sign = 1;
  std::vector<long> numerator;
  std::vector<long> denominator;
  /// Number of symbolic line factors in the numerator.
  int flags = 0;

  /// sign * prod sinh(n x/4) / prod sinh(d x/4) without the line factors.
  InstantiatedProduct nonzero_part() const;
};

/// Case label ("A1".."A8", "B1".."B6", "C1".."C3", "D1".."D12") covering
/// (k,l); throws OutOfCaseRange when none applies.
std::string case_for(Family family, int k, int l);

/// All case labels of a family.
std::vector<std::string> case_ids(Family family);

/// Throws OutOfCaseRange when (k,l,N) is outside the case.
ClosedForm closed_form(Family family, std::string_view case_id, int k, int l, long N);
/// The same display evaluated at (k, l, N) without the range check.
ClosedForm display_reading(Family family, std::string_view case_id, int k, int l, long N);

}  // namespace vogel
