#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vogel/projective.hpp"
#include "vogel/rational.hpp"

namespace vogel {

enum class Region { physical, nonphysical, family };

std::string_view region_string(Region region);

struct CatalogEntry {
  std::string name;
  PPoint coords;
  std::optional<BigInt> dim;
  std::optional<int> rank;
  std::vector<PLine> lines;
  Region region;
};

/// Every distinguished line (any slot permutation) through p. Lines are
/// listed by name (sl, so, sp, exc), then permutation word; permutations
/// giving the same zero set are reported once.
std::vector<PLine> lines_through(const PPoint& p);

/// "E8", "Y:32", "Y:6p", "sl:5", "so:8", "sp:6", "exc:-2/3".
/// Throws UnknownName or InvalidFamilyParameter.
CatalogEntry lookup(std::string_view name);

/// Table order: 8 physical points, then 48 Y entries.
const std::vector<CatalogEntry>& isolated_entries();

/// Isolated entries of one region (family yields nothing here).
std::vector<CatalogEntry> enumerate(Region region);

/// Family members sl/so/sp with first <= N <= last in ascending order
/// (sp skips odd N); "exc" returns all six exceptional-line points and
/// ignores the range.
std::vector<CatalogEntry> enumerate_family(std::string_view family, long first, long last);

/// Isolated entries followed by the exceptional line and sl 2..12,
/// so 5..12, sp 2..24.
std::vector<CatalogEntry> full_catalog();

/// Six values of n on the exceptional line, in increasing order.
const std::vector<Rational>& exceptional_parameters();

}  // namespace vogel
