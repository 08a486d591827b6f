#include "vogel/catalog.hpp"

#include <array>

#include "vogel/errors.hpp"

namespace vogel {

namespace {

struct Row {
  const char* name;
  long alpha;
  long beta;
  long gamma;
  long dim;
  int rank;
};

constexpr std::array<Row, 8> kPhysical = {{
    {"E8", -6, -10, 1, 248, 8},
    {"E7.5", -8, 1, -5, 190, 8},
    {"X1", -4, 1, -7, 156, 8},
    {"E7", -6, -4, 1, 133, 7},
    {"X2", 1, -3, -5, 99, 7},
    {"E6", -3, -4, 1, 78, 6},
    {"F4", -6, 2, -5, 52, 4},
    {"G2", 3, -5, -4, 14, 2},
}};

constexpr std::array<Row, 48> kNonphysical = {{
    {"Y:1", 1, 1, 1, -125, -19},    {"Y:2", 10, 8, 7, -129, -1},    {"Y:3", 6, 4, 5, -130, -4},
    {"Y:4", 2, 2, 3, -132, -10},    {"Y:5", 5, 7, 8, -132, -2},     {"Y:6", 5, 8, 6, -132, -2},
    {"Y:6p", 4, 5, 3, -133, -2},    {"Y:7", 4, 7, 5, -135, -3},     {"Y:8", 7, 6, 4, -135, -3},
    {"Y:9", 2, 4, 3, -140, -8},     {"Y:10", 2, 1, 2, -144, -14},   {"Y:11", 2, 1, 1, -147, -17},
    {"Y:12", 7, 3, 4, -150, -4},    {"Y:13", 2, 4, 5, -153, -7},    {"Y:14", 5, 3, 2, -153, -7},
    {"Y:15", 1, 2, 3, -165, -13},   {"Y:16", 2, 6, 5, -168, -6},    {"Y:17", 6, 2, 7, -184, -6},
    {"Y:18", 4, 5, 13, -186, -2},   {"Y:19", 3, 10, 4, -186, -4},   {"Y:20", 3, 7, 2, -187, -7},
    {"Y:21", 1, 1, 3, -189, -17},   {"Y:22", 11, 5, 3, -189, -3},   {"Y:23", 4, 1, 3, -195, -11},
    {"Y:24", 2, 1, 4, -195, -13},   {"Y:25", 3, 11, 4, -200, -4},   {"Y:26", 2, 3, 8, -207, -7},
    {"Y:27", 2, 5, 9, -207, -5},    {"Y:28", 3, 1, 5, -221, -11},   {"Y:29", 1, 4, 5, -228, -10},
    {"Y:30", 2, 1, 5, -231, -13},   {"Y:31", 4, 1, 1, -242, -18},   {"Y:32", 6, 5, 22, -244, -2},
    {"Y:33", 18, 4, 5, -245, -3},   {"Y:34", 14, 4, 3, -247, -5},   {"Y:35", 10, 2, 3, -252, -8},
    {"Y:36", 1, 4, 6, -252, -10},   {"Y:37", 3, 5, 16, -258, -4},   {"Y:38", 6, 1, 2, -272, -14},
    {"Y:39", 1, 3, 7, -285, -11},   {"Y:40", 1, 5, 7, -285, -9},    {"Y:41", 14, 2, 5, -296, -6},
    {"Y:42", 6, 8, 1, -319, -9},    {"Y:43", 1, 3, 8, -322, -12},   {"Y:44", 4, 1, 9, -342, -10},
    {"Y:45", 10, 1, 4, -377, -11},  {"Y:46", 12, 1, 5, -434, -10},  {"Y:47", 1, 6, 14, -492, -10},
}};

CatalogEntry from_row(const Row& row, Region region) {
  PPoint p = PPoint::from_ints(row.alpha, row.beta, row.gamma);
  return CatalogEntry{row.name, p, BigInt(row.dim), row.rank, lines_through(p), region};
}

long parse_long(std::string_view text, std::string_view name) {
  Rational value;
  try {
    value = parse_rational(text);
  } catch (const ParseError&) {
    throw UnknownName("unknown catalog name: " + std::string(name));
  }
  if (!is_integer(value)) throw InvalidFamilyParameter("family rank must be an integer: " + std::string(name));
  return value.get_num().get_si();
}

CatalogEntry family_entry(std::string_view family, const Rational& param, std::string_view name) {
  CatalogEntry e{std::string(name), PPoint::from_ints(1, 0, 0), std::nullopt, std::nullopt, {}, Region::family};
  if (family == "exc") {
    const auto& allowed = exceptional_parameters();
    static const std::array<long, 6> dims = {14, 28, 52, 78, 133, 248};
    std::size_t index = allowed.size();
    for (std::size_t i = 0; i < allowed.size(); ++i) {
      if (allowed[i] == param) index = i;
    }
    if (index == allowed.size()) {
      throw InvalidFamilyParameter("exc(n) needs n in {-2/3,0,1,2,4,8}: " + std::string(name));
    }
    e.name = "exc:" + to_string(param);
    e.coords = PPoint(Rational(-2), 2 * param + 4, param + 4);
    if (!e.coords.is_integral()) e.coords = e.coords.scaled(Rational(3));
    e.dim = BigInt(dims[index]);
  } else {
    if (!is_integer(param)) throw InvalidFamilyParameter("family rank must be an integer: " + std::string(name));
    long n = param.get_num().get_si();
    e.name = std::string(family) + ":" + std::to_string(n);
    BigInt big(n);
    if (family == "sl") {
      if (n < 2) throw InvalidFamilyParameter("sl needs N >= 2");
      e.coords = PPoint::from_ints(-2, 2, n);
      e.dim = big * big - 1;
    } else if (family == "so") {
      if (n < 3) throw InvalidFamilyParameter("so needs N >= 3");
      e.coords = PPoint::from_ints(-2, 4, n - 4);
      e.dim = big * (big - 1) / 2;
    } else if (family == "sp") {
      if (n < 2 || n % 2 != 0) throw InvalidFamilyParameter("sp needs an even N >= 2");
      e.coords = PPoint::from_ints(-2, 1, n / 2 + 2);
      e.dim = big * (big + 1) / 2;
    } else {
      throw UnknownName("unknown catalog name: " + std::string(name));
    }
  }
  e.lines = lines_through(e.coords);
  return e;
}

}  // namespace

std::string_view region_string(Region region) {
  switch (region) {
    case Region::physical: return "physical";
    case Region::nonphysical: return "nonphysical";
    case Region::family: return "family";
  }
  return "?";
}

const std::vector<Rational>& exceptional_parameters() {
  static const std::vector<Rational> values = {Rational(-2, 3), Rational(0), Rational(1),
                                               Rational(2), Rational(4), Rational(8)};
  return values;
}

std::vector<PLine> lines_through(const PPoint& p) {
  std::vector<PLine> out;
  for (LineName name : {LineName::sl, LineName::so, LineName::sp, LineName::exc}) {
    std::vector<LinForm> seen;
    for (const Permutation& sigma : Permutation::all()) {
      PLine line = PLine::named(name, sigma);
      if (!line.contains(p)) continue;
      bool duplicate = false;
      for (const LinForm& f : seen) duplicate = duplicate || proportional(f, line.form());
      if (duplicate) continue;
      seen.push_back(line.form());
      out.push_back(line);
    }
  }
  return out;
}

const std::vector<CatalogEntry>& isolated_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const Row& row : kPhysical) out.push_back(from_row(row, Region::physical));
    for (const Row& row : kNonphysical) out.push_back(from_row(row, Region::nonphysical));
    return out;
  }();
  return entries;
}

CatalogEntry lookup(std::string_view name) {
  for (const CatalogEntry& e : isolated_entries()) {
    if (e.name == name) return e;
  }
  std::size_t colon = name.find(':');
  if (colon == std::string_view::npos) throw UnknownName("unknown catalog name: " + std::string(name));
  std::string_view family = name.substr(0, colon);
  std::string_view arg = name.substr(colon + 1);
  if (family == "exc") {
    Rational param;
    try {
      param = parse_rational(arg);
    } catch (const ParseError&) {
      throw UnknownName("unknown catalog name: " + std::string(name));
    }
    return family_entry(family, param, name);
  }
  if (family != "sl" && family != "so" && family != "sp") {
    throw UnknownName("unknown catalog name: " + std::string(name));
  }
  return family_entry(family, Rational(parse_long(arg, name)), name);
}

std::vector<CatalogEntry> enumerate(Region region) {
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : isolated_entries()) {
    if (e.region == region) out.push_back(e);
  }
  return out;
}

std::vector<CatalogEntry> enumerate_family(std::string_view family, long first, long last) {
  std::vector<CatalogEntry> out;
  if (family == "exc") {
    for (const Rational& n : exceptional_parameters()) out.push_back(family_entry("exc", n, "exc"));
    return out;
  }
  for (long n = first; n <= last; ++n) {
    if (family == "sp" && n % 2 != 0) continue;
    out.push_back(family_entry(family, Rational(n), std::string(family) + ":" + std::to_string(n)));
  }
  return out;
}

std::vector<CatalogEntry> full_catalog() {
  std::vector<CatalogEntry> out = isolated_entries();
  for (auto part : {enumerate_family("exc", 0, 0), enumerate_family("sl", 2, 12),
                    enumerate_family("so", 5, 12), enumerate_family("sp", 2, 24)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace vogel
