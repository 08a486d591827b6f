#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vogel/catalog.hpp"
#include "vogel/laurent.hpp"
#include "vogel/resolver.hpp"
#include "vogel/scanner.hpp"

namespace vogel {

/// {granularity, terms: [[exponent_numerator, coefficient], ...]} ascending.
nlohmann::json to_json(const LaurentPoly& poly);
nlohmann::json to_json(const InstantiatedProduct& e);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const ResolvedLimit& r);
nlohmann::json to_json(const CatalogEntry& entry);
/// Timing is omitted unless requested so equal scopes give equal bytes.
nlohmann::json to_json(const SurveyReport& report, bool include_timing = false);

std::string to_text(const SurveyReport& report);

/// name,alpha,beta,gamma,dim,rank,lines,region
std::string catalog_csv(const std::vector<CatalogEntry>& entries);
nlohmann::json catalog_json(const std::vector<CatalogEntry>& entries);

}  // namespace vogel
