#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mckay/dimension.hpp"
#include "mckay/invariants.hpp"

namespace mckay {

struct AnalysisOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::optional<std::size_t> max_degree;      // defaults to 4m
  std::optional<std::size_t> relation_bound;  // defaults to default_relation_bound
  bool timing = false;
};

struct AnalysisReport {
  std::string presentation;
  std::size_t order = 0;
  std::size_t m = 0;
  AuslanderEvidence auslander;
  DimensionResult lambda_mod_e1;
  InvariantReport invariants;
  std::optional<double> elapsed_ms;
};

/// Group of `pair` plus everything the CLI reports about it.
AnalysisReport analyze(const CoactionPair& pair, std::string_view source,
                       const AnalysisOptions& options = {});
/// Parses, enumerates and validates first; errors propagate as exceptions.
AnalysisReport analyze(std::string_view presentation_text, const AnalysisOptions& options = {});

nlohmann::ordered_json to_json(const DimensionResult& d);
nlohmann::ordered_json to_json(const AuslanderEvidence& ev);
nlohmann::ordered_json to_json(const InvariantReport& rep);
nlohmann::ordered_json to_json(const AnalysisReport& rep);
std::string to_text(const AnalysisReport& rep);

/// Removes '#' comments; keeps line structure.
std::string strip_comments(std::string_view text);

struct SurveyRow {
  std::string presentation;
  bool ok = false;
  std::string error;  // "error: ..." when !ok
  int exit_code = 0;
  std::size_t order = 0;
  std::size_t m = 0;
  bool auslander_iso = false;
  bool invariant_regular = false;
  std::vector<std::size_t> basis_degrees;
};

/// One presentation per non-blank, non-comment line. Rows come back in input
/// order whatever `jobs` is.
std::vector<SurveyRow> survey(std::string_view list_text, std::size_t jobs,
                              std::size_t max_cosets = kDefaultMaxCosets);
std::string survey_csv(const std::vector<SurveyRow>& rows);

/// Process exit code for the exception currently being handled:
/// 1 validation, 2 parse/input, 3 resource limit, 4 internal.
int exit_code_for_current_exception(std::string& message) noexcept;

}  // namespace mckay
