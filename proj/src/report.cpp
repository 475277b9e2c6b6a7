#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "mckay/errors.hpp"
#include "mckay/report.hpp"

namespace mckay {

AnalysisReport analyze(const CoactionPair& pair, std::string_view source,
                       const AnalysisOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.presentation = std::string(source);
  rep.order = pair.group().order();
  rep.m = pair.m();
  rep.auslander = auslander_check(pair);
  rep.lambda_mod_e1 = lambda_mod_e1(pair);
  rep.invariants = invariant_report(pair, options.max_degree.value_or(4 * pair.m()),
                                    options.relation_bound);
  if (options.timing)
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

AnalysisReport analyze(std::string_view presentation_text, const AnalysisOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  Presentation p = parse_presentation(presentation_text);
  CoactionPair pair = validate_pair(enumerate_group(p, options.max_cosets));
  AnalysisReport rep = analyze(pair, presentation_text, options);
  if (options.timing)
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

nlohmann::ordered_json to_json(const DimensionResult& d) {
  nlohmann::ordered_json j;
  j["kind"] = d.infinite ? "infinite" : "finite";
  j["value"] = d.infinite ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(d.value);
  j["witness"] = d.infinite ? nlohmann::ordered_json(to_string(d.witness)) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json to_json(const AuslanderEvidence& ev) {
  nlohmann::ordered_json j;
  j["iso"] = ev.is_isomorphism;
  j["order_method"] = ev.order_method;
  j["coverage_method"] = ev.coverage_method;
  return j;
}

nlohmann::ordered_json to_json(const InvariantReport& rep) {
  nlohmann::ordered_json j;
  auto basis = nlohmann::ordered_json::array();
  for (const auto& e : rep.basis) {
    nlohmann::ordered_json b;
    b["pos"] = {e.pos.row, e.pos.col};
    b["degree"] = e.degree;
    b["monomial"] = e.monomial;
    basis.push_back(std::move(b));
  }
  j["basis"] = std::move(basis);
  j["degrees"] = rep.degrees;
  j["regular"] = rep.regularity.is_regular;
  j["regularity"] = {{"order_method", rep.regularity.order_method},
                     {"basis_method", rep.regularity.basis_method}};
  j["series"] = rep.series;
  j["relation_bound"] = rep.relation_bound;
  auto rels = nlohmann::ordered_json::array();
  for (const auto& r : rep.relations) {
    nlohmann::ordered_json o;
    o["lhs"] = r.lhs;
    o["rhs"] = r.rhs;
    o["value"] = {r.value.row, r.value.col};
    rels.push_back(std::move(o));
  }
  j["relations"] = std::move(rels);
  j["smallest_u_power"] = rep.smallest_u_power;
  j["annotation"] = rep.annotation;
  return j;
}

nlohmann::ordered_json to_json(const AnalysisReport& rep) {
  nlohmann::ordered_json j;
  j["presentation"] = rep.presentation;
  j["order"] = rep.order;
  j["m"] = rep.m;
  j["period"] = 2 * rep.m;
  j["validation"] = "ok";
  j["auslander"] = to_json(rep.auslander);
  j["lambda_mod_e1"] = to_json(rep.lambda_mod_e1);
  j["invariants"] = to_json(rep.invariants);
  if (rep.elapsed_ms) j["timing_ms"] = *rep.elapsed_ms;
  return j;
}

namespace {

template <typename T>
std::string join(const std::vector<T>& v, const char* sep) {
  std::ostringstream out;
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? sep : "") << v[k];
  return out.str();
}

}  // namespace

std::string to_text(const AnalysisReport& rep) {
  std::ostringstream out;
  const auto& inv = rep.invariants;
  out << "order: " << rep.order << '\n'
      << "m: " << rep.m << '\n'
      << "validation: ok\n"
      << "auslander: " << (rep.auslander.is_isomorphism ? "true" : "false")
      << " (order_method=" << rep.auslander.order_method
      << ", coverage_method=" << rep.auslander.coverage_method << ")\n"
      << "dim Lambda/<e1>: " << to_string(rep.lambda_mod_e1) << '\n'
      << "regular: " << (inv.regularity.is_regular ? "true" : "false") << '\n'
      << "basis degrees: [" << join(inv.degrees, ", ") << "]\n";
  for (std::size_t k = 0; k < inv.basis.size(); ++k)
    out << "  h" << k << " at (" << inv.basis[k].pos.row << ',' << inv.basis[k].pos.col
        << ") degree " << inv.basis[k].degree << ": " << inv.basis[k].monomial << '\n';
  out << "relations (bound " << inv.relation_bound << "):";
  if (inv.relations.empty()) out << " none";
  out << '\n';
  for (const auto& r : inv.relations) out << "  " << to_string(r) << '\n';
  out << "hilbert series: " << join(inv.series, " ") << '\n'
      << "smallest invariant power of u: " << inv.smallest_u_power << '\n';
  if (!inv.annotation.empty()) out << "note: " << inv.annotation << '\n';
  if (rep.elapsed_ms) out << "time: " << *rep.elapsed_ms << " ms\n";
  return out.str();
}

std::string strip_comments(std::string_view text) {
  std::string out;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') in_comment = false;
    else if (c == '#') in_comment = true;
    if (!in_comment) out.push_back(c);
  }
  return out;
}

int exit_code_for_current_exception(std::string& message) noexcept {
  try {
    throw;
  } catch (const ValidationError& e) {
    message = std::string("validation: ") + to_string(e.kind()) + ": " + e.what();
    return 1;
  } catch (const ParseError& e) {
    message = std::string("parse: ") + e.what();
    return 2;
  } catch (const ResourceLimitError& e) {
    message = std::string("limit: ") + e.what();
    return 3;
  } catch (const InternalError& e) {
    message = std::string("internal: ") + e.what();
    return 4;
  } catch (const std::exception& e) {
    message = std::string("input: ") + e.what();
    return 2;
  } catch (...) {
    message = "unknown failure";
    return 4;
  }
}

std::vector<SurveyRow> survey(std::string_view list_text, std::size_t jobs,
                              std::size_t max_cosets) {
  std::vector<std::string> lines;
  {
    std::istringstream in{strip_comments(list_text)};
    std::string line;
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      auto last = line.find_last_not_of(" \t\r");
      lines.push_back(line.substr(first, last - first + 1));
    }
  }
  std::vector<SurveyRow> rows(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < lines.size();) {
      SurveyRow& row = rows[k];
      row.presentation = lines[k];
      try {
        CoactionPair pair = validate_pair(enumerate_group(parse_presentation(lines[k]), max_cosets));
        row.order = pair.group().order();
        row.m = pair.m();
        row.auslander_iso = auslander_check(pair).is_isomorphism;
        row.invariant_regular = regularity_check(pair).is_regular;
        for (const auto& e : hilbert_basis(pair)) row.basis_degrees.push_back(e.degree);
        row.ok = true;
      } catch (...) {
        std::string msg;
        row.exit_code = exit_code_for_current_exception(msg);
        row.error = "error: " + msg;
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, lines.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return rows;
}

std::string survey_csv(const std::vector<SurveyRow>& rows) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q.push_back('"');
      q.push_back(c);
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "presentation,order,m,auslander_iso,invariant_regular,basis_degrees\n";
  for (const auto& r : rows) {
    out << quote(r.presentation) << ',';
    if (!r.ok) {
      out << "error,,,," << quote(r.error) << '\n';
      continue;
    }
    out << r.order << ',' << r.m << ',' << (r.auslander_iso ? "true" : "false") << ','
        << (r.invariant_regular ? "true" : "false") << ',' << join(r.basis_degrees, ";") << '\n';
  }
  return out.str();
}

}  // namespace mckay
