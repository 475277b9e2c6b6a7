// mckay: command-line front end for McKay-quiver analysis of two-generator
// group gradings on k<u,v>/(u^2 - v^2).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mckay/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(std::string s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct Loaded {
  std::string source;
  mckay::CoactionPair pair;
};

Loaded load(const std::string& path, std::size_t max_cosets) {
  std::string text = trim(mckay::strip_comments(read_file(path)));
  auto group = mckay::enumerate_group(mckay::parse_presentation(text), max_cosets);
  return {text, mckay::validate_pair(group)};
}

mckay::Element element_arg(const mckay::Group& g, const std::string& word) {
  return g.evaluate(mckay::parse_word(word));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"McKay quiver, dimension counting and invariant rings for group gradings of "
               "k<u,v>/(u^2 - v^2)"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::size_t max_cosets = mckay::kDefaultMaxCosets;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--max-cosets", max_cosets, "Coset enumeration budget")->check(CLI::PositiveNumber);

  std::string file;
  std::optional<std::size_t> max_degree;
  std::optional<std::size_t> relation_bound;
  bool timing = false;

  auto* analyze = app.add_subcommand("analyze", "Full report for one presentation file");
  analyze->add_option("FILE", file)->required();
  analyze->add_option("--max-degree", max_degree, "Last Hilbert series degree (default 4m)");
  analyze->add_option("--relation-bound", relation_bound, "Coefficient bound for relation search");
  analyze->add_flag("--timing", timing, "Include wall-clock time");

  auto* auslander = app.add_subcommand("auslander", "Decide whether the Auslander map is an isomorphism");
  auslander->add_option("FILE", file)->required();

  auto* invariants = app.add_subcommand("invariants", "Generators, relations and regularity of A^G");
  invariants->add_option("FILE", file)->required();
  invariants->add_option("--max-degree", max_degree, "Last Hilbert series degree (default 4m)");
  invariants->add_option("--relation-bound", relation_bound, "Coefficient bound for relation search");

  std::string format;
  bool closed = false;
  std::string labels_file;
  auto* quiver = app.add_subcommand("quiver", "Export the McKay quiver or its toroidal presentation");
  quiver->add_option("FILE", file)->required();
  quiver->add_option("--format", format, "dot, grid or json")->required();
  quiver->add_flag("--closed", closed, "Repeat the first row and column (2m+1 square picture)");
  quiver->add_option("--labels", labels_file, "WORD LABEL lines renaming vertices");

  std::size_t series_degree = 0;
  auto* series = app.add_subcommand("series", "Hilbert series coefficients of A^G");
  series->add_option("FILE", file)->required();
  series->add_option("--max-degree", series_degree)->required();

  std::string from, to;
  std::size_t dims_degree = 10;
  auto* dims = app.add_subcommand("dims", "Path counts from one vertex to another");
  dims->add_option("FILE", file)->required();
  dims->add_option("--from", from, "Start vertex as a word, e.g. 'a'")->required();
  dims->add_option("--to", to, "End vertex as a word, e.g. 'a^2 b'")->required();
  dims->add_option("--max-degree", dims_degree, "Last path length to count");

  auto* group = app.add_subcommand("group", "Dump the enumerated group as JSON");
  group->add_option("FILE", file)->required();

  std::string list_file;
  std::size_t jobs = 1;
  auto* survey = app.add_subcommand("survey", "CSV summary for a list of presentations");
  survey->add_option("LISTFILE", list_file)->required();
  survey->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*survey) {
      auto rows = mckay::survey(read_file(list_file), jobs, max_cosets);
      std::cout << mckay::survey_csv(rows);
      int code = 0;
      for (const auto& r : rows)
        if (!r.ok) {
          std::cerr << r.error << '\n';
          code = std::max(code, r.exit_code);
        }
      return code;
    }

    if (*group) {
      std::string text = trim(mckay::strip_comments(read_file(file)));
      auto g = mckay::enumerate_group(mckay::parse_presentation(text), max_cosets);
      std::cout << mckay::group_to_json(g) << '\n';
      return 0;
    }

    Loaded in = load(file, max_cosets);
    const auto& pair = in.pair;

    if (*analyze) {
      mckay::AnalysisOptions opts{max_cosets, max_degree, relation_bound, timing};
      auto rep = mckay::analyze(pair, in.source, opts);
      if (json)
        std::cout << mckay::to_json(rep).dump(2) << '\n';
      else
        std::cout << mckay::to_text(rep);
    } else if (*auslander) {
      auto ev = mckay::auslander_check(pair);
      if (json) {
        nlohmann::ordered_json j;
        j["auslander"] = mckay::to_json(ev);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "auslander: " << (ev.is_isomorphism ? "true" : "false")
                  << "\norder_method: " << ev.order_method
                  << "\ncoverage_method: " << ev.coverage_method << '\n';
      }
    } else if (*invariants) {
      auto rep = mckay::invariant_report(pair, max_degree.value_or(4 * pair.m()), relation_bound);
      if (json) {
        std::cout << mckay::to_json(rep).dump(2) << '\n';
      } else {
        std::cout << "regular: " << (rep.regularity.is_regular ? "true" : "false") << '\n';
        for (std::size_t k = 0; k < rep.basis.size(); ++k)
          std::cout << "h" << k << " (" << rep.basis[k].pos.row << ',' << rep.basis[k].pos.col
                    << ") degree " << rep.basis[k].degree << ": " << rep.basis[k].monomial << '\n';
        for (const auto& r : rep.relations) std::cout << "relation: " << mckay::to_string(r) << '\n';
        if (!rep.annotation.empty()) std::cout << "note: " << rep.annotation << '\n';
      }
    } else if (*quiver) {
      auto fmt = mckay::parse_export_format(format);
      auto names = labels_file.empty() ? mckay::default_names(pair.group())
                                       : mckay::read_label_map(pair.group(), read_file(labels_file));
      switch (fmt) {
        case mckay::ExportFormat::kDot:
          std::cout << mckay::export_dot(mckay::build_mckay_quiver(pair), names);
          break;
        case mckay::ExportFormat::kGrid:
          std::cout << mckay::export_grid(mckay::toroidal_grid(pair), names, closed);
          break;
        case mckay::ExportFormat::kJson:
          std::cout << mckay::export_lattice_json(mckay::toroidal_grid(pair), names, closed);
          break;
      }
    } else if (*series) {
      auto coeffs = mckay::hilbert_series(pair, series_degree);
      if (json) {
        std::cout << nlohmann::json(coeffs).dump() << '\n';
      } else {
        for (std::size_t k = 0; k < coeffs.size(); ++k) std::cout << (k ? " " : "") << coeffs[k];
        std::cout << '\n';
      }
    } else if (*dims) {
      auto i = element_arg(pair.group(), from);
      auto j = element_arg(pair.group(), to);
      std::vector<std::size_t> graded;
      for (std::size_t len = 0; len <= dims_degree; ++len)
        graded.push_back(mckay::graded_dimension(pair, i, j, len));
      auto quotient = mckay::quotient_dimension(pair, i, j);
      if (json) {
        nlohmann::ordered_json out;
        out["graded"] = {{"from", pair.group().name(i)}, {"to", pair.group().name(j)}, {"dims", graded}};
        out["quotient"] = mckay::to_json(quotient);
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "graded:";
        for (auto d : graded) std::cout << ' ' << d;
        std::cout << "\nquotient: " << mckay::to_string(quotient) << '\n';
      }
    }
  } catch (...) {
    std::string message;
    int code = mckay::exit_code_for_current_exception(message);
    std::cerr << "error: " << message << '\n';
    return code;
  }
  return 0;
}
