#include "truckfactor/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "truckfactor/errors.hpp"

namespace truckfactor {
namespace {

using Json = nlohmann::ordered_json;

Json user_json(const RawUser& u) {
  return Json{{"name", u.name}, {"email", u.email}};
}

RawUser user_from(const Json& j) {
  return RawUser{j.at("name").get<std::string>(),
                 j.at("email").get<std::string>()};
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed(double value, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << value;
  return out.str();
}

std::string emit_text(const Report& r) {
  std::ostringstream out;
  out << "repository: " << r.repository << " (" << r.branch << " @ "
      << r.head_commit.substr(0, 12) << ")\n";
  out << "truck factor: " << r.truck_factor << "\n";
  if (!r.tf_authors.empty()) {
    out << "TF authors, in removal order:\n";
    for (std::size_t i = 0; i < r.tf_authors.size(); ++i) {
      const TfAuthor& a = r.tf_authors[i];
      out << "  " << (i + 1) << ". " << a.name << "  files=" << a.files_authored
          << "  coverage after removal=" << fixed(a.coverage_after, 3) << "\n";
    }
  }
  out << "initial coverage: " << fixed(r.initial_coverage, 3) << " over "
      << r.file_universe_size << " files (" << to_string(r.universe)
      << " universe)\n";
  if (r.low_initial_coverage) {
    out << "low initial coverage: authored files cover less than "
        << r.thresholds.coverage << " before any removal\n";
  }
  out << "author ratio: " << fixed(r.author_ratio, 3) << " ("
      << r.totals.authors << " of " << r.totals.developers
      << " developers)\n";
  out << "totals: developers=" << r.totals.developers
      << " authors=" << r.totals.authors << " files=" << r.totals.files
      << " files_without_addition=" << r.totals.files_without_addition
      << " commits=" << r.totals.commits << "\n";
  out << "thresholds: k=" << r.thresholds.k << " m=" << r.thresholds.m
      << " coverage=" << r.thresholds.coverage << "\n";
  if (r.migration) {
    out << "migration check: "
        << (r.migration->suspicious ? "SUSPICIOUS" : "ok") << " ("
        << fixed(r.migration->fraction_covered * 100.0, 1)
        << "% of files added by " << r.migration->adding_commits
        << " commits)\n";
  }
  if (r.blame_agreement) {
    const BlameAgreement& b = *r.blame_agreement;
    out << "blame agreement: " << b.pairs << " author/file pairs over "
        << b.sampled_files << " files (seed " << b.seed << ")"
        << ": top-1 " << fixed(b.top1 * 100.0, 1) << "%, top-3 "
        << fixed(b.top3 * 100.0, 1) << "%, lower " 
        << fixed(b.beyond_top3 * 100.0, 1) << "%, unmatched "
        << fixed(b.unmatched * 100.0, 1) << "%";
    if (b.failed_files > 0) out << ", " << b.failed_files << " files skipped";
    out << "\n";
  }
  if (r.alias_candidates) {
    out << "alias candidates (not merged): " << r.alias_candidates->size()
        << "\n";
    for (const AliasCandidate& c : *r.alias_candidates) {
      out << "  " << c.first.name << " <" << c.first.email << "> ~ "
          << c.second.name << " <" << c.second.email
          << ">  distance=" << c.distance << "\n";
    }
  }
  for (const std::string& w : r.warnings) out << "WARNING: " << w << "\n";
  return out.str();
}

std::string emit_csv(const Report& r) {
  std::ostringstream out;
  out << "row,developer,files_authored,coverage_after,truck_factor\n";
  for (const TfAuthor& a : r.tf_authors) {
    out << "author," << csv_field(a.name) << "," << a.files_authored << ","
        << fixed(a.coverage_after, 6) << "," << r.truck_factor << "\n";
  }
  double final_coverage = r.tf_authors.empty()
                              ? r.initial_coverage
                              : r.tf_authors.back().coverage_after;
  out << "summary,," << r.file_universe_size << "," << fixed(final_coverage, 6)
      << "," << r.truck_factor << "\n";
  return out.str();
}

}  // namespace

std::string_view to_string(UniverseMode mode) {
  return mode == UniverseMode::kAuthored ? "authored" : "all-files";
}

UniverseMode parse_universe_mode(std::string_view text) {
  if (text == "authored") return UniverseMode::kAuthored;
  if (text == "all-files") return UniverseMode::kAllFiles;
  throw ConfigError("unknown universe mode: " + std::string(text));
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      return "text";
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
  }
  return "text";
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::kText;
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  throw ConfigError("unknown output format: " + std::string(text));
}

std::string to_json(const Report& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["repository"] = r.repository;
  j["branch"] = r.branch;
  j["head_commit"] = r.head_commit;
  j["patterns_version"] = r.patterns_version;
  j["thresholds"] = Json{{"k", r.thresholds.k},
                         {"m", r.thresholds.m},
                         {"coverage", r.thresholds.coverage}};
  j["universe"] = to_string(r.universe);
  j["truck_factor"] = r.truck_factor;
  Json authors = Json::array();
  for (const TfAuthor& a : r.tf_authors) {
    authors.push_back(Json{{"name", a.name},
                           {"files_authored", a.files_authored},
                           {"coverage_after", a.coverage_after}});
  }
  j["tf_authors"] = std::move(authors);
  j["initial_coverage"] = r.initial_coverage;
  j["file_universe_size"] = r.file_universe_size;
  j["low_initial_coverage"] = r.low_initial_coverage;
  j["author_ratio"] = r.author_ratio;
  j["totals"] = Json{{"developers", r.totals.developers},
                     {"authors", r.totals.authors},
                     {"files", r.totals.files},
                     {"files_without_addition", r.totals.files_without_addition},
                     {"commits", r.totals.commits}};
  if (r.migration) {
    j["migration"] = Json{{"suspicious", r.migration->suspicious},
                          {"fraction_covered", r.migration->fraction_covered},
                          {"adding_commits", r.migration->adding_commits}};
  } else {
    j["migration"] = nullptr;
  }
  if (r.blame_agreement) {
    const BlameAgreement& b = *r.blame_agreement;
    j["blame_agreement"] = Json{{"seed", b.seed},
                                {"sampled_files", b.sampled_files},
                                {"failed_files", b.failed_files},
                                {"pairs", b.pairs},
                                {"top1", b.top1},
                                {"top3", b.top3},
                                {"beyond_top3", b.beyond_top3},
                                {"unmatched", b.unmatched}};
  } else {
    j["blame_agreement"] = nullptr;
  }
  if (r.alias_candidates) {
    Json list = Json::array();
    for (const AliasCandidate& c : *r.alias_candidates) {
      list.push_back(Json{{"first", user_json(c.first)},
                          {"second", user_json(c.second)},
                          {"distance", c.distance}});
    }
    j["alias_candidates"] = std::move(list);
  } else {
    j["alias_candidates"] = nullptr;
  }
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  Report r;
  try {
    Json j = Json::parse(text);
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion) {
      throw ConfigError("unsupported report schema_version " +
                        std::to_string(r.schema_version));
    }
    r.repository = j.at("repository").get<std::string>();
    r.branch = j.at("branch").get<std::string>();
    r.head_commit = j.at("head_commit").get<std::string>();
    r.patterns_version = j.at("patterns_version").get<std::string>();
    const Json& t = j.at("thresholds");
    r.thresholds = Thresholds{t.at("k").get<double>(), t.at("m").get<double>(),
                              t.at("coverage").get<double>()};
    r.universe = parse_universe_mode(j.at("universe").get<std::string>());
    r.truck_factor = j.at("truck_factor").get<std::size_t>();
    for (const Json& a : j.at("tf_authors")) {
      r.tf_authors.push_back(TfAuthor{a.at("name").get<std::string>(),
                                      a.at("files_authored").get<std::size_t>(),
                                      a.at("coverage_after").get<double>()});
    }
    r.initial_coverage = j.at("initial_coverage").get<double>();
    r.file_universe_size = j.at("file_universe_size").get<std::size_t>();
    r.low_initial_coverage = j.at("low_initial_coverage").get<bool>();
    r.author_ratio = j.at("author_ratio").get<double>();
    const Json& totals = j.at("totals");
    r.totals = Totals{totals.at("developers").get<std::size_t>(),
                      totals.at("authors").get<std::size_t>(),
                      totals.at("files").get<std::size_t>(),
                      totals.at("files_without_addition").get<std::size_t>(),
                      totals.at("commits").get<std::size_t>()};
    if (const Json& m = j.at("migration"); !m.is_null()) {
      r.migration = MigrationVerdict{m.at("suspicious").get<bool>(),
                                     m.at("fraction_covered").get<double>(),
                                     m.at("adding_commits").get<std::size_t>()};
    }
    if (const Json& b = j.at("blame_agreement"); !b.is_null()) {
      r.blame_agreement = BlameAgreement{
          b.at("seed").get<std::uint64_t>(),
          b.at("sampled_files").get<std::size_t>(),
          b.at("failed_files").get<std::size_t>(),
          b.at("pairs").get<std::size_t>(),
          b.at("top1").get<double>(),
          b.at("top3").get<double>(),
          b.at("beyond_top3").get<double>(),
          b.at("unmatched").get<double>()};
    }
    if (const Json& list = j.at("alias_candidates"); !list.is_null()) {
      r.alias_candidates.emplace();
      for (const Json& c : list) {
        r.alias_candidates->push_back(AliasCandidate{
            user_from(c.at("first")), user_from(c.at("second")),
            c.at("distance").get<std::size_t>()});
      }
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report JSON: ") + e.what());
  }
  return r;
}

std::string emit(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return to_json(report);
    case OutputFormat::kCsv:
      return emit_csv(report);
    case OutputFormat::kText:
      break;
  }
  return emit_text(report);
}

}  // namespace truckfactor
