// Copyright 2026 The oraclescan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// oraclescan: scan a corpus of Solidity sources for external-data
// dependencies and report complexity statistics.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oraclescan/keywords.hpp"
#include "oraclescan/name_index.hpp"
#include "oraclescan/report.hpp"
#include "oraclescan/scan.hpp"
#include "oraclescan/version.hpp"

namespace fs = std::filesystem;
using namespace oraclescan;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kEmpty = 2, kOutput = 3 };

std::string Sanitize(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c == '/' || c == '\\' || c == ' ' || c == ':') c = '_';
  }
  return out;
}

// Debug dump sink: files under `dir` when set, stderr otherwise.
class DumpSink {
 public:
  explicit DumpSink(std::optional<fs::path> dir) : dir_(std::move(dir)) {}

  void Write(const std::string& name, const std::string& content) {
    if (!dir_) {
      std::cerr << "==> " << name << " <==\n" << content;
      return;
    }
    const fs::path path = *dir_ / name;
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw UnwritableOutput("cannot write " + path.string());
  }

 private:
  std::optional<fs::path> dir_;
};

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static external-data dependency scanner for Solidity corpora"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CLI::App* scan = app.add_subcommand("scan", "Scan a directory or manifest");
  std::string root;
  std::string manifest;
  std::string keywords_file;
  std::string format = "json";
  std::string out_dir;
  std::string denominator = "parsed";
  std::string thresholds = "auto";
  std::string threshold_scale = "log1p";
  std::vector<std::string> index_kinds;
  bool require_branches = false;
  bool structural_interacts = false;
  bool no_cache = false;
  bool dump_ast = false;
  bool dump_cfg = false;
  bool dump_index = false;

  scan->add_option("PATH", root, "Directory of .sol files or a manifest CSV")
      ->required();
  scan->add_option("--manifest", manifest,
                   "CSV manifest: file,project_id,domain,audited_frequency");
  scan->add_option("--keywords", keywords_file,
                   "Keyword CSV (category,keyword); built-in list otherwise");
  scan->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--out", out_dir, "Output directory");
  scan->add_option("--denominator", denominator,
                   "Proportion denominator: parsed or scanned")
      ->check(CLI::IsMember({"parsed", "scanned"}));
  scan->add_option("--thresholds", thresholds, "auto or T1,T2");
  scan->add_option("--threshold-scale", threshold_scale,
                   "Threshold fitting scale: log1p or linear")
      ->check(CLI::IsMember({"log1p", "linear"}));
  scan->add_option("--index-kinds", index_kinds,
                   "Name kinds used for keyword matching")
      ->delimiter(',')
      ->check(CLI::IsMember({"Contract", "Interface", "Library", "Function",
                             "Modifier", "Event"}));
  scan->add_flag("--require-branches", require_branches,
                 "Count require/assert/revert as decision points");
  scan->add_flag("--structural-interacts", structural_interacts,
                 "Structural strategy hits also mark a contract interacting");
  scan->add_flag("--no-cache", no_cache, "Do not read or write the cache");
  scan->add_flag("--dump-ast", dump_ast, "Dump JSON ASTs");
  scan->add_flag("--dump-cfg", dump_cfg, "Dump DOT control-flow graphs");
  scan->add_flag("--dump-index", dump_index, "Dump the name index as CSV");

  ScanOptions options;
  try {
    app.parse(argc, argv);
    const auto report_format = *ReportFormatFromString(format);
    if (report_format == ReportFormat::kCsv && out_dir.empty()) {
      throw CLI::ValidationError("--format csv requires --out DIR");
    }
    if (!keywords_file.empty()) {
      options.analysis.keywords = LoadKeywords(ReadAll(keywords_file));
      options.keyword_source = keywords_file;
    }
    options.analysis.require_branches = require_branches;
    options.analysis.structural_interacts = structural_interacts;
    if (!index_kinds.empty()) {
      options.analysis.index_kinds.clear();
      for (const std::string& k : index_kinds) {
        options.analysis.index_kinds.insert(*NameKindFromString(k));
      }
    }
    options.denominator =
        denominator == "parsed" ? Denominator::kParsed : Denominator::kScanned;
    options.fit_scale = *FitScaleFromString(threshold_scale);
    if (thresholds != "auto") {
      const auto comma = thresholds.find(',');
      std::size_t used1 = 0, used2 = 0;
      LevelThresholds th;
      try {
        if (comma == std::string::npos) throw std::invalid_argument("");
        const std::string a = thresholds.substr(0, comma);
        const std::string b = thresholds.substr(comma + 1);
        th.t1 = std::stod(a, &used1);
        th.t2 = std::stod(b, &used2);
        if (used1 != a.size() || used2 != b.size()) {
          throw std::invalid_argument("");
        }
      } catch (const std::exception&) {
        throw CLI::ValidationError("--thresholds expects auto or T1,T2");
      }
      if (!(th.t1 < th.t2)) {
        throw CLI::ValidationError("--thresholds requires T1 < T2");
      }
      options.thresholds = th;
    }
    options.use_cache = !no_cache;
    if (!manifest.empty()) options.manifest = manifest;

    std::optional<fs::path> debug_dir;
    if (!out_dir.empty()) debug_dir = fs::path(out_dir) / "debug";
    DumpSink sink(debug_dir);
    std::vector<std::pair<std::string, AstNode>> asts;  // for --dump-index
    if (dump_ast || dump_cfg || dump_index) {
      options.on_analysis = [&](const SourceFile& file,
                                const FileAnalysis& analysis) {
        const std::string stem = Sanitize(file.path);
        if (dump_ast) {
          sink.Write("ast/" + stem + ".json", AstToJson(analysis.parse.root));
        }
        if (dump_cfg) {
          for (std::size_t c = 0; c < analysis.cfg.components.size(); ++c) {
            const CfgComponent& comp = analysis.cfg.components[c];
            sink.Write("cfg/" + stem + "." +
                           Sanitize(comp.owner.empty() ? "_" : comp.owner) +
                           "." + Sanitize(comp.callable) + "." +
                           std::to_string(c) + ".dot",
                       ComponentToDot(analysis.cfg, static_cast<int>(c)));
          }
        }
        if (dump_index) asts.emplace_back(file.path, analysis.parse.root);
      };
    }

    ScanResult result = Scan(root, options);
    for (const std::string& w : result.warnings) {
      std::cerr << "warning: " << w << "\n";
    }
    for (const std::string& m : result.report.missing) {
      std::cerr << "warning: missing or unreadable file: " << m << "\n";
    }
    if (dump_index) {
      std::vector<IndexedUnit> units;
      for (const auto& [path, ast] : asts) units.push_back({&ast, path});
      sink.Write("index.csv", IndexToCsv(BuildIndex(units)));
    }

    if (out_dir.empty()) {
      std::cout << ReportToJson(result.report);
      std::cout.flush();
      if (!std::cout) {
        std::cerr << "error: cannot write report to stdout\n";
        return kOutput;
      }
    } else {
      WriteReport(result.report, report_format, out_dir);
    }
    if (result.report.ParsedOk() == 0) {
      std::cerr << "error: no file parsed successfully\n";
      return kEmpty;
    }
    return kOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const MalformedKeywordFile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const EmptyKeywordList& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ManifestParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const EmptyCorpus& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEmpty;
  } catch (const UnwritableOutput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOutput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
