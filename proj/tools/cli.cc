// Copyright 2026 The icsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "icsim/error.h"
#include "icsim/evaluation.h"
#include "icsim/miller_charles.h"
#include "icsim/probability_model.h"
#include "icsim/similarity.h"
#include "icsim/taxonomy.h"
#include "json.hpp"

namespace icsim::cli {
namespace {

struct RunConfig {
  std::string taxonomy;
  std::string lexicon;
  std::string counts;
  std::string benchmark;
  double log_base = 2.0;
  bool plural_fold = false;
  double lch_floor = 1.0;
  std::vector<std::string> measure_names;
  std::string json_out;

  std::vector<Measure> measures() const {
    if (measure_names.empty()) {
      return {kAllMeasures.begin(), kAllMeasures.end()};
    }
    std::vector<Measure> out;
    for (const std::string& name : measure_names) {
      out.push_back(*ParseMeasure(name));
    }
    return out;
  }
};

// Thrown for a missing input flag; reported like an unreadable file.
class UsageError : public IoError {
 public:
  using IoError::IoError;
};

std::string Fixed4(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

void RequirePath(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing required ") + flag);
}

// Everything a query subcommand needs, loaded from the configured files.
struct Workspace {
  Taxonomy taxonomy;
  ProbabilityModel model;
};

Taxonomy LoadTaxonomy(const RunConfig& config) {
  RequirePath(config.taxonomy, "--taxonomy");
  RequirePath(config.lexicon, "--lexicon");
  return Taxonomy::LoadFiles(config.taxonomy, config.lexicon);
}

Workspace LoadWorkspace(const RunConfig& config) {
  Taxonomy taxonomy = LoadTaxonomy(config);
  RequirePath(config.counts, "--counts");
  FrequencyTable counts = LoadCountsFile(config.counts);
  if (config.plural_fold) counts = FoldPlurals(counts, taxonomy);
  ProbabilityModel model =
      ProbabilityModel::Build(taxonomy, counts, config.log_base);
  return {std::move(taxonomy), std::move(model)};
}

std::ofstream OpenJsonOut(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

void WriteJsonLines(std::ostream& out, const EvalReport& report) {
  for (const EvalItem& item : report.items) {
    nlohmann::json row = {
        {"measure", report.measure},
        {"pair", {item.row.word1, item.row.word2}},
        {"score", nullptr},
        {"included", item.included},
        {"reason", nullptr},
    };
    if (item.score) row["score"] = *item.score;
    if (!item.included) row["reason"] = item.reason;
    out << row.dump() << '\n';
  }
}

int CmdValidate(const RunConfig& config, std::ostream& out) {
  const Taxonomy t = LoadTaxonomy(config);
  out << t.num_concepts() << " concepts, " << t.num_edges() << " edges, "
      << t.num_words() << " words, MAX=" << t.max_depth() << '\n';
  return kOk;
}

int CmdSim(const RunConfig& config, const std::string& w1,
           const std::string& w2, std::ostream& out) {
  const Workspace ws = LoadWorkspace(config);
  const Similarity sim(ws.taxonomy, ws.model, {.lch_floor = config.lch_floor});
  // Resolve every measure before printing so a failing query leaves no
  // partial output.
  std::vector<std::pair<Measure, SimScore>> rows;
  for (Measure m : config.measures()) rows.emplace_back(m, sim.Words(m, w1, w2));
  for (const auto& [m, score] : rows) {
    out << NormalizeWord(w1) << '\t' << NormalizeWord(w2) << '\t'
        << MeasureName(m) << '\t' << Fixed4(score.value) << '\t'
        << (score.witness ? ws.taxonomy.name(*score.witness) : "-") << '\n';
  }
  return kOk;
}

int CmdEvalFixture(const RunConfig& config, std::ostream& out) {
  bool all_pass = true;
  std::vector<EvalReport> reports;
  out << "column\tr\ttarget\ttolerance\tstatus\n";
  for (const PublishedCorrelation& target : kPublishedCorrelations) {
    EvalReport report = ReplayFixture(target.column);
    const bool pass =
        std::abs(report.r - target.r) <= kReproductionTolerance;
    all_pass = all_pass && pass;
    out << report.measure << '\t' << Fixed4(report.r) << '\t'
        << Fixed4(target.r) << '\t' << kReproductionTolerance << '\t'
        << (pass ? "PASS" : "FAIL") << '\n';
    reports.push_back(std::move(report));
  }
  const EvalReport human = ReplayFixture(FixtureColumn::kReplication);
  out << "# replication means vs Miller-Charles means (28 pairs): r="
      << Fixed4(human.r) << '\n'
      << "# human upper bound (per-subject mean, published): r="
      << Fixed4(kHumanUpperBound) << '\n';
  reports.push_back(human);
  if (!config.json_out.empty()) {
    std::ofstream json = OpenJsonOut(config.json_out);
    for (const EvalReport& report : reports) WriteJsonLines(json, report);
  }
  return all_pass ? kOk : kValidation;
}

int CmdEvalLive(const RunConfig& config, std::ostream& out) {
  const Workspace ws = LoadWorkspace(config);
  const Benchmark benchmark = LoadBenchmarkFile(config.benchmark);
  const Similarity sim(ws.taxonomy, ws.model, {.lch_floor = config.lch_floor});
  std::vector<EvalReport> reports;
  for (Measure m : config.measures()) {
    reports.push_back(Evaluate(m, sim, benchmark));
  }

  out << "measure\tr\tspearman\tincluded\texcluded\n";
  for (const EvalReport& report : reports) {
    out << report.measure << '\t' << Fixed4(report.r) << '\t'
        << Fixed4(report.spearman) << '\t' << report.n_included << '\t'
        << report.items.size() - report.n_included << '\n';
  }
  // Exclusion depends only on the words, so every report agrees.
  for (const EvalItem* item : reports.front().excluded()) {
    out << "# excluded " << item->row.word1 << ',' << item->row.word2 << ": "
        << item->reason << '\n';
  }
  out << "word1\tword2\trating";
  for (const EvalReport& report : reports) out << '\t' << report.measure;
  out << '\n';
  for (std::size_t i = 0; i < benchmark.rows.size(); ++i) {
    const BenchmarkRow& row = benchmark.rows[i];
    out << row.word1 << '\t' << row.word2 << '\t' << Fixed4(row.rating);
    for (const EvalReport& report : reports) {
      const auto& score = report.items[i].score;
      out << '\t' << (score ? Fixed4(*score) : "-");
    }
    out << '\n';
  }
  if (!config.json_out.empty()) {
    std::ofstream json = OpenJsonOut(config.json_out);
    for (const EvalReport& report : reports) WriteJsonLines(json, report);
  }
  return kOk;
}

int CmdStats(const RunConfig& config, std::ostream& out) {
  const Workspace ws = LoadWorkspace(config);
  WriteModelDump(out, ws.taxonomy, ws.model);
  return kOk;
}

}  // namespace

int Run(std::span<const char* const> argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Information-content similarity over IS-A taxonomies",
               "icsim"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  app.add_option("--taxonomy", config.taxonomy,
                 "Edge file, child<TAB>parent per line");
  app.add_option("--lexicon", config.lexicon,
                 "Lexicon file, word<TAB>concept_id per line");
  app.add_option("--counts", config.counts, "Counts file, word<TAB>count");
  app.add_option("--benchmark", config.benchmark,
                 "Benchmark CSV with header word1,word2,rating");
  app.add_option("--log-base", config.log_base, "Logarithm base")
      ->capture_default_str()
      ->check([](const std::string& s) -> std::string {
        const double b = std::stod(s);
        return b > 1.0 && std::isfinite(b) ? "" : "log base must be > 1";
      });
  app.add_flag("--plural-fold", config.plural_fold,
               "Fold plural counts into singular lexicon entries");
  app.add_option("--lch-floor", config.lch_floor,
                 "Path length used in place of 0 by the lch measure")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--measure", config.measure_names,
                 "resnik, edge, prob or lch; repeatable (default: all)")
      ->check(CLI::IsMember({"resnik", "edge", "prob", "lch"}))
      ->take_all();
  app.add_option("--json-out", config.json_out,
                 "Write per-row evaluation results as JSON lines");

  auto* validate = app.add_subcommand(
      "validate", "Check the taxonomy and lexicon, print summary stats");
  std::string word1;
  std::string word2;
  auto* sim = app.add_subcommand("sim", "Score a word pair");
  sim->add_option("word1", word1)->required();
  sim->add_option("word2", word2)->required();
  auto* eval = app.add_subcommand(
      "eval",
      "Correlate measures with a benchmark; without --benchmark, replay the "
      "embedded Miller-Charles table");
  auto* stats = app.add_subcommand("stats", "Dump the probability model");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (validate->parsed()) return CmdValidate(config, out);
    if (sim->parsed()) return CmdSim(config, word1, word2, out);
    if (eval->parsed()) {
      return config.benchmark.empty() ? CmdEvalFixture(config, out)
                                      : CmdEvalLive(config, out);
    }
    if (stats->parsed()) return CmdStats(config, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const QueryError& e) {
    err << "error: " << e.what() << '\n';
    return kQuery;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kEvaluation;
  }
  return kOk;
}

}  // namespace icsim::cli
