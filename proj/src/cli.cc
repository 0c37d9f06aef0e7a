// Copyright 2026 The Masker Authors.
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

#include "masker/cli.h"

#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "masker/editor.h"
#include "masker/eval.h"
#include "masker/file_util.h"
#include "masker/mlm.h"
#include "masker/pipeline.h"
#include "masker/scoring.h"
#include "masker/synth.h"
#include "masker/tokenizer.h"

namespace masker::cli {
namespace {

// Failures that should exit with kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest fixed rendering with at least one decimal: 100 -> "100.0".
std::string FormatMetric(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  std::string s(buffer);
  while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  return s;
}

std::string FormatProb(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

Direction ParseDirection(const std::string& name) {
  if (name == "source-to-target") return kSourceToTarget;
  if (name == "target-to-source") return kTargetToSource;
  throw UsageError("unknown direction '" + name + "'");
}

void WriteOutput(const std::string& path, const std::string& contents,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    WriteFileAtomically(path, contents);
  }
}

std::vector<TokenSeq> TokenizeAll(const std::vector<std::string>& lines) {
  std::vector<TokenSeq> out;
  for (const std::string& line : lines) {
    TokenSeq tokens = Tokenize(line);
    if (!tokens.empty()) out.push_back(std::move(tokens));
  }
  return out;
}

void AppendScoreTable(std::ostringstream& os,
                      const std::vector<SpanScore>& table,
                      const std::string& prefix) {
  for (const SpanScore& row : table) {
    std::string replacement;
    for (std::size_t i = 0; i < row.replacement.size(); ++i) {
      if (i > 0) replacement += ' ';
      replacement += row.replacement[i];
    }
    os << prefix << row.candidate.start << '\t' << row.candidate.del_len
       << '\t' << replacement << '\t' << FormatProb(row.l1) << '\t'
       << FormatProb(row.l2) << '\t' << FormatProb(row.l3) << '\t'
       << FormatProb(row.l4) << '\t' << FormatProb(row.target_score) << '\t'
       << FormatProb(row.source_score) << '\t' << FormatProb(row.score)
       << '\n';
  }
}

constexpr const char* kTableHeader =
    "start\tdel_len\treplacement\tL1\tL2\tL3\tL4\ttarget_score\tsource_score"
    "\tscore\n";

// Splices key=value pairs from a config file in front of the user's
// arguments, skipping keys the user already passed.
std::vector<std::string> ApplyConfigFile(const std::vector<std::string>& args) {
  std::string config_path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a value");
      config_path = args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
    } else {
      rest.push_back(a);
    }
  }
  if (config_path.empty() || rest.size() < 2) return rest;

  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    for (std::size_t i = 2; i < rest.size(); ++i) {
      if (rest[i] == flag || rest[i].rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  std::vector<std::string> merged(rest.begin(), rest.begin() + 2);
  for (std::string line : ReadLines(config_path)) {
    line = NormalizeWhitespace(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line without '=': " + line);
    }
    std::string key = NormalizeWhitespace(line.substr(0, eq));
    std::string value = NormalizeWhitespace(line.substr(eq + 1));
    if (!given(key)) merged.push_back("--" + key + "=" + value);
  }
  merged.insert(merged.end(), rest.begin() + 2, rest.end());
  return merged;
}

struct SynthArgs {
  std::string task = "fusion";
  SynthConfig config;
  std::string out;
};

struct TrainArgs {
  std::string source, target, out;
  MlmConfig config;
  int workers = 1;
};

struct EditArgs {
  std::string model, direction = "source-to-target", input, output, table;
  int workers = 1;
  bool ablate_source = false;
};

struct ScoreTableArgs {
  std::string model, direction = "source-to-target", text, input, out;
};

struct SilverArgs {
  std::string model, corpus, direction = "target-to-source", out, meta;
  bool keep_identity = true;
  int workers = 1;
};

struct EvalArgs {
  std::string metric, pred, ref, clf_a, clf_b, label = "b";
  double smoothing = 1.0;
};

int RunSynth(const SynthArgs& a, std::ostream& out) {
  SynthConfig config = a.config;
  config.task = a.task == "polarity" ? SynthTask::kPolarity : SynthTask::kFusion;
  const SynthData data = GenerateSynth(config);
  WriteSynthData(data, a.out);
  out << "wrote " << data.source_corpus.size() << "+"
      << data.target_corpus.size() << " training lines and "
      << data.gold.size() << " gold pairs to " << a.out << "\n";
  return kExitOk;
}

int RunTrain(const TrainArgs& a, std::ostream& out) {
  const std::vector<TokenSeq> source = TokenizeAll(ReadLines(a.source));
  const std::vector<TokenSeq> target = TokenizeAll(ReadLines(a.target));
  const PaddedMlm model =
      PaddedMlm::Train(source, target, a.config, a.workers);
  model.Save(a.out);
  out << "trained on " << source.size() << "+" << target.size()
      << " lines, vocabulary " << model.vocab().size() << ", saved " << a.out
      << "\n";
  return kExitOk;
}

int RunEdit(const EditArgs& a, std::ostream& out) {
  const Direction direction = ParseDirection(a.direction);
  const PaddedMlm model = PaddedMlm::Load(a.model);
  const std::vector<std::string> lines = ReadLines(a.input);

  std::vector<std::string> usable;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!Tokenize(lines[i]).empty()) {
      usable.push_back(lines[i]);
      where.push_back(i);
    }
  }
  const bool keep_tables = !a.table.empty();
  const std::vector<EditResult> results =
      BatchEdit(model, usable, direction, a.workers,
                {.keep_table = keep_tables, .ablate_source = a.ablate_source});

  std::vector<std::string> edited(lines.size());
  std::ostringstream table;
  if (keep_tables) table << "line\t" << kTableHeader;
  for (std::size_t k = 0; k < results.size(); ++k) {
    edited[where[k]] = Detokenize(results[k].output);
    if (keep_tables) {
      AppendScoreTable(table, results[k].table,
                       std::to_string(where[k] + 1) + "\t");
    }
  }
  std::string text;
  for (const std::string& line : edited) text += line + "\n";
  if (keep_tables) WriteFileAtomically(a.table, table.str());
  WriteOutput(a.output, text, out);
  return kExitOk;
}

int RunScoreTable(const ScoreTableArgs& a, std::ostream& out) {
  const Direction direction = ParseDirection(a.direction);
  std::string text = a.text;
  if (text.empty() && !a.input.empty()) {
    const std::vector<std::string> lines = ReadLines(a.input);
    if (!lines.empty()) text = lines.front();
  }
  const TokenSeq tokens = Tokenize(text);
  if (tokens.empty()) throw UsageError("score-table needs non-empty text");
  const PaddedMlm model = PaddedMlm::Load(a.model);
  const BestSpanResult best = BestSpan(model, tokens, direction);
  std::ostringstream os;
  os << kTableHeader;
  AppendScoreTable(os, best.table, "");
  WriteOutput(a.out, os.str(), out);
  return kExitOk;
}

int RunSilver(const SilverArgs& a, std::ostream& out, std::ostream& err) {
  const Direction direction = ParseDirection(a.direction);
  const PaddedMlm model = PaddedMlm::Load(a.model);
  const std::vector<std::string> corpus = ReadLines(a.corpus);
  const SilverResult silver =
      GenerateSilver(model, corpus, direction, a.workers);
  std::ostringstream tsv;
  WriteSilverTsv(tsv, silver.pairs, a.keep_identity);
  if (!a.meta.empty()) {
    std::ostringstream jsonl;
    WriteSilverJsonl(jsonl, silver.pairs, a.keep_identity);
    WriteFileAtomically(a.meta, jsonl.str());
  }
  WriteOutput(a.out, tsv.str(), out);
  std::size_t identity = 0;
  for (const SilverPair& pair : silver.pairs) identity += pair.identity;
  err << silver.pairs.size() << " pairs (" << identity << " identity), "
      << silver.skipped_lines.size() << " empty lines skipped\n";
  return kExitOk;
}

int RunEval(const EvalArgs& a, std::ostream& out) {
  if (a.metric == "exact" || a.metric == "bleu") {
    if (a.pred.empty() || a.ref.empty()) {
      throw UsageError("--metric " + a.metric + " needs --pred and --ref");
    }
    const std::vector<std::string> pred = ReadLines(a.pred);
    const std::vector<std::string> ref = ReadLines(a.ref);
    const double value =
        a.metric == "exact" ? ExactScore(pred, ref) : Bleu(pred, ref);
    out << "metric\tvalue\n" << a.metric << '\t' << FormatMetric(value) << '\n';
    return kExitOk;
  }
  if (a.metric == "acc") {
    if (a.pred.empty() || a.clf_a.empty() || a.clf_b.empty()) {
      throw UsageError("--metric acc needs --pred, --clf-a and --clf-b");
    }
    const NbClassifier clf =
        NbClassifier::Train(TokenizeAll(ReadLines(a.clf_a)),
                            TokenizeAll(ReadLines(a.clf_b)), a.smoothing);
    const Label intended = a.label == "a" ? Label::kA : Label::kB;
    const double value = TransferAccuracy(clf, ReadLines(a.pred), intended);
    out << "metric\tvalue\nacc\t" << FormatMetric(value) << '\n';
    return kExitOk;
  }
  throw UsageError("unknown metric '" + a.metric + "'");
}

}  // namespace

int Run(const std::vector<std::string>& raw_args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Unsupervised text editing with padded masked language models",
               "masker"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic task");
  synth_cmd->add_option("--task", synth.task, "fusion or polarity")
      ->check(CLI::IsMember({"fusion", "polarity"}))
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth.config.seed)->capture_default_str();
  synth_cmd->add_option("--n-train", synth.config.n_train, "Lines per corpus")
      ->capture_default_str();
  synth_cmd->add_option("--n-test", synth.config.n_test, "Gold pairs")
      ->capture_default_str();
  synth_cmd->add_option("--distractor-rate", synth.config.distractor_rate)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  synth_cmd->add_option("--out", synth.out, "Output directory")->required();

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train the padded MLM");
  train_cmd->add_option("--source", train.source, "Source-domain corpus")
      ->required();
  train_cmd->add_option("--target", train.target, "Target-domain corpus")
      ->required();
  train_cmd->add_option("--np", train.config.n_p, "Mask block length")
      ->check(CLI::Range(1, 255))
      ->capture_default_str();
  train_cmd->add_option("--k-ctx", train.config.k_ctx, "Context per side")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  train_cmd->add_option("--alpha", train.config.alpha, "Smoothing")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--min-count", train.config.min_count)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--spans-per-example",
                        train.config.spans_per_example)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--seed", train.config.seed)->capture_default_str();
  train_cmd->add_option("--workers", train.workers)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--out", train.out, "Model file")->required();

  EditArgs edit;
  auto* edit_cmd = app.add_subcommand("edit", "Apply one edit per line");
  edit_cmd->add_option("--model", edit.model)->required();
  edit_cmd->add_option("--direction", edit.direction)
      ->check(CLI::IsMember({"source-to-target", "target-to-source"}))
      ->capture_default_str();
  edit_cmd->add_option("--input", edit.input)->required();
  edit_cmd->add_option("--output", edit.output, "Defaults to stdout");
  edit_cmd->add_option("--emit-table", edit.table,
                       "Write every line's score table to this TSV");
  edit_cmd->add_flag("--ablate-source", edit.ablate_source,
                     "Rank spans by the target score only");
  edit_cmd->add_option("--workers", edit.workers)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  ScoreTableArgs score;
  auto* score_cmd =
      app.add_subcommand("score-table", "Print the span score table of a line");
  score_cmd->add_option("--model", score.model)->required();
  score_cmd->add_option("--direction", score.direction)
      ->check(CLI::IsMember({"source-to-target", "target-to-source"}))
      ->capture_default_str();
  score_cmd->add_option("--text", score.text, "Line to score");
  score_cmd->add_option("--input", score.input, "Use the first line of file");
  score_cmd->add_option("--out", score.out, "Defaults to stdout");

  SilverArgs silver;
  auto* silver_cmd = app.add_subcommand("silver", "Generate silver pairs");
  silver_cmd->add_option("--model", silver.model)->required();
  silver_cmd->add_option("--corpus", silver.corpus)->required();
  silver_cmd->add_option("--direction", silver.direction)
      ->check(CLI::IsMember({"source-to-target", "target-to-source"}))
      ->capture_default_str();
  silver_cmd->add_option("--out", silver.out, "TSV; defaults to stdout");
  silver_cmd->add_option("--meta", silver.meta, "JSONL metadata sidecar");
  silver_cmd->add_flag("--keep-identity,!--drop-identity",
                       silver.keep_identity,
                       "Keep pairs where the edit changed nothing")
      ->capture_default_str();
  silver_cmd->add_option("--workers", silver.workers)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Compute an evaluation metric");
  eval_cmd->add_option("--metric", eval.metric)
      ->check(CLI::IsMember({"exact", "bleu", "acc"}))
      ->required();
  eval_cmd->add_option("--pred", eval.pred);
  eval_cmd->add_option("--ref", eval.ref);
  eval_cmd->add_option("--clf-a", eval.clf_a, "Class A training corpus");
  eval_cmd->add_option("--clf-b", eval.clf_b, "Class B training corpus");
  eval_cmd->add_option("--label", eval.label, "Intended class for acc")
      ->check(CLI::IsMember({"a", "b"}))
      ->capture_default_str();
  eval_cmd->add_option("--smoothing", eval.smoothing)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    std::vector<std::string> args = ApplyConfigFile(raw_args);
    // CLI11 parses a reversed vector of the arguments after the program name.
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  try {
    if (*synth_cmd) return RunSynth(synth, out);
    if (*train_cmd) return RunTrain(train, out);
    if (*edit_cmd) return RunEdit(edit, out);
    if (*score_cmd) return RunScoreTable(score, out);
    if (*silver_cmd) return RunSilver(silver, out, err);
    if (*eval_cmd) return RunEval(eval, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace masker::cli
