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

#include "masker/pipeline.h"

#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "masker/synth.h"
#include "test_util.h"

namespace masker {
namespace {

class PipelineTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    SynthConfig config;
    config.n_train = 400;
    config.n_test = 0;
    data_ = new SynthData(GenerateFusion(config));
    model_ = new PaddedMlm(testing::TrainOn(data_->source_corpus,
                                            data_->target_corpus));
  }
  static void TearDownTestSuite() {
    delete model_;
    delete data_;
  }

  static std::vector<std::string> Lines(std::size_t n) {
    return {data_->target_corpus.begin(), data_->target_corpus.begin() + n};
  }

  static SynthData* data_;
  static PaddedMlm* model_;
};

SynthData* PipelineTest::data_ = nullptr;
PaddedMlm* PipelineTest::model_ = nullptr;

std::string Tsv(const SilverResult& r) {
  std::ostringstream out;
  WriteSilverTsv(out, r.pairs);
  return out.str();
}

std::string Jsonl(const SilverResult& r) {
  std::ostringstream out;
  WriteSilverJsonl(out, r.pairs);
  return out.str();
}

TEST_F(PipelineTest, WorkerCountDoesNotChangeOutput) {
  const auto corpus = Lines(200);
  const SilverResult one = GenerateSilver(*model_, corpus, kTargetToSource, 1);
  const SilverResult eight = GenerateSilver(*model_, corpus, kTargetToSource, 8);
  EXPECT_EQ(Tsv(one), Tsv(eight));
  EXPECT_EQ(Jsonl(one), Jsonl(eight));
}

TEST_F(PipelineTest, BatchEditMatchesSequentialEdits) {
  const auto corpus = Lines(50);
  const auto batch = BatchEdit(*model_, corpus, kTargetToSource, 4,
                               {.keep_table = true});
  ASSERT_EQ(batch.size(), corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const EditResult single =
        Edit(*model_, corpus[i], kTargetToSource, {.keep_table = true});
    EXPECT_EQ(batch[i].output, single.output);
    EXPECT_EQ(batch[i].table, single.table);
  }
}

TEST_F(PipelineTest, EmptyCorpus) {
  EXPECT_TRUE(BatchEdit(*model_, {}, kSourceToTarget, 3).empty());
  const SilverResult r = GenerateSilver(*model_, {}, kSourceToTarget, 3);
  EXPECT_TRUE(r.pairs.empty());
  EXPECT_TRUE(r.skipped_lines.empty());
}

TEST_F(PipelineTest, BatchEditRejectsBadInput) {
  EXPECT_THROW(BatchEdit(*model_, Lines(2), kSourceToTarget, 0),
               std::invalid_argument);
  const std::vector<std::string> with_blank = {"a b", " "};
  EXPECT_THROW(BatchEdit(*model_, with_blank, kSourceToTarget, 1),
               std::invalid_argument);
}

TEST_F(PipelineTest, LineCountConservation) {
  std::vector<std::string> corpus = Lines(30);
  corpus.insert(corpus.begin() + 3, "");
  corpus.insert(corpus.begin() + 10, "  \t ");
  corpus.push_back("");
  for (int workers : {1, 8}) {
    const SilverResult r = GenerateSilver(*model_, corpus, kTargetToSource, workers);
    EXPECT_EQ(r.pairs.size() + r.skipped_lines.size(), corpus.size());
    EXPECT_EQ(r.skipped_lines, (std::vector<std::size_t>{3, 10, 32}));
  }
}

TEST_F(PipelineTest, OnePairPerLineInOrder) {
  const auto corpus = Lines(100);
  const SilverResult r = GenerateSilver(*model_, corpus, kTargetToSource, 2);
  ASSERT_EQ(r.pairs.size(), 100u);
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    EXPECT_EQ(r.pairs[i].line, i);
    // The target side is the corpus line itself.
    EXPECT_EQ(r.pairs[i].target_text, corpus[i]);
    EXPECT_EQ(r.pairs[i].identity,
              r.pairs[i].source_text == r.pairs[i].target_text);
  }
}

TEST_F(PipelineTest, FusedLinesBecomeUnfused) {
  const auto corpus = Lines(100);
  const SilverResult r = GenerateSilver(*model_, corpus, kTargetToSource, 2);
  int split = 0;
  for (const SilverPair& pair : r.pairs) {
    if (pair.source_text.find(" . ") != std::string::npos) ++split;
  }
  EXPECT_GE(split, 90);
}

TEST(SilverIdentityTest, IdentityEditsAreKeptAndFlagged) {
  const std::vector<std::string> corpus = {"a b c", "a b c", "b c a"};
  const PaddedMlm model = testing::TrainOn(corpus, corpus, {.min_count = 1});
  const SilverResult r = GenerateSilver(model, corpus, kTargetToSource);
  ASSERT_EQ(r.pairs.size(), 3u);
  int identities = 0;
  for (const SilverPair& pair : r.pairs) {
    EXPECT_EQ(pair.identity, pair.source_text == pair.target_text);
    identities += pair.identity;
  }
  ASSERT_GT(identities, 0);

  std::ostringstream kept, dropped;
  WriteSilverTsv(kept, r.pairs, /*keep_identity=*/true);
  WriteSilverTsv(dropped, r.pairs, /*keep_identity=*/false);
  auto count_lines = [](const std::string& s) {
    return std::count(s.begin(), s.end(), '\n');
  };
  EXPECT_EQ(count_lines(kept.str()), 3);
  EXPECT_EQ(count_lines(dropped.str()), 3 - identities);
}

TEST(SilverFormatTest, TsvAndJsonlLayout) {
  SilverPair pair;
  pair.line = 4;
  pair.source_text = "anna lost it . she ran .";
  pair.target_text = "anna lost it and ran .";
  pair.winner = ComposeScore({3, 1}, {".", "she", "[PAD]", "[PAD]"}, 0.5, 0.1,
                             0.2, 0.3);
  pair.identity = false;
  const std::vector<SilverPair> pairs = {pair};

  std::ostringstream tsv;
  WriteSilverTsv(tsv, pairs);
  EXPECT_EQ(tsv.str(), "anna lost it . she ran .\tanna lost it and ran .\n");

  std::ostringstream jsonl;
  WriteSilverJsonl(jsonl, pairs);
  const auto meta = nlohmann::json::parse(jsonl.str());
  EXPECT_EQ(meta["line"], 4);
  EXPECT_EQ(meta["start"], 3);
  EXPECT_EQ(meta["del_len"], 1);
  EXPECT_EQ(meta["replacement"],
            (std::vector<std::string>{".", "she", "[PAD]", "[PAD]"}));
  EXPECT_DOUBLE_EQ(meta["score"].get<double>(), 0.4);
  EXPECT_EQ(meta["identity"], false);
}

}  // namespace
}  // namespace masker
