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

#ifndef MASKER_TESTS_REFERENCE_TABLE_H_
#define MASKER_TESTS_REFERENCE_TABLE_H_

#include <array>

namespace masker::testing {

// Published per-candidate scores for fusing "marie curie was born in poland .
// she died in the france ." (wordpiece input, values rounded to three
// decimals). i and j are the published indices and are only used to name rows.
struct ReferenceRow {
  int i;
  int j;
  const char* replacement;
  double target_score;
  double source_score;
  double score;
  double l1;
  double l2;
  double l3;
  double l4;
};

// The published values are rounded, so composed scores may differ by this.
inline constexpr double kReferenceTolerance = 0.002;

inline constexpr std::array<ReferenceRow, 54> kReferenceRows = {{
    {0, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.421, 0.421, 0.491, 0.491},
    {0, 1, "[PAD] [PAD] [PAD] [PAD]", 0.108, -0.225, -0.117, 0.116, 0.007, 0.234, 0.009},
    {0, 2, "z [PAD] [PAD] [PAD]", 0.001, -0.006, -0.005, 0.001, 0.000, 0.006, 0.000},
    {0, 3, "she was was [PAD]", 0.000, -0.021, -0.021, 0.000, 0.000, 0.021, 0.000},
    {1, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.357, 0.357, 0.324, 0.324},
    {1, 1, "[PAD] [PAD] [PAD] [PAD]", 0.003, -0.025, -0.023, 0.003, 0.000, 0.025, 0.000},
    {1, 2, "was [PAD] was [PAD]", 0.000, -0.011, -0.011, 0.000, 0.000, 0.011, 0.000},
    {1, 3, "was born born born", 0.007, -0.002, 0.006, 0.007, 0.000, 0.002, 0.000},
    {2, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.624, 0.624, 0.708, 0.708},
    {2, 1, "was [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.595, 0.595, 0.684, 0.684},
    {2, 2, "was born [PAD] [PAD]", 0.000, 0.000, 0.000, 0.567, 0.567, 0.412, 0.412},
    {2, 3, "was born in [PAD]", 0.000, 0.000, 0.000, 0.208, 0.208, 0.269, 0.269},
    {2, 4, "was a [PAD] [PAD]", 0.009, -0.001, 0.007, 0.009, 0.000, 0.001, 0.000},
    {3, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.983, 0.983, 0.866, 0.866},
    {3, 1, "born [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.884, 0.884, 0.847, 0.847},
    {3, 2, "born in [PAD] [PAD]", 0.000, 0.000, 0.000, 0.477, 0.477, 0.476, 0.476},
    {3, 3, "born french [PAD] [PAD]", 0.018, -0.000, 0.018, 0.018, 0.001, 0.001, 0.000},
    {3, 4, "born in [PAD] [PAD]", 0.004, -0.004, -0.000, 0.004, 0.000, 0.004, 0.000},
    {4, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.863, 0.863, 0.958, 0.958},
    {4, 1, "in [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.601, 0.601, 0.717, 0.717},
    {4, 2, "in the [PAD] [PAD]", 0.038, -0.158, -0.120, 0.042, 0.004, 0.164, 0.006},
    {4, 3, "in [PAD] [PAD] [PAD]", 0.017, -0.012, 0.005, 0.017, 0.001, 0.016, 0.004},
    {4, 4, "in [PAD] and [PAD]", 0.069, 0.000, 0.069, 0.069, 0.000, 0.000, 0.000},
    {5, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.466, 0.466, 0.698, 0.698},
    {5, 1, "the [PAD] [PAD] [PAD]", 0.094, -0.192, -0.098, 0.097, 0.003, 0.196, 0.004},
    {5, 2, "the , [PAD] [PAD]", 0.022, -0.002, 0.021, 0.023, 0.001, 0.005, 0.003},
    {5, 3, "the and [PAD] [PAD]", 0.069, 0.000, 0.069, 0.069, 0.000, 0.000, 0.000},
    {5, 4, "germany but grew [PAD]", 0.008, 0.000, 0.008, 0.008, 0.000, 0.000, 0.000},
    {6, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.763, 0.763, 0.894, 0.894},
    {6, 1, ", [PAD] [PAD] [PAD]", 0.161, 0.000, 0.161, 0.256, 0.095, 0.009, 0.823},
    {6, 2, "and [PAD] [PAD] [PAD]", 0.488, 0.000, 0.488, 0.489, 0.000, 0.000, 0.000},
    {6, 3, "but but [PAD] [PAD]", 0.058, 0.000, 0.058, 0.058, 0.000, 0.000, 0.004},
    {6, 4, "but but up [PAD]", 0.018, 0.000, 0.018, 0.018, 0.000, 0.000, 0.000},
    {7, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.945, 0.945, 0.906, 0.906},
    {7, 1, "her [PAD] [PAD] [PAD]", 0.005, 0.000, 0.005, 0.125, 0.120, 0.000, 0.000},
    {7, 2, "her family was [PAD]", 0.010, -0.000, 0.010, 0.010, 0.000, 0.000, 0.000},
    {7, 3, "she family to [PAD]", 0.008, -0.001, 0.007, 0.008, 0.000, 0.001, 0.000},
    {7, 4, "she was raised in", 0.011, -0.000, 0.011, 0.011, 0.000, 0.000, 0.000},
    {8, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.890, 0.890, 0.733, 0.733},
    {8, 1, "was up [PAD] [PAD]", 0.013, -0.019, -0.006, 0.017, 0.004, 0.024, 0.005},
    {8, 2, "was to [PAD] [PAD]", 0.006, -0.003, 0.003, 0.006, 0.000, 0.003, 0.000},
    {8, 3, "was lives in [PAD]", 0.006, -0.001, 0.005, 0.006, 0.000, 0.001, 0.000},
    {8, 4, "is of in [PAD]", 0.004, -0.002, 0.002, 0.004, 0.000, 0.002, 0.000},
    {9, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.556, 0.556, 0.722, 0.722},
    {9, 1, "in [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.480, 0.480, 0.621, 0.621},
    {9, 2, "in [PAD] [PAD] [PAD]", 0.504, -0.394, 0.110, 0.511, 0.007, 0.400, 0.007},
    {9, 3, "in paris [PAD] [PAD]", 0.069, -0.019, 0.050, 0.069, 0.000, 0.020, 0.001},
    {10, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.351, 0.351, 0.721, 0.721},
    {10, 1, "[PAD] [PAD] [PAD] [PAD]", 0.456, -0.442, 0.014, 0.462, 0.007, 0.449, 0.007},
    {10, 2, "paris [PAD] [PAD] [PAD]", 0.091, -0.017, 0.074, 0.091, 0.000, 0.018, 0.001},
    {11, 0, "netherlands of [PAD] [PAD]", 0.022, -0.113, -0.091, 0.022, 0.000, 0.113, 0.000},
    {11, 1, "netherlands states [PAD] [PAD]", 0.105, -0.118, -0.013, 0.106, 0.001, 0.120, 0.002},
    {12, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 0.223, 0.223, 0.437, 0.437},
    {13, 0, "[PAD] [PAD] [PAD] [PAD]", 0.000, 0.000, 0.000, 1.000, 1.000, 1.000, 1.000},
}};

}  // namespace masker::testing

#endif  // MASKER_TESTS_REFERENCE_TABLE_H_
