// Copyright 2026 The Morphaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MORPHAUG_SPLITGEN_H_
#define MORPHAUG_SPLITGEN_H_

#include <cstddef>
#include <set>
#include <string>

#include "morphaug/corpus.h"

namespace morphaug {

// Compositional evaluation split: train and test share no lemma.
struct LemmaSplit {
  Dataset train;
  Dataset test;
  // NFC-normalized lemmas of `train`.
  std::set<std::u32string> train_lemmas;
  // Triples of the full dataset dropped because their lemma is in train.
  std::size_t excluded = 0;

  // Warning condition: the exclusion removed every triple.
  bool empty_test() const { return test.empty(); }
};

// test = triples of `full` whose NFC-normalized lemma is not a train lemma.
// Test triples keep their original text and ids.
LemmaSplit MakeLemmaSplit(const Dataset& full, const Dataset& train);

}  // namespace morphaug

#endif  // MORPHAUG_SPLITGEN_H_
