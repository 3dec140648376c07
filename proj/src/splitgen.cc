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

#include "morphaug/splitgen.h"

#include "morphaug/text.h"

namespace morphaug {

LemmaSplit MakeLemmaSplit(const Dataset& full, const Dataset& train) {
  LemmaSplit split;
  split.train = train;
  for (const InflectionTriple& t : train.triples) {
    split.train_lemmas.insert(NormalizeNfc(t.lemma));
  }
  split.test.name = full.name.empty() ? "test" : full.name + "-test";
  for (const InflectionTriple& t : full.triples) {
    if (split.train_lemmas.count(NormalizeNfc(t.lemma))) {
      ++split.excluded;
    } else {
      split.test.triples.push_back(t);
    }
  }
  return split;
}

}  // namespace morphaug
