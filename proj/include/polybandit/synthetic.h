// Copyright 2026 The Polybandit Authors.
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

#ifndef POLYBANDIT_SYNTHETIC_H_
#define POLYBANDIT_SYNTHETIC_H_

#include "polybandit/rng.h"
#include "polybandit/topology.h"

namespace polybandit {

// Stand-ins for the external ISP and movie-ratings data, shaped like them:
// sparse connected graphs with skewed integer latencies, and binary ratings
// with a long-tailed item popularity.

// Connected graph: a random spanning tree plus random extra edges up to
// `edge_count`. Latencies are integers >= 1 with a mean of a few ms.
GraphTopology MakeSyntheticGraph(int node_count, int edge_count, Rng& rng);

// Every user watches item e independently with a popularity that decays
// across items; each user watches at least one item.
RatingsMatrix MakeSyntheticRatings(int user_count, int item_count, Rng& rng);

// One to three topics per item; every topic is covered by some item.
CoverageMap MakeSyntheticCoverage(int item_count, int topic_count, Rng& rng);

}  // namespace polybandit

#endif  // POLYBANDIT_SYNTHETIC_H_
