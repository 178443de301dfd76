// Copyright 2026 The Pauliscope Authors
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


#ifndef PAULISCOPE_PARALLEL_H
#define PAULISCOPE_PARALLEL_H

#include <cstddef>
#include <functional>

namespace pauliscope {

/// Worker count from PAULISCOPE_THREADS, else the hardware concurrency (at least 1).
size_t default_thread_count();

/// Runs fn(0) .. fn(count - 1) on up to `threads` workers (0 means the
/// default). Each index runs exactly once; callers write results into
/// index-addressed slots so output never depends on scheduling.
void parallel_for(size_t count, size_t threads, const std::function<void(size_t)> &fn);

}  // namespace pauliscope

#endif
