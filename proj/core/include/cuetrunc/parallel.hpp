// Copyright 2026 The cuetrunc Authors.
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

#ifndef CUETRUNC_PARALLEL_HPP_
#define CUETRUNC_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace cuetrunc {

/// Worker count used when a caller passes 0: hardware concurrency, capped by
/// the CUETRUNC_THREADS environment variable when it is set.
std::size_t default_worker_count();

/// Runs body(i) for every i in [0, count) on up to `workers` threads
/// (0 means default_worker_count()). Indices are split into contiguous
/// blocks; bodies must write only to per-index slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t workers = 0);

}  // namespace cuetrunc

#endif  // CUETRUNC_PARALLEL_HPP_
