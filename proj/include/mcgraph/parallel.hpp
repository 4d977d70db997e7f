// Copyright 2026 The mcgraph Authors.
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

#ifndef MCGRAPH_PARALLEL_HPP_
#define MCGRAPH_PARALLEL_HPP_

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#include "mcgraph/multigraph.hpp"

namespace mcg {

// Worker count used by every OpenMP kernel. 0 restores the runtime default.
void SetWorkerCount(int workers);
int WorkerCount();

// Applies f to every index in [0, count) and returns the results in index
// order. If any call throws, the exception of the lowest failing index is
// rethrown after all workers finish.
template <typename T, typename F>
std::vector<T> ParallelMap(std::size_t count, F&& f) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(WorkerCount())
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

// Serial counterpart of ParallelMap with identical results.
template <typename T, typename F>
std::vector<T> SerialMap(std::size_t count, F&& f) {
  std::vector<T> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
  return out;
}

// OpenMP versions of the per-graph kernels; each equals its serial
// counterpart in mc_core exactly, including output order.
std::vector<EdgeId> RemovableEdgesParallel(const Multigraph& g);
std::vector<std::pair<EdgeId, EdgeId>> RemovableDoubletonsParallel(
    const Multigraph& g);
bool IsBicriticalParallel(const Multigraph& g);

}  // namespace mcg

#endif  // MCGRAPH_PARALLEL_HPP_
