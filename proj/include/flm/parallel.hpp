#pragma once

#include <cstddef>
#include <functional>

namespace flm {

/// Runs work(i) for every i in [0, n), on up to `threads` workers. Items are
/// pulled from a shared counter, so each item must write only to its own
/// output slot and must not depend on which thread executes it. The first
/// exception thrown by any item is rethrown after all workers join.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& work);

}  // namespace flm
