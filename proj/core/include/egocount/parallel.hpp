#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

namespace egocount {

/// Worker count: an explicit request wins, then EGOCOUNT_WORKERS, then the
/// hardware concurrency (at least 1).
std::size_t resolve_workers(std::optional<std::size_t> requested = std::nullopt);

/// Runs body(i) for every i in [0, count) on up to `workers` threads. Indices
/// are handed out dynamically, so body must only write to per-index state.
/// The first exception thrown by any body is rethrown after all threads join.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body);

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Independent stream seed for (base, a, b); stable across platforms.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) noexcept;

}  // namespace egocount
