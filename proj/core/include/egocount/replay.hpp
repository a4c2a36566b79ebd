#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "egocount/egonet.hpp"
#include "egocount/pipeline.hpp"
#include "egocount/sampling.hpp"

namespace egocount {

/// Egonets read back from a replay file (JSON lines). The optional first line
/// is a header {"egocount_replay": 1, "mode", "design", "n_prime",
/// "population_size", "seed"}; every other line is one egonet:
///   {"ego": id, "alters": [ids] | "alter_count": k, "edges": [[a, b], ...],
///    "states": [...], "weight": w, "draws": c, "inclusion": p}
/// Edges use local indices with the ego at 0. A record without "alters" is
/// anonymized and makes the sample unlabeled.
struct ReplaySample {
  NeighborhoodMode mode = NeighborhoodMode::kUndirectedFull;
  std::optional<DesignKind> design;
  std::optional<std::size_t> population_size;
  std::optional<std::size_t> n_prime;
  std::optional<std::uint64_t> seed;

  std::vector<OriginalId> egos;
  std::vector<Egonet> egonets;
  std::vector<std::optional<double>> inclusion;
  std::vector<std::optional<double>> weights;
  std::vector<std::size_t> draws;
};

ReplaySample read_replay(std::istream& in);
ReplaySample read_replay_file(const std::filesystem::path& path);

struct ReplayWriteOptions {
  bool anonymize = false;            // drop alter ids
  bool include_population = false;   // write N into the header
};

/// Writes the egonets of a realized sample as a replay file.
void write_replay(std::ostream& out, const Graph& g, const EgoSampler& sampler,
                  const EgoSample& sample, NeighborhoodMode mode,
                  const ReplayWriteOptions& options = {});

/// Turns a replay into estimator input. N comes from `population_size` or the
/// header; n' from the header or the summed draw counts. Inclusion
/// probabilities are taken from the records when present, otherwise derived
/// from the design (Hansen-Hurwitz for weighted designs).
SampledEgonets to_sampled_egonets(const ReplaySample& replay,
                                  std::optional<std::size_t> population_size = std::nullopt,
                                  std::optional<DesignKind> design = std::nullopt);

}  // namespace egocount
