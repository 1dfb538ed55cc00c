#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixmult/instance.hpp"
#include "mixmult/verify.hpp"

namespace mixmult {

/// Deterministic generator for the desk-scale corpus: s ≤ 3 variables,
/// d ≤ 2 ideals, generator degrees ≤ 4, every instance non-degenerate.
/// The stream depends only on the seed.
class CorpusGenerator {
 public:
  explicit CorpusGenerator(std::uint64_t seed);

  /// Next instance. `max_ideals` caps d (use 1 for chain instances).
  InstanceDocument next(std::size_t min_ideals = 1, std::size_t max_ideals = 2);
  /// L' ⊇ L for the exact-sequence verifier, chosen from the current stream.
  std::vector<std::string> lower_prime_for(const InstanceDocument& doc);
  std::uint64_t draw(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct CorpusRow {
  std::string instance_id;
  std::string theorem;
  Verdict verdict = Verdict::inconclusive;
  std::string lhs;
  std::string rhs;
};

struct CorpusSummary {
  std::uint64_t seed = 0;
  std::vector<CorpusRow> rows;
  std::size_t count(Verdict v) const;
  std::size_t count(const std::string& theorem, Verdict v) const;
};

/// Generates `size` instances, runs every applicable verifier, and returns
/// the rows in instance order. Uses up to `threads` workers.
CorpusSummary run_corpus(std::uint64_t seed, std::size_t size, unsigned threads,
                         std::vector<InstanceDocument>* instances = nullptr);

/// Runs every applicable verifier on one instance.
std::vector<CorpusRow> verify_instance(const std::string& id, const InstanceDocument& doc);

/// instance_id, theorem, verdict, lhs, rhs with a header line.
std::string summary_tsv(const CorpusSummary& summary);

/// MIXMULT_THREADS, defaulting to the hardware concurrency.
unsigned thread_budget();

}  // namespace mixmult
