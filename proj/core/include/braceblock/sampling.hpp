#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "braceblock/maps.hpp"

namespace braceblock {

/// Deterministic random words over a fixed pool of named endomorphisms.
class WordSampler {
 public:
  WordSampler(std::vector<GMap> pool, std::vector<std::string> names, std::uint64_t seed,
              int max_terms = 4, int max_coeff = 3);

  /// Pool = all endomorphisms of g, named e0, e1, ...
  static WordSampler over_endomorphisms(const FiniteGroup& g, std::uint64_t seed,
                                        int max_terms = 4, int max_coeff = 3);

  EndoWord next();
  std::size_t pick(std::size_t bound);

  const std::vector<GMap>& pool() const { return pool_; }

 private:
  std::vector<GMap> pool_;
  std::vector<std::string> names_;
  std::mt19937_64 rng_;
  int max_terms_;
  int max_coeff_;
};

}  // namespace braceblock
