#include "braceblock/sampling.hpp"

namespace braceblock {

WordSampler::WordSampler(std::vector<GMap> pool, std::vector<std::string> names,
                         std::uint64_t seed, int max_terms, int max_coeff)
    : pool_(std::move(pool)),
      names_(std::move(names)),
      rng_(seed),
      max_terms_(max_terms),
      max_coeff_(max_coeff) {
  if (pool_.empty() || pool_.size() != names_.size() || max_terms_ < 1 || max_coeff_ < 1) {
    throw Error(ErrorKind::BadParameters, "word sampler needs a nonempty named pool");
  }
}

WordSampler WordSampler::over_endomorphisms(const FiniteGroup& g, std::uint64_t seed,
                                            int max_terms, int max_coeff) {
  auto pool = enumerate_endomorphisms(g);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pool.size(); ++i) names.push_back("e" + std::to_string(i));
  return WordSampler(std::move(pool), std::move(names), seed, max_terms, max_coeff);
}

std::size_t WordSampler::pick(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
}

EndoWord WordSampler::next() {
  const auto terms = 1 + pick(static_cast<std::size_t>(max_terms_));
  std::vector<WordTerm> out;
  for (std::size_t i = 0; i < terms; ++i) {
    const std::size_t k = pick(pool_.size());
    // Nonzero coefficient in [-max_coeff, max_coeff].
    auto c = static_cast<long long>(pick(2 * static_cast<std::size_t>(max_coeff_))) - max_coeff_;
    if (c >= 0) ++c;
    out.push_back(WordTerm{pool_[k], c, names_[k]});
  }
  return EndoWord(std::move(out));
}

}  // namespace braceblock
