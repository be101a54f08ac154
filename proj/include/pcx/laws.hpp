#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pcx/elem.hpp"
#include "pcx/group.hpp"
#include "pcx/sampling.hpp"

namespace pcx {

class GMetric;
class GAbsoluteValue;
class IndicatorMap;
class G3Metric;

/// One counterexample to a law: the offending elements plus a rendering.
struct Witness {
  std::vector<Elem> elems;
  std::string text;
};

/// Verdict for a single law of one structure.
struct LawResult {
  std::string law;
  std::size_t samples = 0;     ///< tuples actually evaluated
  bool exhaustive = false;     ///< true when the whole domain was enumerated
  std::size_t failure_count = 0;
  std::vector<Witness> witnesses;  ///< first few counterexamples

  bool passed() const { return failure_count == 0; }
};

/// All law verdicts for one structure.
struct LawReport {
  std::string subject;
  std::vector<LawResult> laws;

  bool passed() const {
    for (const auto& l : laws)
      if (!l.passed()) return false;
    return true;
  }

  const LawResult* find(std::string_view law) const {
    for (const auto& l : laws)
      if (l.law == law) return &l;
    return nullptr;
  }
};

// Each checker enumerates the whole domain when it is finite and small
// enough, and otherwise evaluates `samples` pseudo-random tuples drawn
// from the structure's sampler with the given seed.  The two-argument
// overloads use the domain's default sampler.

LawReport check_alo_axioms(const AloGroup& g, const ElemSampler& sampler,
                           std::size_t samples, std::uint64_t seed = default_seed);
LawReport check_alo_axioms(const AloGroup& g, std::size_t samples = 1000,
                           std::uint64_t seed = default_seed);

LawReport check_metric_axioms(const GMetric& d, const ElemSampler& sampler,
                              std::size_t samples, std::uint64_t seed = default_seed);
LawReport check_metric_axioms(const GMetric& d, std::size_t samples = 1000,
                              std::uint64_t seed = default_seed);

LawReport check_absvalue_axioms(const GAbsoluteValue& v, const ElemSampler& sampler,
                                std::size_t samples, std::uint64_t seed = default_seed);
LawReport check_absvalue_axioms(const GAbsoluteValue& v, std::size_t samples = 1000,
                                std::uint64_t seed = default_seed);

LawReport check_indicator_axioms(const IndicatorMap& t, const ElemSampler& sampler,
                                 std::size_t samples, std::uint64_t seed = default_seed);
LawReport check_indicator_axioms(const IndicatorMap& t, std::size_t samples = 1000,
                                 std::uint64_t seed = default_seed);

LawReport check_g3_axioms(const G3Metric& g, const ElemSampler& sampler,
                          std::size_t samples, std::uint64_t seed = default_seed);
LawReport check_g3_axioms(const G3Metric& g, std::size_t samples = 1000,
                          std::uint64_t seed = default_seed);

/// Checks t(x, y, z) <= bound everywhere (sampled or exhaustive).
LawReport is_bounded_by(const IndicatorMap& t, const Elem& bound,
                        const ElemSampler& sampler, std::size_t samples,
                        std::uint64_t seed = default_seed);
LawReport is_bounded_by(const IndicatorMap& t, const Elem& bound,
                        std::size_t samples = 1000, std::uint64_t seed = default_seed);

/// Throws law_violation describing the first failed law of the report.
void require_passed(const LawReport& report);

}  // namespace pcx
