#pragma once

#include <string>
#include <vector>

#include "horncone/combinatorics.hpp"
#include "horncone/horn_pq.hpp"

namespace horncone {

/// Weakly decreasing integer vectors of length n with entries in [lo, hi],
/// lexicographically decreasing from (hi,…,hi).
std::vector<GLWeight> weights_in_range(int n, int lo, int hi);
std::vector<WeightPair> weight_pairs_in_range(int p, int q, int lo, int hi);

enum class SweepRoute { cone, theta };

struct SweepMismatch {
  std::string check;             // which equivalence failed
  std::vector<GLWeight> weights;  // λ, μ, ν (each split as ′, ″ for Horn(p,q))
};

struct SweepReport {
  std::size_t checked = 0;
  std::size_t members = 0;
  std::vector<SweepMismatch> mismatches;
};

/// Every triple with entries in [−bound, bound]. The cone route compares
/// horn_pq_cone with horn_pq_semigroup; the theta route compares
/// horn_pq_semigroup(t) with s_pq_semigroup(Θt) and horn_pq_cone(t) with
/// s_pq_cone(Θt).
SweepReport sweep_pq(int p, int q, int bound, SweepRoute route, int jobs = 1);

/// Every triple with entries in [0, bound]: horn_n_cone against the LR oracle.
SweepReport sweep_n(int n, int bound, int jobs = 1);

}  // namespace horncone
