#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lohe/linalg.hpp"

namespace lohe {

/// Frequency matrices of m >= 2 oscillators, all of dimension n.
class FrequencyEnsemble {
 public:
  explicit FrequencyEnsemble(std::vector<SkewMatrix> matrices);

  Eigen::Index dim() const { return matrices_.front().dim(); }
  std::size_t size() const { return matrices_.size(); }
  const SkewMatrix& operator[](std::size_t i) const { return matrices_[i]; }
  const std::vector<SkewMatrix>& matrices() const { return matrices_; }

 private:
  std::vector<SkewMatrix> matrices_;
};

enum class Shortcut { General, Identical, Proportional, Commuting };

std::string_view to_string(Shortcut s);

struct SyncVerdict {
  Subspace w;
  Eigen::Index dim_w = 0;
  bool synchronizable = false;
  Shortcut shortcut_used = Shortcut::General;
  /// Unit vector in W, present iff synchronizable.
  std::optional<Vector> p;
  /// For NO-SYNC: rank of the stacked blocks whose kernel is W.
  Eigen::Index witness_rank = 0;
  std::string rank_witness;
  /// Span distance between the two characterizations of W.
  double cross_check_distance = 0.0;
};

/// Pair (i, j), 0-based, whose difference is nonsingular, or the planar
/// nonidentical pair when n = 2.
struct RejectWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  double det = 0.0;
  bool planar = false;
};

/// W as the common kernel of Omega_i^l - Omega_1^l, l = 1..n, i = 2..m.
Subspace compute_w_powers(const FrequencyEnsemble& ens, double tol = kDefaultKernelTol);

/// W as the common kernel of (Omega_i - Omega_1) Omega_1^s, s = 0..n-1.
Subspace compute_w_products(const FrequencyEnsemble& ens, double tol = kDefaultKernelTol);

/// Verdict with shortcut detection, cross-checked against the powers form.
/// Throws CharacterizationMismatch if the two forms disagree beyond 1e-8.
SyncVerdict compute_w(const FrequencyEnsemble& ens);

/// Cheap NO-SYNC certificate. An empty result says nothing about W.
std::optional<RejectWitness> quick_reject(const FrequencyEnsemble& ens);

/// l_i with Omega_i = l_i Omega_1 when every fit residual is <= tol relative
/// to ||Omega_1||; empty otherwise.
std::optional<std::vector<double>> proportional_ratios(const FrequencyEnsemble& ens,
                                                        double tol = 1e-10);

}  // namespace lohe
