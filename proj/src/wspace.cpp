#include "lohe/wspace.hpp"

#include <cmath>
#include <string>

#include "lohe/error.hpp"

namespace lohe {

std::string_view to_string(Shortcut s) {
  switch (s) {
    case Shortcut::General: return "general";
    case Shortcut::Identical: return "identical";
    case Shortcut::Proportional: return "proportional";
    case Shortcut::Commuting: return "commuting";
  }
  return "general";
}

FrequencyEnsemble::FrequencyEnsemble(std::vector<SkewMatrix> matrices)
    : matrices_(std::move(matrices)) {
  if (matrices_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "an ensemble needs at least two oscillators");
  }
  for (const auto& m : matrices_) {
    if (m.dim() != matrices_.front().dim()) {
      throw Error(ErrorCode::DimensionMismatch, "all frequency matrices must share dimension n");
    }
  }
}

namespace {

// Each block is scaled to unit Frobenius norm before stacking. Scaling a
// block leaves its kernel unchanged and keeps high powers from swamping the
// low-order blocks in the relative singular value cutoff.
Subspace stacked_kernel(const std::vector<Matrix>& blocks, Eigen::Index n, double tol) {
  std::vector<const Matrix*> nonzero;
  for (const auto& b : blocks) {
    if (b.norm() > 0.0) {
      nonzero.push_back(&b);
    }
  }
  if (nonzero.empty()) {
    return Subspace::full(n);
  }
  Matrix stacked(static_cast<Eigen::Index>(nonzero.size()) * n, n);
  for (std::size_t k = 0; k < nonzero.size(); ++k) {
    stacked.middleRows(static_cast<Eigen::Index>(k) * n, n) =
        *nonzero[k] / nonzero[k]->norm();
  }
  return kernel(stacked, tol);
}

std::vector<Matrix> difference_blocks(const FrequencyEnsemble& ens) {
  std::vector<Matrix> blocks;
  for (std::size_t i = 1; i < ens.size(); ++i) {
    blocks.push_back(ens[i].matrix() - ens[0].matrix());
  }
  return blocks;
}

std::vector<Matrix> product_blocks(const FrequencyEnsemble& ens) {
  const Eigen::Index n = ens.dim();
  const auto diffs = difference_blocks(ens);
  std::vector<Matrix> blocks;
  Matrix power = Matrix::Identity(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    for (const auto& d : diffs) {
      blocks.push_back(d * power);
    }
    power = power * ens[0].matrix();
  }
  return blocks;
}

bool all_identical(const FrequencyEnsemble& ens) {
  const double scale = ens[0].matrix().norm();
  for (std::size_t i = 1; i < ens.size(); ++i) {
    if ((ens[i].matrix() - ens[0].matrix()).norm() > 1e-12 * scale) {
      return false;
    }
  }
  return true;
}

bool all_commute_with_first(const FrequencyEnsemble& ens, double tol) {
  const Matrix& first = ens[0].matrix();
  for (std::size_t i = 1; i < ens.size(); ++i) {
    const Matrix& other = ens[i].matrix();
    const double scale = first.norm() * other.norm();
    if ((other * first - first * other).norm() > tol * scale) {
      return false;
    }
  }
  return true;
}

Vector sign_normalized(Vector v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  if (v(idx) < 0.0) {
    v = -v;
  }
  return v;
}

}  // namespace

Subspace compute_w_powers(const FrequencyEnsemble& ens, double tol) {
  const Eigen::Index n = ens.dim();
  std::vector<Matrix> powers;
  for (const auto& omega : ens.matrices()) {
    powers.push_back(omega.matrix());
  }
  std::vector<Matrix> blocks;
  // powers[i] holds Omega_i^l at iteration l.
  for (Eigen::Index l = 1; l <= n; ++l) {
    for (std::size_t i = 1; i < ens.size(); ++i) {
      blocks.push_back(powers[i] - powers[0]);
    }
    if (l < n) {
      for (std::size_t i = 0; i < ens.size(); ++i) {
        powers[i] = powers[i] * ens[i].matrix();
      }
    }
  }
  return stacked_kernel(blocks, n, tol);
}

Subspace compute_w_products(const FrequencyEnsemble& ens, double tol) {
  return stacked_kernel(product_blocks(ens), ens.dim(), tol);
}

std::optional<std::vector<double>> proportional_ratios(const FrequencyEnsemble& ens, double tol) {
  const Matrix& ref = ens[0].matrix();
  const double ref_sq = ref.squaredNorm();
  if (ref_sq == 0.0) {
    return std::nullopt;
  }
  std::vector<double> ratios;
  for (const auto& omega : ens.matrices()) {
    const double l = (omega.matrix().cwiseProduct(ref)).sum() / ref_sq;
    if ((omega.matrix() - l * ref).norm() > tol * std::sqrt(ref_sq)) {
      return std::nullopt;
    }
    ratios.push_back(l);
  }
  return ratios;
}

SyncVerdict compute_w(const FrequencyEnsemble& ens) {
  const Eigen::Index n = ens.dim();
  SyncVerdict verdict{Subspace::zero(n), 0, false, Shortcut::General, std::nullopt, 0, {}, 0.0};

  if (all_identical(ens)) {
    verdict.w = Subspace::full(n);
    verdict.shortcut_used = Shortcut::Identical;
  } else if (proportional_ratios(ens)) {
    verdict.w = kernel(ens[0].matrix());
    verdict.shortcut_used = Shortcut::Proportional;
  } else if (all_commute_with_first(ens, 1e-10)) {
    verdict.w = stacked_kernel(difference_blocks(ens), n, kDefaultKernelTol);
    verdict.shortcut_used = Shortcut::Commuting;
  } else {
    verdict.w = compute_w_products(ens);
    verdict.shortcut_used = Shortcut::General;
  }

  const Subspace powers = compute_w_powers(ens);
  if (powers.dim() != verdict.w.dim()) {
    throw Error(ErrorCode::CharacterizationMismatch,
                "dim W is " + std::to_string(verdict.w.dim()) + " by the " +
                    std::string(to_string(verdict.shortcut_used)) + " path but " +
                    std::to_string(powers.dim()) + " by the powers form");
  }
  verdict.cross_check_distance = projector_distance(powers, verdict.w);
  if (verdict.cross_check_distance > 1e-8) {
    throw Error(ErrorCode::CharacterizationMismatch,
                "W characterizations differ by projector distance " +
                    std::to_string(verdict.cross_check_distance));
  }

  verdict.dim_w = verdict.w.dim();
  verdict.synchronizable = verdict.dim_w > 0;
  verdict.witness_rank = n - verdict.dim_w;
  if (verdict.synchronizable) {
    verdict.p = sign_normalized(verdict.w.basis().col(0));
    verdict.rank_witness = "dim W = " + std::to_string(verdict.dim_w);
  } else {
    const Subspace diff_kernel = stacked_kernel(difference_blocks(ens), n, kDefaultKernelTol);
    if (diff_kernel.dim() == 0) {
      verdict.rank_witness = "rank of stacked differences = " + std::to_string(n);
    } else {
      verdict.rank_witness =
          "rank of stacked differences = " + std::to_string(n - diff_kernel.dim()) +
          ", rank of stacked products (Omega_i - Omega_1) Omega_1^s = " + std::to_string(n);
    }
  }
  return verdict;
}

std::optional<RejectWitness> quick_reject(const FrequencyEnsemble& ens) {
  const Eigen::Index n = ens.dim();
  for (std::size_t i = 0; i < ens.size(); ++i) {
    for (std::size_t j = i + 1; j < ens.size(); ++j) {
      const Matrix diff = ens[i].matrix() - ens[j].matrix();
      if (diff.isZero(0.0)) {
        continue;
      }
      if (n == 2) {
        return RejectWitness{i, j, diff.determinant(), true};
      }
      Eigen::JacobiSVD<Matrix> svd(diff);
      const auto& sv = svd.singularValues();
      // |det| / sigma_max^n as a product of ratios avoids overflow.
      double ratio = 1.0;
      for (Eigen::Index k = 0; k < sv.size(); ++k) {
        ratio *= sv(k) / sv(0);
      }
      if (ratio > 1e-8) {
        return RejectWitness{i, j, diff.determinant(), false};
      }
    }
  }
  return std::nullopt;
}

}  // namespace lohe
