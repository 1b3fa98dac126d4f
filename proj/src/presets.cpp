#include "lohe/presets.hpp"

#include <initializer_list>

namespace lohe {

namespace {

IntMatrix square(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (auto v : row) {
      m(i, j++) = v;
    }
    ++i;
  }
  return m;
}

// Agent i listens to agent i-1; agent 1 listens to agent 5.
IntMatrix cycle5() {
  IntMatrix a = IntMatrix::Zero(5, 5);
  for (Eigen::Index i = 0; i < 5; ++i) {
    a(i, (i + 4) % 5) = 1;
  }
  return a;
}

Vector unit(Eigen::Index n, Eigen::Index axis) {
  Vector e = Vector::Zero(n);
  e(axis) = 1.0;
  return e;
}

std::vector<IntMatrix> n5_upper_blocks(std::int64_t last_rotation_sign) {
  const IntMatrix uppers[5] = {
      square({{0, 10, -2}, {-10, 0, 4}, {2, -4, 0}}),
      square({{0, 1, -7}, {-1, 0, 1}, {7, -1, 0}}),
      square({{0, 3, 5}, {-3, 0, 2}, {-5, -2, 0}}),
      square({{0, -4, -1}, {4, 0, -1}, {1, 1, 0}}),
      square({{0, 6, 8}, {-6, 0, -3}, {-8, 3, 0}}),
  };
  std::vector<IntMatrix> out;
  for (int i = 0; i < 5; ++i) {
    IntMatrix m = IntMatrix::Zero(5, 5);
    m.topLeftCorner(3, 3) = uppers[i];
    const std::int64_t s = (i == 4) ? last_rotation_sign : 1;
    m(3, 4) = 2 * s;
    m(4, 3) = -2 * s;
    out.push_back(m);
  }
  return out;
}

std::vector<Preset> build() {
  std::vector<Preset> out;

  out.push_back(Preset{
      "paper-n3",
      "n = 3, W = {0}: no complete synchronization, practical synchronization for large k",
      {
          square({{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}}),
          square({{0, 2, -1}, {-2, 0, -4}, {1, 4, 0}}),
          square({{0, 4, 1}, {-4, 0, -2}, {-1, 2, 0}}),
          square({{0, -3, -2}, {3, 0, 1}, {2, -1, 0}}),
          square({{0, 3, -2}, {-3, 0, 1}, {2, -1, 0}}),
      },
      cycle5(),
      2.0,
      50.0,
      std::nullopt,
  });

  out.push_back(Preset{
      "paper-n4",
      "n = 4, W = span{(0,1,-1,0), (1,0,0,-1)}: synchronizes for every k > 0",
      {
          square({{0, 2, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, -2}, {0, 0, 2, 0}}),
          square({{0, 3, 1, 0}, {-3, 0, 0, -1}, {-1, 0, 0, -3}, {0, 1, 3, 0}}),
          square({{0, 4, 2, 0}, {-4, 0, 0, -2}, {-2, 0, 0, -4}, {0, 2, 4, 0}}),
          square({{0, -1, -3, 0}, {1, 0, 0, 3}, {3, 0, 0, 1}, {0, -3, -1, 0}}),
          square({{0, 5, 3, 0}, {-5, 0, 0, -3}, {-3, 0, 0, -5}, {0, 3, 5, 0}}),
      },
      cycle5(),
      0.9,
      100.0,
      std::nullopt,
  });

  // Every oscillator shares the rotation generator [[0, 2], [-2, 0]] on the
  // (e4, e5) plane, which makes W = span{e4, e5}.
  out.push_back(Preset{
      "paper-n5",
      "n = 5, W = span{e4, e5}: synchronizes, first three components decay",
      n5_upper_blocks(1),
      cycle5(),
      1.0,
      100.0,
      unit(5, 3),
  });

  // Same ensemble with Omega_5 rotating the (e4, e5) plane the other way.
  // That block then differs from Omega_1 and W collapses to {0}.
  out.push_back(Preset{
      "paper-n5-reversed",
      "n = 5 with Omega_5's (e4, e5) rotation reversed: W = {0}",
      n5_upper_blocks(-1),
      cycle5(),
      1.0,
      50.0,
      std::nullopt,
  });

  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> registry = build();
  return registry;
}

const Preset* find_preset(const std::string& name) {
  for (const auto& p : presets()) {
    if (p.name == name) {
      return &p;
    }
  }
  return nullptr;
}

RunConfig preset_config(const Preset& preset) {
  RunConfig cfg;
  cfg.name = preset.name;
  cfg.preset = preset.name;
  cfg.m = static_cast<Eigen::Index>(preset.omegas.size());
  cfg.n = preset.omegas.front().rows();
  for (const auto& o : preset.omegas) {
    cfg.omegas.push_back(o.cast<double>());
  }
  cfg.adjacency = preset.adjacency.cast<double>();
  cfg.k = preset.default_k;
  cfg.t_end = preset.default_t_end;
  cfg.p = preset.default_p;
  return cfg;
}

}  // namespace lohe
