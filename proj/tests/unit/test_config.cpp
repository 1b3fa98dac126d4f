#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "lohe/config.hpp"
#include "lohe/error.hpp"
#include "lohe/presets.hpp"

using namespace lohe;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::InvalidArgument;
}

std::string message_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const char* kTwoPlanar = R"({
  // two planar oscillators listening to each other
  "omegas": [[[0, -1], [1, 0]], [[0, -2], [2, 0]]],
  "adjacency": [[0, 1], [1, 0]],
  "k": 0.5
})";

}  // namespace

TEST(Presets, Registry) {
  std::vector<std::string> names;
  for (const auto& p : presets()) names.push_back(p.name);
  EXPECT_EQ(names, (std::vector<std::string>{"paper-n3", "paper-n4", "paper-n5",
                                             "paper-n5-reversed"}));
  EXPECT_EQ(find_preset("nope"), nullptr);
  for (const auto& p : presets()) {
    ASSERT_EQ(p.omegas.size(), 5u);
    for (const auto& o : p.omegas) EXPECT_EQ(o.transpose(), -o) << p.name;
    EXPECT_EQ(p.adjacency.sum(), 5);
  }
}

TEST(Presets, CubicExpandsToTheFiveMatricesAndCycle) {
  const RunConfig cfg = parse_config(R"({"preset": "paper-n3"})");
  EXPECT_EQ(cfg.n, 3);
  EXPECT_EQ(cfg.m, 5);
  ASSERT_EQ(cfg.omegas.size(), 5u);
  Matrix first(3, 3);
  first << 0, 1, 2, -1, 0, 3, -2, -3, 0;
  EXPECT_EQ(cfg.omegas[0], first);
  Matrix last(3, 3);
  last << 0, 3, -2, -3, 0, 1, 2, -1, 0;
  EXPECT_EQ(cfg.omegas[4], last);
  for (Eigen::Index i = 0; i < 5; ++i) EXPECT_EQ(cfg.adjacency(i, (i + 4) % 5), 1.0);
  EXPECT_EQ(cfg.preset, std::optional<std::string>("paper-n3"));
  EXPECT_EQ(cfg.name, "paper-n3");
}

TEST(Presets, QuinticDefaultsToE4) {
  const RunConfig cfg = preset_config(*find_preset("paper-n5"));
  ASSERT_TRUE(cfg.p.has_value());
  EXPECT_EQ(*cfg.p, Vector::Unit(5, 3));
  for (const auto& o : cfg.omegas) {
    EXPECT_EQ(o(3, 4), 2.0);
    EXPECT_EQ(o(4, 3), -2.0);
  }
  EXPECT_EQ(find_preset("paper-n5-reversed")->omegas[4](3, 4), -2);
}

TEST(ParseConfig, ExplicitMatrices) {
  const RunConfig cfg = parse_config(kTwoPlanar, "pair");
  EXPECT_EQ(cfg.name, "pair");
  EXPECT_EQ(cfg.n, 2);
  EXPECT_EQ(cfg.m, 2);
  EXPECT_EQ(cfg.omegas[1](1, 0), 2.0);
  EXPECT_EQ(cfg.k, 0.5);
  EXPECT_EQ(cfg.dt, 1e-3);
  EXPECT_FALSE(cfg.t_end.has_value());
  EXPECT_DOUBLE_EQ(effective_t_end(cfg, true), 100.0);
  EXPECT_DOUBLE_EQ(effective_t_end(cfg, false), 50.0);
}

TEST(ParseConfig, FlatRowMajorMatrices) {
  const RunConfig flat = parse_config(R"({"n": 2, "m": 2,
      "omegas": [[0, -1, 1, 0], [0, -2, 2, 0]], "adjacency": [0, 1, 1, 0], "k": 0.5})");
  const RunConfig nested = parse_config(kTwoPlanar);
  EXPECT_EQ(flat.omegas, nested.omegas);
  EXPECT_EQ(flat.adjacency, nested.adjacency);
  EXPECT_EQ(code_of(R"({"omegas": [[0, -1, 1, 0], [0, -2, 2, 0]], "adjacency": [0, 1, 1, 0]})"),
            ErrorCode::ValidationError);
}

TEST(ParseConfig, PresetWithOverrides) {
  const RunConfig cfg = parse_config(
      R"({"preset": "paper-n4", "k": 1.8, "seed": 7, "t_end": 20, "stride": 1, "name": "fast"})");
  EXPECT_EQ(cfg.k, 1.8);
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_EQ(cfg.t_end, std::optional<double>(20.0));
  EXPECT_EQ(cfg.stride, 1);
  EXPECT_EQ(cfg.name, "fast");
  EXPECT_EQ(cfg.n, 4);
  const RunConfig p = parse_config(R"({"preset": "paper-n5", "p": [0, 0, 0, 3, 4]})");
  EXPECT_NEAR((*p.p - Vector{{0, 0, 0, 0.6, 0.8}}).norm(), 0.0, 1e-16);
}

TEST(ParseConfig, NonSkewCitesResidual) {
  const std::string text = R"({"omegas": [[[0, 1], [1, 0]], [[0, -2], [2, 0]]],
                               "adjacency": [[0, 1], [1, 0]]})";
  EXPECT_EQ(code_of(text), ErrorCode::ValidationError);
  const std::string msg = message_of(text);
  EXPECT_NE(msg.find("omegas[0]"), std::string::npos) << msg;
  EXPECT_NE(msg.find("max symmetric residual"), std::string::npos) << msg;
  EXPECT_NE(msg.find("= 2"), std::string::npos) << msg;
}

TEST(ParseConfig, SingleOscillatorRejected) {
  const std::string text = R"({"omegas": [[[0, -1], [1, 0]]], "adjacency": [[0]]})";
  EXPECT_EQ(code_of(text), ErrorCode::ValidationError);
  EXPECT_NE(message_of(text).find("m >= 2"), std::string::npos);
}

TEST(ParseConfig, Errors) {
  EXPECT_EQ(code_of("{not json"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("[1, 2]"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"preset": "paper-n3", "gain": 2})"), ErrorCode::ValidationError);
  EXPECT_NE(message_of(R"({"preset": "paper-n3", "gain": 2})").find("gain"), std::string::npos);
  EXPECT_EQ(code_of(R"({"preset": "paper-n9"})"), ErrorCode::ValidationError);
  EXPECT_EQ(code_of(R"({"preset": "paper-n3", "k": -1})"), ErrorCode::ValidationError);
  EXPECT_EQ(code_of(R"({"preset": "paper-n3", "dt": 0})"), ErrorCode::ValidationError);
  EXPECT_EQ(code_of(R"({"preset": "paper-n3", "margin": 1})"), ErrorCode::ValidationError);
  EXPECT_EQ(code_of(R"({"preset": "paper-n3", "stride": 0})"), ErrorCode::ValidationError);
  EXPECT_EQ(code_of(R"({"preset": "paper-n3", "seed": -3})"), ErrorCode::ValidationError);
  EXPECT_EQ(code_of(R"({"preset": "paper-n3", "p": [1, 0]})"), ErrorCode::ValidationError);
  EXPECT_EQ(code_of(R"({"preset": "paper-n3", "k": "big"})"), ErrorCode::ValidationError);
  EXPECT_EQ(code_of(R"({"omegas": [[[0, -1], [1, 0]], [[0, -2], [2, 0]]],
                        "adjacency": [[1, 1], [1, 0]]})"),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of(R"({"omegas": [[[0, -1], [1, 0]], [[0, -2], [2, 0]]],
                        "adjacency": [[0, -1], [1, 0]]})"),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of(R"({"omegas": [[[0, -1], [1, 0]], [[0, 0, 0], [0, 0, 0], [0, 0, 0]]],
                        "adjacency": [[0, 1], [1, 0]]})"),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of(R"({"adjacency": [[0, 1], [1, 0]]})"), ErrorCode::ValidationError);
}

TEST(ParseConfig, DimensionLimit) {
  std::string zeros = "[";
  for (int i = 0; i < 65 * 65; ++i) zeros += i ? ",0" : "0";
  zeros += "]";
  const std::string text = R"({"n": 65, "m": 2, "omegas": [)" + zeros + "," + zeros +
                           R"(], "adjacency": [0, 1, 1, 0]})";
  EXPECT_EQ(code_of(text), ErrorCode::ValidationError);
}

TEST(LoadConfig, NameFromFileStem) {
  const auto path = std::filesystem::temp_directory_path() / "lohe_test_pair.json";
  std::ofstream(path) << kTwoPlanar;
  const RunConfig cfg = load_config(path);
  EXPECT_EQ(cfg.name, "lohe_test_pair");
  std::filesystem::remove(path);
  try {
    load_config(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(MakeEnsemble, FromConfig) {
  const RunConfig cfg = parse_config(kTwoPlanar);
  const auto ens = make_ensemble(cfg);
  EXPECT_EQ(ens.size(), 2u);
  EXPECT_EQ(make_graph(cfg).agents(), 2);
}
