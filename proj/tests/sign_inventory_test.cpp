#include "nrd/sign_inventory.hpp"

#include <random>

#include <gtest/gtest.h>

using namespace nrd;

namespace {

Sign at(std::string id, Point p) { return Sign{std::move(id), p, SignType::R101, 0.0}; }

std::vector<std::string> ids(const SignInventory& inv, const std::vector<SignIndex>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(inv.sign(i).id);
  return out;
}

}  // namespace

TEST(SignType, Codes) {
  EXPECT_EQ(parse_sign_type("R-101"), SignType::R101);
  EXPECT_EQ(parse_sign_type("R-400e"), SignType::R400e);
  EXPECT_EQ(parse_sign_type("R302"), SignType::R302);
  EXPECT_FALSE(parse_sign_type("R-500").has_value());
  EXPECT_FALSE(parse_sign_type("r-101").has_value());
  EXPECT_FALSE(parse_sign_type("").has_value());
  for (auto t : {SignType::R101, SignType::R302, SignType::R303, SignType::R400a, SignType::R400b,
                 SignType::R400c, SignType::R400d, SignType::R400e}) {
    EXPECT_EQ(parse_sign_type(to_code(t)), t);
  }
}

TEST(SignsWithin, RadiusBoundary) {
  SignInventory inv({at("in", {14.9, 0}), at("out", {0, 15.1}), at("edge", {0, -15})});
  EXPECT_EQ(ids(inv, inv.signs_within({0, 0}, 15.0)), (std::vector<std::string>{"edge", "in"}));
}

TEST(SignsWithin, EmptyInventory) {
  SignInventory inv;
  EXPECT_TRUE(inv.signs_within({0, 0}, 15.0).empty());
  EXPECT_TRUE(inv.signs_within_line(Polyline({{0, 0}, {1, 0}}), 10.0).empty());
}

TEST(SignsWithin, RejectsNonPositiveRadius) {
  SignInventory inv({at("a", {0, 0})});
  EXPECT_THROW(inv.signs_within({0, 0}, 0.0), std::invalid_argument);
  EXPECT_THROW(inv.signs_within_line(Polyline({{0, 0}, {1, 0}}), -1.0), std::invalid_argument);
}

TEST(SignsWithinLine, Examples) {
  const Polyline line({{0, 0}, {100, 0}, {100, 100}});
  SignInventory inv({at("beside", {50, 3}), at("far", {50, 11}), at("vertex", {100, 0}),
                     at("inside_corner", {89, 11})});
  // (89, 11) is 11 m from both legs
  EXPECT_EQ(ids(inv, inv.signs_within_line(line, 10.0)),
            (std::vector<std::string>{"beside", "vertex"}));
}

TEST(SignInventory, SortedByIdAndRejectsDuplicates) {
  SignInventory inv({at("b", {0, 0}), at("a", {1, 1})});
  EXPECT_EQ(inv.sign(0).id, "a");
  EXPECT_EQ(inv.find("b"), 1u);
  EXPECT_FALSE(inv.find("c").has_value());
  EXPECT_THROW(SignInventory({at("a", {0, 0}), at("a", {1, 1})}), InventoryError);
  Sign bad = at("x", {0, 0});
  bad.azimuth = 360.0;
  EXPECT_THROW(SignInventory({bad}), InventoryError);
}

TEST(SignInventoryProperty, IndexMatchesLinearScan) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> coord(0.0, 2000.0);
  std::uniform_real_distribution<double> radius(0.5, 60.0);
  for (int round = 0; round < 3; ++round) {
    std::vector<Sign> signs;
    const int n = round == 0 ? 10 : (round == 1 ? 1000 : 10000);
    for (int i = 0; i < n; ++i) {
      signs.push_back(at("s" + std::to_string(i), {coord(rng), coord(rng)}));
    }
    SignInventory inv(signs);
    for (int q = 0; q < 100; ++q) {
      const Point p{coord(rng), coord(rng)};
      const double r = radius(rng);
      std::vector<SignIndex> scan;
      for (SignIndex s = 0; s < inv.size(); ++s) {
        const Point& sp = inv.sign(s).position;
        if (std::hypot(sp.x - p.x, sp.y - p.y) <= r) scan.push_back(s);
      }
      ASSERT_EQ(inv.signs_within(p, r), scan);

      const Polyline line({p, {p.x + coord(rng) / 20, p.y + coord(rng) / 20}, {p.x, p.y + 80}});
      std::vector<SignIndex> line_scan;
      for (SignIndex s = 0; s < inv.size(); ++s) {
        if (line.distance_to(inv.sign(s).position) <= r) line_scan.push_back(s);
      }
      ASSERT_EQ(inv.signs_within_line(line, r), line_scan);
    }
  }
}
