#include "nrd/geometry.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

using nrd::Point;
using nrd::Polyline;

namespace {

Polyline bent() { return Polyline({{0, 0}, {3, 0}, {3, 4}}); }

// Random polyline with 2..10 vertices and total length <= max_length.
Polyline random_polyline(std::mt19937& rng, double max_length) {
  std::uniform_int_distribution<int> count(2, 10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = count(rng);
  std::vector<double> lengths(n - 1);
  double sum = 0.0;
  for (auto& l : lengths) {
    l = 0.05 + unit(rng);
    sum += l;
  }
  const double total = max_length * (0.01 + 0.99 * unit(rng));
  std::vector<Point> v{{unit(rng) * 1000.0, unit(rng) * 1000.0}};
  for (double l : lengths) {
    const double a = unit(rng) * 2.0 * 3.14159265358979323846;
    const double len = l / sum * total;
    v.push_back({v.back().x + len * std::cos(a), v.back().y + len * std::sin(a)});
  }
  return Polyline(std::move(v));
}

}  // namespace

TEST(Heading, CompassConvention) {
  EXPECT_EQ(nrd::heading({0, 0}, {0, 10}), 0.0);
  EXPECT_EQ(nrd::heading({0, 0}, {10, 0}), 90.0);
  EXPECT_EQ(nrd::heading({0, 0}, {-5, -5}), 225.0);
  EXPECT_EQ(nrd::heading({0, 0}, {0, -3}), 180.0);
  EXPECT_EQ(nrd::heading({0, 0}, {-3, 0}), 270.0);
}

TEST(Heading, StaysBelow360) {
  const double h = nrd::heading({0, 0}, {-1e-300, 1.0});
  EXPECT_GE(h, 0.0);
  EXPECT_LT(h, 360.0);
}

TEST(Heading, CoincidentPointsThrow) {
  EXPECT_THROW(nrd::heading({1, 1}, {1, 1}), std::invalid_argument);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(nrd::normalize(190), -170);
  EXPECT_EQ(nrd::normalize(-180), 180);
  EXPECT_EQ(nrd::normalize(0), 0);
  EXPECT_EQ(nrd::normalize(180), 180);
  EXPECT_EQ(nrd::normalize(540), 180);
  EXPECT_EQ(nrd::normalize(-190), 170);
  EXPECT_EQ(nrd::normalize(720), 0);
}

TEST(Normalize, IdempotentAndInRange) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> any(-5000.0, 5000.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = any(rng);
    const double n = nrd::normalize(x);
    EXPECT_GT(n, -180.0);
    EXPECT_LE(n, 180.0);
    EXPECT_EQ(nrd::normalize(n), n);
  }
}

TEST(Angle, Examples) {
  EXPECT_EQ(nrd::angle({0, 10}, {0, 0}, {0, 10}), 0.0);
  EXPECT_EQ(nrd::angle({0, 10}, {0, 0}, {10, 0}), -90.0);
  EXPECT_EQ(nrd::angle({10, 0}, {0, 0}, {0, 10}), 90.0);
}

TEST(Angle, TipOnTailThrows) {
  EXPECT_THROW(nrd::angle({0, 0}, {0, 0}, {1, 0}), std::invalid_argument);
  EXPECT_THROW(nrd::angle({1, 0}, {0, 0}, {0, 0}), std::invalid_argument);
}

TEST(Angle, AntisymmetricAndConsistentWithHeading) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  for (int i = 0; i < 10000; ++i) {
    const Point o{coord(rng), coord(rng)};
    const Point t1{coord(rng), coord(rng)};
    const Point t2{coord(rng), coord(rng)};
    const double a = nrd::angle(t1, o, t2);
    EXPECT_EQ(a, nrd::normalize(nrd::heading(o, t1) - nrd::heading(o, t2)));
    if (a != 180.0) {
      EXPECT_NEAR(nrd::angle(t2, o, t1), -a, 1e-12);
    }
  }
}

TEST(Polyline, Length) {
  EXPECT_EQ(bent().length(), 7.0);
  EXPECT_EQ(Polyline({{0, 0}, {1, 0}}).length(), 1.0);
  EXPECT_EQ(Polyline({{0, 0}, {3, 4}}).length(), 5.0);
}

TEST(Polyline, RejectsDegenerateInput) {
  EXPECT_THROW(Polyline({{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Polyline({{0, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(Polyline({{0, 0}, {1, 0}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Polyline({{0, 0}, {NAN, 0}}), std::invalid_argument);
}

TEST(Polyline, ProjectClampsToEnds) {
  const auto line = bent();
  EXPECT_EQ(line.project(0), (Point{0, 0}));
  EXPECT_EQ(line.project(5), (Point{3, 2}));
  EXPECT_EQ(line.project(99), (Point{3, 4}));
  EXPECT_EQ(line.project(-4), (Point{0, 0}));
  EXPECT_EQ(line.project(3), (Point{3, 0}));
}

TEST(Polyline, Index) {
  const auto line = bent();
  EXPECT_EQ(line.index({3, 0}), 3.0);
  EXPECT_EQ(line.index({0, 0}), 0.0);
  EXPECT_EQ(line.index({3, 2}), 5.0);
  // off-line points use their closest point
  EXPECT_EQ(line.index({5, 2}), 5.0);
  EXPECT_EQ(line.index({-2, -2}), 0.0);
}

TEST(Polyline, IndexOfSelfOverlapTakesSmallestLength) {
  // out and back along the same segment
  const Polyline line({{0, 0}, {10, 0}, {0, 0.0000001}});
  EXPECT_NEAR(line.index({4, 0}), 4.0, 1e-9);
}

TEST(Polyline, Closest) {
  const Polyline line({{0, 0}, {10, 0}});
  EXPECT_EQ(line.closest({5, 3}), (Point{5, 0}));
  EXPECT_EQ(line.closest({12, 1}), (Point{10, 0}));
  EXPECT_EQ(line.closest({5, 0}), (Point{5, 0}));
}

TEST(Polyline, ClosestTieGoesToSmallestArcLength) {
  // (5,5) is equidistant from both legs of the U
  const Polyline u({{0, 10}, {0, 0}, {10, 0}, {10, 10}});
  EXPECT_EQ(u.closest({5, 5}), (Point{0, 5}));
}

TEST(Distance, Examples) {
  EXPECT_EQ(nrd::distance({0, 0}, {3, 4}), 5.0);
  EXPECT_EQ(nrd::distance({1, 1}, {1, 1}), 0.0);
  EXPECT_EQ(nrd::distance_to_line(Polyline({{0, 0}, {10, 0}}), {5, 3}), 3.0);
}

TEST(Polyline, ReversedAndSameShape) {
  const auto line = bent();
  const auto rev = line.reversed();
  EXPECT_EQ(rev.front(), (Point{3, 4}));
  EXPECT_EQ(rev.length(), line.length());
  EXPECT_TRUE(nrd::same_shape(rev.reversed(), line, 0.0));
  EXPECT_FALSE(nrd::same_shape(rev, line, 1e-3));
}

TEST(PolylineProperty, ProjectIndexRoundTrip) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const auto line = random_polyline(rng, 1000.0);
    for (int k = 0; k < 20; ++k) {
      const double d = unit(rng) * line.length();
      EXPECT_NEAR(line.index(line.project(d)), d, 1e-6);
    }
  }
}

TEST(PolylineProperty, ClosestBeatsSampling) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> coord(-200.0, 1200.0);
  for (int i = 0; i < 50; ++i) {
    const auto line = random_polyline(rng, 100.0);
    const Point p{coord(rng), coord(rng)};
    const double got = nrd::distance(p, line.closest(p));
    const auto v = line.vertices();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s + 1 < v.size(); ++s) {
      const double len = nrd::distance(v[s], v[s + 1]);
      const int steps = static_cast<int>(len / 0.01);
      for (int k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) / std::max(steps, 1);
        const Point q{v[s].x + t * (v[s + 1].x - v[s].x), v[s].y + t * (v[s + 1].y - v[s].y)};
        best = std::min(best, nrd::distance(p, q));
      }
    }
    EXPECT_LE(got, best + 1e-9);
    EXPECT_NEAR(line.distance_to(p), got, 1e-12);
  }
}
