#include "nrd/sign_inventory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>
#include <utility>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/box.hpp>
#include <boost/geometry/geometries/point.hpp>
#include <boost/geometry/index/rtree.hpp>
#include <boost/iterator/function_output_iterator.hpp>

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

namespace nrd {

namespace {

constexpr std::array<std::pair<SignType, std::string_view>, 8> kCodes{{
    {SignType::R101, "R-101"},
    {SignType::R302, "R-302"},
    {SignType::R303, "R-303"},
    {SignType::R400a, "R-400a"},
    {SignType::R400b, "R-400b"},
    {SignType::R400c, "R-400c"},
    {SignType::R400d, "R-400d"},
    {SignType::R400e, "R-400e"},
}};

using BgPoint = bg::model::point<double, 2, bg::cs::cartesian>;
using BgBox = bg::model::box<BgPoint>;
using Entry = std::pair<BgPoint, SignIndex>;

}  // namespace

std::string_view to_code(SignType type) {
  for (const auto& [t, code] : kCodes) {
    if (t == type) {
      return code;
    }
  }
  return "R-?";
}

std::optional<SignType> parse_sign_type(std::string_view code) {
  for (const auto& [t, c] : kCodes) {
    if (code == c) {
      return t;
    }
    // undashed spelling
    if (code.size() + 1 == c.size() && code.substr(0, 1) == c.substr(0, 1) &&
        code.substr(1) == c.substr(2)) {
      return t;
    }
  }
  return std::nullopt;
}

struct SignInventory::Tree {
  bgi::rtree<Entry, bgi::quadratic<16>> rtree;
};

SignInventory::SignInventory() : tree_(std::make_unique<Tree>()) {}

SignInventory::SignInventory(std::vector<Sign> signs) : signs_(std::move(signs)) {
  std::sort(signs_.begin(), signs_.end(),
            [](const Sign& a, const Sign& b) { return a.id < b.id; });
  std::vector<Entry> entries;
  entries.reserve(signs_.size());
  for (SignIndex s = 0; s < signs_.size(); ++s) {
    const Sign& sign = signs_[s];
    if (s > 0 && signs_[s - 1].id == sign.id) {
      throw InventoryError("duplicate sign id '" + sign.id + "'");
    }
    if (!std::isfinite(sign.position.x) || !std::isfinite(sign.position.y)) {
      throw InventoryError("sign '" + sign.id + "' has non-finite coordinates");
    }
    if (!(sign.azimuth >= 0.0 && sign.azimuth < 360.0)) {
      throw InventoryError("sign '" + sign.id + "' azimuth outside [0, 360)");
    }
    entries.emplace_back(BgPoint(sign.position.x, sign.position.y), s);
  }
  // packing constructor
  tree_ = std::make_unique<Tree>(Tree{{entries.begin(), entries.end()}});
}

SignInventory::SignInventory(SignInventory&&) noexcept = default;
SignInventory& SignInventory::operator=(SignInventory&&) noexcept = default;
SignInventory::~SignInventory() = default;

std::optional<SignIndex> SignInventory::find(const SignId& id) const {
  const auto it = std::lower_bound(signs_.begin(), signs_.end(), id,
                                   [](const Sign& s, const SignId& v) { return s.id < v; });
  if (it == signs_.end() || it->id != id) {
    return std::nullopt;
  }
  return static_cast<SignIndex>(it - signs_.begin());
}

std::vector<SignIndex> SignInventory::signs_within(const Point& p, double radius) const {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("signs_within: radius must be positive");
  }
  const BgBox window(BgPoint(p.x - radius, p.y - radius), BgPoint(p.x + radius, p.y + radius));
  std::vector<SignIndex> out;
  tree_->rtree.query(bgi::intersects(window) && bgi::satisfies([&](const Entry& e) {
                       return distance(signs_[e.second].position, p) <= radius;
                     }),
                     boost::make_function_output_iterator(
                         [&](const Entry& e) { out.push_back(e.second); }));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignIndex> SignInventory::signs_within_line(const Polyline& line,
                                                        double radius) const {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("signs_within_line: radius must be positive");
  }
  double min_x = line.front().x;
  double max_x = min_x;
  double min_y = line.front().y;
  double max_y = min_y;
  for (const Point& v : line.vertices()) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  const BgBox window(BgPoint(min_x - radius, min_y - radius),
                     BgPoint(max_x + radius, max_y + radius));
  std::vector<SignIndex> out;
  tree_->rtree.query(bgi::intersects(window) && bgi::satisfies([&](const Entry& e) {
                       return line.distance_to(signs_[e.second].position) <= radius;
                     }),
                     boost::make_function_output_iterator(
                         [&](const Entry& e) { out.push_back(e.second); }));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nrd
