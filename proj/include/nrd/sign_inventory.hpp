#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nrd/geometry.hpp"

namespace nrd {

enum class SignType {
  R101,   // no way
  R302,   // no right turn
  R303,   // no left turn
  R400a,  // one way to the right
  R400b,  // one way to the left
  R400c,  // drive ahead
  R400d,  // turn right
  R400e,  // turn left
};

/// "R-101", "R-400a", ...
std::string_view to_code(SignType type);
/// Accepts the catalogue codes with or without the dash ("R-302", "R302").
std::optional<SignType> parse_sign_type(std::string_view code);

using SignId = std::string;
using SignIndex = std::size_t;

struct Sign {
  SignId id;
  Point position;
  SignType type = SignType::R101;
  /// Travel direction of the traffic the sign addresses; the sign face
  /// points the opposite way.
  Bearing azimuth = 0.0;
};

class InventoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classified signs with an R-tree over their positions. Signs are kept
/// sorted by id and every query returns indices in ascending order.
class SignInventory {
 public:
  SignInventory();
  explicit SignInventory(std::vector<Sign> signs);
  SignInventory(SignInventory&&) noexcept;
  SignInventory& operator=(SignInventory&&) noexcept;
  ~SignInventory();

  std::size_t size() const { return signs_.size(); }
  bool empty() const { return signs_.empty(); }
  const Sign& sign(SignIndex s) const { return signs_.at(s); }
  const std::vector<Sign>& signs() const { return signs_; }
  std::optional<SignIndex> find(const SignId& id) const;

  /// Signs with distance(position, p) <= radius.
  std::vector<SignIndex> signs_within(const Point& p, double radius) const;
  /// Signs with distance_to_line(line, position) <= radius.
  std::vector<SignIndex> signs_within_line(const Polyline& line, double radius) const;

 private:
  struct Tree;
  std::vector<Sign> signs_;
  std::unique_ptr<Tree> tree_;
};

}  // namespace nrd
