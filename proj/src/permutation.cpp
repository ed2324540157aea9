#include "linequiv/permutation.hpp"

#include <numeric>
#include <sstream>

#include "linequiv/errors.hpp"

namespace linequiv {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw InvalidArgument("image sequence is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree)
        throw InvalidArgument("cycle point " + std::to_string(x) + " exceeds degree " +
                              std::to_string(degree));
      if (used[x])
        throw InvalidArgument("point " + std::to_string(x) + " repeated in cycles");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw InvalidArgument("degree mismatch in composition");
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) out.images_[x] = images_[rhs.images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) out.images_[images_[x]] = static_cast<Point>(x);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out << '(';
    Point x = static_cast<Point>(start);
    bool first = true;
    while (!done[x]) {
      if (!first) out << ' ';
      out << x;
      done[x] = true;
      x = images_[x];
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace linequiv
