#pragma once

// Lattice paths over {E, N}, the dominance predicates between two paths,
// and exhaustive enumeration of strict and weak k-path pairs.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pathpairs {

enum class Step : char { E = 'E', N = 'N' };

struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A finite E/N path starting at the origin.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Parses a string over {E, N}; throws DomainError on any other character.
  static LatticePath parse(std::string_view text);

  [[nodiscard]] const std::vector<Step>& steps() const { return steps_; }
  [[nodiscard]] std::size_t size() const { return steps_.size(); }
  [[nodiscard]] bool empty() const { return steps_.empty(); }
  [[nodiscard]] Point endpoint() const;
  /// size()+1 points, starting at (0, 0).
  [[nodiscard]] std::vector<Point> vertices() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

/// An ordered (upper, lower) pair; the upper path is gamma_1.
struct PathPair {
  LatticePath upper;
  LatticePath lower;

  /// x-endpoint(lower) - x-endpoint(upper).
  [[nodiscard]] int delta() const;
  /// len(lower) - len(upper).
  [[nodiscard]] int epsilon() const;
  /// Shared lattice points other than the origin.
  [[nodiscard]] int returns() const;
  /// "upper/lower".
  [[nodiscard]] std::string str() const;

  friend bool operator==(const PathPair&, const PathPair&) = default;
};

/// True iff the path is empty, or splits into (k-1)-step blocks from
/// {E N^{k-2}, N^{k-1}} with the first block E N^{k-2}.
bool gamma2_blocks_valid(int k, const LatticePath& path);

/// Column-profile dominance: no vertex of `lower` at an x within the range
/// of `upper` lies above the highest point of `upper` in that column.
bool weakly_above(const LatticePath& upper, const LatticePath& lower);

/// Number of lattice points other than (0, 0) on both paths.
int return_count(const LatticePath& upper, const LatticePath& lower);

/// All strict k-path pairs for the given parameters, ordered
/// lexicographically by (lower, upper) with E < N. Throws DomainError when
/// k < 2, n < 1, or the upper length (k-1)n - epsilon is negative.
std::vector<PathPair> enumerate_strict(int k, int n, int delta, int epsilon);

/// All weak k-path pairs (upper stays weakly above lower), optionally
/// restricted to exactly `returns` shared points. Same ordering as
/// enumerate_strict. delta = 0 requires epsilon = 0.
std::vector<PathPair> enumerate_weak(int k, int n, int delta, int epsilon,
                                     std::optional<int> returns = std::nullopt);

}  // namespace pathpairs
