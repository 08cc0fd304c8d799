#include "pathpairs/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pathpairs/errors.hpp"

namespace pathpairs {

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'E') {
      steps.push_back(Step::E);
    } else if (c == 'N') {
      steps.push_back(Step::N);
    } else {
      throw DomainError("LatticePath: invalid step '" + std::string(1, c) + "' in \"" +
                        std::string(text) + "\"");
    }
  }
  return LatticePath(std::move(steps));
}

Point LatticePath::endpoint() const {
  Point p;
  for (Step s : steps_) (s == Step::E ? p.x : p.y) += 1;
  return p;
}

std::vector<Point> LatticePath::vertices() const {
  std::vector<Point> out;
  out.reserve(steps_.size() + 1);
  Point p;
  out.push_back(p);
  for (Step s : steps_) {
    (s == Step::E ? p.x : p.y) += 1;
    out.push_back(p);
  }
  return out;
}

std::string LatticePath::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

int PathPair::delta() const { return lower.endpoint().x - upper.endpoint().x; }

int PathPair::epsilon() const {
  return static_cast<int>(lower.size()) - static_cast<int>(upper.size());
}

int PathPair::returns() const { return return_count(upper, lower); }

std::string PathPair::str() const { return upper.str() + "/" + lower.str(); }

bool gamma2_blocks_valid(int k, const LatticePath& path) {
  if (k < 2) throw DomainError("gamma2_blocks_valid: k must be >= 2");
  const auto& steps = path.steps();
  if (steps.empty()) return true;
  const std::size_t block = static_cast<std::size_t>(k - 1);
  if (steps.size() % block != 0 || steps.front() != Step::E) return false;
  // each block is N^{k-1} or E N^{k-2}: only the leading step may be E
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i % block != 0 && steps[i] != Step::N) return false;
  }
  return true;
}

namespace {

// Column profile of a monotone path: lowest and highest y per column.
struct ColumnSpan {
  std::vector<int> lo;
  std::vector<int> hi;

  explicit ColumnSpan(const LatticePath& path) {
    Point p;
    lo.push_back(0);
    hi.push_back(0);
    for (Step s : path.steps()) {
      if (s == Step::E) {
        ++p.x;
        lo.push_back(p.y);
        hi.push_back(p.y);
      } else {
        ++p.y;
        hi.back() = p.y;
      }
    }
  }

  [[nodiscard]] int width() const { return static_cast<int>(lo.size()); }
  [[nodiscard]] bool contains(Point p) const {
    return p.x >= 0 && p.x < width() && lo[p.x] <= p.y && p.y <= hi[p.x];
  }
};

}  // namespace

bool weakly_above(const LatticePath& upper, const LatticePath& lower) {
  const ColumnSpan top(upper);
  const ColumnSpan bottom(lower);
  const int columns = std::min(top.width(), bottom.width());
  for (int x = 0; x < columns; ++x) {
    if (bottom.hi[x] > top.hi[x]) return false;
  }
  return true;
}

int return_count(const LatticePath& upper, const LatticePath& lower) {
  const ColumnSpan bottom(lower);
  int shared = 0;
  // vertices of a monotone path are distinct, so each shared point counts once
  for (const Point& p : upper.vertices()) {
    if (p != Point{} && bottom.contains(p)) ++shared;
  }
  return shared;
}

namespace {

enum class Dominance { strict, weak };

// Depth-first generation of lower paths block by block, and for each lower
// path of upper paths step by step. Pruning:
//  - strict: an upper vertex may never land on the lower path's trace;
//  - weak: leaving column x requires the upper height to be at least the
//    lower path's top in that column;
//  - both: the upper path must still be able to end at x = x_lower - delta.
class PairSearch {
 public:
  PairSearch(int k, int n, int delta, int epsilon, Dominance mode, std::optional<int> returns)
      : k_(k),
        n_(n),
        delta_(delta),
        upper_len_((k - 1) * n - epsilon),
        mode_(mode),
        returns_(returns) {}

  std::vector<PathPair> run() {
    lower_.reserve(static_cast<std::size_t>((k_ - 1) * n_));
    extend_lower(0);
    return std::move(out_);
  }

 private:
  void extend_lower(int blocks) {
    if (blocks == n_) {
      search_uppers(LatticePath(lower_));
      return;
    }
    // E N^{k-2} sorts before N^{k-1}; the first block must be E N^{k-2}
    for (Step lead : {Step::E, Step::N}) {
      if (blocks == 0 && lead == Step::N) continue;
      lower_.push_back(lead);
      for (int i = 0; i < k_ - 2; ++i) lower_.push_back(Step::N);
      extend_lower(blocks + 1);
      lower_.resize(lower_.size() - static_cast<std::size_t>(k_ - 1));
    }
  }

  void search_uppers(const LatticePath& lower) {
    const int target_x = lower.endpoint().x - delta_;
    if (target_x < 0 || target_x > upper_len_) return;
    span_ = ColumnSpan(lower);
    current_lower_ = &lower;
    upper_.clear();
    if (upper_len_ == 0) {
      emit();
      return;
    }
    upper_.push_back(Step::N);
    walk(Point{0, 1}, target_x);
  }

  void walk(Point at, int target_x) {
    if (mode_ == Dominance::strict && span_.contains(at)) return;
    const int remaining = upper_len_ - static_cast<int>(upper_.size());
    if (at.x > target_x || target_x - at.x > remaining) return;
    if (remaining == 0) {
      if (mode_ == Dominance::weak && span_.hi[at.x] > at.y) return;
      emit();
      return;
    }
    if (at.x < target_x && (mode_ == Dominance::strict || span_.hi[at.x] <= at.y)) {
      upper_.push_back(Step::E);
      walk({at.x + 1, at.y}, target_x);
      upper_.pop_back();
    }
    upper_.push_back(Step::N);
    walk({at.x, at.y + 1}, target_x);
    upper_.pop_back();
  }

  void emit() {
    PathPair pair{LatticePath(upper_), *current_lower_};
    if (returns_ && pair.returns() != *returns_) return;
    out_.push_back(std::move(pair));
  }

  int k_;
  int n_;
  int delta_;
  int upper_len_;
  Dominance mode_;
  std::optional<int> returns_;

  std::vector<Step> lower_;
  std::vector<Step> upper_;
  ColumnSpan span_{LatticePath{}};
  const LatticePath* current_lower_ = nullptr;
  std::vector<PathPair> out_;
};

void check_pair_shape(const char* who, int k, int n, int delta, int epsilon) {
  const std::string name(who);
  if (k < 2) throw DomainError(name + ": k must be >= 2, got " + std::to_string(k));
  if (n < 1) throw DomainError(name + ": n must be >= 1, got " + std::to_string(n));
  if (delta < 0) throw DomainError(name + ": delta must be >= 0, got " + std::to_string(delta));
  if (epsilon < 0) {
    throw DomainError(name + ": epsilon must be >= 0, got " + std::to_string(epsilon));
  }
  if ((k - 1) * n - epsilon < 0) {
    throw DomainError(name + ": upper path length (k-1)n - epsilon = " +
                      std::to_string((k - 1) * n - epsilon) + " is negative");
  }
}

}  // namespace

std::vector<PathPair> enumerate_strict(int k, int n, int delta, int epsilon) {
  check_pair_shape("enumerate_strict", k, n, delta, epsilon);
  // delta = 0 is out of domain for strict pairs; the search would admit
  // touching endpoints only in weak mode, so it yields nothing here
  return PairSearch(k, n, delta, epsilon, Dominance::strict, std::nullopt).run();
}

std::vector<PathPair> enumerate_weak(int k, int n, int delta, int epsilon,
                                     std::optional<int> returns) {
  check_pair_shape("enumerate_weak", k, n, delta, epsilon);
  if (delta == 0 && epsilon > 0) {
    throw PreconditionError("enumerate_weak: delta = 0 requires epsilon = 0, got epsilon=" +
                            std::to_string(epsilon));
  }
  if (returns && *returns < 0) throw DomainError("enumerate_weak: returns must be >= 0");
  return PairSearch(k, n, delta, epsilon, Dominance::weak, returns).run();
}

}  // namespace pathpairs
