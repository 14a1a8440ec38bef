#ifndef CAYLEY_BALL_TABLE_HPP
#define CAYLEY_BALL_TABLE_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/group_model.hpp"

namespace cayley {

inline constexpr std::size_t kDefaultBudget = 50'000'000;
inline constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const noexcept { return end - begin; }
};

// All elements of B(N) with their word lengths. Indices are ordered by
// (length, encoding), so index order is canonical and reproducible.
class BallTable {
 public:
  const GroupModel& model() const noexcept { return *model_; }
  ModelPtr model_ptr() const noexcept { return model_; }
  int radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return levels_.size(); }

  IndexRange level_range(int k) const;
  std::size_t sphere_size(int k) const { return level_range(k).size(); }
  int level(std::size_t i) const noexcept { return levels_[i]; }
  std::string_view key(std::size_t i) const noexcept {
    return std::string_view(arena_).substr(offsets_[i], offsets_[i + 1] - offsets_[i]);
  }
  Element element(std::size_t i) const { return model_->decode(key(i)); }

  std::optional<std::size_t> find(std::string_view key) const;
  std::optional<std::size_t> find(const Element& g) const;
  // One entry per generator: the neighbour's index, or kAbsent outside B(N).
  void neighbors(std::size_t i, std::vector<std::size_t>& out) const;

  std::size_t memory_bytes() const noexcept;

 private:
  friend BallTable enumerate_ball(ModelPtr model, int N, std::size_t budget);
  friend BallTable load_ball_cache(const std::string& path, ModelPtr model);

  std::size_t append(std::string_view key, int level);
  void insert_slot(std::size_t index);
  void rehash(std::size_t capacity);
  void canonicalize();

  ModelPtr model_;
  int radius_ = 0;
  std::string arena_;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<std::uint8_t> levels_;
  std::vector<std::size_t> level_start_;
  std::vector<std::uint32_t> slots_;
};

// Throws BudgetExceeded (carrying the largest completed radius) when B(N) has
// more than `budget` elements.
BallTable enumerate_ball(ModelPtr model, int N, std::size_t budget = kDefaultBudget);

std::optional<int> word_length(const Element& g, const BallTable& table);

// Level-n elements in encoding order. Throws RadiusOutOfRange.
std::vector<Element> sphere(const BallTable& table, int n);

struct LengthCheckReport {
  bool skipped = false;  // the model has no closed form
  std::size_t checked = 0;
  std::vector<std::string> mismatches;  // text encodings
};

LengthCheckReport cross_check_lengths(const BallTable& table);

// Binary cache: header (magic, model descriptor, N, count), records in index
// order as (key, length), trailing FNV-1a checksum.
void save_ball_cache(const BallTable& table, const std::string& path);
BallTable load_ball_cache(const std::string& path, ModelPtr model);
std::string ball_cache_name(const GroupModel& model, int N);

// Loads from `cache_dir` when a matching file exists, else enumerates and
// stores. An empty cache_dir disables caching.
BallTable cached_ball(ModelPtr model, int N, std::size_t budget, const std::string& cache_dir);

}  // namespace cayley

#endif
