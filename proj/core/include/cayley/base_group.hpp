#ifndef CAYLEY_BASE_GROUP_HPP
#define CAYLEY_BASE_GROUP_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/element.hpp"

namespace cayley {

// A base group whose elements are packed into a Site key.
class BaseGroup {
 public:
  virtual ~BaseGroup() = default;
  virtual std::string name() const = 0;
  virtual Site identity() const = 0;
  virtual Site multiply(Site a, Site b) const = 0;
  virtual Site inverse(Site a) const = 0;
  virtual std::string format(Site s) const = 0;
  virtual Site parse(std::string_view text) const = 0;
  virtual bool valid(Site s) const = 0;
  // Sites form a run of consecutive integers, so lamp maps can be stored as dense windows.
  virtual bool dense() const { return false; }
};

class IntegerLine final : public BaseGroup {
 public:
  std::string name() const override { return "Z"; }
  Site identity() const override { return 0; }
  Site multiply(Site a, Site b) const override { return a + b; }
  Site inverse(Site a) const override { return -a; }
  std::string format(Site s) const override;
  Site parse(std::string_view text) const override;
  bool valid(Site) const override { return true; }
  bool dense() const override { return true; }
};

// Z x Z2 packed as 2x + eps.
class Ladder final : public BaseGroup {
 public:
  static Site make(std::int64_t x, int eps) { return 2 * x + eps; }
  static std::int64_t coord(Site s) { return s >> 1; }
  static int rung(Site s) { return static_cast<int>(s & 1); }

  std::string name() const override { return "ZxZ2"; }
  Site identity() const override { return 0; }
  Site multiply(Site a, Site b) const override {
    return make(coord(a) + coord(b), rung(a) ^ rung(b));
  }
  Site inverse(Site a) const override { return make(-coord(a), rung(a)); }
  std::string format(Site s) const override;
  Site parse(std::string_view text) const override;
  bool valid(Site) const override { return true; }
  bool dense() const override { return true; }
};

// Z^2 packed as x * 2^32 + (y + 2^31).
class Plane final : public BaseGroup {
 public:
  static constexpr std::int64_t kShift = std::int64_t{1} << 32;
  static constexpr std::int64_t kBias = std::int64_t{1} << 31;
  static Site make(std::int64_t x, std::int64_t y) { return x * kShift + (y + kBias); }
  static std::int64_t x_of(Site s) { return floor_div(s, kShift); }
  static std::int64_t y_of(Site s) { return s - x_of(s) * kShift - kBias; }

  std::string name() const override { return "Z2"; }
  Site identity() const override { return make(0, 0); }
  Site multiply(Site a, Site b) const override {
    return make(x_of(a) + x_of(b), y_of(a) + y_of(b));
  }
  Site inverse(Site a) const override { return make(-x_of(a), -y_of(a)); }
  std::string format(Site s) const override;
  Site parse(std::string_view text) const override;
  bool valid(Site) const override { return true; }

 private:
  static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
  }
};

// The d-regular tree as the free product of d copies of Z2: reduced words with
// no repeated adjacent letter. Key = (length << 56) | base-d value, so numeric
// order is shortlex order.
class InvolutionTree final : public BaseGroup {
 public:
  explicit InvolutionTree(int degree);

  int degree() const noexcept { return d_; }
  int max_height() const noexcept { return max_len_; }

  static int height(Site s) { return static_cast<int>(static_cast<std::uint64_t>(s) >> 56); }
  std::uint64_t digits(Site s) const { return static_cast<std::uint64_t>(s) & kMask; }
  int last_letter(Site s) const { return static_cast<int>(digits(s) % d_); }
  Site parent(Site s) const;
  // Appends `letter`, or cancels it against the last letter.
  Site step(Site s, int letter) const;
  std::vector<int> letters(Site s) const;
  Site from_letters(const std::vector<int>& word) const;
  std::vector<Site> neighbors(Site s) const;
  // Ancestor k levels up (the root is its own ancestor).
  Site ancestor(Site s, int k) const;
  bool is_descendant(Site s, Site ancestor) const;

  std::string name() const override { return "T" + std::to_string(d_); }
  Site identity() const override { return 0; }
  Site multiply(Site a, Site b) const override;
  Site inverse(Site a) const override;
  std::string format(Site s) const override;
  Site parse(std::string_view text) const override;
  bool valid(Site s) const override;

 private:
  static constexpr std::uint64_t kMask = (std::uint64_t{1} << 56) - 1;
  static Site pack(int len, std::uint64_t value) {
    return static_cast<Site>((static_cast<std::uint64_t>(len) << 56) | value);
  }
  std::uint64_t pow_d(int k) const { return pow_[static_cast<std::size_t>(k)]; }

  int d_;
  int max_len_;
  std::vector<std::uint64_t> pow_;
};

}  // namespace cayley

#endif
