#ifndef CAYLEY_ELEMENT_HPP
#define CAYLEY_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cayley {

// Vertex key of a base group. Numeric order is the canonical site order.
using Site = std::int64_t;
using LampValue = std::int64_t;

struct LampEntry {
  Site site = 0;
  LampValue value = 0;
  auto operator<=>(const LampEntry&) const = default;
};

// Finitely supported lamp map, stored sparsely with zero meaning "off".
class LampConfig {
 public:
  LampConfig() = default;
  explicit LampConfig(std::vector<LampEntry> entries);

  LampValue at(Site site) const noexcept;
  void set(Site site, LampValue value);
  std::span<const LampEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  void clear() noexcept { entries_.clear(); }

  bool operator==(const LampConfig&) const = default;

 private:
  std::vector<LampEntry> entries_;
};

struct BaseElement {
  Site vertex = 0;
  bool operator==(const BaseElement&) const = default;
};

struct WreathElement {
  Site position = 0;
  LampConfig lamps;
  bool operator==(const WreathElement&) const = default;
};

struct Element;

struct ProductElement {
  std::vector<Element> factors;
  bool operator==(const ProductElement&) const;
};

struct Element {
  std::variant<BaseElement, WreathElement, ProductElement> value;

  Element() = default;
  Element(BaseElement b) : value(std::move(b)) {}
  Element(WreathElement w) : value(std::move(w)) {}
  Element(ProductElement p) : value(std::move(p)) {}

  bool is_base() const noexcept { return std::holds_alternative<BaseElement>(value); }
  bool is_wreath() const noexcept { return std::holds_alternative<WreathElement>(value); }
  bool is_product() const noexcept { return std::holds_alternative<ProductElement>(value); }

  const BaseElement& base() const;
  const WreathElement& wreath() const;
  const ProductElement& product() const;
  BaseElement& base();
  WreathElement& wreath();
  ProductElement& product();

  bool operator==(const Element& other) const { return value == other.value; }
};

// Zigzag varint helpers shared by the binary codecs.
void put_varint(std::string& out, std::uint64_t v);
std::uint64_t get_varint(std::string_view& in);
inline std::uint64_t zigzag(std::int64_t v) {
  return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}
inline std::int64_t unzigzag(std::uint64_t v) {
  return static_cast<std::int64_t>(v >> 1) ^ -static_cast<std::int64_t>(v & 1);
}
inline void put_signed(std::string& out, std::int64_t v) { put_varint(out, zigzag(v)); }
inline std::int64_t get_signed(std::string_view& in) { return unzigzag(get_varint(in)); }

}  // namespace cayley

#endif
