#include "cayley/element.hpp"

#include <algorithm>

#include "cayley/error.hpp"

namespace cayley {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::MalformedElement: return "MalformedElement";
    case ErrorKind::NoFormula: return "NoFormula";
    case ErrorKind::NoOracle: return "NoOracle";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::RadiusOutOfRange: return "RadiusOutOfRange";
    case ErrorKind::InsufficientRadius: return "InsufficientRadius";
    case ErrorKind::VertexNotInAnnulus: return "VertexNotInAnnulus";
    case ErrorKind::DisconnectedAnnulus: return "DisconnectedAnnulus";
    case ErrorKind::WrongModel: return "WrongModel";
    case ErrorKind::NotInInfiniteComponent: return "NotInInfiniteComponent";
    case ErrorKind::UnsupportedRadius: return "UnsupportedRadius";
    case ErrorKind::WrongRadiusForm: return "WrongRadiusForm";
    case ErrorKind::OutsideAnnulus: return "OutsideAnnulus";
    case ErrorKind::CacheError: return "CacheError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

LampConfig::LampConfig(std::vector<LampEntry> entries) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].value == 0) fail(ErrorKind::MalformedElement, "lamp entry with identity value");
    if (i > 0 && entries[i].site == entries[i - 1].site)
      fail(ErrorKind::MalformedElement, "duplicate lamp site");
  }
  entries_ = std::move(entries);
}

LampValue LampConfig::at(Site site) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), site,
                             [](const LampEntry& e, Site s) { return e.site < s; });
  return (it != entries_.end() && it->site == site) ? it->value : 0;
}

void LampConfig::set(Site site, LampValue value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), site,
                             [](const LampEntry& e, Site s) { return e.site < s; });
  bool present = it != entries_.end() && it->site == site;
  if (value == 0) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    entries_.insert(it, LampEntry{site, value});
  }
}

bool ProductElement::operator==(const ProductElement& other) const {
  return factors == other.factors;
}

const BaseElement& Element::base() const {
  if (auto* p = std::get_if<BaseElement>(&value)) return *p;
  fail(ErrorKind::MalformedElement, "expected a base element");
}
const WreathElement& Element::wreath() const {
  if (auto* p = std::get_if<WreathElement>(&value)) return *p;
  fail(ErrorKind::MalformedElement, "expected a wreath element");
}
const ProductElement& Element::product() const {
  if (auto* p = std::get_if<ProductElement>(&value)) return *p;
  fail(ErrorKind::MalformedElement, "expected a product element");
}
BaseElement& Element::base() {
  if (auto* p = std::get_if<BaseElement>(&value)) return *p;
  fail(ErrorKind::MalformedElement, "expected a base element");
}
WreathElement& Element::wreath() {
  if (auto* p = std::get_if<WreathElement>(&value)) return *p;
  fail(ErrorKind::MalformedElement, "expected a wreath element");
}
ProductElement& Element::product() {
  if (auto* p = std::get_if<ProductElement>(&value)) return *p;
  fail(ErrorKind::MalformedElement, "expected a product element");
}

void put_varint(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

std::uint64_t get_varint(std::string_view& in) {
  std::uint64_t v = 0;
  int shift = 0;
  while (true) {
    if (in.empty() || shift > 63) fail(ErrorKind::MalformedElement, "truncated varint");
    auto byte = static_cast<unsigned char>(in.front());
    in.remove_prefix(1);
    v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    if (!(byte & 0x80)) break;
    shift += 7;
  }
  return v;
}

}  // namespace cayley
