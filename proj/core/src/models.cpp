#include "cayley/models.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>

#include "cayley/error.hpp"

namespace cayley {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    fail(ErrorKind::MalformedElement, "bad integer '" + std::string(text) + "'");
  return v;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Travelling-salesman length on the line: start at 0, cover [a,b], stop at z.
std::int64_t line_tour(std::int64_t a, std::int64_t b, std::int64_t z) {
  return 2 * b + 2 * (-a) - std::llabs(z);
}

}  // namespace

// ---------------------------------------------------------------- BaseModel

BaseModel::BaseModel(std::shared_ptr<const BaseGroup> base, std::vector<Site> generators,
                     ModelInfo info)
    : base_(std::move(base)), gens_(std::move(generators)) {
  info_ = std::move(info);
  compute_inverses();
}

void BaseModel::apply_generator(Element& g, std::size_t id) const {
  auto& b = g.base();
  b.vertex = base_->multiply(b.vertex, gens_.at(id));
}

std::int64_t BaseModel::exact_length(const Element& g) const {
  validate(g);
  Site v = g.base().vertex;
  if (info_.family == Family::IntegerLine) return std::llabs(v);
  return InvolutionTree::height(v);
}

void BaseModel::encode_to(const Element& g, std::string& out) const {
  put_signed(out, g.base().vertex);
}

Element BaseModel::decode(std::string_view key) const {
  Site v = get_signed(key);
  if (!key.empty()) fail(ErrorKind::MalformedElement, "trailing bytes in base key");
  return BaseElement{v};
}

std::string BaseModel::format(const Element& g) const { return "b:" + base_->format(g.base().vertex); }

Element BaseModel::parse(std::string_view text) const {
  if (!starts_with(text, "b:")) fail(ErrorKind::MalformedElement, "expected 'b:' prefix");
  return BaseElement{base_->parse(text.substr(2))};
}

void BaseModel::validate(const Element& g) const {
  if (!g.is_base() || !base_->valid(g.base().vertex))
    fail(ErrorKind::MalformedElement, "not an element of " + info_.name);
}

// -------------------------------------------------------------- WreathModel

std::vector<WreathElement> sws_generators(const BaseGroup& base, int lamp_order,
                                          const std::vector<Site>& walks) {
  std::vector<WreathElement> out;
  auto push_unique = [&](WreathElement g) {
    if (g.position == base.identity() && g.lamps.empty()) return;
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  };
  for (Site s : walks) {
    for (int e1 = 0; e1 < lamp_order; ++e1) {
      for (int e2 = 0; e2 < lamp_order; ++e2) {
        WreathElement g{s, {}};
        g.lamps.set(base.identity(), e1);
        LampValue at_s = g.lamps.at(s);
        g.lamps.set(s, (at_s + e2) % lamp_order);
        push_unique(std::move(g));
      }
    }
  }
  for (int e = 1; e < lamp_order; ++e) {
    WreathElement g{base.identity(), {}};
    g.lamps.set(base.identity(), e);
    push_unique(std::move(g));
  }
  return out;
}

WreathModel::WreathModel(std::shared_ptr<const BaseGroup> base, int lamp_order,
                         std::vector<WreathElement> generators, ModelInfo info)
    : base_(std::move(base)), m_(lamp_order), gens_(std::move(generators)) {
  info_ = std::move(info);
  dense_ = base_->dense() && m_ >= 2 && m_ <= 256;
  compute_inverses();
}

LampValue WreathModel::add_lamp(LampValue a, LampValue b) const {
  return m_ == 0 ? a + b : mod(a + b, m_);
}

void WreathModel::apply(WreathElement& g, const WreathElement& s) const {
  for (const auto& e : s.lamps.entries()) {
    Site site = base_->multiply(g.position, e.site);
    g.lamps.set(site, add_lamp(g.lamps.at(site), e.value));
  }
  g.position = base_->multiply(g.position, s.position);
}

void WreathModel::apply_generator(Element& g, std::size_t id) const {
  apply(g.wreath(), gens_.at(id));
}

std::int64_t WreathModel::exact_length(const Element& g) const {
  validate(g);
  const auto& w = g.wreath();
  const auto lamps = w.lamps.entries();
  switch (info_.family) {
    case Family::LineLamplighter:
    case Family::ZwrZ: {
      std::int64_t z = w.position;
      std::int64_t a = std::min<std::int64_t>(0, z), b = std::max<std::int64_t>(0, z);
      std::int64_t mass = 0;
      if (!lamps.empty()) {
        a = std::min(a, lamps.front().site);
        b = std::max(b, lamps.back().site);
      }
      if (info_.family == Family::ZwrZ) {
        for (const auto& e : lamps) mass += std::llabs(e.value);
        return mass + line_tour(a, b, z);
      }
      if (z == 0 && lamps.size() == 1 && lamps.front().site == 0) return 1;
      return line_tour(a, b, z);
    }
    case Family::TreeLamplighter: {
      const auto& tree = static_cast<const InvolutionTree&>(*base_);
      if (w.position == 0 && lamps.size() == 1 && lamps.front().site == 0) return 1;
      std::set<Site> edges;
      auto climb = [&](Site v) {
        while (InvolutionTree::height(v) > 0 && edges.insert(v).second) v = tree.parent(v);
      };
      climb(w.position);
      for (const auto& e : lamps) climb(e.site);
      return 2 * static_cast<std::int64_t>(edges.size()) - InvolutionTree::height(w.position);
    }
    default:
      return GroupModel::exact_length(g);
  }
}

void WreathModel::encode_wreath(const WreathElement& g, std::string& out) const {
  put_signed(out, g.position);
  const auto lamps = g.lamps.entries();
  if (dense_) {
    if (lamps.empty()) {
      put_varint(out, 0);
      return;
    }
    Site lo = lamps.front().site, hi = lamps.back().site;
    auto width = static_cast<std::uint64_t>(hi - lo + 1);
    put_varint(out, width);
    put_signed(out, lo);
    if (m_ == 2) {
      std::size_t start = out.size();
      out.append((width + 7) / 8, '\0');
      for (const auto& e : lamps) {
        auto off = static_cast<std::uint64_t>(e.site - lo);
        out[start + off / 8] = static_cast<char>(out[start + off / 8] | (1u << (off % 8)));
      }
    } else {
      std::size_t start = out.size();
      out.append(width, '\0');
      for (const auto& e : lamps) out[start + static_cast<std::size_t>(e.site - lo)] = static_cast<char>(e.value);
    }
    return;
  }
  put_varint(out, lamps.size());
  Site prev = 0;
  for (const auto& e : lamps) {
    put_signed(out, e.site - prev);
    prev = e.site;
    put_signed(out, e.value);
  }
}

WreathElement WreathModel::decode_wreath(std::string_view key) const {
  WreathElement g;
  g.position = get_signed(key);
  std::vector<LampEntry> entries;
  if (dense_) {
    std::uint64_t width = get_varint(key);
    if (width > 0) {
      Site lo = get_signed(key);
      if (m_ == 2) {
        if (key.size() != (width + 7) / 8) fail(ErrorKind::MalformedElement, "bad lamp window");
        for (std::uint64_t off = 0; off < width; ++off)
          if (static_cast<unsigned char>(key[off / 8]) & (1u << (off % 8)))
            entries.push_back({lo + static_cast<Site>(off), 1});
      } else {
        if (key.size() != width) fail(ErrorKind::MalformedElement, "bad lamp window");
        for (std::uint64_t off = 0; off < width; ++off)
          if (auto v = static_cast<unsigned char>(key[off])) entries.push_back({lo + static_cast<Site>(off), v});
      }
      key = {};
    }
  } else {
    std::uint64_t count = get_varint(key);
    Site prev = 0;
    entries.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      prev += get_signed(key);
      entries.push_back({prev, get_signed(key)});
    }
  }
  if (!key.empty()) fail(ErrorKind::MalformedElement, "trailing bytes in wreath key");
  g.lamps = LampConfig(std::move(entries));
  return g;
}

void WreathModel::encode_to(const Element& g, std::string& out) const { encode_wreath(g.wreath(), out); }

Element WreathModel::decode(std::string_view key) const { return decode_wreath(key); }

void WreathModel::neighbor_keys(std::string_view key, std::vector<std::string>& out) const {
  thread_local WreathElement scratch;
  const WreathElement g = decode_wreath(key);
  out.resize(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    scratch = g;
    apply(scratch, gens_[i]);
    out[i].clear();
    encode_wreath(scratch, out[i]);
  }
}

std::string WreathModel::format(const Element& g) const {
  const auto& w = g.wreath();
  std::string out = "w:" + base_->format(w.position) + ";";
  bool first = true;
  for (const auto& e : w.lamps.entries()) {
    if (!first) out += ",";
    first = false;
    out += base_->format(e.site) + ":" + std::to_string(e.value);
  }
  return out;
}

Element WreathModel::parse(std::string_view text) const {
  if (!starts_with(text, "w:")) fail(ErrorKind::MalformedElement, "expected 'w:' prefix");
  text.remove_prefix(2);
  auto semi = text.find(';');
  if (semi == std::string_view::npos) fail(ErrorKind::MalformedElement, "missing ';' in wreath element");
  WreathElement g;
  g.position = base_->parse(text.substr(0, semi));
  std::string_view rest = text.substr(semi + 1);
  std::vector<LampEntry> entries;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto colon = item.rfind(':');
    if (colon == std::string_view::npos) fail(ErrorKind::MalformedElement, "lamp entry needs ':'");
    entries.push_back({base_->parse(item.substr(0, colon)), parse_int(item.substr(colon + 1))});
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  g.lamps = LampConfig(std::move(entries));
  Element e(std::move(g));
  validate(e);
  return e;
}

void WreathModel::validate(const Element& g) const {
  if (!g.is_wreath()) fail(ErrorKind::MalformedElement, "not a wreath element of " + info_.name);
  const auto& w = g.wreath();
  if (!base_->valid(w.position)) fail(ErrorKind::MalformedElement, "invalid base position");
  for (const auto& e : w.lamps.entries()) {
    if (!base_->valid(e.site)) fail(ErrorKind::MalformedElement, "invalid lamp site");
    if (e.value == 0 || (m_ > 0 && (e.value < 1 || e.value >= m_)))
      fail(ErrorKind::MalformedElement, "lamp value out of range");
  }
}

// ------------------------------------------------------------- ProductModel

ProductModel::ProductModel(ModelPtr left, ModelPtr right, ProductSet set, ModelInfo info)
    : factors_{std::move(left), std::move(right)}, set_(set) {
  info_ = std::move(info);
  std::size_t k0 = factors_[0]->generator_count(), k1 = factors_[1]->generator_count();
  if (set_ == ProductSet::Summed) {
    for (std::size_t i = 0; i < k0; ++i) gens_.push_back({i, kStay});
    for (std::size_t j = 0; j < k1; ++j) gens_.push_back({kStay, j});
  } else {
    for (std::size_t i = 0; i <= k0; ++i)
      for (std::size_t j = 0; j <= k1; ++j) {
        std::size_t a = i == k0 ? kStay : i, b = j == k1 ? kStay : j;
        if (a == kStay && b == kStay) continue;
        gens_.push_back({a, b});
      }
  }
  compute_inverses();
}

Element ProductModel::identity() const {
  return ProductElement{{factors_[0]->identity(), factors_[1]->identity()}};
}

void ProductModel::apply_generator(Element& g, std::size_t id) const {
  auto [a, b] = gens_.at(id);
  auto& p = g.product();
  if (a != kStay) factors_[0]->apply_generator(p.factors[0], a);
  if (b != kStay) factors_[1]->apply_generator(p.factors[1], b);
}

std::int64_t ProductModel::exact_length(const Element& g) const {
  validate(g);
  const auto& p = g.product();
  std::int64_t l0 = factors_[0]->exact_length(p.factors[0]);
  std::int64_t l1 = factors_[1]->exact_length(p.factors[1]);
  return set_ == ProductSet::Summed ? l0 + l1 : std::max(l0, l1);
}

void ProductModel::encode_to(const Element& g, std::string& out) const {
  const auto& p = g.product();
  thread_local std::string part;
  for (std::size_t i = 0; i < 2; ++i) {
    part.clear();
    factors_[i]->encode_to(p.factors[i], part);
    put_varint(out, part.size());
    out += part;
  }
}

Element ProductModel::decode(std::string_view key) const {
  ProductElement p;
  for (std::size_t i = 0; i < 2; ++i) {
    auto len = get_varint(key);
    if (len > key.size()) fail(ErrorKind::MalformedElement, "truncated product key");
    p.factors.push_back(factors_[i]->decode(key.substr(0, len)));
    key.remove_prefix(len);
  }
  if (!key.empty()) fail(ErrorKind::MalformedElement, "trailing bytes in product key");
  return p;
}

std::string ProductModel::format(const Element& g) const {
  const auto& p = g.product();
  return "p:(" + factors_[0]->format(p.factors[0]) + "|" + factors_[1]->format(p.factors[1]) + ")";
}

Element ProductModel::parse(std::string_view text) const {
  if (!starts_with(text, "p:(") || text.back() != ')')
    fail(ErrorKind::MalformedElement, "expected 'p:(...|...)'");
  std::string_view inner = text.substr(3, text.size() - 4);
  int depth = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    char c = inner[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == '|' && depth == 0) {
      ProductElement p;
      p.factors.push_back(factors_[0]->parse(inner.substr(0, i)));
      p.factors.push_back(factors_[1]->parse(inner.substr(i + 1)));
      return p;
    }
  }
  fail(ErrorKind::MalformedElement, "product element needs a top-level '|'");
}

void ProductModel::validate(const Element& g) const {
  if (!g.is_product() || g.product().factors.size() != 2)
    fail(ErrorKind::MalformedElement, "not a product element of " + info_.name);
  factors_[0]->validate(g.product().factors[0]);
  factors_[1]->validate(g.product().factors[1]);
}

}  // namespace cayley
