#include "cayley/base_group.hpp"

#include <charconv>

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

std::pair<std::string_view, std::string_view> split_dot(std::string_view text) {
  auto dot = text.find('.', 1);
  if (dot == std::string_view::npos)
    fail(ErrorKind::MalformedElement, "expected '<x>.<y>' in '" + std::string(text) + "'");
  return {text.substr(0, dot), text.substr(dot + 1)};
}

}  // namespace

std::string IntegerLine::format(Site s) const { return std::to_string(s); }
Site IntegerLine::parse(std::string_view text) const { return parse_int(text); }

std::string Ladder::format(Site s) const {
  return std::to_string(coord(s)) + "." + std::to_string(rung(s));
}

Site Ladder::parse(std::string_view text) const {
  auto [x, e] = split_dot(text);
  auto eps = parse_int(e);
  if (eps != 0 && eps != 1) fail(ErrorKind::MalformedElement, "rung must be 0 or 1");
  return make(parse_int(x), static_cast<int>(eps));
}

std::string Plane::format(Site s) const {
  return std::to_string(x_of(s)) + "." + std::to_string(y_of(s));
}

Site Plane::parse(std::string_view text) const {
  auto [x, y] = split_dot(text);
  return make(parse_int(x), parse_int(y));
}

InvolutionTree::InvolutionTree(int degree) : d_(degree) {
  if (degree < 2) fail(ErrorKind::InvalidParameter, "tree degree must be at least 2");
  pow_.push_back(1);
  while (pow_.back() <= kMask / static_cast<std::uint64_t>(d_)) pow_.push_back(pow_.back() * d_);
  max_len_ = static_cast<int>(pow_.size()) - 1;
}

Site InvolutionTree::parent(Site s) const {
  int len = height(s);
  if (len == 0) return s;
  return pack(len - 1, digits(s) / d_);
}

Site InvolutionTree::step(Site s, int letter) const {
  int len = height(s);
  if (len > 0 && last_letter(s) == letter) return parent(s);
  if (len >= max_len_) fail(ErrorKind::InvalidParameter, "tree word too long for key packing");
  return pack(len + 1, digits(s) * d_ + static_cast<std::uint64_t>(letter));
}

std::vector<int> InvolutionTree::letters(Site s) const {
  int len = height(s);
  std::vector<int> out(static_cast<std::size_t>(len));
  std::uint64_t v = digits(s);
  for (int i = len - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(v % d_);
    v /= d_;
  }
  return out;
}

Site InvolutionTree::from_letters(const std::vector<int>& word) const {
  Site s = 0;
  for (int c : word) {
    if (c < 0 || c >= d_) fail(ErrorKind::MalformedElement, "tree letter out of range");
    s = step(s, c);
  }
  return s;
}

std::vector<Site> InvolutionTree::neighbors(Site s) const {
  std::vector<Site> out;
  out.reserve(static_cast<std::size_t>(d_));
  for (int c = 0; c < d_; ++c) out.push_back(step(s, c));
  return out;
}

Site InvolutionTree::ancestor(Site s, int k) const {
  int len = height(s);
  if (k >= len) return 0;
  return pack(len - k, digits(s) / pow_d(k));
}

bool InvolutionTree::is_descendant(Site s, Site anc) const {
  int hs = height(s), ha = height(anc);
  return hs >= ha && ancestor(s, hs - ha) == anc;
}

Site InvolutionTree::multiply(Site a, Site b) const {
  int len = height(b);
  std::uint64_t v = digits(b);
  for (int i = len - 1; i >= 0; --i) a = step(a, static_cast<int>((v / pow_d(i)) % d_));
  return a;
}

Site InvolutionTree::inverse(Site a) const {
  auto w = letters(a);
  Site s = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) s = step(s, *it);
  return s;
}

std::string InvolutionTree::format(Site s) const {
  if (height(s) == 0) return "e";
  std::string out;
  for (int c : letters(s)) out.push_back(static_cast<char>('A' + c));
  return out;
}

Site InvolutionTree::parse(std::string_view text) const {
  if (text == "e") return 0;
  if (text.empty()) fail(ErrorKind::MalformedElement, "empty tree key");
  std::vector<int> word;
  for (char ch : text) {
    int c = ch - 'A';
    if (c < 0 || c >= d_) fail(ErrorKind::MalformedElement, "bad tree letter '" + std::string(1, ch) + "'");
    if (!word.empty() && word.back() == c)
      fail(ErrorKind::MalformedElement, "tree key is not reduced");
    word.push_back(c);
  }
  return from_letters(word);
}

bool InvolutionTree::valid(Site s) const {
  if (s < 0) return false;
  int len = height(s);
  if (len > max_len_) return false;
  std::uint64_t v = digits(s);
  if (v >= pow_d(len)) return false;
  int prev = -1;
  for (int i = 0; i < len; ++i) {
    int c = static_cast<int>(v % d_);
    if (c == prev) return false;
    prev = c;
    v /= d_;
  }
  return true;
}

}  // namespace cayley
