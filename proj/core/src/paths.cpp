#include "cayley/paths.hpp"

#include <charconv>
#include <sstream>

#include "cayley/error.hpp"

namespace cayley {

PathCertificate make_certificate(const GroupModel& model, const std::vector<Element>& walk, int low, int high) {
  PathCertificate cert;
  cert.model = model.name();
  cert.low = low;
  cert.high = high;
  cert.steps.reserve(walk.size());
  cert.lengths.reserve(walk.size());
  for (std::size_t i = 0; i < walk.size(); ++i) {
    std::int64_t len = model.exact_length(walk[i]);
    cert.steps.push_back(model.format(walk[i]));
    cert.lengths.push_back(len);
    if (len < low || len > high) cert.window_ok = false;
    if (i > 0 && !model.adjacent(walk[i - 1], walk[i])) cert.adjacency_ok = false;
  }
  return cert;
}

namespace {

template <class LengthOf>
VerifyResult verify_with(const PathCertificate& cert, const GroupModel& model, LengthOf length_of) {
  VerifyResult res;
  auto violate = [&](std::size_t i, std::string why) {
    res.ok = false;
    res.first_violation = i;
    res.reason = std::move(why);
    return res;
  };
  if (cert.lengths.size() != cert.steps.size()) return violate(0, "length column size mismatch");
  Element prev;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    Element g;
    try {
      g = model.parse(cert.steps[i]);
    } catch (const Error& e) {
      return violate(i, std::string("unparsable step: ") + e.what());
    }
    std::optional<std::int64_t> len;
    try {
      len = length_of(g);
    } catch (const Error& e) {
      return violate(i, std::string("no length: ") + e.what());
    }
    if (!len) return violate(i, "step outside the table");
    if (*len != cert.lengths[i])
      return violate(i, "recorded length " + std::to_string(cert.lengths[i]) + " but actual " + std::to_string(*len));
    if (*len < cert.low || *len > cert.high)
      return violate(i, "length " + std::to_string(*len) + " outside [" + std::to_string(cert.low) + ", " +
                            std::to_string(cert.high) + "]");
    if (i > 0 && !model.adjacent(prev, g)) return violate(i, "not adjacent to the previous step");
    prev = std::move(g);
  }
  return res;
}

}  // namespace

VerifyResult verify_certificate(const PathCertificate& cert, const BallTable& table) {
  return verify_with(cert, table.model(), [&](const Element& g) -> std::optional<std::int64_t> {
    auto i = table.find(g);
    if (!i) return std::nullopt;
    return table.level(*i);
  });
}

VerifyResult verify_certificate(const PathCertificate& cert, const GroupModel& model) {
  return verify_with(cert, model, [&](const Element& g) -> std::optional<std::int64_t> { return model.exact_length(g); });
}

std::string serialize_certificate(const PathCertificate& cert) {
  std::ostringstream out;
  out << "# model " << cert.model << "\n# window " << cert.low << " " << cert.high << "\n";
  for (std::size_t i = 0; i < cert.steps.size(); ++i) out << i << "," << cert.lengths[i] << "," << cert.steps[i] << "\n";
  return out.str();
}

PathCertificate parse_certificate(std::string_view text) {
  PathCertificate cert;
  std::size_t line_no = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::MalformedElement, "certificate line " + std::to_string(line_no) + ": " + why);
  };
  auto to_int = [&](std::string_view s, auto& v) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) bad("bad integer '" + std::string(s) + "'");
  };
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream in{std::string(line.substr(1))};
      std::string key;
      in >> key;
      if (key == "model") {
        std::getline(in >> std::ws, cert.model);
      } else if (key == "window") {
        if (!(in >> cert.low >> cert.high)) bad("bad window header");
      }
      continue;
    }
    auto c1 = line.find(',');
    auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos) bad("expected <index>,<length>,<element>");
    std::size_t index = 0;
    std::int64_t len = 0;
    to_int(line.substr(0, c1), index);
    to_int(line.substr(c1 + 1, c2 - c1 - 1), len);
    if (index != cert.steps.size()) bad("step index out of sequence");
    cert.lengths.push_back(len);
    cert.steps.emplace_back(line.substr(c2 + 1));
  }
  return cert;
}

}  // namespace cayley
