#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

#include "cayley/error.hpp"
#include "cayley/models.hpp"

namespace cayley {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

struct Params {
  std::map<std::string, std::string> values;

  int integer(const std::string& key, int fallback) {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    int v = 0;
    const auto& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      fail(ErrorKind::InvalidParameter, key + " must be an integer");
    values.erase(it);
    return v;
  }
  std::string text(const std::string& key, const std::string& fallback) {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    std::string v = it->second;
    values.erase(it);
    return v;
  }
  void finish(const std::string& family) {
    if (!values.empty())
      fail(ErrorKind::InvalidParameter, "unknown parameter '" + values.begin()->first + "' for " + family);
  }
};

Params parse_params(std::string_view rest) {
  Params p;
  std::istringstream in{std::string(rest)};
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) fail(ErrorKind::InvalidParameter, "expected key=value, got '" + tok + "'");
    p.values[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return p;
}

void check_order(int m) {
  if (m < 2) fail(ErrorKind::InvalidParameter, "lamp order m must be at least 2");
  if (m > 64) fail(ErrorKind::InvalidParameter, "lamp order m above 64 is not supported");
}

void check_degree(int d) {
  if (d < 3) fail(ErrorKind::InvalidParameter, "tree degree d must be at least 3 (use the line family for d=2)");
  if (d > 16) fail(ErrorKind::InvalidParameter, "tree degree d above 16 is not supported");
}

ModelPtr make_line(int m) {
  check_order(m);
  auto base = std::make_shared<IntegerLine>();
  ModelInfo info;
  info.name = "line-lamplighter m=" + std::to_string(m);
  info.family = Family::LineLamplighter;
  info.lamp_order = m;
  info.variant = "sws";
  info.has_exact_length = info.has_infinite_oracle = info.has_component_oracle = info.one_ended = true;
  auto gens = sws_generators(*base, m, {1, -1});
  return std::make_shared<WreathModel>(base, m, std::move(gens), info);
}

ModelPtr make_tree_lamplighter(int d, int m) {
  check_degree(d);
  check_order(m);
  auto base = std::make_shared<InvolutionTree>(d);
  ModelInfo info;
  info.name = "tree-lamplighter d=" + std::to_string(d) + " m=" + std::to_string(m);
  info.family = Family::TreeLamplighter;
  info.lamp_order = m;
  info.degree = d;
  info.variant = "sws";
  info.has_exact_length = info.has_infinite_oracle = info.one_ended = true;
  std::vector<Site> walks;
  for (int c = 0; c < d; ++c) walks.push_back(base->step(0, c));
  auto gens = sws_generators(*base, m, walks);
  return std::make_shared<WreathModel>(base, m, std::move(gens), info);
}

ModelPtr make_ladder(int m, const std::string& set) {
  check_order(m);
  auto base = std::make_shared<Ladder>();
  ModelInfo info;
  info.family = Family::LadderLamplighter;
  info.lamp_order = m;
  info.one_ended = true;
  std::vector<WreathElement> gens;
  if (set == "sws") {
    info.name = "ladder-lamplighter m=" + std::to_string(m) + " set=sws";
    info.variant = "sws";
    gens = sws_generators(*base, m, {Ladder::make(1, 0), Ladder::make(-1, 0), Ladder::make(0, 1)});
  } else if (set == "s1") {
    info.name = "ladder-lamplighter m=" + std::to_string(m) + " set=s1";
    info.variant = "s1";
    // Both lamps of a rung may be switched together on departure and arrival.
    auto rung_switch = [&](WreathElement& g, Site at, int lower, int upper) {
      Site lo = base->multiply(at, Ladder::make(0, 0)), hi = base->multiply(at, Ladder::make(0, 1));
      g.lamps.set(lo, (g.lamps.at(lo) + lower) % m);
      g.lamps.set(hi, (g.lamps.at(hi) + upper) % m);
    };
    auto push = [&](WreathElement g) {
      if (g.position == 0 && g.lamps.empty()) return;
      for (const auto& h : gens) if (h == g) return;
      gens.push_back(std::move(g));
    };
    for (int dx : {1, -1})
      for (int eps = 0; eps < 2; ++eps)
        for (int l0 = 0; l0 < m; ++l0)
          for (int l1 = 0; l1 < m; ++l1)
            for (int r0 = 0; r0 < m; ++r0)
              for (int r1 = 0; r1 < m; ++r1) {
                WreathElement g{Ladder::make(dx, eps), {}};
                rung_switch(g, 0, l0, l1);
                rung_switch(g, Ladder::make(dx, 0), r0, r1);
                push(std::move(g));
              }
    for (int l0 = 0; l0 < m; ++l0)
      for (int l1 = 0; l1 < m; ++l1) {
        WreathElement g{0, {}};
        rung_switch(g, 0, l0, l1);
        push(std::move(g));
      }
  } else {
    fail(ErrorKind::InvalidParameter, "ladder set must be 's1' or 'sws'");
  }
  return std::make_shared<WreathModel>(base, m, std::move(gens), info);
}

ModelPtr make_zwrz() {
  auto base = std::make_shared<IntegerLine>();
  ModelInfo info;
  info.name = "zz-walk-or-switch";
  info.family = Family::ZwrZ;
  info.variant = "walk-or-switch";
  info.has_exact_length = info.one_ended = true;
  std::vector<WreathElement> gens;
  gens.push_back({1, {}});
  gens.push_back({-1, {}});
  gens.push_back({0, LampConfig({{0, 1}})});
  gens.push_back({0, LampConfig({{0, -1}})});
  return std::make_shared<WreathModel>(base, 0, std::move(gens), info);
}

ModelPtr make_plane_lamplighter(int m) {
  check_order(m);
  auto base = std::make_shared<Plane>();
  ModelInfo info;
  info.name = "plane-lamplighter m=" + std::to_string(m);
  info.family = Family::PlaneLamplighter;
  info.lamp_order = m;
  info.variant = "sws";
  info.one_ended = true;
  auto gens = sws_generators(*base, m, {Plane::make(1, 0), Plane::make(-1, 0), Plane::make(0, 1), Plane::make(0, -1)});
  return std::make_shared<WreathModel>(base, m, std::move(gens), info);
}

ModelPtr make_z() {
  ModelInfo info;
  info.name = "z";
  info.family = Family::IntegerLine;
  info.variant = "standard";
  info.has_exact_length = true;
  return std::make_shared<BaseModel>(std::make_shared<IntegerLine>(), std::vector<Site>{1, -1}, info);
}

ModelPtr make_tree(int d) {
  check_degree(d);
  auto base = std::make_shared<InvolutionTree>(d);
  ModelInfo info;
  info.name = "tree d=" + std::to_string(d);
  info.family = Family::FreeTree;
  info.degree = d;
  info.variant = "standard";
  info.has_exact_length = true;
  std::vector<Site> gens;
  for (int c = 0; c < d; ++c) gens.push_back(base->step(0, c));
  return std::make_shared<BaseModel>(base, gens, info);
}

ModelPtr make_product(ModelPtr left, ModelPtr right, ProductSet set) {
  ModelInfo info;
  info.name = std::string(set == ProductSet::Summed ? "summed(" : "product(") + left->name() + "|" +
              right->name() + ")";
  info.family = Family::Product;
  info.variant = set == ProductSet::Summed ? "summed" : "product";
  info.has_exact_length = left->info().has_exact_length && right->info().has_exact_length;
  // A product of two infinite groups is one-ended.
  info.one_ended = true;
  return std::make_shared<ProductModel>(std::move(left), std::move(right), set, info);
}

}  // namespace

ModelPtr make_group(std::string_view descriptor) {
  std::string_view d = trim(descriptor);
  for (auto [prefix, set] : {std::pair{std::string_view("summed("), ProductSet::Summed},
                             std::pair{std::string_view("product("), ProductSet::Product}}) {
    if (d.substr(0, prefix.size()) != prefix) continue;
    if (d.back() != ')') fail(ErrorKind::UnsupportedFamily, "unbalanced product descriptor");
    std::string_view inner = d.substr(prefix.size(), d.size() - prefix.size() - 1);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      else if (inner[i] == ')') --depth;
      else if (inner[i] == '|' && depth == 0)
        return make_product(make_group(inner.substr(0, i)), make_group(inner.substr(i + 1)), set);
    }
    fail(ErrorKind::UnsupportedFamily, "product descriptor needs two factors separated by '|'");
  }
  auto space = d.find_first_of(" \t");
  std::string family(d.substr(0, space));
  Params p = parse_params(space == std::string_view::npos ? std::string_view{} : d.substr(space));
  ModelPtr model;
  if (family == "line-lamplighter" || family == "line") {
    int m = p.integer("m", 2);
    p.finish(family);
    model = make_line(m);
  } else if (family == "tree-lamplighter") {
    int dd = p.integer("d", 3), m = p.integer("m", 2);
    p.finish(family);
    model = make_tree_lamplighter(dd, m);
  } else if (family == "ladder-lamplighter") {
    int m = p.integer("m", 2);
    std::string set = p.text("set", "sws");
    p.finish(family);
    model = make_ladder(m, set);
  } else if (family == "zz-walk-or-switch") {
    p.finish(family);
    model = make_zwrz();
  } else if (family == "plane-lamplighter") {
    int m = p.integer("m", 2);
    p.finish(family);
    model = make_plane_lamplighter(m);
  } else if (family == "z") {
    p.finish(family);
    model = make_z();
  } else if (family == "z2") {
    p.finish(family);
    model = make_product(make_z(), make_z(), ProductSet::Summed);
  } else if (family == "z2-king") {
    p.finish(family);
    model = make_product(make_z(), make_z(), ProductSet::Product);
  } else if (family == "tree") {
    int dd = p.integer("d", 3);
    p.finish(family);
    model = make_tree(dd);
  } else {
    fail(ErrorKind::UnsupportedFamily, "unknown family '" + family + "'");
  }
  return model;
}

std::string model_registry_hash() {
  const char* descriptors[] = {
      "z", "z2", "z2-king", "tree d=3", "line-lamplighter m=2", "line-lamplighter m=3",
      "tree-lamplighter d=3 m=2", "ladder-lamplighter m=2 set=s1", "ladder-lamplighter m=2 set=sws",
      "zz-walk-or-switch", "plane-lamplighter m=2",
  };
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const char* d : descriptors) {
    auto model = make_group(d);
    mix(model->name());
    mix(std::to_string(model->generator_count()));
    for (std::size_t i = 0; i < model->generator_count(); ++i)
      mix(model->format(model->multiply_generator(model->identity(), i)));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace cayley
