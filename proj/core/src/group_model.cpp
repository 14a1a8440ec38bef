#include "cayley/group_model.hpp"

#include "cayley/error.hpp"

namespace cayley {

GeneratorLabel GroupModel::label(std::size_t id) const {
  if (id >= inverse_.size()) fail(ErrorKind::InvalidParameter, "generator id out of range");
  return GeneratorLabel{id, inverse_[id]};
}

Element GroupModel::multiply_generator(const Element& g, std::size_t id) const {
  Element out = g;
  apply_generator(out, id);
  return out;
}

std::vector<Element> GroupModel::neighbors(const Element& g) const {
  validate(g);
  std::vector<Element> out;
  std::vector<std::string> seen;
  for (std::size_t i = 0; i < generator_count(); ++i) {
    Element h = multiply_generator(g, i);
    std::string key = encode(h);
    bool dup = false;
    for (const auto& k : seen) dup = dup || k == key;
    if (dup) continue;
    seen.push_back(std::move(key));
    out.push_back(std::move(h));
  }
  return out;
}

bool GroupModel::adjacent(const Element& a, const Element& b) const {
  std::string target = encode(b);
  for (std::size_t i = 0; i < generator_count(); ++i)
    if (encode(multiply_generator(a, i)) == target) return true;
  return false;
}

std::int64_t GroupModel::exact_length(const Element&) const {
  fail(ErrorKind::NoFormula, "model '" + info_.name + "' has no closed-form length");
}

std::string GroupModel::encode(const Element& g) const {
  std::string out;
  encode_to(g, out);
  return out;
}

void GroupModel::neighbor_keys(std::string_view key, std::vector<std::string>& out) const {
  Element g = decode(key);
  out.resize(generator_count());
  for (std::size_t i = 0; i < generator_count(); ++i) {
    Element h = g;
    apply_generator(h, i);
    out[i].clear();
    encode_to(h, out[i]);
  }
}

void GroupModel::compute_inverses() {
  std::size_t k = generator_count();
  inverse_.assign(k, k);
  std::string id_key = encode(identity());
  for (std::size_t i = 0; i < k; ++i) {
    Element s = multiply_generator(identity(), i);
    if (encode(s) == id_key) fail(ErrorKind::InvalidParameter, "trivial generator in '" + info_.name + "'");
    for (std::size_t j = 0; j < k; ++j) {
      if (encode(multiply_generator(s, j)) == id_key) {
        inverse_[i] = j;
        break;
      }
    }
    if (inverse_[i] == k) fail(ErrorKind::Internal, "generator set not closed under inverses");
  }
}

}  // namespace cayley
