#ifndef CAYLEY_GROUP_MODEL_HPP
#define CAYLEY_GROUP_MODEL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/element.hpp"

namespace cayley {

enum class Family {
  IntegerLine,
  FreeTree,
  LineLamplighter,
  TreeLamplighter,
  LadderLamplighter,
  ZwrZ,
  PlaneLamplighter,
  Product,
};

enum class ProductSet { Summed, Product };

struct GeneratorLabel {
  std::size_t id = 0;
  std::size_t inverse_id = 0;
};

struct ModelInfo {
  std::string name;       // canonical descriptor, reparses to the same model
  Family family = Family::IntegerLine;
  int lamp_order = 0;     // m for Z_m lamps, 0 for Z lamps or no lamps
  int degree = 0;         // tree degree d
  std::string variant;    // generating-set variant
  bool has_exact_length = false;
  bool has_infinite_oracle = false;
  bool has_component_oracle = false;
  bool one_ended = false;
};

class GroupModel {
 public:
  virtual ~GroupModel() = default;

  const ModelInfo& info() const noexcept { return info_; }
  const std::string& name() const noexcept { return info_.name; }

  virtual Element identity() const = 0;
  virtual std::size_t generator_count() const = 0;
  GeneratorLabel label(std::size_t id) const;
  // Right multiplication by generator `id`, in place.
  virtual void apply_generator(Element& g, std::size_t id) const = 0;
  Element multiply_generator(const Element& g, std::size_t id) const;
  std::vector<Element> neighbors(const Element& g) const;
  bool adjacent(const Element& a, const Element& b) const;

  // Throws NoFormula when the model has no closed form.
  virtual std::int64_t exact_length(const Element& g) const;

  // Canonical binary encoding: byte-equal iff the elements are equal.
  virtual void encode_to(const Element& g, std::string& out) const = 0;
  std::string encode(const Element& g) const;
  virtual Element decode(std::string_view key) const = 0;
  // Writes the keys of g*s for every generator s into out[0..count).
  virtual void neighbor_keys(std::string_view key, std::vector<std::string>& out) const;

  virtual std::string format(const Element& g) const = 0;
  virtual Element parse(std::string_view text) const = 0;
  // Throws MalformedElement if g does not belong to the model.
  virtual void validate(const Element& g) const = 0;

 protected:
  void compute_inverses();
  ModelInfo info_;

 private:
  std::vector<std::size_t> inverse_;
};

using ModelPtr = std::shared_ptr<const GroupModel>;

}  // namespace cayley

#endif
