#ifndef CAYLEY_MODELS_HPP
#define CAYLEY_MODELS_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/base_group.hpp"
#include "cayley/group_model.hpp"

namespace cayley {

// Z or T_d with its standard generators.
class BaseModel final : public GroupModel {
 public:
  BaseModel(std::shared_ptr<const BaseGroup> base, std::vector<Site> generators, ModelInfo info);

  const BaseGroup& base() const noexcept { return *base_; }
  Element identity() const override { return BaseElement{base_->identity()}; }
  std::size_t generator_count() const override { return gens_.size(); }
  void apply_generator(Element& g, std::size_t id) const override;
  std::int64_t exact_length(const Element& g) const override;
  void encode_to(const Element& g, std::string& out) const override;
  Element decode(std::string_view key) const override;
  std::string format(const Element& g) const override;
  Element parse(std::string_view text) const override;
  void validate(const Element& g) const override;

 private:
  std::shared_ptr<const BaseGroup> base_;
  std::vector<Site> gens_;
};

// Gamma wr L with L = Z_m (m >= 2) or L = Z (m = 0).
class WreathModel final : public GroupModel {
 public:
  WreathModel(std::shared_ptr<const BaseGroup> base, int lamp_order,
              std::vector<WreathElement> generators, ModelInfo info);

  const BaseGroup& base() const noexcept { return *base_; }
  std::shared_ptr<const BaseGroup> base_ptr() const noexcept { return base_; }
  int lamp_order() const noexcept { return m_; }
  const std::vector<WreathElement>& generators() const noexcept { return gens_; }
  LampValue add_lamp(LampValue a, LampValue b) const;

  Element identity() const override { return WreathElement{base_->identity(), {}}; }
  std::size_t generator_count() const override { return gens_.size(); }
  void apply_generator(Element& g, std::size_t id) const override;
  void apply(WreathElement& g, const WreathElement& s) const;
  std::int64_t exact_length(const Element& g) const override;
  void encode_to(const Element& g, std::string& out) const override;
  Element decode(std::string_view key) const override;
  void neighbor_keys(std::string_view key, std::vector<std::string>& out) const override;
  std::string format(const Element& g) const override;
  Element parse(std::string_view text) const override;
  void validate(const Element& g) const override;

  void encode_wreath(const WreathElement& g, std::string& out) const;
  WreathElement decode_wreath(std::string_view key) const;

 private:
  bool dense_codec() const noexcept { return dense_; }

  std::shared_ptr<const BaseGroup> base_;
  int m_;
  std::vector<WreathElement> gens_;
  bool dense_;
};

class ProductModel final : public GroupModel {
 public:
  ProductModel(ModelPtr left, ModelPtr right, ProductSet set, ModelInfo info);

  const GroupModel& factor(std::size_t i) const { return *factors_.at(i); }
  ModelPtr factor_ptr(std::size_t i) const { return factors_.at(i); }
  ProductSet set() const noexcept { return set_; }

  Element identity() const override;
  std::size_t generator_count() const override { return gens_.size(); }
  void apply_generator(Element& g, std::size_t id) const override;
  std::int64_t exact_length(const Element& g) const override;
  void encode_to(const Element& g, std::string& out) const override;
  Element decode(std::string_view key) const override;
  std::string format(const Element& g) const override;
  Element parse(std::string_view text) const override;
  void validate(const Element& g) const override;

 private:
  static constexpr std::size_t kStay = static_cast<std::size_t>(-1);
  std::vector<ModelPtr> factors_;
  ProductSet set_;
  std::vector<std::pair<std::size_t, std::size_t>> gens_;  // per-factor generator or kStay
};

// Switch-walk-switch generators L * walks * L, deduplicated, plus the lone switches.
std::vector<WreathElement> sws_generators(const BaseGroup& base, int lamp_order,
                                          const std::vector<Site>& walks);

// Parses a descriptor such as "line-lamplighter m=2" or "summed(z|z)".
// Throws UnsupportedFamily or InvalidParameter.
ModelPtr make_group(std::string_view descriptor);

// Stable hash of the supported families and their generator counts.
std::string model_registry_hash();

}  // namespace cayley

#endif
