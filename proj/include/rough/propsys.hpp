#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "rough/error.hpp"
#include "rough/subset.hpp"

namespace rough {

/// Objects, properties and a manifestation relation between them.
class PropertySystem {
public:
  PropertySystem(Universe objects, Universe properties, const std::vector<std::pair<std::size_t, std::size_t>>& manifests)
      : objects_(std::make_shared<const Universe>(std::move(objects))),
        properties_(std::make_shared<const Universe>(std::move(properties))),
        by_object_(objects_->size(), 0),
        by_property_(properties_->size(), 0) {
    for (auto [g, h] : manifests) add(g, h);
  }

  static PropertySystem from_names(Universe objects, Universe properties,
                                   const std::vector<std::pair<std::string, std::string>>& manifests) {
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (const auto& [g, h] : manifests) idx.emplace_back(objects.index_of(g), properties.index_of(h));
    return PropertySystem(std::move(objects), std::move(properties), idx);
  }

  const Universe& objects() const { return *objects_; }
  const Universe& properties() const { return *properties_; }

  bool manifests(std::size_t g, std::size_t h) const { return (by_object_.at(g) >> h) & 1U; }

  /// <i>A: properties manifested by some object of A.
  Subset i_diamond(const Subset& a) const {
    objects_->check(a);
    Mask out = 0;
    for (std::size_t g = 0; g < by_object_.size(); ++g) {
      if (a.contains(g)) out |= by_object_[g];
    }
    return Subset(out, properties_->size());
  }

  /// <e>B: objects manifesting some property of B.
  Subset e_diamond(const Subset& b) const {
    properties_->check(b);
    Mask out = 0;
    for (std::size_t h = 0; h < by_property_.size(); ++h) {
      if (b.contains(h)) out |= by_property_[h];
    }
    return Subset(out, objects_->size());
  }

  /// [i]A: properties all of whose manifesting objects lie in A.
  Subset i_box(const Subset& a) const {
    objects_->check(a);
    Mask out = 0;
    for (std::size_t h = 0; h < by_property_.size(); ++h) {
      if ((by_property_[h] & ~a.bits()) == 0) out |= Mask{1} << h;
    }
    return Subset(out, properties_->size());
  }

  /// [e]B: objects all of whose manifested properties lie in B.
  Subset e_box(const Subset& b) const {
    properties_->check(b);
    Mask out = 0;
    for (std::size_t g = 0; g < by_object_.size(); ++g) {
      if ((by_object_[g] & ~b.bits()) == 0) out |= Mask{1} << g;
    }
    return Subset(out, objects_->size());
  }

private:
  void add(std::size_t g, std::size_t h) {
    if (g >= objects_->size() || h >= properties_->size()) {
      throw Error(ErrorKind::UnknownAtom, "manifestation pair outside the object or property universe");
    }
    by_object_[g] |= Mask{1} << h;
    by_property_[h] |= Mask{1} << g;
  }

  std::shared_ptr<const Universe> objects_;
  std::shared_ptr<const Universe> properties_;
  std::vector<Mask> by_object_;
  std::vector<Mask> by_property_;
};

}  // namespace rough
