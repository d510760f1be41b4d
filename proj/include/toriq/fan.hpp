#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "toriq/rational.hpp"

namespace toriq {

// Sorted set of ray indices.
class RaySet {
 public:
  RaySet() = default;
  RaySet(std::vector<int> idx);
  RaySet(std::initializer_list<int> idx) : RaySet(std::vector<int>(idx)) {}

  const std::vector<int>& indices() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  bool contains(int rho) const;
  bool subset_of(const RaySet& other) const;
  std::uint64_t mask() const;
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }

  friend bool operator==(const RaySet&, const RaySet&) = default;
  friend auto operator<=>(const RaySet&, const RaySet&) = default;

 private:
  std::vector<int> idx_;
};

std::string to_string(const RaySet& s);

// Raw, unvalidated fan description.
struct FanData {
  int dim = 0;
  std::vector<IntVec> rays;
  std::vector<RaySet> max_cones;
};

// A wall is an (n-1)-face shared by two maximal cones.  The relation
// u_a + u_b + sum_i c_i u_i = 0 holds with a, b the opposite rays.
struct Wall {
  RaySet rays;
  int cone_a = -1, cone_b = -1;
  int ray_a = -1, ray_b = -1;
  IntVec relation;  // length num_rays; 1 at ray_a and ray_b
};

// Raised when a fan fails validation; carries every violation found.
class FanError : public std::invalid_argument {
 public:
  explicit FanError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Validated smooth complete fan.  Ray order is the order of the input and
// is the index order used everywhere else.
class Fan {
 public:
  static std::shared_ptr<const Fan> make(FanData data, std::string name = {});
  // Skips validation; for constructions valid by design (products).
  static std::shared_ptr<const Fan> make_unchecked(FanData data, std::string name = {});

  int dim() const { return data_.dim; }
  int num_rays() const { return static_cast<int>(data_.rays.size()); }
  int picard_rank() const { return num_rays() - dim(); }
  const IntVec& ray(int rho) const { return data_.rays.at(static_cast<std::size_t>(rho)); }
  const std::vector<IntVec>& rays() const { return data_.rays; }
  const std::vector<RaySet>& max_cones() const { return data_.max_cones; }
  const RaySet& cone(int i) const { return data_.max_cones.at(static_cast<std::size_t>(i)); }
  int num_cones() const { return static_cast<int>(data_.max_cones.size()); }
  const std::string& name() const { return name_; }
  const FanData& data() const { return data_; }

  // Row i pairs to 1 with the i-th ray of the cone (in sorted order).
  const std::vector<IntVec>& dual_basis(int cone) const { return dual_.at(static_cast<std::size_t>(cone)); }
  int cone_index(const RaySet& s) const;  // -1 if not maximal
  const std::vector<Wall>& walls() const { return walls_; }
  bool is_face(const RaySet& s) const;

  std::int64_t pairing(const IntVec& m, int rho) const;

 private:
  Fan() = default;
  FanData data_;
  std::string name_;
  std::vector<std::vector<IntVec>> dual_;
  std::vector<Wall> walls_;
};

using FanPtr = std::shared_ptr<const Fan>;

// Semantic violations of a structurally well-formed description; empty
// means valid.  Structurally malformed input throws std::invalid_argument.
std::vector<std::string> validate_fan(const FanData& data);

std::vector<RaySet> primitive_collections(const Fan& fan);

// Indices of maximal cones containing u.
std::vector<int> locate_cones(const Fan& fan, const IntVec& u);

// Dual basis of a maximal cone, throws if sigma is not maximal.
std::vector<IntVec> dual_basis(const Fan& fan, const RaySet& sigma);

}  // namespace toriq
