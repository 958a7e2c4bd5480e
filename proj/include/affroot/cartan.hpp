// Finite crystallographic root systems built from Cartan matrices.
//
// Simple roots are numbered 1..l in every public interface; coordinate
// vectors are stored 0-based. All arithmetic is exact: integer coordinates
// for roots and coroots, boost::rational for the bilinear form.

#pragma once

#include <compare>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "affroot/rational.hpp"

namespace affroot {

enum class Sign { Plus, Minus };

// Integer coordinate vector over a fixed basis. The tag keeps root
// coordinates (over the simple roots) apart from coroot coordinates (over
// the simple coroots).
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<int> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<int> coords) : coords_(coords) {}

  static LatticeVector zero(int rank) { return LatticeVector(std::vector<int>(rank, 0)); }
  static LatticeVector unit(int rank, int index) {
    LatticeVector v = zero(rank);
    v.coords_.at(index - 1) = 1;
    return v;
  }

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<int>& coords() const { return coords_; }
  // 1-based coefficient of the index-th basis vector.
  int coeff(int index) const { return coords_.at(index - 1); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }

  int height() const {
    int h = 0;
    for (int c : coords_) h += c;
    return h;
  }
  bool is_zero() const {
    for (int c : coords_)
      if (c != 0) return false;
    return true;
  }
  bool is_positive() const {
    bool any = false;
    for (int c : coords_) {
      if (c < 0) return false;
      any = any || c > 0;
    }
    return any;
  }
  bool is_negative() const { return (-*this).is_positive(); }

  LatticeVector operator-() const {
    LatticeVector r = *this;
    for (int& c : r.coords_) c = -c;
    return r;
  }
  LatticeVector& operator+=(const LatticeVector& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(int k, LatticeVector a) {
    for (int& c : a.coords_) c *= k;
    return a;
  }

  auto operator<=>(const LatticeVector&) const = default;
  bool operator==(const LatticeVector&) const = default;

 private:
  std::vector<int> coords_;
};

struct RootTag {};
struct CorootTag {};

// Classical root (or root-lattice vector) in coordinates over the simple roots.
using Root = LatticeVector<RootTag>;
// Coroot-lattice vector in coordinates over the simple coroots.
using CorootVector = LatticeVector<CorootTag>;
using RootSet = std::set<Root>;

// Sorted set of 1-based simple-root indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> idx);
  explicit IndexSet(std::vector<int> idx);
  static IndexSet full(int rank);

  bool contains(int i) const;
  bool empty() const { return idx_.empty(); }
  int size() const { return static_cast<int>(idx_.size()); }
  bool is_subset_of(const IndexSet& other) const;
  IndexSet minus(const IndexSet& other) const;
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  const std::vector<int>& values() const { return idx_; }

  // All subsets, ordered by size then lexicographically.
  std::vector<IndexSet> subsets() const;

  auto operator<=>(const IndexSet&) const = default;
  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<int> idx_;
};

std::string to_string(const IndexSet& s);

// Cartan matrix a_ij = <alpha_i^vee, alpha_j> of finite type.
struct CartanData {
  std::string type_label;
  std::vector<std::vector<int>> matrix;

  int rank() const { return static_cast<int>(matrix.size()); }
  // 1-based entry a_ij.
  int operator()(int i, int j) const { return matrix[i - 1][j - 1]; }

  // Built-in Bourbaki-numbered matrices: A_l (l>=1), B_l, C_l (l>=2),
  // D_l (l>=4), E6-E8, F4, G2. Labels look like "A2" or "g2".
  static CartanData of_type(std::string_view label);
  // Explicit matrix; validated when the root system is built.
  static CartanData from_matrix(std::vector<std::vector<int>> matrix,
                                std::string label = "custom");
};

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

// The root system of a finite Cartan matrix with its normalized form.
// Immutable after construction.
class RootSystem {
 public:
  // Throws std::invalid_argument unless the matrix is a Cartan matrix of
  // finite type (symmetrizable with positive definite symmetrization).
  explicit RootSystem(CartanData cartan);

  const CartanData& cartan() const { return cartan_; }
  const std::string& type_label() const { return cartan_.type_label; }
  int rank() const { return cartan_.rank(); }

  // Positive roots ordered by height, then by coordinates descending (so
  // alpha_1 precedes alpha_2). roots() lists the positives followed by their
  // negatives in the same order.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const std::vector<Root>& roots() const { return all_; }
  bool contains(const Root& r) const { return lookup_.count(r) > 0; }

  Root simple_root(int i) const { return Root::unit(rank(), i); }
  CorootVector simple_coroot(int i) const { return CorootVector::unit(rank(), i); }

  // Gram matrix of ( | ) on the simple roots; (alpha|alpha) = 2 on long roots.
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  Rational pairing(const Root& a, const Root& b) const;
  // (root-lattice vector | coroot-lattice vector), always an integer.
  int pairing(const Root& a, const CorootVector& c) const;
  bool is_long(const Root& r) const;

  // 2a/(a|a) in simple-coroot coordinates. Requires a to be a root.
  CorootVector coroot(const Root& a) const;

  // Simple reflections, i is 1-based.
  Root reflect(int i, const Root& v) const;
  CorootVector reflect(int i, const CorootVector& v) const;

 private:
  CartanData cartan_;
  std::vector<Rational> half_norm_;  // (alpha_i|alpha_i)/2
  std::vector<std::vector<Rational>> gram_;
  std::vector<Root> positive_;
  std::vector<Root> all_;
  std::set<Root> lookup_;
};

RootSystemPtr build_root_system(CartanData cartan);
RootSystemPtr build_root_system(std::string_view type_label);

// The subsystem spanned by the simple roots indexed by J. Empty J gives the
// empty system with no components.
struct SubSystem {
  RootSystemPtr system;
  IndexSet J;
  std::vector<IndexSet> components;  // connected components of J
  std::vector<Root> highest_roots;   // theta of each component
  std::vector<Root> positive;        // Delta_J+ in system order
  std::vector<Root> negative;        // Delta_J- in system order
  std::vector<Root> roots;           // positives then negatives

  int rank() const { return system->rank(); }
  int component_count() const { return static_cast<int>(components.size()); }
  bool contains(const Root& r) const;
  // 0-based component containing a nonzero root of this subsystem.
  int component_of(const Root& r) const;
};

SubSystem sub_system(RootSystemPtr system, const IndexSet& J);

// Roots of Delta_J+ (or Delta_J-) with a nonzero coefficient outside K.
// Throws std::invalid_argument if K is not contained in J.
RootSet delta_J_K(const SubSystem& sub, const IndexSet& K, Sign sign);

}  // namespace affroot
