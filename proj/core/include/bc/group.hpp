#pragma once

// Exact complex (pseudo-)reflection groups: enumeration by breadth-first
// closure, reflections and their hyperplanes, the arrangement with its
// W-action, transversality, stabilizers, and the geometric predicates behind
// the optional idempotent-fixing relations.
//
// Elements are indexed 0..|W|-1 in discovery order (identity first, then a
// breadth-first walk over the sorted generators), so indices, coset
// representatives and every downstream enumeration are deterministic.

#include <bc/linalg.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace bc {

using ElementId = int;
using HyperplaneId = int;

struct BuildOptions {
  std::size_t size_cap = 1000000;
};

struct Reflection {
  ElementId element = -1;
  HyperplaneId hyperplane = -1;
  long order = 0;  // multiplicative order of the element
  int class_id = -1;
};

struct Hyperplane {
  std::vector<Cyclotomic> form;  // canonical row form, first nonzero entry 1
  int orbit_id = -1;
};

// A codimension-2 flat, tagged with one defining pair of hyperplanes and the
// full (sorted) list of hyperplanes containing it.
struct Flat2 {
  HyperplaneId h1 = -1, h2 = -1;
  std::vector<HyperplaneId> contained;
  CycMatrix annihilator;  // canonical rref rows spanning the normal space
};

class ReflectionGroup {
 public:
  // G(de,e,n) as monomial matrices; requires e | de, de >= 1, n >= 1.
  static ReflectionGroup monomial_family(long de, long e, long n,
                                         const BuildOptions& opt = {});
  static ReflectionGroup from_generators(long conductor,
                                         std::vector<CycMatrix> generators,
                                         const BuildOptions& opt = {});

  // --- elements ---
  std::size_t order() const { return elements_.size(); }
  std::size_t dimension() const { return dim_; }
  long matrix_conductor() const { return conductor_; }
  // lcm of the matrix-entry root orders and of the exponents of the
  // normalizer quotients N0/W0 over all hyperplane orbits.
  long global_conductor() const { return global_conductor_; }
  const CycMatrix& matrix(ElementId g) const { return elements_.at(g); }
  ElementId identity() const { return 0; }
  ElementId multiply(ElementId a, ElementId b) const {
    return mult_table_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  ElementId conjugate(ElementId g, ElementId x) const {
    return multiply(multiply(g, x), inverse(g));
  }
  long element_order(ElementId g) const;
  ElementId find_element(const CycMatrix& m) const;  // -1 when absent
  const std::vector<ElementId>& generators() const { return generators_; }
  std::string family_name() const { return family_name_; }

  // --- reflections and the arrangement ---
  const std::vector<Reflection>& reflections() const { return reflections_; }
  int reflection_class_count() const { return reflection_class_count_; }
  // Elements of reflection class c, sorted.
  const std::vector<int>& reflection_class(int c) const {
    return reflection_classes_.at(c);
  }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  HyperplaneId find_hyperplane(const std::vector<Cyclotomic>& form) const;
  int hyperplane_orbit_count() const {
    return static_cast<int>(orbits_.size());
  }
  const std::vector<std::vector<HyperplaneId>>& hyperplane_orbits() const {
    return orbits_;
  }
  HyperplaneId orbit_representative(int orbit_id) const {
    return orbits_.at(orbit_id).front();
  }
  // w(H), via the canonical form of form * matrix(w^-1).
  HyperplaneId hyperplane_action(ElementId w, HyperplaneId h) const {
    check_hyperplane(h);
    return action_[static_cast<std::size_t>(w) * hyperplanes_.size() + h];
  }
  // W_H: pointwise stabilizer (cyclic), sorted by element index.
  const std::vector<ElementId>& pointwise_stabilizer(HyperplaneId h) const {
    check_hyperplane(h);
    return pointwise_stabilizer_[h];
  }
  long hyperplane_order(HyperplaneId h) const {  // m_H = |W_H|
    check_hyperplane(h);
    return static_cast<long>(pointwise_stabilizer_[h].size());
  }
  // N0: setwise stabilizer, sorted by element index.
  std::vector<ElementId> setwise_stabilizer(HyperplaneId h) const;
  // Indices into reflections() of the reflections with fixed space H.
  const std::vector<int>& reflections_with_hyperplane(HyperplaneId h) const {
    check_hyperplane(h);
    return reflections_by_hyperplane_[h];
  }
  // Indices into reflections() of the s with s(from) = to.
  const std::vector<int>& reflections_mapping(HyperplaneId from,
                                              HyperplaneId to) const {
    check_hyperplane(from);
    check_hyperplane(to);
    return reflections_mapping_[static_cast<std::size_t>(from) *
                                    hyperplanes_.size() +
                                to];
  }
  // Generator of W_H whose nontrivial eigenvalue is the fixed primitive
  // m_H-th root of unity.
  ElementId distinguished_reflection(HyperplaneId h) const;

  bool all_reflections_order_two() const;
  // Rank of the span of the hyperplane normals.
  std::size_t arrangement_rank() const;

  // --- transversality ---
  bool transverse(HyperplaneId h1, HyperplaneId h2) const;
  std::vector<std::vector<HyperplaneId>> transverse_collections(
      std::size_t r) const;
  const std::vector<Flat2>& codim2_flats() const;

  // True iff some distinct non-transverse pair H1, H2 satisfies
  // Ker(w-1) ^ H = H1 ^ H2 exactly. Requires w(H) = H.
  bool chen_prime_witness(ElementId w, HyperplaneId h) const;
  // All (reflection index, H) with s(H) = H, Ker(s-1) != H, pair not
  // transverse.
  std::vector<std::pair<int, HyperplaneId>> chen_doubleprime_pairs() const;

  // Scalar ring attached to this group: delta, one mu per reflection class,
  // one lambda per hyperplane orbit, at the global conductor.
  ParamRing param_ring() const;

 private:
  ReflectionGroup() = default;
  void close_under_generators(std::vector<CycMatrix> gens,
                              const BuildOptions& opt);
  void analyze();
  void check_hyperplane(HyperplaneId h) const {
    if (h < 0 || static_cast<std::size_t>(h) >= hyperplanes_.size())
      throw InvalidInput("hyperplane is not in the arrangement");
  }
  CycMatrix flat_annihilator(const CycMatrix& rows) const;

  long conductor_ = 1;
  long global_conductor_ = 1;
  std::size_t dim_ = 0;
  std::string family_name_;
  std::vector<CycMatrix> elements_;
  std::vector<ElementId> generators_;
  std::vector<int> mult_table_;
  std::vector<ElementId> inverse_;
  std::unordered_map<std::uint64_t, std::vector<ElementId>> lookup_;
  mutable std::vector<long> element_order_;

  std::vector<Reflection> reflections_;
  int reflection_class_count_ = 0;
  std::vector<std::vector<int>> reflection_classes_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::vector<HyperplaneId>> orbits_;
  std::vector<HyperplaneId> action_;
  std::vector<std::vector<ElementId>> pointwise_stabilizer_;
  std::vector<std::vector<int>> reflections_by_hyperplane_;
  std::vector<std::vector<int>> reflections_mapping_;
  std::vector<char> transverse_;
  mutable std::vector<Flat2> flats_;
  mutable bool flats_built_ = false;
};

// Canonical form of a row vector: scaled so its first nonzero entry is 1.
std::vector<Cyclotomic> canonical_form(std::vector<Cyclotomic> form);

int compare_forms(const std::vector<Cyclotomic>& a,
                  const std::vector<Cyclotomic>& b);

}  // namespace bc
