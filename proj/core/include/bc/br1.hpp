#pragma once

// The first nontrivial quotient of the Brauer-Chen algebra, realized by
// explicit structure constants on the spanning basis {w} u {c e_H} with
// c running over cosets of the pointwise stabilizer W_H.
//
// Products of basis elements only ever produce coefficients 1, delta, or a
// class parameter mu_c, so structure constants are stored as (basis, tag)
// pairs and lifted to full scalars on demand.

#include <bc/group.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bc {

struct Br1Basis {
  enum class Kind { Group, Idem };
  Kind kind = Kind::Group;
  ElementId w = 0;       // Group: the element; Idem: canonical coset rep
  HyperplaneId h = -1;   // Idem only
};

// Sparse element: sorted (basis index, coefficient) pairs, no zeros.
class AlgElement {
 public:
  using Term = std::pair<int, ParamScalar>;

  AlgElement() = default;
  static AlgElement term(int basis, ParamScalar c);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  AlgElement operator+(const AlgElement& o) const;
  AlgElement operator-(const AlgElement& o) const;
  AlgElement operator-() const;
  AlgElement scaled(const ParamScalar& c) const;
  AlgElement& operator+=(const AlgElement& o) { return *this = *this + o; }
  AlgElement& operator-=(const AlgElement& o) { return *this = *this - o; }
  bool operator==(const AlgElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgElement& o) const { return !(*this == o); }

  void add_term(int basis, const ParamScalar& c);

 private:
  std::vector<Term> terms_;
};

// Structure-constant tag: 0 = 1, 1 = delta, 2+c = mu of reflection class c.
struct StructTerm {
  std::int32_t basis;
  std::int32_t tag;
};
using StructProduct = std::vector<StructTerm>;

struct AssocOptions {
  // Exhaustive when dim^3 is at most this bound, else a seeded sample.
  std::uint64_t exhaustive_budget = 10000000;
  std::size_t sample_size = 100000;
  std::uint64_t seed = 1;
};

struct AssocReport {
  bool pass = true;
  bool exhaustive = true;
  std::uint64_t triples_checked = 0;
  std::uint64_t seed = 0;
  std::string counterexample;
};

struct RelationCheck {
  std::string name;
  bool pass = true;
  std::string counterexample;
};

struct RelationReport {
  bool pass = true;
  std::vector<RelationCheck> checks;
};

struct IdealGenerator {
  std::vector<HyperplaneId> hyperplanes;  // a transverse collection
  std::optional<AlgElement> element;      // materialized only for r <= 1
};

// Theorem-level dimension formula |W| + sum_orbits |A0| * |W| / |W_H0|,
// evaluated from the enumerated group data.
long br1_dimension(const ReflectionGroup& group);

class Br1Algebra {
 public:
  explicit Br1Algebra(const ReflectionGroup& group);

  Br1Algebra(const Br1Algebra&) = delete;
  Br1Algebra& operator=(const Br1Algebra&) = delete;

  const ReflectionGroup& group() const { return group_; }
  const ParamRing& ring() const { return ring_; }
  std::size_t dimension() const { return basis_.size(); }
  const Br1Basis& basis(int i) const { return basis_.at(i); }

  int group_basis(ElementId w) const { return w; }
  // Canonicalizes the coset representative.
  int idem_basis(ElementId c, HyperplaneId h) const;
  ElementId canonical_coset_rep(ElementId c, HyperplaneId h) const;

  AlgElement unit() const;
  AlgElement group_element(ElementId w) const;
  AlgElement idempotent(HyperplaneId h) const;  // e_H = (identity coset) e_H
  // phi_H = sum over reflections s with Ker(s-1) = H of mu_s s.
  AlgElement phi(HyperplaneId h) const;

  ParamScalar delta() const;
  ParamScalar mu(int class_id) const;

  const StructProduct& basis_product(int a, int b) const;
  AlgElement multiply(const AlgElement& a, const AlgElement& b) const;

  std::string render(const AlgElement& a) const;

  AssocReport verify_associativity(const AssocOptions& opt = {}) const;
  std::vector<IdealGenerator> ideal_generators(std::size_t r) const;
  // Requires a 2-reflection group; checks the quadratic identity of
  // t_H = mu_H (1 + s_H) - e_H with alpha = 2 mu_H - delta, beta = 2 mu_H.
  RelationReport vogel_identity_check() const;
  // Verifies the CFW relation families on a simple system with ADE diagram.
  // With `normalized` the embedding is e_r -> mu^-1 e_{H_r} (and the CFW
  // loop parameter becomes delta/mu), which makes every family an identity
  // with the parameters formal; otherwise mu is specialized to 1.
  RelationReport cfw_relation_check(const std::vector<ElementId>& simples,
                                    bool normalized = true) const;

 private:
  // Product of (c1 e_h1)(c2 e_h2) computed from explicit representatives.
  StructProduct idem_pair_product(ElementId c1, HyperplaneId h1, ElementId c2,
                                  HyperplaneId h2) const;
  friend StructProduct br1_idem_pair_product_for_tests(const Br1Algebra&,
                                                       ElementId, HyperplaneId,
                                                       ElementId, HyperplaneId);
  ParamScalar tag_scalar(std::int32_t tag) const;

  const ReflectionGroup& group_;
  ParamRing ring_;
  std::vector<Br1Basis> basis_;
  std::vector<int> idem_offset_;          // per hyperplane
  std::vector<ElementId> coset_rep_;      // [h * |W| + g] -> canonical rep
  std::vector<int> coset_pos_;            // [h * |W| + rep] -> coset position
  mutable std::vector<StructProduct> product_cache_;
  mutable std::vector<char> product_known_;
};

// Test hook: the idempotent-pair rule evaluated at explicit (possibly
// non-canonical) coset representatives.
StructProduct br1_idem_pair_product_for_tests(const Br1Algebra& alg,
                                              ElementId c1, HyperplaneId h1,
                                              ElementId c2, HyperplaneId h2);

}  // namespace bc
