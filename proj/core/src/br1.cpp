#include <bc/br1.hpp>
#include <bc/scalar_io.hpp>

#include <algorithm>
#include <random>
#include <sstream>

namespace bc {

AlgElement AlgElement::term(int basis, ParamScalar c) {
  AlgElement e;
  if (!c.is_zero()) e.terms_.emplace_back(basis, std::move(c));
  return e;
}

void AlgElement::add_term(int basis, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), basis,
      [](const Term& t, int b) { return t.first < b; });
  if (it != terms_.end() && it->first == basis) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {basis, c});
  }
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
  AlgElement r = *this;
  for (const auto& [b, c] : o.terms_) r.add_term(b, c);
  return r;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
  AlgElement r = *this;
  for (const auto& [b, c] : o.terms_) r.add_term(b, -c);
  return r;
}

AlgElement AlgElement::operator-() const {
  AlgElement r = *this;
  for (auto& [b, c] : r.terms_) c = -c;
  return r;
}

AlgElement AlgElement::scaled(const ParamScalar& c) const {
  if (c.is_zero()) return AlgElement();
  AlgElement r = *this;
  for (auto& [b, v] : r.terms_) v *= c;
  return r;
}

long br1_dimension(const ReflectionGroup& group) {
  long dim = static_cast<long>(group.order());
  for (const auto& orbit : group.hyperplane_orbits()) {
    HyperplaneId h0 = orbit.front();
    dim += static_cast<long>(orbit.size()) *
           (static_cast<long>(group.order()) / group.hyperplane_order(h0));
  }
  return dim;
}

Br1Algebra::Br1Algebra(const ReflectionGroup& group)
    : group_(group), ring_(group.param_ring()) {
  const std::size_t N = group_.order();
  const std::size_t A = group_.hyperplanes().size();
  coset_rep_.assign(A * N, -1);
  coset_pos_.assign(A * N, -1);
  for (std::size_t g = 0; g < N; ++g) basis_.push_back({Br1Basis::Kind::Group,
                                                        static_cast<int>(g),
                                                        -1});
  idem_offset_.assign(A, 0);
  for (std::size_t h = 0; h < A; ++h) {
    idem_offset_[h] = static_cast<int>(basis_.size());
    const auto& wh = group_.pointwise_stabilizer(static_cast<HyperplaneId>(h));
    int pos = 0;
    for (std::size_t g = 0; g < N; ++g) {
      if (coset_rep_[h * N + g] >= 0) continue;
      // g is the minimal element of its coset g W_H.
      for (ElementId v : wh) {
        ElementId m = group_.multiply(static_cast<ElementId>(g), v);
        coset_rep_[h * N + m] = static_cast<ElementId>(g);
      }
      coset_pos_[h * N + g] = pos++;
      basis_.push_back({Br1Basis::Kind::Idem, static_cast<int>(g),
                        static_cast<HyperplaneId>(h)});
    }
  }
  product_cache_.resize(basis_.size() * basis_.size());
  product_known_.assign(basis_.size() * basis_.size(), 0);
}

ElementId Br1Algebra::canonical_coset_rep(ElementId c, HyperplaneId h) const {
  return coset_rep_[static_cast<std::size_t>(h) * group_.order() + c];
}

int Br1Algebra::idem_basis(ElementId c, HyperplaneId h) const {
  ElementId rep = canonical_coset_rep(c, h);
  return idem_offset_[h] +
         coset_pos_[static_cast<std::size_t>(h) * group_.order() + rep];
}

AlgElement Br1Algebra::unit() const {
  return AlgElement::term(group_basis(group_.identity()), ParamScalar::one());
}

AlgElement Br1Algebra::group_element(ElementId w) const {
  return AlgElement::term(group_basis(w), ParamScalar::one());
}

AlgElement Br1Algebra::idempotent(HyperplaneId h) const {
  return AlgElement::term(idem_basis(group_.identity(), h),
                          ParamScalar::one());
}

AlgElement Br1Algebra::phi(HyperplaneId h) const {
  AlgElement r;
  for (int ri : group_.reflections_with_hyperplane(h)) {
    const Reflection& s = group_.reflections()[ri];
    r.add_term(group_basis(s.element), mu(s.class_id));
  }
  return r;
}

ParamScalar Br1Algebra::delta() const {
  return ParamScalar::variable(ring_.delta_var());
}

ParamScalar Br1Algebra::mu(int class_id) const {
  return ParamScalar::variable(ring_.mu_var(static_cast<unsigned>(class_id)));
}

ParamScalar Br1Algebra::tag_scalar(std::int32_t tag) const {
  if (tag == 0) return ParamScalar::one();
  if (tag == 1) return delta();
  return mu(tag - 2);
}

StructProduct Br1Algebra::idem_pair_product(ElementId c1, HyperplaneId h1,
                                            ElementId c2,
                                            HyperplaneId h2) const {
  // (c1 e_h1)(c2 e_h2) = c1 c2 e_{c2^-1(h1)} e_{h2}.
  HyperplaneId hp = group_.hyperplane_action(group_.inverse(c2), h1);
  ElementId c12 = group_.multiply(c1, c2);
  StructProduct out;
  if (hp == h2) {
    out.push_back({idem_basis(c12, h2), 1});
    return out;
  }
  if (group_.transverse(hp, h2)) return out;  // level cut
  for (int ri : group_.reflections_mapping(h2, hp)) {
    const Reflection& s = group_.reflections()[ri];
    out.push_back({idem_basis(group_.multiply(c12, s.element), h2),
                   2 + s.class_id});
  }
  return out;
}

StructProduct br1_idem_pair_product_for_tests(const Br1Algebra& alg,
                                              ElementId c1, HyperplaneId h1,
                                              ElementId c2, HyperplaneId h2) {
  return alg.idem_pair_product(c1, h1, c2, h2);
}

const StructProduct& Br1Algebra::basis_product(int a, int b) const {
  std::size_t key = static_cast<std::size_t>(a) * basis_.size() + b;
  if (product_known_[key]) return product_cache_[key];
  const Br1Basis& x = basis_[a];
  const Br1Basis& y = basis_[b];
  StructProduct out;
  if (x.kind == Br1Basis::Kind::Group && y.kind == Br1Basis::Kind::Group) {
    out.push_back({group_basis(group_.multiply(x.w, y.w)), 0});
  } else if (x.kind == Br1Basis::Kind::Group) {
    out.push_back({idem_basis(group_.multiply(x.w, y.w), y.h), 0});
  } else if (y.kind == Br1Basis::Kind::Group) {
    out.push_back({idem_basis(group_.multiply(x.w, y.w),
                              group_.hyperplane_action(group_.inverse(y.w),
                                                       x.h)),
                   0});
  } else {
    out = idem_pair_product(x.w, x.h, y.w, y.h);
  }
  product_cache_[key] = std::move(out);
  product_known_[key] = 1;
  return product_cache_[key];
}

AlgElement Br1Algebra::multiply(const AlgElement& a, const AlgElement& b) const {
  AlgElement r;
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      ParamScalar c = ca * cb;
      for (const StructTerm& t : basis_product(ia, ib))
        r.add_term(t.basis, t.tag == 0 ? c : c * tag_scalar(t.tag));
    }
  return r;
}

std::string Br1Algebra::render(const AlgElement& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    const Br1Basis& bb = basis_[b];
    os << "(" << render_scalar(c, ring_) << ")*";
    if (bb.kind == Br1Basis::Kind::Group)
      os << "w" << bb.w;
    else
      os << "c" << bb.w << "e" << bb.h;
  }
  return os.str();
}

namespace {

// Accumulates tag products for the associativity walk without full
// AlgElement overhead.
void accumulate(const Br1Algebra& alg, std::vector<std::pair<int, ParamScalar>>&
                acc, int basis, const ParamScalar& c) {
  (void)alg;
  for (auto& [b, v] : acc)
    if (b == basis) {
      v += c;
      return;
    }
  acc.emplace_back(basis, c);
}

}  // namespace

AssocReport Br1Algebra::verify_associativity(const AssocOptions& opt) const {
  AssocReport report;
  report.seed = opt.seed;
  const std::size_t dim = basis_.size();
  const std::uint64_t total = static_cast<std::uint64_t>(dim) * dim * dim;
  report.exhaustive = total <= opt.exhaustive_budget;

  ParamScalar one = ParamScalar::one();
  auto tag_value = [&](std::int32_t tag) { return tag_scalar(tag); };

  auto check_triple = [&](int a, int b, int c) -> bool {
    std::vector<std::pair<int, ParamScalar>> lhs, rhs;
    for (const StructTerm& ab : basis_product(a, b)) {
      ParamScalar f = ab.tag == 0 ? one : tag_value(ab.tag);
      for (const StructTerm& t : basis_product(ab.basis, c))
        accumulate(*this, lhs, t.basis,
                   t.tag == 0 ? f : f * tag_value(t.tag));
    }
    for (const StructTerm& bc : basis_product(b, c)) {
      ParamScalar f = bc.tag == 0 ? one : tag_value(bc.tag);
      for (const StructTerm& t : basis_product(a, bc.basis))
        accumulate(*this, rhs, t.basis,
                   t.tag == 0 ? f : f * tag_value(t.tag));
    }
    auto tidy = [](std::vector<std::pair<int, ParamScalar>>& v) {
      std::erase_if(v, [](const auto& t) { return t.second.is_zero(); });
      std::sort(v.begin(), v.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    };
    tidy(lhs);
    tidy(rhs);
    return lhs == rhs;
  };

  auto record_failure = [&](int a, int b, int c) {
    std::ostringstream os;
    os << "basis triple (" << a << ", " << b << ", " << c << ")";
    report.counterexample = os.str();
    report.pass = false;
  };

  if (report.exhaustive) {
    for (std::size_t a = 0; a < dim && report.pass; ++a)
      for (std::size_t b = 0; b < dim && report.pass; ++b)
        for (std::size_t c = 0; c < dim && report.pass; ++c) {
          ++report.triples_checked;
          if (!check_triple(static_cast<int>(a), static_cast<int>(b),
                            static_cast<int>(c)))
            record_failure(static_cast<int>(a), static_cast<int>(b),
                           static_cast<int>(c));
        }
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> dist(0, static_cast<int>(dim) - 1);
    for (std::size_t i = 0; i < opt.sample_size && report.pass; ++i) {
      int a = dist(rng), b = dist(rng), c = dist(rng);
      ++report.triples_checked;
      if (!check_triple(a, b, c)) record_failure(a, b, c);
    }
  }
  return report;
}

std::vector<IdealGenerator> Br1Algebra::ideal_generators(std::size_t r) const {
  if (r == 0) throw InvalidInput("ideal generators need r >= 1");
  std::vector<IdealGenerator> out;
  for (auto& collection : group_.transverse_collections(r)) {
    IdealGenerator gen;
    gen.hyperplanes = collection;
    if (r == 1) gen.element = idempotent(collection.front());
    out.push_back(std::move(gen));
  }
  return out;
}

RelationReport Br1Algebra::vogel_identity_check() const {
  if (!group_.all_reflections_order_two())
    throw InvalidInput("Vogel identity requires a 2-reflection group");
  RelationReport report;
  const auto& hyps = group_.hyperplanes();
  for (std::size_t h = 0; h < hyps.size(); ++h) {
    const auto& refl_idx = group_.reflections_with_hyperplane(
        static_cast<HyperplaneId>(h));
    const Reflection& s = group_.reflections()[refl_idx.front()];
    ParamScalar lam = mu(s.class_id);
    AlgElement t = (unit() + group_element(s.element)).scaled(lam) -
                   idempotent(static_cast<HyperplaneId>(h));
    ParamScalar alpha = lam + lam - delta();
    ParamScalar beta = lam + lam;
    ParamScalar half = ParamScalar::from_rational(Rational(1, 2));
    AlgElement quad = multiply(t, t) - t.scaled(alpha + beta) +
                      (unit() + group_element(s.element))
                          .scaled(alpha * beta * half);
    AlgElement fix_r = multiply(t, group_element(s.element)) - t;
    AlgElement fix_l = multiply(group_element(s.element), t) - t;
    RelationCheck quad_check{"quadratic H" + std::to_string(h),
                             quad.is_zero(),
                             quad.is_zero() ? "" : render(quad)};
    RelationCheck fix_check{"t s = s t = t, H" + std::to_string(h),
                            fix_r.is_zero() && fix_l.is_zero(),
                            fix_r.is_zero() && fix_l.is_zero()
                                ? ""
                                : render(fix_r.is_zero() ? fix_l : fix_r)};
    report.pass = report.pass && quad_check.pass && fix_check.pass;
    report.checks.push_back(std::move(quad_check));
    report.checks.push_back(std::move(fix_check));
  }
  return report;
}

RelationReport Br1Algebra::cfw_relation_check(
    const std::vector<ElementId>& simples, bool normalized) const {
  RelationReport report;
  // Validate the diagram: order-2 reflections, pairwise products of order
  // 2 or 3, and the simples generating the group.
  std::vector<int> refl_index(simples.size(), -1);
  for (std::size_t i = 0; i < simples.size(); ++i) {
    if (group_.element_order(simples[i]) != 2)
      throw InvalidInput("simple system must consist of order-2 reflections");
    for (std::size_t r = 0; r < group_.reflections().size(); ++r)
      if (group_.reflections()[r].element == simples[i]) {
        refl_index[i] = static_cast<int>(r);
        break;
      }
    if (refl_index[i] < 0)
      throw InvalidInput("simple system element is not a reflection");
  }
  std::vector<std::vector<bool>> adjacent(simples.size(),
                                          std::vector<bool>(simples.size()));
  for (std::size_t i = 0; i < simples.size(); ++i)
    for (std::size_t j = i + 1; j < simples.size(); ++j) {
      long m = group_.element_order(group_.multiply(simples[i], simples[j]));
      if (m != 2 && m != 3)
        throw InvalidInput("diagram is not simply laced (ADE)");
      adjacent[i][j] = adjacent[j][i] = (m == 3);
    }
  {
    std::vector<char> seen(group_.order(), 0);
    std::vector<ElementId> stack{group_.identity()};
    seen[0] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      ElementId x = stack.back();
      stack.pop_back();
      ++count;
      for (ElementId s : simples) {
        ElementId y = group_.multiply(x, s);
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (count != group_.order())
      throw InvalidInput("simple system does not generate the group");
  }

  auto hyp = [&](std::size_t i) {
    return group_.reflections()[refl_index[i]].hyperplane;
  };
  auto e = [&](std::size_t i) {
    AlgElement base = idempotent(hyp(i));
    if (!normalized) return base;
    int cls = group_.reflections()[refl_index[i]].class_id;
    return base.scaled(mu(cls).inverse());
  };
  auto w = [&](ElementId g) { return group_element(g); };
  ParamScalar delta_cfw = delta();
  if (normalized) {
    int cls = group_.reflections()[refl_index[0]].class_id;
    delta_cfw = delta() / mu(cls);
  }

  auto add = [&](const std::string& name, const AlgElement& diff) {
    RelationCheck c{name, diff.is_zero(), diff.is_zero() ? "" : render(diff)};
    report.pass = report.pass && c.pass;
    report.checks.push_back(std::move(c));
  };

  for (std::size_t i = 0; i < simples.size(); ++i) {
    std::string si = std::to_string(i);
    add("RSre r" + si, multiply(w(simples[i]), e(i)) - e(i));
    add("RSer r" + si, multiply(e(i), w(simples[i])) - e(i));
    add("HSee r" + si,
        multiply(e(i), e(i)) - e(i).scaled(delta_cfw));
  }
  for (std::size_t i = 0; i < simples.size(); ++i)
    for (std::size_t j = 0; j < simples.size(); ++j) {
      if (i == j) continue;
      std::string nm = " r" + std::to_string(i) + " s" + std::to_string(j);
      if (!adjacent[i][j]) {
        if (i < j)
          add("HCee" + nm, multiply(e(i), e(j)) - multiply(e(j), e(i)));
        add("HCer" + nm,
            multiply(e(i), w(simples[j])) - multiply(w(simples[j]), e(i)));
      } else {
        ElementId r = simples[i], s = simples[j];
        // (RNrre) rs e_r = e_s e_r
        add("RNrre" + nm,
            multiply(w(group_.multiply(r, s)), e(i)) - multiply(e(j), e(i)));
        // (RNrre') rsr e_s = e_r e_s
        ElementId rsr = group_.multiply(group_.multiply(r, s), r);
        add("RNrre'" + nm,
            multiply(w(rsr), e(j)) - multiply(e(i), e(j)));
        // (HNrer) s e_r s = r e_s r
        add("HNrer" + nm,
            multiply(multiply(w(s), e(i)), w(s)) -
                multiply(multiply(w(r), e(j)), w(r)));
        // (HNrer') rsr e_s = e_r srs
        ElementId srs = group_.multiply(group_.multiply(s, r), s);
        add("HNrer'" + nm,
            multiply(w(rsr), e(j)) - multiply(e(i), w(srs)));
      }
    }
  return report;
}

}  // namespace bc
