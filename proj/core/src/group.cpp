#include <bc/group.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace bc {

std::vector<Cyclotomic> canonical_form(std::vector<Cyclotomic> form) {
  for (const auto& c : form) {
    if (c.is_zero()) continue;
    Cyclotomic inv = c.inverse();
    for (auto& v : form) v *= inv;
    return form;
  }
  throw InvalidInput("zero linear form");
}

int compare_forms(const std::vector<Cyclotomic>& a,
                  const std::vector<Cyclotomic>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = Cyclotomic::compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

int compare_matrices(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      int c = Cyclotomic::compare(a.at(i, j), b.at(i, j));
      if (c != 0) return c;
    }
  return 0;
}

std::size_t bareiss_rank(Matrix<Polynomial> m) {
  Polynomial prev = Polynomial::constant(Cyclotomic::one());
  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(pivot, j), m.at(row, j));
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        Polynomial t = m.at(row, col) * m.at(i, j) -
                       m.at(i, col) * m.at(row, j);
        m.at(i, j) = t.is_zero() ? Polynomial() : t.exact_divide(prev);
      }
      m.at(i, col) = Polynomial();
    }
    prev = m.at(row, col);
    ++rank;
    ++row;
  }
  return rank;
}

ReflectionGroup ReflectionGroup::monomial_family(long de, long e, long n,
                                                 const BuildOptions& opt) {
  if (de < 1 || e < 1 || n < 1 || de % e != 0)
    throw InvalidInput("bad monomial family parameters: need e | de, all >= 1");
  const long d = de / e;
  const long conductor = de;
  const auto zero = Cyclotomic::zero(conductor);
  const auto one = Cyclotomic::one(conductor);
  std::vector<CycMatrix> gens;
  auto ident = [&] {
    CycMatrix m(n, n, zero);
    for (long i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  };
  // Adjacent transpositions.
  for (long i = 0; i + 1 < n; ++i) {
    CycMatrix m = ident();
    m.at(i, i) = zero;
    m.at(i + 1, i + 1) = zero;
    m.at(i, i + 1) = one;
    m.at(i + 1, i) = one;
    gens.push_back(m);
  }
  // Twisted transposition in the first two coordinates.
  if (e > 1 && n >= 2) {
    CycMatrix m = ident();
    m.at(0, 0) = zero;
    m.at(1, 1) = zero;
    m.at(0, 1) = Cyclotomic::root_of_unity(conductor, -1);
    m.at(1, 0) = Cyclotomic::root_of_unity(conductor, 1);
    gens.push_back(m);
  }
  // Diagonal reflection of order d.
  if (d > 1) {
    CycMatrix m = ident();
    m.at(0, 0) = Cyclotomic::root_of_unity(conductor, e);
    gens.push_back(m);
  }
  ReflectionGroup g = from_generators(conductor, std::move(gens), opt);
  std::ostringstream name;
  name << "G(" << de << "," << e << "," << n << ")";
  g.family_name_ = name.str();
  return g;
}

ReflectionGroup ReflectionGroup::from_generators(
    long conductor, std::vector<CycMatrix> generators,
    const BuildOptions& opt) {
  ReflectionGroup g;
  g.conductor_ = conductor;
  g.close_under_generators(std::move(generators), opt);
  g.analyze();
  return g;
}

void ReflectionGroup::close_under_generators(std::vector<CycMatrix> gens,
                                             const BuildOptions& opt) {
  if (gens.empty() && dim_ == 0) dim_ = 1;
  if (!gens.empty()) dim_ = gens.front().rows();
  for (auto& m : gens) {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw InvalidInput("generators must be square matrices of equal size");
    // Promote entries to the declared conductor for uniform hashing.
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        m.at(i, j) = m.at(i, j).promoted(
            lcm_long(conductor_, m.at(i, j).conductor()));
  }
  long lc = conductor_;
  for (const auto& m : gens)
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        lc = lcm_long(lc, m.at(i, j).conductor());
  conductor_ = lc;
  const Cyclotomic one = Cyclotomic::one(conductor_);
  const Cyclotomic zero = Cyclotomic::zero(conductor_);
  auto promote_all = [&](CycMatrix& m) {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        m.at(i, j) = m.at(i, j).promoted(conductor_);
  };
  CycMatrix ident(dim_, dim_, zero);
  for (std::size_t i = 0; i < dim_; ++i) ident.at(i, i) = one;
  for (auto& m : gens) {
    promote_all(m);
    matrix_inverse(m, one);  // throws if singular
  }
  std::sort(gens.begin(), gens.end(), [](const CycMatrix& a,
                                         const CycMatrix& b) {
    return compare_matrices(a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::erase(gens, ident);

  auto add_element = [&](const CycMatrix& m) -> ElementId {
    std::uint64_t h = hash_matrix(m);
    auto& bucket = lookup_[h];
    for (ElementId id : bucket)
      if (elements_[id] == m) return id;
    ElementId id = static_cast<ElementId>(elements_.size());
    elements_.push_back(m);
    bucket.push_back(id);
    return id;
  };

  add_element(ident);
  // edge[x][j] = index of x * gen_j; word decomposition for the table fill.
  std::vector<std::vector<ElementId>> edge;
  std::vector<ElementId> word_prev{-1};
  std::vector<int> word_gen{-1};
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    edge.emplace_back(gens.size(), -1);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      CycMatrix prod = elements_[i] * gens[j];
      std::size_t before = elements_.size();
      ElementId id = add_element(prod);
      edge[i][j] = id;
      if (elements_.size() > before) {
        word_prev.push_back(static_cast<ElementId>(i));
        word_gen.push_back(static_cast<int>(j));
        edge.reserve(elements_.size());
        if (elements_.size() > opt.size_cap)
          throw CapExceeded("group too large or infinite");
      }
    }
  }

  generators_.clear();
  for (std::size_t j = 0; j < gens.size(); ++j)
    generators_.push_back(find_element(gens[j]));

  // Full multiplication table: a*b = (a * prev(b)) * gen(b).
  const std::size_t N = elements_.size();
  mult_table_.assign(N * N, -1);
  for (std::size_t a = 0; a < N; ++a) mult_table_[a * N + 0] = a;
  for (std::size_t b = 1; b < N; ++b) {
    ElementId p = word_prev[b];
    int j = word_gen[b];
    for (std::size_t a = 0; a < N; ++a)
      mult_table_[a * N + b] = edge[mult_table_[a * N + p]][j];
  }
  inverse_.assign(N, -1);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (mult_table_[a * N + b] == 0) {
        inverse_[a] = static_cast<ElementId>(b);
        break;
      }
}

ElementId ReflectionGroup::find_element(const CycMatrix& m) const {
  CycMatrix p = m;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      p.at(i, j) = p.at(i, j).promoted(
          lcm_long(conductor_, p.at(i, j).conductor()));
  auto it = lookup_.find(hash_matrix(p));
  if (it == lookup_.end()) return -1;
  for (ElementId id : it->second)
    if (elements_[id] == p) return id;
  return -1;
}

long ReflectionGroup::element_order(ElementId g) const {
  if (element_order_.empty()) element_order_.assign(order(), 0);
  if (element_order_[g] == 0) {
    long k = 1;
    ElementId x = g;
    while (x != 0) {
      x = multiply(x, g);
      ++k;
    }
    element_order_[g] = k;
  }
  return element_order_[g];
}

void ReflectionGroup::analyze() {
  const std::size_t N = order();
  const Cyclotomic one = Cyclotomic::one(conductor_);
  const Cyclotomic zero = Cyclotomic::zero(conductor_);

  // Reflections: rank(g - 1) = 1; the fixed hyperplane is the kernel of any
  // nonzero row of g - 1.
  std::map<std::vector<Cyclotomic>, HyperplaneId,
           decltype([](const std::vector<Cyclotomic>& a,
                       const std::vector<Cyclotomic>& b) {
             return compare_forms(a, b) < 0;
           })>
      form_ids;
  std::vector<std::vector<Cyclotomic>> forms;
  std::vector<std::pair<ElementId, std::vector<Cyclotomic>>> found;
  for (std::size_t g = 1; g < N; ++g) {
    CycMatrix d = elements_[g];
    for (std::size_t i = 0; i < dim_; ++i) d.at(i, i) -= one;
    if (matrix_rank(d) != 1) continue;
    std::vector<Cyclotomic> row;
    for (std::size_t i = 0; i < dim_ && row.empty(); ++i) {
      for (std::size_t j = 0; j < dim_; ++j)
        if (!d.at(i, j).is_zero()) {
          row = d.row(i);
          break;
        }
    }
    found.emplace_back(static_cast<ElementId>(g), canonical_form(row));
  }
  for (auto& [g, form] : found)
    if (!form_ids.count(form)) {
      form_ids.emplace(form, 0);
      forms.push_back(form);
    }
  std::sort(forms.begin(), forms.end(),
            [](const auto& a, const auto& b) { return compare_forms(a, b) < 0; });
  hyperplanes_.clear();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    form_ids[forms[i]] = static_cast<HyperplaneId>(i);
    hyperplanes_.push_back({forms[i], -1});
  }
  reflections_.clear();
  for (auto& [g, form] : found)
    reflections_.push_back({g, form_ids[form], element_order(g), -1});
  std::sort(reflections_.begin(), reflections_.end(),
            [](const Reflection& a, const Reflection& b) {
              return a.element < b.element;
            });

  const std::size_t A = hyperplanes_.size();
  // W-action on the arrangement.
  action_.assign(N * A, -1);
  for (std::size_t w = 0; w < N; ++w) {
    const CycMatrix& minv = elements_[inverse_[w]];
    for (std::size_t h = 0; h < A; ++h) {
      std::vector<Cyclotomic> img(dim_, zero);
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t i = 0; i < dim_; ++i)
          img[j] += hyperplanes_[h].form[i] * minv.at(i, j);
      auto it = form_ids.find(canonical_form(std::move(img)));
      if (it == form_ids.end())
        throw Error("arrangement is not closed under the group action");
      action_[w * A + h] = it->second;
    }
  }

  // Orbits, ordered by minimal member.
  orbits_.clear();
  std::vector<int> orbit_of(A, -1);
  for (std::size_t h = 0; h < A; ++h) {
    if (orbit_of[h] >= 0) continue;
    int oid = static_cast<int>(orbits_.size());
    std::vector<HyperplaneId> orbit;
    std::deque<HyperplaneId> queue{static_cast<HyperplaneId>(h)};
    orbit_of[h] = oid;
    while (!queue.empty()) {
      HyperplaneId cur = queue.front();
      queue.pop_front();
      orbit.push_back(cur);
      for (std::size_t w = 0; w < N; ++w) {
        HyperplaneId img = action_[w * A + cur];
        if (orbit_of[img] < 0) {
          orbit_of[img] = oid;
          queue.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits_.push_back(std::move(orbit));
  }
  for (std::size_t h = 0; h < A; ++h) hyperplanes_[h].orbit_id = orbit_of[h];

  // Pointwise stabilizers W_H (fix a basis of H).
  pointwise_stabilizer_.assign(A, {});
  for (std::size_t h = 0; h < A; ++h) {
    CycMatrix formrow(1, dim_, zero);
    for (std::size_t j = 0; j < dim_; ++j)
      formrow.at(0, j) = hyperplanes_[h].form[j];
    auto basis = nullspace(formrow, one);
    for (std::size_t g = 0; g < N; ++g) {
      bool fixes = true;
      for (const auto& v : basis) {
        for (std::size_t i = 0; i < dim_ && fixes; ++i) {
          Cyclotomic acc = Cyclotomic::zero(conductor_);
          for (std::size_t j = 0; j < dim_; ++j)
            acc += elements_[g].at(i, j) * v[j];
          if (acc != v[i]) fixes = false;
        }
        if (!fixes) break;
      }
      if (fixes) pointwise_stabilizer_[h].push_back(static_cast<ElementId>(g));
    }
  }

  reflections_by_hyperplane_.assign(A, {});
  for (std::size_t r = 0; r < reflections_.size(); ++r)
    reflections_by_hyperplane_[reflections_[r].hyperplane].push_back(
        static_cast<int>(r));

  // Conjugacy classes of reflections, numbered by minimal member element.
  std::vector<int> refl_index_of_element(N, -1);
  for (std::size_t r = 0; r < reflections_.size(); ++r)
    refl_index_of_element[reflections_[r].element] = static_cast<int>(r);
  reflection_classes_.clear();
  for (std::size_t r = 0; r < reflections_.size(); ++r) {
    if (reflections_[r].class_id >= 0) continue;
    int cid = static_cast<int>(reflection_classes_.size());
    std::vector<int> members;
    std::deque<int> queue{static_cast<int>(r)};
    reflections_[r].class_id = cid;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      members.push_back(cur);
      for (std::size_t g = 0; g < N; ++g) {
        ElementId c = conjugate(static_cast<ElementId>(g),
                                reflections_[cur].element);
        int ri = refl_index_of_element[c];
        if (reflections_[ri].class_id < 0) {
          reflections_[ri].class_id = cid;
          queue.push_back(ri);
        }
      }
    }
    std::sort(members.begin(), members.end());
    reflection_classes_.push_back(std::move(members));
  }
  reflection_class_count_ = static_cast<int>(reflection_classes_.size());

  // s(from) = to tables.
  reflections_mapping_.assign(A * A, {});
  for (std::size_t r = 0; r < reflections_.size(); ++r) {
    ElementId s = reflections_[r].element;
    for (std::size_t h = 0; h < A; ++h)
      reflections_mapping_[h * A + action_[s * A + h]].push_back(
          static_cast<int>(r));
  }

  // Pairwise transversality.
  transverse_.assign(A * A, 0);
  for (std::size_t i = 0; i < A; ++i)
    for (std::size_t j = i + 1; j < A; ++j) {
      CycMatrix rows(2, dim_, zero);
      for (std::size_t k = 0; k < dim_; ++k) {
        rows.at(0, k) = hyperplanes_[i].form[k];
        rows.at(1, k) = hyperplanes_[j].form[k];
      }
      CycMatrix ann = flat_annihilator(rows);
      int count = 0;
      for (std::size_t h = 0; h < A; ++h) {
        std::vector<Cyclotomic> v = hyperplanes_[h].form;
        // H contains the flat iff its form lies in the annihilator row space.
        for (std::size_t rr = 0; rr < ann.rows(); ++rr) {
          std::size_t lead = 0;
          while (lead < dim_ && ann.at(rr, lead).is_zero()) ++lead;
          if (lead == dim_) continue;
          Cyclotomic f = v[lead];
          if (f.is_zero()) continue;
          for (std::size_t k = 0; k < dim_; ++k) v[k] -= f * ann.at(rr, k);
        }
        bool contained = std::all_of(v.begin(), v.end(), [](const Cyclotomic& c) {
          return c.is_zero();
        });
        if (contained) ++count;
      }
      transverse_[i * A + j] = transverse_[j * A + i] = (count == 2) ? 1 : 0;
    }

  // Global conductor: entry orders are bounded by the matrix conductor; add
  // the exponents of the normalizer quotients per orbit.
  global_conductor_ = conductor_;
  for (const auto& orbit : orbits_) {
    HyperplaneId h0 = orbit.front();
    auto n0 = setwise_stabilizer(h0);
    const auto& w0 = pointwise_stabilizer_[h0];
    auto in_w0 = [&](ElementId x) {
      return std::binary_search(w0.begin(), w0.end(), x);
    };
    long expq = 1;
    for (ElementId n : n0) {
      long k = 1;
      ElementId x = n;
      while (!in_w0(x)) {
        x = multiply(x, n);
        ++k;
      }
      expq = lcm_long(expq, k);
    }
    global_conductor_ = lcm_long(global_conductor_, expq);
  }
}

CycMatrix ReflectionGroup::flat_annihilator(const CycMatrix& rows) const {
  CycMatrix e = rref(rows);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j)
      if (!e.at(i, j).is_zero()) {
        ++rank;
        break;
      }
  CycMatrix out(rank, dim_, Cyclotomic::zero(conductor_));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out.at(i, j) = e.at(i, j);
  return out;
}

HyperplaneId ReflectionGroup::find_hyperplane(
    const std::vector<Cyclotomic>& form) const {
  std::vector<Cyclotomic> canon = canonical_form(form);
  for (std::size_t h = 0; h < hyperplanes_.size(); ++h)
    if (compare_forms(hyperplanes_[h].form, canon) == 0)
      return static_cast<HyperplaneId>(h);
  return -1;
}

std::vector<ElementId> ReflectionGroup::setwise_stabilizer(
    HyperplaneId h) const {
  check_hyperplane(h);
  std::vector<ElementId> n0;
  const std::size_t A = hyperplanes_.size();
  for (std::size_t w = 0; w < order(); ++w)
    if (action_[w * A + h] == h) n0.push_back(static_cast<ElementId>(w));
  return n0;
}

ElementId ReflectionGroup::distinguished_reflection(HyperplaneId h) const {
  check_hyperplane(h);
  const long m = hyperplane_order(h);
  const Cyclotomic target = Cyclotomic::root_of_unity(m, 1);
  const Rational fixed(static_cast<long>(dim_) - 1);
  for (ElementId g : pointwise_stabilizer_[h]) {
    if (g == 0) continue;
    Cyclotomic tr = Cyclotomic::zero(conductor_);
    for (std::size_t i = 0; i < dim_; ++i) tr += elements_[g].at(i, i);
    if (tr - Cyclotomic::from_rational(fixed) == target) return g;
  }
  throw Error("no distinguished reflection found");
}

bool ReflectionGroup::all_reflections_order_two() const {
  return std::all_of(reflections_.begin(), reflections_.end(),
                     [](const Reflection& r) { return r.order == 2; });
}

std::size_t ReflectionGroup::arrangement_rank() const {
  if (hyperplanes_.empty()) return 0;
  CycMatrix rows(hyperplanes_.size(), dim_, Cyclotomic::zero(conductor_));
  for (std::size_t h = 0; h < hyperplanes_.size(); ++h)
    for (std::size_t j = 0; j < dim_; ++j)
      rows.at(h, j) = hyperplanes_[h].form[j];
  return matrix_rank(rows);
}

bool ReflectionGroup::transverse(HyperplaneId h1, HyperplaneId h2) const {
  check_hyperplane(h1);
  check_hyperplane(h2);
  if (h1 == h2) throw InvalidInput("transversality needs distinct hyperplanes");
  return transverse_[static_cast<std::size_t>(h1) * hyperplanes_.size() + h2];
}

std::vector<std::vector<HyperplaneId>> ReflectionGroup::transverse_collections(
    std::size_t r) const {
  std::vector<std::vector<HyperplaneId>> out;
  std::vector<HyperplaneId> cur;
  const std::size_t A = hyperplanes_.size();
  if (r == 0) return {{}};
  if (r > arrangement_rank()) return {};
  auto dfs = [&](auto&& self, std::size_t next) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t h = next; h < A; ++h) {
      bool ok = true;
      for (HyperplaneId prev : cur)
        if (!transverse_[static_cast<std::size_t>(prev) * A + h]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(static_cast<HyperplaneId>(h));
      self(self, h + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

const std::vector<Flat2>& ReflectionGroup::codim2_flats() const {
  if (flats_built_) return flats_;
  const std::size_t A = hyperplanes_.size();
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < A; ++i)
    for (std::size_t j = i + 1; j < A; ++j) {
      CycMatrix rows(2, dim_, Cyclotomic::zero(conductor_));
      for (std::size_t k = 0; k < dim_; ++k) {
        rows.at(0, k) = hyperplanes_[i].form[k];
        rows.at(1, k) = hyperplanes_[j].form[k];
      }
      CycMatrix ann = flat_annihilator(rows);
      std::ostringstream key;
      for (std::size_t r = 0; r < ann.rows(); ++r)
        for (std::size_t c = 0; c < dim_; ++c) {
          for (const auto& q : ann.at(r, c).promoted(conductor_).coeffs())
            key << q.get_str() << ",";
          key << ";";
        }
      auto it = seen.find(key.str());
      if (it != seen.end()) continue;
      Flat2 flat;
      flat.h1 = static_cast<HyperplaneId>(i);
      flat.h2 = static_cast<HyperplaneId>(j);
      flat.annihilator = ann;
      for (std::size_t h = 0; h < A; ++h) {
        std::vector<Cyclotomic> v = hyperplanes_[h].form;
        for (std::size_t rr = 0; rr < ann.rows(); ++rr) {
          std::size_t lead = 0;
          while (lead < dim_ && ann.at(rr, lead).is_zero()) ++lead;
          if (lead == dim_) continue;
          Cyclotomic f = v[lead];
          if (f.is_zero()) continue;
          for (std::size_t k = 0; k < dim_; ++k) v[k] -= f * ann.at(rr, k);
        }
        if (std::all_of(v.begin(), v.end(),
                        [](const Cyclotomic& c) { return c.is_zero(); }))
          flat.contained.push_back(static_cast<HyperplaneId>(h));
      }
      seen.emplace(key.str(), flats_.size());
      flats_.push_back(std::move(flat));
    }
  flats_built_ = true;
  return flats_;
}

bool ReflectionGroup::chen_prime_witness(ElementId w, HyperplaneId h) const {
  check_hyperplane(h);
  const std::size_t A = hyperplanes_.size();
  if (action_[static_cast<std::size_t>(w) * A + h] != h)
    throw InvalidInput("chen_prime_witness requires w(H) = H");
  // Rows of (w - 1) stacked with the form of H span the annihilator of
  // Ker(w-1) ^ H.
  CycMatrix rows(dim_ + 1, dim_, Cyclotomic::zero(conductor_));
  const CycMatrix& m = elements_[w];
  const Cyclotomic one = Cyclotomic::one(conductor_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      rows.at(i, j) = m.at(i, j) - (i == j ? one : Cyclotomic::zero(conductor_));
  for (std::size_t j = 0; j < dim_; ++j)
    rows.at(dim_, j) = hyperplanes_[h].form[j];
  CycMatrix ann = flat_annihilator(rows);
  if (ann.rows() != 2) return false;
  for (const Flat2& flat : codim2_flats()) {
    if (flat.contained.size() < 3) continue;  // only non-transverse pairs
    if (flat.annihilator == ann) return true;
  }
  return false;
}

std::vector<std::pair<int, HyperplaneId>>
ReflectionGroup::chen_doubleprime_pairs() const {
  std::vector<std::pair<int, HyperplaneId>> out;
  const std::size_t A = hyperplanes_.size();
  for (std::size_t r = 0; r < reflections_.size(); ++r) {
    const Reflection& s = reflections_[r];
    for (std::size_t h = 0; h < A; ++h) {
      if (s.hyperplane == static_cast<HyperplaneId>(h)) continue;
      if (action_[static_cast<std::size_t>(s.element) * A + h] !=
          static_cast<HyperplaneId>(h))
        continue;
      if (!transverse_[static_cast<std::size_t>(s.hyperplane) * A + h])
        out.emplace_back(static_cast<int>(r), static_cast<HyperplaneId>(h));
    }
  }
  return out;
}

ParamRing ReflectionGroup::param_ring() const {
  return ParamRing(global_conductor_,
                   static_cast<unsigned>(reflection_class_count_),
                   static_cast<unsigned>(orbits_.size()));
}

}  // namespace bc
