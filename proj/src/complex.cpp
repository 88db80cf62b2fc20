#include "trikit/complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "trikit/errors.hpp"

namespace trikit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_facet: return "malformed-facet";
    case ErrorKind::empty_complex: return "empty-complex";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::missing_simplex: return "missing-simplex";
    case ErrorKind::join_collision: return "join-collision";
    case ErrorKind::unknown_vertex: return "unknown-vertex";
    case ErrorKind::redundant_vertex: return "redundant-vertex";
    case ErrorKind::not_a_pseudomanifold: return "not-a-pseudomanifold";
    case ErrorKind::unknown_fixture: return "unknown-fixture";
    case ErrorKind::invalid_coefficient: return "invalid-coefficient";
    case ErrorKind::connectivity: return "connectivity";
    case ErrorKind::hypothesis: return "hypothesis";
    case ErrorKind::unsupported_input: return "unsupported-input";
    case ErrorKind::degenerate_input: return "degenerate-input";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

// ---------------------------------------------------------------- Simplex

void Simplex::normalize() {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
  auto a = v_.begin();
  auto b = other.v_.begin();
  while (a != v_.end() && b != other.v_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

Simplex Simplex::without_index(std::size_t i) const {
  std::vector<VertexId> out;
  out.reserve(v_.size() - 1);
  for (std::size_t j = 0; j < v_.size(); ++j)
    if (j != i) out.push_back(v_[j]);
  return from_sorted(std::move(out));
}

Simplex Simplex::without(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(v_.size());
  for (VertexId w : v_)
    if (w != v) out.push_back(w);
  return from_sorted(std::move(out));
}

Simplex Simplex::with(VertexId v) const {
  std::vector<VertexId> out = v_;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  Simplex s;
  s.v_ = std::move(out);
  s.v_.erase(std::unique(s.v_.begin(), s.v_.end()), s.v_.end());
  return s;
}

Simplex Simplex::unite(const Simplex& other) const {
  std::vector<VertexId> out;
  std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

Simplex Simplex::intersect(const Simplex& other) const {
  std::vector<VertexId> out;
  std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(out));
  return from_sorted(std::move(out));
}

Simplex Simplex::minus(const Simplex& other) const {
  std::vector<VertexId> out;
  std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                      std::back_inserter(out));
  return from_sorted(std::move(out));
}

VertexSet make_vertex_set(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// ------------------------------------------------------------- LabelTable

VertexId LabelTable::intern(const std::string& label) {
  auto it = ids_.find(label);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<VertexId>(labels_.size());
  labels_.push_back(label);
  ids_.emplace(label, id);
  return id;
}

std::optional<VertexId> LabelTable::find(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

// ------------------------------------------------------ SimplicialComplex

struct SimplicialComplex::SkeletonCache {
  std::mutex mutex;
  // Slot i+1 holds the i-faces.
  std::vector<std::unique_ptr<const std::vector<Simplex>>> skeleta;
};

namespace {

// Keeps only inclusion-maximal simplices; output sorted lexicographically.
std::vector<Simplex> reduce_to_antichain(std::vector<Simplex> simplices) {
  std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

  std::vector<Simplex> kept;
  for (auto& s : simplices) {
    if (s.empty()) continue;
    bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const Simplex& f) {
      return f.size() > s.size() && s.is_face_of(f);
    });
    if (!absorbed) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

template <typename Fn>
void for_each_subset(const Simplex& s, std::size_t k, Fn&& fn) {
  const std::size_t n = s.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<VertexId> buf(k);
  while (true) {
    for (std::size_t j = 0; j < k; ++j) buf[j] = s[idx[j]];
    fn(Simplex::from_sorted(buf));
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::shared_ptr<const LabelTable> labels,
                                     std::vector<Simplex> facets)
    : labels_(std::move(labels)), facets_(std::move(facets)) {
  std::vector<VertexId> vs;
  for (const auto& f : facets_) {
    dim_ = std::max(dim_, f.dim());
    vs.insert(vs.end(), f.begin(), f.end());
  }
  vertices_ = make_vertex_set(std::move(vs));
  cache_ = std::make_shared<SkeletonCache>();
  cache_->skeleta.resize(static_cast<std::size_t>(dim_ + 2));
}

SimplicialComplex SimplicialComplex::from_facets(const FacetLabels& facets) {
  if (facets.empty()) throw Error(ErrorKind::empty_complex, "facet list is empty");
  auto table = std::make_shared<LabelTable>();
  std::vector<Simplex> simplices;
  simplices.reserve(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto& tuple = facets[i];
    if (tuple.empty())
      throw Error(ErrorKind::malformed_facet, "facet " + std::to_string(i + 1) + " is empty");
    std::vector<VertexId> ids;
    for (const auto& label : tuple) ids.push_back(table->intern(label));
    Simplex s(ids);
    if (s.size() != tuple.size())
      throw Error(ErrorKind::malformed_facet,
                  "facet " + std::to_string(i + 1) + " repeats a vertex label");
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(table), reduce_to_antichain(std::move(simplices)));
}

SimplicialComplex SimplicialComplex::from_simplices(std::shared_ptr<const LabelTable> labels,
                                                    std::vector<Simplex> simplices) {
  for (const auto& s : simplices)
    for (VertexId v : s)
      if (v >= labels->size())
        throw Error(ErrorKind::unknown_vertex, "vertex id " + std::to_string(v) + " has no label");
  return SimplicialComplex(std::move(labels), reduce_to_antichain(std::move(simplices)));
}

SimplicialComplex SimplicialComplex::empty(std::shared_ptr<const LabelTable> labels) {
  return SimplicialComplex(std::move(labels), {});
}

std::vector<std::string> SimplicialComplex::labels_of(const Simplex& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(label(v));
  return out;
}

Simplex SimplicialComplex::simplex_of(const std::vector<std::string>& labels) const {
  return Simplex(vertex_set_of(labels));
}

VertexSet SimplicialComplex::vertex_set_of(const std::vector<std::string>& labels) const {
  std::vector<VertexId> ids;
  for (const auto& l : labels) {
    auto id = labels_->find(l);
    if (!id || !std::binary_search(vertices_.begin(), vertices_.end(), *id))
      throw Error(ErrorKind::unknown_vertex, "unknown vertex label '" + l + "'");
    ids.push_back(*id);
  }
  return make_vertex_set(std::move(ids));
}

const std::vector<Simplex>& SimplicialComplex::faces(int i) const {
  if (i < -1 || i > dim_)
    throw Error(ErrorKind::dimension, "face dimension " + std::to_string(i) +
                                          " outside [-1, " + std::to_string(dim_) + "]");
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->skeleta[static_cast<std::size_t>(i + 1)];
  if (!slot) {
    std::vector<Simplex> out;
    if (i == -1) {
      out.emplace_back();
    } else {
      for (const auto& f : facets_)
        for_each_subset(f, static_cast<std::size_t>(i + 1),
                        [&](Simplex s) { out.push_back(std::move(s)); });
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    slot = std::make_unique<const std::vector<Simplex>>(std::move(out));
  }
  return *slot;
}

std::optional<std::size_t> SimplicialComplex::face_index(const Simplex& s) const {
  if (s.dim() > dim_) return std::nullopt;
  const auto& fs = faces(s.dim());
  auto it = std::lower_bound(fs.begin(), fs.end(), s);
  if (it == fs.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - fs.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  return face_index(s).has_value();
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int i = 0; i <= dim_; ++i) f.push_back(faces(i).size());
  return f;
}

FacetLabels SimplicialComplex::canonical_labels() const {
  FacetLabels out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) {
    auto ls = labels_of(f);
    std::sort(ls.begin(), ls.end());
    out.push_back(std::move(ls));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.labels_ == b.labels_) return a.facets_ == b.facets_;
  return a.canonical_labels() == b.canonical_labels();
}

// ------------------------------------------------------------- operations

namespace {

void require_simplex(const SimplicialComplex& k, const Simplex& sigma) {
  if (!k.contains(sigma))
    throw Error(ErrorKind::missing_simplex, "simplex is not a face of the complex");
}

void require_vertices(const SimplicialComplex& k, const VertexSet& v) {
  const auto& k0 = k.vertices();
  for (VertexId x : v)
    if (!std::binary_search(k0.begin(), k0.end(), x))
      throw Error(ErrorKind::unknown_vertex,
                  "vertex id " + std::to_string(x) + " is not in the 0-skeleton");
}

bool meets(const Simplex& s, const VertexSet& v) {
  return std::any_of(s.begin(), s.end(),
                     [&](VertexId x) { return std::binary_search(v.begin(), v.end(), x); });
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma) {
  require_simplex(k, sigma);
  std::vector<Simplex> out;
  for (const auto& f : k.facets())
    if (sigma.is_face_of(f)) out.push_back(f.minus(sigma));
  return SimplicialComplex::from_simplices(k.label_table(), std::move(out));
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma) {
  require_simplex(k, sigma);
  std::vector<Simplex> out;
  for (const auto& f : k.facets())
    if (sigma.is_face_of(f)) out.push_back(f);
  return SimplicialComplex::from_simplices(k.label_table(), std::move(out));
}

std::vector<Simplex> open_star_support(const SimplicialComplex& k, const VertexSet& v) {
  require_vertices(k, v);
  std::vector<Simplex> out;
  for (int i = 0; i <= k.dim(); ++i)
    for (const auto& s : k.faces(i))
      if (meets(s, v)) out.push_back(s);
  return out;
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::shared_ptr<const LabelTable> table = k.label_table();
  std::vector<Simplex> lfacets;

  if (k.label_table() == l.label_table()) {
    for (VertexId x : l.vertices())
      if (std::binary_search(k.vertices().begin(), k.vertices().end(), x))
        throw Error(ErrorKind::join_collision, "vertex '" + k.label(x) + "' occurs in both complexes");
    lfacets = l.facets();
  } else {
    auto merged = std::make_shared<LabelTable>(k.labels());
    std::vector<VertexId> remap(l.labels().size());
    for (VertexId x : l.vertices()) {
      const auto& name = l.label(x);
      if (auto id = merged->find(name);
          id && std::binary_search(k.vertices().begin(), k.vertices().end(), *id))
        throw Error(ErrorKind::join_collision, "vertex '" + name + "' occurs in both complexes");
      remap[x] = merged->intern(name);
    }
    for (const auto& f : l.facets()) {
      std::vector<VertexId> ids;
      for (VertexId x : f) ids.push_back(remap[x]);
      lfacets.emplace_back(std::move(ids));
    }
    table = std::move(merged);
  }

  std::vector<Simplex> kf = k.facets();
  if (kf.empty()) kf.emplace_back();
  if (lfacets.empty()) lfacets.emplace_back();
  std::vector<Simplex> out;
  out.reserve(kf.size() * lfacets.size());
  for (const auto& a : kf)
    for (const auto& b : lfacets) out.push_back(a.unite(b));
  return SimplicialComplex::from_simplices(std::move(table), std::move(out));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const VertexSet& v) {
  require_vertices(k, v);
  Simplex span = Simplex::from_sorted(v);
  std::vector<Simplex> out;
  for (const auto& f : k.facets()) {
    Simplex s = f.intersect(span);
    if (!s.empty()) out.push_back(std::move(s));
  }
  return SimplicialComplex::from_simplices(k.label_table(), std::move(out));
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.label_table() != b.label_table())
    throw Error(ErrorKind::unsupported_input, "intersection needs complexes over one label table");
  std::vector<Simplex> out;
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) {
      Simplex s = f.intersect(g);
      if (!s.empty()) out.push_back(std::move(s));
    }
  return SimplicialComplex::from_simplices(a.label_table(), std::move(out));
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.label_table() != b.label_table())
    throw Error(ErrorKind::unsupported_input, "union needs complexes over one label table");
  std::vector<Simplex> out = a.facets();
  out.insert(out.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex::from_simplices(a.label_table(), std::move(out));
}

SimplicialComplex simplex_closure(std::shared_ptr<const LabelTable> labels, const Simplex& sigma) {
  std::vector<Simplex> out;
  if (!sigma.empty()) out.push_back(sigma);
  return SimplicialComplex::from_simplices(std::move(labels), std::move(out));
}

SimplicialComplex incremental_full_subcomplex(const SimplicialComplex& k, const VertexSet& v,
                                              VertexId added) {
  require_vertices(k, v);
  require_vertices(k, {added});
  if (std::binary_search(v.begin(), v.end(), added))
    throw Error(ErrorKind::redundant_vertex, "vertex '" + k.label(added) + "' is already in V");

  SimplicialComplex base = full_subcomplex(k, v);
  SimplicialComplex attaching = intersection(link(k, Simplex{added}), base);
  SimplicialComplex cone = join(simplex_closure(k.label_table(), Simplex{added}), attaching);
  return union_of(base, cone);
}

VertexSet complement(const SimplicialComplex& k, const VertexSet& v) {
  VertexSet out;
  std::set_difference(k.vertices().begin(), k.vertices().end(), v.begin(), v.end(),
                      std::back_inserter(out));
  return out;
}

bool is_connected(const SimplicialComplex& k) {
  if (k.is_empty()) return false;
  const auto& vs = k.vertices();
  std::vector<std::size_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto pos = [&](VertexId x) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
  };
  std::size_t components = vs.size();
  for (const auto& f : k.facets())
    for (std::size_t j = 1; j < f.size(); ++j) {
      auto a = find(pos(f[0]));
      auto b = find(pos(f[j]));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  return components == 1;
}

}  // namespace trikit
