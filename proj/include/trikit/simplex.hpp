#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace trikit {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free tuple of vertex ids. The empty simplex has
/// dimension -1.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<VertexId> vs) : v_(vs) { normalize(); }
  explicit Simplex(std::vector<VertexId> vs) : v_(std::move(vs)) { normalize(); }

  // Caller guarantees strictly increasing input.
  static Simplex from_sorted(std::vector<VertexId> vs) {
    Simplex s;
    s.v_ = std::move(vs);
    return s;
  }

  int dim() const noexcept { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }

  std::span<const VertexId> vertices() const noexcept { return v_; }
  VertexId operator[](std::size_t i) const noexcept { return v_[i]; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  bool contains(VertexId v) const {
    return std::binary_search(v_.begin(), v_.end(), v);
  }
  bool is_face_of(const Simplex& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
  }
  bool disjoint_from(const Simplex& other) const;

  /// Codimension-one face obtained by deleting the vertex at position i.
  Simplex without_index(std::size_t i) const;
  Simplex without(VertexId v) const;
  Simplex with(VertexId v) const;

  Simplex unite(const Simplex& other) const;
  Simplex intersect(const Simplex& other) const;
  Simplex minus(const Simplex& other) const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  void normalize();
  std::vector<VertexId> v_;
};

/// Sorted duplicate-free vertex list, used for full subcomplexes and partitions.
using VertexSet = std::vector<VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> vs);

}  // namespace trikit
