#include "trikit/homology.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "trikit/errors.hpp"
#include "trikit/pseudomanifold.hpp"

namespace trikit {

// ------------------------------------------------------------ Coefficients

Coefficients Coefficients::mod(std::uint32_t p) {
  if (!is_prime(p))
    throw Error(ErrorKind::invalid_coefficient, std::to_string(p) + " is not prime");
  return Coefficients(p);
}

Coefficients Coefficients::parse(std::string_view name) {
  std::string s;
  for (char c : name)
    if (c != '_') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "z") return integers();
  std::string_view digits = s;
  if (digits.starts_with("zp")) digits.remove_prefix(2);
  else if (digits.starts_with("z")) digits.remove_prefix(1);
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw Error(ErrorKind::invalid_coefficient, "unrecognized coefficient ring '" +
                                                    std::string(name) + "'");
  return mod(p);
}

std::string Coefficients::name() const {
  return prime_ == 0 ? "Z" : "Z_" + std::to_string(prime_);
}

// ------------------------------------------------------------------- Group

std::string Group::to_string(const Coefficients& ring) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (betti > 0) {
    out << ring.name();
    if (betti > 1) out << '^' << betti;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) out << " + ";
    out << "Z_" << t;
    first = false;
  }
  return out.str();
}

const Group& HomologyProfile::at(int i) const {
  static const Group zero{};
  int j = i - first_dim;
  if (j < 0 || j >= static_cast<int>(groups.size())) return zero;
  return groups[static_cast<std::size_t>(j)];
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
  if (a.ring != b.ring || a.reduced != b.reduced || a.cohomology != b.cohomology) return false;
  int lo = std::min(a.first_dim, b.first_dim);
  int hi = std::max(a.last_dim(), b.last_dim());
  for (int i = lo; i <= hi; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

// --------------------------------------------------------- chain complex

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int i, Chains chains) {
  if (i < 0 || i > k.dim())
    throw Error(ErrorKind::dimension, "boundary dimension " + std::to_string(i) +
                                          " outside [0, " + std::to_string(k.dim()) + "]");
  BoundaryMatrix b;
  b.dim = i;
  const auto& cols = k.faces(i);
  b.matrix.cols = cols.size();
  b.matrix.columns.resize(cols.size());
  if (i == 0) {
    b.matrix.rows = chains == Chains::reduced ? 1 : 0;
    if (chains == Chains::reduced)
      for (auto& c : b.matrix.columns) c.emplace_back(0, 1);
    return b;
  }
  b.matrix.rows = k.faces(i - 1).size();
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto& col = b.matrix.columns[c];
    for (std::size_t j = 0; j < cols[c].size(); ++j) {
      auto row = k.face_index(cols[c].without_index(j));
      col.emplace_back(*row, (j % 2 == 0) ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
  }
  return b;
}

namespace {

struct RankData {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};

RankData analyze(const SparseColumns& m, const Coefficients& coeff) {
  RankData r;
  if (m.rows == 0 || m.cols == 0) return r;
  if (coeff.is_integral()) {
    SnfResult snf = smith_normal_form(m);
    r.rank = snf.rank();
    r.torsion = snf.torsion();
  } else {
    r.rank = rank_mod_p(m, coeff.prime());
  }
  return r;
}

// Shared driver. For homology, data[i] describes ∂_i and torsion of H_{i-1}
// comes from it; for cohomology we use δ^{i-1} = ∂_i^T and its torsion lands
// in H^i.
HomologyProfile compute(const SimplicialComplex& k, Coefficients coeff, Chains chains,
                        bool co) {
  HomologyProfile p;
  p.ring = coeff;
  p.reduced = chains == Chains::reduced;
  p.cohomology = co;
  p.first_dim = p.reduced ? -1 : 0;
  const int top = k.dim();
  if (top < p.first_dim) return p;

  auto count = [&](int i) -> std::size_t {
    if (i < p.first_dim || i > top) return 0;
    if (i == -1) return 1;
    return k.faces(i).size();
  };

  // data[i - first_dim] describes the map between dimensions i and i-1.
  std::vector<RankData> data(static_cast<std::size_t>(top - p.first_dim + 2));
  for (int i = std::max(0, p.first_dim + 1); i <= top; ++i) {
    const SparseColumns m = boundary_matrix(k, i, chains).matrix;
    data[static_cast<std::size_t>(i - p.first_dim)] = analyze(co ? m.transposed() : m, coeff);
  }
  auto between = [&](int i) -> const RankData& {
    static const RankData none{};
    int j = i - p.first_dim;
    if (j <= 0 || j >= static_cast<int>(data.size())) return none;
    return data[static_cast<std::size_t>(j)];
  };

  for (int i = p.first_dim; i <= top; ++i) {
    Group g;
    g.betti = count(i) - between(i).rank - between(i + 1).rank;
    g.torsion = co ? between(i).torsion : between(i + 1).torsion;
    p.groups.push_back(std::move(g));
  }
  return p;
}

}  // namespace

HomologyProfile homology(const SimplicialComplex& k, Coefficients coeff, Chains chains) {
  return compute(k, coeff, chains, false);
}

HomologyProfile cohomology(const SimplicialComplex& k, Coefficients coeff, Chains chains) {
  HomologyProfile co = compute(k, coeff, chains, true);
  if (coeff.is_integral()) {
    HomologyProfile h = compute(k, coeff, chains, false);
    if (!satisfies_universal_coefficients(h, co))
      throw std::logic_error("cohomology violates the universal coefficient relation");
  }
  return co;
}

bool satisfies_universal_coefficients(const HomologyProfile& h, const HomologyProfile& co) {
  int lo = std::min(h.first_dim, co.first_dim);
  int hi = std::max(h.last_dim(), co.last_dim());
  for (int i = lo; i <= hi; ++i) {
    if (h.at(i).betti != co.at(i).betti) return false;
    if (co.at(i).torsion != h.at(i - 1).torsion) return false;
  }
  return true;
}

bool has_sphere_homology(const HomologyProfile& p, int k) {
  int lo = std::min(p.first_dim, k);
  int hi = std::max(p.last_dim(), k);
  for (int i = lo; i <= hi; ++i) {
    const Group& g = p.at(i);
    if (i == k ? !g.is_ring() : !g.is_zero()) return false;
  }
  return true;
}

bool has_sphere_homology(const SimplicialComplex& k, int sphere_dim, Coefficients coeff) {
  if (k.dim() != sphere_dim) return false;
  return has_sphere_homology(homology(k, coeff, Chains::reduced), sphere_dim);
}

bool is_homology_sphere(const SimplicialComplex& k, int d, Coefficients coeff) {
  require_closed_pseudomanifold(k);
  if (k.dim() != d)
    throw Error(ErrorKind::dimension, "complex has dimension " + std::to_string(k.dim()) +
                                          ", expected " + std::to_string(d));
  return has_sphere_homology(homology(k, coeff, Chains::reduced), d);
}

long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  for (int i = 0; i <= k.dim(); ++i) {
    auto f = static_cast<long long>(k.faces(i).size());
    chi += (i % 2 == 0) ? f : -f;
  }
  return chi;
}

long long euler_characteristic(const HomologyProfile& p) {
  long long chi = 0;
  for (int i = std::max(0, p.first_dim); i <= p.last_dim(); ++i) {
    auto b = static_cast<long long>(p.at(i).betti);
    chi += (i % 2 == 0) ? b : -b;
  }
  // A reduced profile lacks the free summand of H_0.
  if (p.reduced && p.at(-1).is_zero() && p.last_dim() >= 0) chi += 1;
  return chi;
}

}  // namespace trikit
