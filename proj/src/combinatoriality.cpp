#include "trikit/combinatoriality.hpp"

#include <map>

#include "trikit/bistellar.hpp"
#include "trikit/errors.hpp"
#include "trikit/homology.hpp"
#include "trikit/parallel.hpp"
#include "trikit/pseudomanifold.hpp"

namespace trikit {

std::string_view to_string(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::certified: return "CERTIFIED";
    case CertificateVerdict::inconclusive: return "INCONCLUSIVE";
    case CertificateVerdict::rejected: return "REJECTED";
  }
  return "?";
}

bool recognize_circle(const SimplicialComplex& k) {
  if (k.dim() != 1) throw Error(ErrorKind::dimension, "recognize_circle needs a 1-complex");
  std::map<VertexId, int> degree;
  for (const auto& f : k.facets()) {
    if (f.size() != 2) return false;
    ++degree[f[0]];
    ++degree[f[1]];
  }
  for (const auto& [v, deg] : degree)
    if (deg != 2) return false;
  return is_connected(k);
}

bool recognize_2sphere(const SimplicialComplex& k) {
  if (k.dim() != 2) throw Error(ErrorKind::dimension, "recognize_2sphere needs a 2-complex");
  if (!is_closed_pseudomanifold(k) || !is_connected(k)) return false;
  for (VertexId v : k.vertices()) {
    SimplicialComplex lk = link(k, Simplex{v});
    if (lk.dim() != 1 || !recognize_circle(lk)) return false;
  }
  return euler_characteristic(k) == 2;
}

bool recognize_low_dimensional_sphere(const SimplicialComplex& k, int sphere_dim) {
  if (sphere_dim > 2 || sphere_dim < -1)
    throw Error(ErrorKind::dimension, "exact recognition covers spheres of dimension <= 2");
  if (k.dim() != sphere_dim) return false;
  switch (sphere_dim) {
    case -1: return k.is_empty();
    case 0: return k.num_vertices() == 2;
    case 1: return recognize_circle(k);
    default: return recognize_2sphere(k);
  }
}

namespace {

struct LinkOutcome {
  std::size_t vertices = 0;
  bool size_ok = true;
  bool sphere_ok = true;
};

LinkOutcome check_link(const SimplicialComplex& k, const Simplex& sigma) {
  const int link_dim = k.dim() - sigma.dim() - 1;
  const SimplicialComplex lk = link(k, sigma);
  LinkOutcome out;
  out.vertices = lk.num_vertices();
  if (link_dim <= 2) {
    out.sphere_ok = recognize_low_dimensional_sphere(lk, link_dim);
  } else {
    out.size_ok = out.vertices <= static_cast<std::size_t>(3 * link_dim);
    out.sphere_ok = has_sphere_homology(lk, link_dim, Coefficients::integers());
  }
  return out;
}

}  // namespace

CombinatorialityCertificate small_link_certificate(const SimplicialComplex& k, unsigned threads) {
  require_closed_pseudomanifold(k);
  const int d = k.dim();

  std::vector<Simplex> simplices;
  for (int i = 0; i < d; ++i)
    simplices.insert(simplices.end(), k.faces(i).begin(), k.faces(i).end());
  std::vector<LinkOutcome> outcomes(simplices.size());
  parallel_for(simplices.size(), threads,
               [&](std::size_t i) { outcomes[i] = check_link(k, simplices[i]); });

  CombinatorialityCertificate cert;
  cert.dim = d;
  cert.levels.resize(static_cast<std::size_t>(d));
  for (int kk = 0; kk < d; ++kk) {
    auto& level = cert.levels[static_cast<std::size_t>(kk)];
    level.link_dim = kk;
    level.uses_recognizer = kk <= 2;
    if (kk >= 3) level.allowed_vertices = static_cast<std::size_t>(3 * kk);
  }

  std::optional<Simplex> first_failure;
  std::optional<Simplex> first_oversize;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const int kk = d - simplices[i].dim() - 1;
    auto& level = cert.levels[static_cast<std::size_t>(kk)];
    ++level.simplices_checked;
    level.max_link_vertices = std::max(level.max_link_vertices, outcomes[i].vertices);
    if (!outcomes[i].size_ok) {
      ++level.size_violations;
      if (!first_oversize) first_oversize = simplices[i];
    }
    if (!outcomes[i].sphere_ok) {
      ++level.sphere_failures;
      if (!first_failure) first_failure = simplices[i];
    }
  }

  if (first_failure) {
    cert.verdict = CertificateVerdict::rejected;
    cert.witness = first_failure;
    const int kk = d - first_failure->dim() - 1;
    cert.reason = kk <= 2 ? "link of dimension " + std::to_string(kk) + " is not a sphere"
                          : "link does not have the homology of S^" + std::to_string(kk);
  } else if (first_oversize) {
    cert.verdict = CertificateVerdict::inconclusive;
    cert.witness = first_oversize;
    const int kk = d - first_oversize->dim() - 1;
    cert.reason = "link of dimension " + std::to_string(kk) + " has more than " +
                  std::to_string(3 * kk) + " vertices";
  } else {
    cert.verdict = CertificateVerdict::certified;
    cert.reason = "every link is a sphere";
  }
  return cert;
}

std::optional<CertifiedSphere> certify_sphere(const SimplicialComplex& k,
                                              std::size_t bistellar_budget, std::uint64_t seed) {
  const int d = k.dim();
  if (d <= 2) {
    if (recognize_low_dimensional_sphere(k, d))
      return CertifiedSphere(k, "exact recognition in dimension " + std::to_string(d));
    return std::nullopt;
  }
  if (!is_closed_pseudomanifold(k) || !has_sphere_homology(k, d, Coefficients::integers()))
    return std::nullopt;

  auto cert = small_link_certificate(k);
  if (cert.verdict == CertificateVerdict::rejected) return std::nullopt;
  if (cert.verdict == CertificateVerdict::certified &&
      k.num_vertices() <= static_cast<std::size_t>(3 * d))
    return CertifiedSphere(k, "small-link certificate on a homology sphere with at most 3d vertices");

  BistellarOptions opts;
  opts.move_budget = bistellar_budget;
  opts.seed = seed;
  if (bistellar_sphere_heuristic(k, opts).outcome == BistellarOutcome::reduced_to_boundary_simplex)
    return CertifiedSphere(k, "bistellar reduction to the boundary of a simplex");
  return std::nullopt;
}

}  // namespace trikit
