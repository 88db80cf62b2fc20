#include "trikit/verify.hpp"

#include <algorithm>

#include "trikit/errors.hpp"
#include "trikit/parallel.hpp"
#include "trikit/pseudomanifold.hpp"

namespace trikit {

bool CheckReport::passed() const {
  return std::all_of(comparisons.begin(), comparisons.end(),
                     [](const GroupComparison& c) { return c.equal || c.flagged; });
}

bool LocalHomologySweep::all_spheres() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const LocalHomologyReport& r) { return r.homology_sphere; });
}

namespace {

GroupComparison compare(std::string kind, int left_dim, int right_dim, Coefficients ring,
                        const Group& left, const Group& right) {
  GroupComparison c;
  c.kind = std::move(kind);
  c.left_dim = left_dim;
  c.right_dim = right_dim;
  c.ring = ring;
  c.left = left;
  c.right = right;
  c.equal = left == right;
  return c;
}

}  // namespace

CheckReport complement_homology_check(const SimplicialComplex& k, const VertexSet& v) {
  require_closed_pseudomanifold(k);
  const int d = k.dim();
  const Simplex span = Simplex::from_sorted(make_vertex_set(v));
  if (span.dim() != d || !std::binary_search(k.facets().begin(), k.facets().end(), span))
    throw Error(ErrorKind::hypothesis,
                "vertex set does not span a " + std::to_string(d) + "-simplex of the complex");

  const bool orientable = orientability(k) == Orientability::orientable;
  const SimplicialComplex rest = full_subcomplex(k, complement(k, make_vertex_set(v)));

  const Coefficients z = Coefficients::integers();
  const Coefficients z2 = Coefficients::mod(2);
  const HomologyProfile hk = homology(k, z);
  const HomologyProfile hr = homology(rest, z);
  const HomologyProfile ck = cohomology(k, z);
  const HomologyProfile cr = cohomology(rest, z);

  CheckReport report;
  report.check = "complement-homology";
  report.notes.push_back(orientable ? "complex is orientable" : "complex is non-orientable");
  for (int i = 0; i < d; ++i) {
    if (!orientable && i == d - 1) {
      report.comparisons.push_back(compare("homology", i, i, z2, homology(rest, z2).at(i),
                                           homology(k, z2).at(i)));
    } else {
      report.comparisons.push_back(compare("homology", i, i, z, hr.at(i), hk.at(i)));
    }
    auto co = compare("cohomology", i, i, z, cr.at(i), ck.at(i));
    if (!orientable && i == d - 1 && !co.equal) {
      co.flagged = true;
      report.notes.push_back("cohomology mismatch in dimension " + std::to_string(i) +
                             " flagged (non-orientable, integral coefficients)");
    }
    report.comparisons.push_back(std::move(co));
  }
  return report;
}

CheckReport alexander_duality_check(const CertifiedSphere& sphere, const VertexSet& v) {
  const SimplicialComplex& s = sphere.complex();
  const VertexSet inside = make_vertex_set(v);
  const VertexSet outside = complement(s, inside);
  const SimplicialComplex left = full_subcomplex(s, inside);
  const SimplicialComplex right = full_subcomplex(s, outside);
  const Coefficients z = Coefficients::integers();
  const HomologyProfile h = homology(left, z);
  const HomologyProfile c = cohomology(right, z);

  CheckReport report;
  report.check = "alexander-duality";
  report.notes.push_back("sphere certified by " + sphere.method());
  const int n = s.dim();
  for (int i = -1; i <= n; ++i)
    report.comparisons.push_back(
        compare("homology/cohomology", i, n - i - 1, z, h.at(i), c.at(n - i - 1)));
  return report;
}

CheckReport alexander_duality_check(const SimplicialComplex& s, const VertexSet& v) {
  auto certified = certify_sphere(s);
  if (!certified)
    throw Error(ErrorKind::unsupported_input, "complex could not be certified as a sphere");
  return alexander_duality_check(*certified, v);
}

namespace {

LocalHomologyReport link_report(const SimplicialComplex& k, const Simplex& sigma) {
  LocalHomologyReport r;
  r.simplex = sigma;
  r.link_dim = k.dim() - sigma.dim() - 1;
  const SimplicialComplex lk = link(k, sigma);
  r.link_vertices = lk.num_vertices();
  r.link_homology = homology(lk, Coefficients::integers());
  r.homology_sphere = has_sphere_homology(r.link_homology, r.link_dim);
  return r;
}

}  // namespace

LocalHomologyReport local_homology_check(const SimplicialComplex& k, const Simplex& sigma) {
  require_closed_pseudomanifold(k);
  if (sigma.empty() || !k.contains(sigma))
    throw Error(ErrorKind::missing_simplex, "simplex is not a nonempty face of the complex");
  return link_report(k, sigma);
}

LocalHomologySweep local_homology_sweep(const SimplicialComplex& k, unsigned threads) {
  require_closed_pseudomanifold(k);
  std::vector<Simplex> all;
  for (int i = 0; i <= k.dim(); ++i)
    all.insert(all.end(), k.faces(i).begin(), k.faces(i).end());
  LocalHomologySweep sweep;
  sweep.reports.resize(all.size());
  parallel_for(all.size(), threads,
               [&](std::size_t i) { sweep.reports[i] = link_report(k, all[i]); });
  return sweep;
}

}  // namespace trikit
