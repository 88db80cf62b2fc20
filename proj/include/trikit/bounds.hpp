#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trikit/combinatoriality.hpp"
#include "trikit/complex.hpp"
#include "trikit/freeness.hpp"
#include "trikit/homology.hpp"

namespace trikit {

enum class HypothesisStatus { verified, asserted, unverified, failed };

std::string_view to_string(HypothesisStatus s);

struct Hypothesis {
  std::string name;
  std::string value;
  HypothesisStatus status = HypothesisStatus::unverified;
};

/// One evaluated vertex-count statement.
struct BoundReport {
  std::string tag;
  int d = 0;
  std::vector<Hypothesis> hypotheses;
  /// Vertex count. For lower bounds: every triangulation satisfying the
  /// hypotheses has at least this many vertices. Otherwise a threshold.
  std::optional<long long> bound;
  bool lower_bound = true;
  /// Auxiliary integers (k, baseline, raw and adjusted bounds, thresholds).
  std::map<std::string, long long> values;
  std::string verdict;
  bool applicable = true;
  /// Some hypothesis is neither verified nor asserted.
  bool conditional = false;
  std::vector<std::string> flags;

  bool hypotheses_verified() const;
};

/// Minimal n with C(n-1, i+1) >= r. Throws degenerate_input for r = 0 and
/// hypothesis for i < 1.
long long wedge_covering_type(long long r, int i);

/// k+2 when the homology is that of S^k, k+3 otherwise. Requires k >= 1.
long long ct_lower_bound_from_hdim(int k, bool homology_is_spherical);

/// 1 + d + cat(cat-1)/2. Requires d, cat >= 1.
long long cat_vertex_bound(int d, int cat);

/// ⌊3d/2⌋ + 2.
long long sphere_recognition_threshold(int d);

/// Simply connected closed d-manifold with H_i of rank `rank`.
/// Middle dimension (d even, i = d/2): 3d/2 + k + 2 with k minimal such that
/// C(i+k, i+1) >= rank. k = 1 outside d ∈ {2,4,8,16} is reported raw with
/// the k = 2 value alongside. Otherwise 2d - i + 4. Throws hypothesis for
/// d < 2, i < 1, 2i > d or rank < 1.
BoundReport simply_connected_bound(int d, int i, long long rank);

/// 3d+1 for closed d-manifolds with non-free π₁, with the 2d+3 baseline for
/// contrast. Throws hypothesis for d < 3.
BoundReport nonfree_pi1_bound(int d);

/// PL-sphere verdict for a homology sphere with at most 3d vertices. The
/// combinatorial-manifold hypothesis is verified by the small-link
/// certificate (exact recognition for d <= 2).
BoundReport homology_sphere_verdict(const SimplicialComplex& k,
                                    Coefficients coeff = Coefficients::integers(),
                                    unsigned threads = 1);

enum class Pi1Assertion { none, trivial, free, not_free };

struct Assertions {
  Pi1Assertion pi1 = Pi1Assertion::none;
};

/// key=value lines: `pi1=not-free|free|trivial`, `simply-connected=true|false`.
/// '#' starts a comment. Throws parse with a line number.
Assertions parse_assertions(const std::string& text);

struct AnalyzeOptions {
  unsigned threads = 1;
  FreenessOptions freeness;
};

struct Analysis {
  int dim = 0;
  std::size_t vertices = 0;
  HomologyProfile homology;
  std::optional<FreenessVerdict> pi1;
  std::optional<CombinatorialityCertificate> certificate;
  std::vector<BoundReport> reports;
  /// Applicable lower bounds exceeding the vertex count.
  std::vector<std::string> contradictions;
};

/// Runs homology, the π₁ verdict, the small-link certificate and every
/// applicable bound. Requires a closed pseudomanifold.
Analysis analyze(const SimplicialComplex& k, const Assertions& assertions = {},
                 const AnalyzeOptions& options = {});

}  // namespace trikit
