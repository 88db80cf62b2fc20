#include "trikit/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "trikit/errors.hpp"
#include "trikit/presentation.hpp"
#include "trikit/pseudomanifold.hpp"

namespace trikit {

std::string_view to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::verified: return "verified";
    case HypothesisStatus::asserted: return "asserted";
    case HypothesisStatus::unverified: return "unverified";
    case HypothesisStatus::failed: return "failed";
  }
  return "?";
}

bool BoundReport::hypotheses_verified() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const Hypothesis& h) { return h.status == HypothesisStatus::verified; });
}

namespace {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt c = 1;
  for (long long j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

void clamp_to_floor(BoundReport& r) {
  if (!r.bound || !r.lower_bound) return;
  const long long floor = r.d + 2;
  if (*r.bound < floor) {
    r.values["unclamped_bound"] = *r.bound;
    r.bound = floor;
    r.flags.push_back("floor d+2 binds");
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::hypothesis, what);
}

}  // namespace

long long wedge_covering_type(long long r, int i) {
  if (r == 0) throw Error(ErrorKind::degenerate_input, "r = 0: contractible, covering type 1 by convention");
  require(r > 0, "r must be positive");
  require(i >= 1, "i must be at least 1");
  long long n = 1;
  while (binomial(n - 1, i + 1) < r) ++n;
  return n;
}

long long ct_lower_bound_from_hdim(int k, bool homology_is_spherical) {
  require(k >= 1, "homological dimension must be at least 1");
  return homology_is_spherical ? k + 2 : k + 3;
}

long long cat_vertex_bound(int d, int cat) {
  require(d >= 1 && cat >= 1, "d and cat must be at least 1");
  return 1 + d + static_cast<long long>(cat) * (cat - 1) / 2;
}

long long sphere_recognition_threshold(int d) { return 3LL * d / 2 + 2; }

BoundReport simply_connected_bound(int d, int i, long long rank) {
  require(d >= 2, "d must be at least 2");
  require(i >= 1, "i must be at least 1");
  require(2 * i <= d, "i must not exceed d/2");
  require(rank >= 1, "rank of H_i must be at least 1");
  BoundReport r;
  r.d = d;
  r.hypotheses = {{"simply connected", "true", HypothesisStatus::asserted},
                  {"d", std::to_string(d), HypothesisStatus::verified},
                  {"i", std::to_string(i), HypothesisStatus::verified},
                  {"rank H_i", std::to_string(rank), HypothesisStatus::verified}};
  r.values["sphere_threshold"] = sphere_recognition_threshold(d);
  if (2 * i == d) {
    r.tag = "simply-connected-middle-dimension";
    long long k = 1;
    while (binomial(i + k, i + 1) < rank) ++k;
    r.values["k"] = k;
    r.bound = 3LL * d / 2 + k + 2;
    const bool adams_dimension = d == 2 || d == 4 || d == 8 || d == 16;
    if (k == 1 && !adams_dimension) {
      r.values["raw_bound"] = *r.bound;
      r.values["adams_adjusted_bound"] = 3LL * d / 2 + 2 + 2;
      r.flags.push_back("k = 1 requires d in {2,4,8,16}; adjusted bound uses k = 2");
    }
  } else {
    r.tag = "simply-connected";
    r.bound = 2LL * d - i + 4;
  }
  std::ostringstream v;
  v << "at least " << *r.bound << " vertices";
  r.verdict = v.str();
  clamp_to_floor(r);
  return r;
}

BoundReport nonfree_pi1_bound(int d) {
  require(d >= 3, "requires d >= 3");
  BoundReport r;
  r.tag = "nonfree-pi1";
  r.d = d;
  r.hypotheses = {{"pi1 not free", "true", HypothesisStatus::asserted},
                  {"d", std::to_string(d), HypothesisStatus::verified}};
  r.bound = 3LL * d + 1;
  r.values["free_pi1_baseline"] = 2LL * d + 3;
  r.verdict = "at least " + std::to_string(*r.bound) + " vertices (free or trivial pi1 baseline " +
              std::to_string(2LL * d + 3) + ")";
  r.flags.push_back("3d+1 is attained in some dimensions");
  clamp_to_floor(r);
  return r;
}

BoundReport homology_sphere_verdict(const SimplicialComplex& k, Coefficients coeff,
                                    unsigned threads) {
  require_closed_pseudomanifold(k);
  const int d = k.dim();
  const auto n = static_cast<long long>(k.num_vertices());
  BoundReport r;
  r.tag = "homology-sphere";
  r.d = d;
  r.lower_bound = false;
  r.bound = 3LL * d;
  r.values["vertices"] = n;

  if (d <= 2) {
    const bool sphere = recognize_low_dimensional_sphere(k, d);
    r.hypotheses = {{"exact recognition", sphere ? "sphere" : "not a sphere",
                     sphere ? HypothesisStatus::verified : HypothesisStatus::failed}};
    r.verdict = sphere ? "PL-sphere" : "no verdict: not a " + std::to_string(d) + "-sphere";
    return r;
  }

  const bool hs = is_homology_sphere(k, d, coeff);
  r.hypotheses.push_back({coeff.name() + "-homology sphere", hs ? "true" : "false",
                          hs ? HypothesisStatus::verified : HypothesisStatus::failed});
  if (!hs) {
    r.verdict = "no verdict: not a " + coeff.name() + "-homology sphere";
    return r;
  }
  r.hypotheses.push_back({"at most 3d vertices", std::to_string(n),
                          n <= 3LL * d ? HypothesisStatus::verified : HypothesisStatus::failed});
  if (n > 3LL * d) {
    r.verdict = "no verdict: " + std::to_string(n) + " vertices exceed 3d = " + std::to_string(3 * d);
    return r;
  }
  const CombinatorialityCertificate cert = small_link_certificate(k, threads);
  switch (cert.verdict) {
    case CertificateVerdict::certified:
      r.hypotheses.push_back({"combinatorial manifold", "CERTIFIED", HypothesisStatus::verified});
      r.verdict = "PL-sphere";
      break;
    case CertificateVerdict::inconclusive:
      r.hypotheses.push_back({"combinatorial manifold", "INCONCLUSIVE", HypothesisStatus::unverified});
      r.conditional = true;
      r.verdict = "PL-sphere if the complex is a combinatorial manifold";
      break;
    case CertificateVerdict::rejected:
      r.hypotheses.push_back({"combinatorial manifold", "REJECTED", HypothesisStatus::failed});
      r.verdict = "no verdict: " + cert.reason;
      break;
  }
  return r;
}

Assertions parse_assertions(const std::string& text) {
  Assertions a;
  std::istringstream in(text);
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    auto fail = [&](const std::string& what) {
      throw Error(ErrorKind::parse, "line " + std::to_string(number) + ": " + what);
    };
    if (eq == std::string::npos) fail("expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "pi1") {
      if (value == "not-free") a.pi1 = Pi1Assertion::not_free;
      else if (value == "free") a.pi1 = Pi1Assertion::free;
      else if (value == "trivial") a.pi1 = Pi1Assertion::trivial;
      else fail("pi1 must be not-free, free or trivial");
    } else if (key == "simply-connected") {
      if (value == "true") a.pi1 = Pi1Assertion::trivial;
      else if (value != "false") fail("simply-connected must be true or false");
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  return a;
}

// ------------------------------------------------------------------ analyze

namespace {

struct Pi1Status {
  std::string value;  // trivial, free, not-free, unknown
  HypothesisStatus status = HypothesisStatus::unverified;
};

Pi1Status pi1_status(const std::optional<FreenessVerdict>& v, const Assertions& a,
                     std::vector<std::string>& notes) {
  Pi1Status s{"unknown", HypothesisStatus::unverified};
  if (v) {
    if (v->kind == FreenessKind::free)
      s = {v->free_rank == 0 ? "trivial" : "free", HypothesisStatus::verified};
    else if (v->kind == FreenessKind::not_free)
      s = {"not-free", HypothesisStatus::verified};
  }
  if (a.pi1 == Pi1Assertion::none) return s;
  const std::string asserted = a.pi1 == Pi1Assertion::trivial ? "trivial"
                               : a.pi1 == Pi1Assertion::free  ? "free"
                                                              : "not-free";
  if (s.status == HypothesisStatus::verified) {
    const bool agrees = asserted == s.value || (asserted == "free" && s.value == "trivial");
    if (!agrees) notes.push_back("assertion pi1=" + asserted + " contradicts computed " + s.value);
    return s;
  }
  return {asserted, HypothesisStatus::asserted};
}

}  // namespace

Analysis analyze(const SimplicialComplex& k, const Assertions& assertions,
                 const AnalyzeOptions& options) {
  require_closed_pseudomanifold(k);
  Analysis a;
  a.dim = k.dim();
  a.vertices = k.num_vertices();
  const int d = a.dim;
  const auto n = static_cast<long long>(a.vertices);
  a.homology = homology(k, Coefficients::integers());

  FreenessOptions fo = options.freeness;
  fo.threads = options.threads;
  a.pi1 = freeness_verdict(edge_path_presentation(k), fo);
  a.certificate = small_link_certificate(k, options.threads);

  std::vector<std::string> notes;
  const Pi1Status pi1 = pi1_status(a.pi1, assertions, notes);
  const bool manifold = a.certificate->verdict == CertificateVerdict::certified;
  const Hypothesis manifold_hyp{"combinatorial manifold", std::string(to_string(a.certificate->verdict)),
                                manifold ? HypothesisStatus::verified
                                : a.certificate->verdict == CertificateVerdict::rejected
                                    ? HypothesisStatus::failed
                                    : HypothesisStatus::unverified};
  const Hypothesis pi1_hyp{"pi1", pi1.value, pi1.status};
  auto finish = [&](BoundReport& r) {
    r.conditional = r.conditional ||
                    std::any_of(r.hypotheses.begin(), r.hypotheses.end(), [](const Hypothesis& h) {
                      return h.status == HypothesisStatus::unverified;
                    });
    for (const auto& note : notes) r.flags.push_back(note);
    a.reports.push_back(std::move(r));
  };

  // Homological dimension.
  {
    int top = -1;
    for (int i = a.homology.last_dim(); i >= 0; --i)
      if (!a.homology.at(i).is_zero()) {
        top = i;
        break;
      }
    BoundReport r;
    r.tag = "homological-dimension";
    r.d = d;
    if (top >= 1) {
      const bool spherical = has_sphere_homology(a.homology, top);
      r.hypotheses = {{"top nonzero reduced homology", std::to_string(top), HypothesisStatus::verified},
                      {"spherical homology", spherical ? "true" : "false", HypothesisStatus::verified}};
      r.bound = ct_lower_bound_from_hdim(top, spherical);
      r.verdict = "at least " + std::to_string(*r.bound) + " vertices";
      clamp_to_floor(r);
    } else {
      r.applicable = false;
      r.verdict = "not applicable: reduced homology vanishes above dimension 0";
    }
    for (int i = 1; i <= a.homology.last_dim(); ++i)
      if (!a.homology.at(i).torsion.empty())
        r.flags.push_back("torsion in H_" + std::to_string(i) + ": " +
                          a.homology.at(i).to_string(a.homology.ring));
    finish(r);
  }

  // Non-free fundamental group.
  {
    BoundReport r;
    r.tag = "nonfree-pi1";
    r.d = d;
    r.hypotheses = {manifold_hyp, pi1_hyp};
    if (d < 3) {
      r.applicable = false;
      r.verdict = "not applicable: requires d >= 3";
    } else {
      BoundReport base = nonfree_pi1_bound(d);
      r.bound = base.bound;
      r.values = base.values;
      if (pi1.value == "not-free") {
        r.verdict = base.verdict;
      } else {
        r.applicable = false;
        r.verdict = pi1.value == "unknown" ? "suppressed: pi1 freeness undetermined"
                                           : "not applicable: pi1 is " + pi1.value;
      }
    }
    finish(r);

    if (d >= 3 && n < 3LL * d + 1) {
      BoundReport c;
      c.tag = "nonfree-pi1-contrapositive";
      c.d = d;
      c.lower_bound = false;
      c.bound = 3LL * d + 1;
      c.values["vertices"] = n;
      c.hypotheses = {manifold_hyp,
                      {"vertices below 3d+1", std::to_string(n), HypothesisStatus::verified}};
      c.verdict = std::to_string(n) + " < " + std::to_string(3 * d + 1) + ": pi1 must be free";
      if (pi1.value == "not-free") c.flags.push_back("contradiction: pi1 reported not free");
      else if (pi1.status == HypothesisStatus::verified)
        c.flags.push_back("consistent: pi1 computed " + pi1.value);
      finish(c);
    }
  }

  // Simply connected bounds.
  {
    const bool nontrivial_pi1 = pi1.value == "free" || pi1.value == "not-free";
    bool any = false;
    for (int i = 1; d >= 2 && 2 * i <= d; ++i) {
      const std::size_t rank = a.homology.at(i).betti;
      if (rank == 0) continue;
      any = true;
      BoundReport r = simply_connected_bound(d, i, static_cast<long long>(rank));
      r.hypotheses[0] = {"simply connected", pi1.value, pi1.status};
      r.hypotheses.insert(r.hypotheses.begin(), manifold_hyp);
      if (nontrivial_pi1) {
        r.applicable = false;
        r.verdict = "not applicable: pi1 is " + pi1.value;
        r.hypotheses[1].status = HypothesisStatus::failed;
      }
      finish(r);
    }
    if (d >= 2 && !any) {
      BoundReport r;
      r.tag = "sphere-threshold";
      r.d = d;
      r.lower_bound = false;
      r.bound = sphere_recognition_threshold(d);
      r.values["vertices"] = n;
      r.hypotheses = {manifold_hyp, {"simply connected", pi1.value, pi1.status}};
      if (nontrivial_pi1) {
        r.applicable = false;
        r.hypotheses[1].status = HypothesisStatus::failed;
        r.verdict = "not applicable: pi1 is " + pi1.value;
      } else if (n <= *r.bound) {
        r.verdict = std::to_string(n) + " vertices <= " + std::to_string(*r.bound) +
                    ": represents the " + std::to_string(d) + "-sphere";
      } else {
        r.verdict = "vertex count above the sphere threshold";
      }
      finish(r);
    }
  }

  BoundReport hs = homology_sphere_verdict(k, Coefficients::integers(), options.threads);
  finish(hs);

  for (const BoundReport& r : a.reports) {
    if (!r.applicable || !r.lower_bound || !r.bound) continue;
    if (*r.bound <= n) continue;
    a.contradictions.push_back(r.tag + ": bound " + std::to_string(*r.bound) + " exceeds " +
                               std::to_string(n) + " vertices; " +
                               (r.hypotheses_verified() ? "verified hypotheses are inconsistent"
                                                        : "some hypothesis must be false"));
  }
  return a;
}

}  // namespace trikit
