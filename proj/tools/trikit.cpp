// Command-line front end for the trikit library.
//
// Exit codes: 0 success, 1 negative verdict, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "trikit/bounds.hpp"
#include "trikit/combinatoriality.hpp"
#include "trikit/errors.hpp"
#include "trikit/facet_io.hpp"
#include "trikit/fixtures.hpp"
#include "trikit/freeness.hpp"
#include "trikit/homology.hpp"
#include "trikit/presentation.hpp"
#include "trikit/pseudomanifold.hpp"
#include "trikit/report.hpp"
#include "trikit/verify.hpp"

namespace {

using namespace trikit;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Globals {
  bool json = false;
  unsigned threads = 1;
};

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

void print_profile(const HomologyProfile& p) {
  const char* name = p.cohomology ? "H^" : "H_";
  for (int i = p.first_dim; i <= p.last_dim(); ++i)
    std::cout << "  " << name << i << " = " << p.at(i).to_string(p.ring) << '\n';
}

void print_check(const CheckReport& r) {
  std::cout << r.check << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : r.comparisons) {
    std::cout << "  " << c.kind << " [" << c.ring.name() << "] " << c.left_dim << "/" << c.right_dim
              << ": " << c.left.to_string(c.ring) << " vs " << c.right.to_string(c.ring)
              << (c.equal ? "  ok" : c.flagged ? "  flagged" : "  MISMATCH") << '\n';
  }
  for (const auto& n : r.notes) std::cout << "  note: " << n << '\n';
}

int cmd_info(const Globals& g, const SimplicialComplex& k) {
  const auto f = k.f_vector();
  std::optional<PseudomanifoldReport> pm;
  std::optional<Orientability> orient;
  if (k.dim() >= 1) {
    pm = closed_pseudomanifold_report(k);
    if (pm->ok()) orient = orientability(k);
  }
  if (g.json) {
    Json out{{"dim", k.dim()}, {"vertices", k.num_vertices()}, {"facets", k.facets().size()},
             {"f_vector", f}, {"euler_characteristic", euler_characteristic(k)},
             {"connected", is_connected(k)}};
    if (pm) out["pseudomanifold"] = to_json(k, *pm);
    if (orient) out["orientable"] = *orient == Orientability::orientable;
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout << "dimension: " << k.dim() << "\nvertices: " << k.num_vertices()
            << "\nfacets: " << k.facets().size() << "\nf-vector: (";
  for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? ", " : "") << f[i];
  std::cout << ")\neuler characteristic: " << euler_characteristic(k)
            << "\nconnected: " << (is_connected(k) ? "yes" : "no") << '\n';
  if (pm) {
    std::cout << "pure: " << (pm->pure ? "yes" : "no")
              << "\nevery ridge in two facets: " << (pm->ridge_degree_two ? "yes" : "no")
              << "\nstrongly connected: " << (pm->strongly_connected ? "yes" : "no")
              << "\nclosed pseudomanifold: " << (pm->ok() ? "yes" : "no") << '\n';
    if (pm->bad_ridge) std::cout << "bad ridge: " << join_words(k.labels_of(*pm->bad_ridge)) << '\n';
  }
  if (orient)
    std::cout << "orientable: " << (*orient == Orientability::orientable ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_homology(const Globals& g, const SimplicialComplex& k, const std::string& coeff,
                 bool unreduced, bool co) {
  const Coefficients ring = Coefficients::parse(coeff);
  const Chains chains = unreduced ? Chains::unreduced : Chains::reduced;
  const HomologyProfile p = co ? cohomology(k, ring, chains) : homology(k, ring, chains);
  if (g.json) {
    std::cout << to_json(p).dump(2) << '\n';
  } else {
    std::cout << (unreduced ? "" : "reduced ") << (co ? "cohomology" : "homology") << " over "
              << ring.name() << ":\n";
    print_profile(p);
  }
  return kOk;
}

int cmd_links(const Globals& g, const SimplicialComplex& k) {
  const LocalHomologySweep sweep = local_homology_sweep(k, g.threads);
  if (g.json) {
    Json reports = Json::array();
    for (const auto& r : sweep.reports) reports.push_back(to_json(k, r));
    std::cout << Json{{"all_spheres", sweep.all_spheres()}, {"links", std::move(reports)}}.dump(2)
              << '\n';
  } else {
    for (const auto& r : sweep.reports) {
      std::cout << "[" << join_words(k.labels_of(r.simplex)) << "]  link dim " << r.link_dim
                << ", " << r.link_vertices << " vertices, "
                << (r.homology_sphere ? "homology sphere" : "NOT a homology sphere") << '\n';
    }
    std::cout << (sweep.all_spheres() ? "all links are homology spheres\n"
                                      : "some link is not a homology sphere\n");
  }
  return sweep.all_spheres() ? kOk : kNegative;
}

int cmd_pi1(const Globals& g, const SimplicialComplex& k, FreenessOptions options) {
  options.threads = g.threads;
  const GroupPresentation p = edge_path_presentation(k);
  const FreenessVerdict v = freeness_verdict(p, options);
  if (g.json) {
    std::cout << Json{{"presentation", to_json(p)}, {"freeness", to_json(v)},
                      {"certificate_valid", validate_certificate(v)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "presentation: " << p.to_string() << "\nsimplified: " << v.simplified.to_string()
              << "\nabelianization: " << v.abelianization.to_string(Coefficients::integers())
              << "\nverdict: " << v.to_string() << '\n';
    if (v.quotient) {
      std::cout << "quotient images (S_" << v.quotient->degree << "):\n";
      for (std::size_t i = 0; i < v.quotient->images.size(); ++i) {
        std::cout << "  x" << i + 1 << " ->";
        for (auto x : v.quotient->images[i]) std::cout << ' ' << int(x) + 1;
        std::cout << '\n';
      }
    }
    if (v.kind == FreenessKind::not_free)
      std::cout << "certificate valid: " << (validate_certificate(v) ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_bounds(const Globals& g, const SimplicialComplex& k, const std::string& assert_file) {
  Assertions assertions;
  if (!assert_file.empty()) {
    std::ifstream in(assert_file);
    if (!in) throw Error(ErrorKind::parse, "cannot open assertions file " + assert_file);
    std::stringstream buf;
    buf << in.rdbuf();
    assertions = parse_assertions(buf.str());
  }
  AnalyzeOptions options;
  options.threads = g.threads;
  const Analysis a = analyze(k, assertions, options);
  if (g.json) {
    std::cout << to_json(a).dump(2) << '\n';
  } else {
    std::cout << "d = " << a.dim << ", " << a.vertices << " vertices\n";
    print_profile(a.homology);
    if (a.pi1) std::cout << "pi1: " << a.pi1->to_string() << '\n';
    if (a.certificate)
      std::cout << "small-link certificate: " << to_string(a.certificate->verdict) << '\n';
    for (const auto& r : a.reports) {
      std::cout << "\n[" << r.tag << "]";
      if (r.bound) std::cout << (r.lower_bound ? " bound " : " threshold ") << *r.bound;
      if (!r.applicable) std::cout << " (not applicable)";
      if (r.conditional) std::cout << " (conditional)";
      std::cout << "\n  " << r.verdict << '\n';
      for (const auto& h : r.hypotheses)
        std::cout << "  hypothesis " << h.name << " = " << h.value << " [" << to_string(h.status)
                  << "]\n";
      for (const auto& [key, value] : r.values) std::cout << "  " << key << " = " << value << '\n';
      for (const auto& f : r.flags) std::cout << "  flag: " << f << '\n';
    }
    for (const auto& c : a.contradictions) std::cout << "\ncontradiction: " << c << '\n';
  }
  return a.contradictions.empty() ? kOk : kNegative;
}

int cmd_check_combinatorial(const Globals& g, const SimplicialComplex& k) {
  const CombinatorialityCertificate c = small_link_certificate(k, g.threads);
  if (g.json) {
    std::cout << to_json(k, c).dump(2) << '\n';
  } else {
    std::cout << to_string(c.verdict) << '\n';
    for (const auto& l : c.levels) {
      std::cout << "  links of dim " << l.link_dim << ": " << l.simplices_checked
                << " checked, max " << l.max_link_vertices << " vertices";
      if (l.allowed_vertices) std::cout << " (allowed " << *l.allowed_vertices << ")";
      if (l.uses_recognizer) std::cout << " (exact recognizer)";
      std::cout << ", " << l.sphere_failures << " sphere failures, " << l.size_violations
                << " size violations\n";
    }
    if (c.witness) std::cout << "witness: [" << join_words(k.labels_of(*c.witness)) << "]\n";
    if (!c.reason.empty()) std::cout << "reason: " << c.reason << '\n';
  }
  return c.verdict == CertificateVerdict::certified ? kOk : kNegative;
}

int cmd_verify(const Globals& g, const CheckReport& r) {
  if (g.json) std::cout << to_json(r).dump(2) << '\n';
  else print_check(r);
  return r.passed() ? kOk : kNegative;
}

int cmd_fixture(const std::string& name, std::optional<int> d, std::optional<int> n,
                const std::string& output) {
  const SimplicialComplex k = fixture(name, FixtureParams{d, n});
  const std::string header = "fixture " + name;
  if (output.empty() || output == "-") write_facets(std::cout, k, header);
  else write_facet_file(output, k, header);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trikit: simplicial complexes, homology, fundamental groups and vertex bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--threads", g.threads, "Worker threads for link sweeps and searches")
      ->check(CLI::Range(1u, 256u));

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Facet-list file")->required()->check(CLI::ExistingFile);
  };

  auto* info = app.add_subcommand("info", "f-vector, dimension, pseudomanifold and orientability");
  add_file(info);

  std::string coeff = "z";
  bool unreduced = false, reduced = false, co = false;
  auto* hom = app.add_subcommand("homology", "Homology or cohomology profile");
  add_file(hom);
  hom->add_option("--coeff", coeff, "Coefficients: z, z2, z3, ...");
  auto* red = hom->add_flag("--reduced", reduced, "Reduced homology (default)");
  hom->add_flag("--unreduced", unreduced, "Unreduced homology")->excludes(red);
  hom->add_flag("--cohomology", co, "Cohomology instead of homology");

  auto* links = app.add_subcommand("links", "Local homology of every simplex link");
  add_file(links);

  FreenessOptions fo;
  auto* pi1 = app.add_subcommand("pi1", "Edge-path presentation and freeness verdict");
  add_file(pi1);
  pi1->add_option("--tietze-budget", fo.tietze_budget, "Maximum Tietze moves");
  pi1->add_option("--search-budget", fo.search_budget, "Maximum quotient-search nodes");
  pi1->add_option("--max-degree", fo.max_degree, "Largest symmetric group tried")
      ->check(CLI::Range(2, 6));

  std::string assert_file;
  auto* bounds = app.add_subcommand("bounds", "Evaluate every applicable vertex bound");
  add_file(bounds);
  bounds->add_option("--assert", assert_file, "Assertions file (key=value lines)")
      ->check(CLI::ExistingFile);

  auto* comb = app.add_subcommand("check-combinatorial", "Small-link combinatoriality certificate");
  add_file(comb);

  std::string vertices;
  auto* dual = app.add_subcommand("verify-duality", "Alexander duality for a vertex partition");
  add_file(dual);
  dual->add_option("--vertices", vertices, "Space-separated vertex labels of V")->required();

  std::string facet;
  auto* comp = app.add_subcommand("verify-complement", "Complement homology against a facet");
  add_file(comp);
  comp->add_option("--facet", facet, "Space-separated vertex labels of a facet")->required();

  std::string name, output;
  std::optional<int> fd, fn;
  auto* fix = app.add_subcommand("fixture", "Write a built-in fixture as a facet file");
  fix->add_option("name", name, "Fixture name")
      ->required()
      ->check(CLI::IsMember(fixture_names()));
  fix->add_option("--d", fd, "Dimension parameter");
  fix->add_option("--n", fn, "Vertex-count parameter");
  fix->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  try {
    if (fix->parsed()) return cmd_fixture(name, fd, fn, output);
    const SimplicialComplex k = read_facet_file(file);
    if (info->parsed()) return cmd_info(g, k);
    if (hom->parsed()) return cmd_homology(g, k, coeff, unreduced, co);
    if (links->parsed()) return cmd_links(g, k);
    if (pi1->parsed()) return cmd_pi1(g, k, fo);
    if (bounds->parsed()) return cmd_bounds(g, k, assert_file);
    if (comb->parsed()) return cmd_check_combinatorial(g, k);
    if (dual->parsed())
      return cmd_verify(g, alexander_duality_check(k, k.vertex_set_of(split_labels(vertices))));
    if (comp->parsed())
      return cmd_verify(g, complement_homology_check(k, k.vertex_set_of(split_labels(facet))));
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
