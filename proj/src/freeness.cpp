#include "trikit/freeness.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>

#include "trikit/parallel.hpp"

namespace trikit {

std::string_view to_string(FreenessKind k) {
  switch (k) {
    case FreenessKind::free: return "FREE";
    case FreenessKind::not_free: return "NOT_FREE";
    case FreenessKind::unknown: return "UNKNOWN";
  }
  return "?";
}

std::string_view to_string(NonFreeReason r) {
  switch (r) {
    case NonFreeReason::none: return "none";
    case NonFreeReason::torsion_in_h1: return "torsion-in-H1";
    case NonFreeReason::perfect_nontrivial_quotient: return "perfect-and-nontrivial-quotient";
  }
  return "?";
}

std::string FreenessVerdict::to_string() const {
  std::ostringstream out;
  out << trikit::to_string(kind);
  if (kind == FreenessKind::free) out << '(' << free_rank << ')';
  if (kind == FreenessKind::not_free) {
    out << '(' << trikit::to_string(reason);
    if (reason == NonFreeReason::torsion_in_h1) {
      for (const auto& t : torsion) out << ", Z_" << t;
    } else if (quotient) {
      out << ", S_" << quotient->degree;
    }
    out << ')';
  }
  return out.str();
}

namespace {

Permutation identity(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

Permutation inverse_of(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

// One permutation per cycle type, with cycles on consecutive points.
std::vector<Permutation> cycle_type_representatives(int n) {
  std::vector<Permutation> reps;
  std::vector<int> parts;
  auto emit = [&] {
    Permutation p = identity(n);
    int start = 0;
    for (int len : parts) {
      for (int j = 0; j < len; ++j)
        p[static_cast<std::size_t>(start + j)] = static_cast<std::uint8_t>(start + (j + 1) % len);
      start += len;
    }
    reps.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return reps;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

class QuotientSearch {
 public:
  QuotientSearch(const GroupPresentation& p, int degree, std::size_t budget,
                 std::atomic<std::size_t>& nodes)
      : p_(p), degree_(degree), budget_(budget), nodes_(nodes), perms_(all_permutations(degree)) {
    due_.resize(p.generators);
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      std::size_t top = 0;
      for (Letter l : p.relators[r]) top = std::max(top, generator_of(l));
      due_[top].push_back(r);
    }
  }

  std::optional<QuotientCertificate> from(const Permutation& first) {
    std::vector<Permutation> images(p_.generators, identity(degree_));
    std::vector<Permutation> inverses = images;
    images[0] = first;
    inverses[0] = inverse_of(first);
    if (!relators_hold(0, images, inverses)) return std::nullopt;
    if (dfs(1, images, inverses)) return QuotientCertificate{degree_, images};
    return std::nullopt;
  }

  bool exhausted() const { return nodes_.load() >= budget_; }

 private:
  bool relators_hold(std::size_t g, const std::vector<Permutation>& images,
                     const std::vector<Permutation>& inverses) const {
    for (std::size_t r : due_[g]) {
      Permutation acc = identity(degree_);
      for (Letter l : p_.relators[r]) {
        const Permutation& step = l > 0 ? images[generator_of(l)] : inverses[generator_of(l)];
        for (auto& x : acc) x = step[x];
      }
      if (!is_identity(acc)) return false;
    }
    return true;
  }

  bool dfs(std::size_t g, std::vector<Permutation>& images, std::vector<Permutation>& inverses) {
    if (g == p_.generators)
      return std::any_of(images.begin(), images.end(),
                         [](const Permutation& q) { return !is_identity(q); });
    for (const Permutation& candidate : perms_) {
      if (nodes_.fetch_add(1) >= budget_) return false;
      images[g] = candidate;
      inverses[g] = inverse_of(candidate);
      if (relators_hold(g, images, inverses) && dfs(g + 1, images, inverses)) return true;
    }
    return false;
  }

  const GroupPresentation& p_;
  int degree_;
  std::size_t budget_;
  std::atomic<std::size_t>& nodes_;
  std::vector<Permutation> perms_;
  std::vector<std::vector<std::size_t>> due_;
};

}  // namespace

Permutation evaluate(const Word& w, const std::vector<Permutation>& images, int degree) {
  Permutation acc = identity(degree);
  for (Letter l : w) {
    const Permutation& g = images.at(generator_of(l));
    const Permutation step = l > 0 ? g : inverse_of(g);
    for (auto& x : acc) x = step[x];
  }
  return acc;
}

std::optional<QuotientCertificate> find_symmetric_quotient(const GroupPresentation& p,
                                                           int max_degree,
                                                           std::size_t node_budget,
                                                           unsigned threads,
                                                           std::size_t* nodes_used) {
  std::atomic<std::size_t> nodes{0};
  std::optional<QuotientCertificate> found;
  if (p.generators > 0) {
    for (int n = 2; n <= max_degree && !found; ++n) {
      QuotientSearch search(p, n, node_budget, nodes);
      const auto reps = cycle_type_representatives(n);
      std::vector<std::optional<QuotientCertificate>> results(reps.size());
      std::atomic<bool> done{false};
      parallel_for(reps.size(), threads, [&](std::size_t i) {
        if (done.load() || search.exhausted()) return;
        results[i] = search.from(reps[i]);
        if (results[i]) done.store(true);
      });
      for (auto& r : results)
        if (r) {
          found = std::move(r);
          break;
        }
      if (search.exhausted()) break;
    }
  }
  if (nodes_used) *nodes_used = std::min(nodes.load(), node_budget);
  return found;
}

bool validate_quotient(const GroupPresentation& p, const QuotientCertificate& q) {
  if (q.degree < 1 || q.images.size() != p.generators) return false;
  for (const Permutation& img : q.images) {
    if (img.size() != static_cast<std::size_t>(q.degree)) return false;
    Permutation sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity(q.degree)) return false;
  }
  for (const Word& r : p.relators)
    if (!is_identity(evaluate(r, q.images, q.degree))) return false;
  return std::any_of(q.images.begin(), q.images.end(),
                     [](const Permutation& img) { return !is_identity(img); });
}

bool validate_certificate(const FreenessVerdict& v) {
  if (v.kind != FreenessKind::not_free) return true;
  switch (v.reason) {
    case NonFreeReason::torsion_in_h1: {
      if (v.torsion.empty()) return false;
      IntMatrix m(v.presentation.relators.size(), v.presentation.generators);
      for (std::size_t r = 0; r < v.presentation.relators.size(); ++r)
        for (Letter l : v.presentation.relators[r]) m(r, generator_of(l)) += l > 0 ? 1 : -1;
      const auto factors = smith_normal_form(m).invariant_factors;
      return std::all_of(v.torsion.begin(), v.torsion.end(), [&](const BigInt& t) {
        return t > 1 && std::any_of(factors.begin(), factors.end(),
                                    [&](const BigInt& f) { return f % t == 0; });
      });
    }
    case NonFreeReason::perfect_nontrivial_quotient:
      return v.quotient && abelianization(v.presentation).is_zero() &&
             validate_quotient(v.presentation, *v.quotient);
    case NonFreeReason::none: return false;
  }
  return false;
}

FreenessVerdict freeness_verdict(const GroupPresentation& p, const FreenessOptions& options) {
  FreenessVerdict v;
  v.presentation = p;
  const TrackedPresentation tracked = tietze_simplify_tracked(p, options.tietze_budget);
  v.simplified = tracked.presentation;
  v.abelianization = abelianization(p);

  if (v.simplified.relators.empty()) {
    v.kind = FreenessKind::free;
    v.free_rank = v.simplified.generators;
    return v;
  }
  if (!v.abelianization.torsion.empty()) {
    v.kind = FreenessKind::not_free;
    v.reason = NonFreeReason::torsion_in_h1;
    v.torsion = v.abelianization.torsion;
    return v;
  }
  if (v.abelianization.is_zero()) {
    auto q = find_symmetric_quotient(v.simplified, options.max_degree, options.search_budget,
                                     options.threads, &v.search_nodes);
    if (q) {
      QuotientCertificate lifted{q->degree, {}};
      for (const Word& w : tracked.input_generator_images)
        lifted.images.push_back(evaluate(w, q->images, q->degree));
      v.kind = FreenessKind::not_free;
      v.reason = NonFreeReason::perfect_nontrivial_quotient;
      v.quotient = std::move(lifted);
      return v;
    }
  }
  v.kind = FreenessKind::unknown;
  return v;
}

}  // namespace trikit
