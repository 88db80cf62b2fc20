#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trikit/homology.hpp"
#include "trikit/presentation.hpp"

namespace trikit {

/// A permutation of {0, ..., n-1} as its image list.
using Permutation = std::vector<std::uint8_t>;

/// A homomorphism to S_n given by the images of the generators of the
/// presentation it was found for.
struct QuotientCertificate {
  int degree = 0;
  std::vector<Permutation> images;
};

enum class FreenessKind { free, not_free, unknown };
enum class NonFreeReason { none, torsion_in_h1, perfect_nontrivial_quotient };

std::string_view to_string(FreenessKind k);
std::string_view to_string(NonFreeReason r);

struct FreenessVerdict {
  FreenessKind kind = FreenessKind::unknown;
  std::size_t free_rank = 0;  // meaningful for FREE
  NonFreeReason reason = NonFreeReason::none;
  /// The presentation the verdict was computed for, and its simplification.
  GroupPresentation presentation;
  GroupPresentation simplified;
  Group abelianization;
  /// NOT_FREE by torsion: the torsion coefficients of P^ab.
  std::vector<BigInt> torsion;
  /// NOT_FREE by quotient: images of the generators of `presentation`.
  std::optional<QuotientCertificate> quotient;
  std::size_t search_nodes = 0;

  std::string to_string() const;
};

struct FreenessOptions {
  std::size_t tietze_budget = 10000;
  /// Maximum number of partial assignments explored by the quotient search.
  std::size_t search_budget = 5'000'000;
  int max_degree = 5;
  unsigned threads = 1;
};

/// FREE(r) when simplification removes every relator; NOT_FREE when P^ab has
/// torsion, or when P^ab is trivial and some generator maps nontrivially to
/// S_n (n <= max_degree) with all relators sent to the identity; otherwise
/// UNKNOWN.
FreenessVerdict freeness_verdict(const GroupPresentation& p, const FreenessOptions& options = {});

/// Searches for a homomorphism P → S_n, n = 2..max_degree, that sends some
/// generator to a non-identity permutation. Backtracks over generator images,
/// pruning on each relator as soon as all its generators are assigned.
std::optional<QuotientCertificate> find_symmetric_quotient(const GroupPresentation& p,
                                                           int max_degree,
                                                           std::size_t node_budget,
                                                           unsigned threads = 1,
                                                           std::size_t* nodes_used = nullptr);

/// Every relator evaluates to the identity and some image is not the identity.
bool validate_quotient(const GroupPresentation& p, const QuotientCertificate& q);

/// Re-checks a verdict's certificate against its presentation: torsion
/// coefficients must divide invariant factors of the relator matrix, quotient
/// maps must kill every relator. FREE and UNKNOWN verdicts validate trivially.
bool validate_certificate(const FreenessVerdict& v);

Permutation evaluate(const Word& w, const std::vector<Permutation>& images, int degree);

}  // namespace trikit
