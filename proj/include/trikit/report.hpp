#pragma once

#include <json.hpp>

#include "trikit/bounds.hpp"
#include "trikit/combinatoriality.hpp"
#include "trikit/freeness.hpp"
#include "trikit/homology.hpp"
#include "trikit/presentation.hpp"
#include "trikit/pseudomanifold.hpp"
#include "trikit/verify.hpp"

namespace trikit {

using Json = nlohmann::ordered_json;

// Simplices serialize as label lists of the complex they belong to.
Json to_json(const SimplicialComplex& k, const Simplex& s);
Json to_json(const Group& g);
Json to_json(const HomologyProfile& p);
Json to_json(const SimplicialComplex& k, const PseudomanifoldReport& r);
Json to_json(const GroupPresentation& p);
Json to_json(const FreenessVerdict& v);
Json to_json(const SimplicialComplex& k, const CombinatorialityCertificate& c);
Json to_json(const CheckReport& r);
Json to_json(const SimplicialComplex& k, const LocalHomologyReport& r);
Json to_json(const BoundReport& r);
Json to_json(const Analysis& a);

}  // namespace trikit
