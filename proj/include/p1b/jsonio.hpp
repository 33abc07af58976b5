#pragma once

#include "json.hpp"

#include "p1b/bundles.hpp"
#include "p1b/classify.hpp"
#include "p1b/links.hpp"
#include "p1b/transitions.hpp"

namespace p1b {

using Json = nlohmann::json;

// Rationals travel as exact [numerator, denominator] integer pairs;
// values outside the 64-bit range raise an Error rather than rounding.
Json rat_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json xpoly_json(const XPoly& f);          // coefficients, ascending
Json tmat_json(const TransitionMat& m);   // 2x2 of {yexp, num, den} terms

Json canonical_json(const CanonicalP& p);
CanonicalP canonical_from_json(const Json& j);

Json desc_json(const BundleDesc& d);
BundleDesc desc_from_json(const Json& j);

Json verdict_json(const Verdict& v);
Json step_json(const LinkStep& s);
Json reduction_json(const ReductionResult& r);
Json jump_report_json(const JumpReport& r);
Json graph_json(const LinkGraph& g);

} // namespace p1b
