#pragma once

#include <json.hpp>

#include "wcp/closure.hpp"
#include "wcp/pieces.hpp"
#include "wcp/report.hpp"

namespace wcp {

using json = nlohmann::json;

json subset_json(const SimpleSubset& s);
json word_json(const WeylOps& W, const WeylElem& w); // word string "1 2 1"
json qpoly_json(const QPoly& p);                      // {"coeffs": [...], "str": "..."}
json piece_json(const WeylOps& W, const PieceLabel& p);
json chain_json(const WeylOps& W, const BetaChain& c);
json orbit_json(const WeylOps& W, const OrbitLabel& o);
json report_json(const Report& r);
json reports_json(const std::vector<Report>& rs);

} // namespace wcp
