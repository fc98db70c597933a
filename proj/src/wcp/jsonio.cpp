#include "wcp/jsonio.hpp"

namespace wcp {

json subset_json(const SimpleSubset& s) { return json(s.indices()); }

json word_json(const WeylOps& W, const WeylElem& w) { return word_str(W.reduced_word(w)); }

json qpoly_json(const QPoly& p) {
  json coeffs = json::array();
  for (const Int& c : p.coeffs()) {
    // Numbers that fit in 64 bits stay numeric; larger ones become strings.
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      coeffs.push_back(static_cast<long long>(c));
    else
      coeffs.push_back(c.str());
  }
  return json{{"coeffs", coeffs}, {"str", p.str()}};
}

json piece_json(const WeylOps& W, const PieceLabel& p) {
  return json{{"J", subset_json(p.J)}, {"w", word_json(W, p.w)}};
}

json chain_json(const WeylOps& W, const BetaChain& c) {
  json steps = json::array();
  for (const BetaStep& st : c.steps)
    steps.push_back(json{{"J", subset_json(st.J)},
                         {"Jp", subset_json(st.Jp)},
                         {"u", word_json(W, st.u)},
                         {"y", word_json(W, st.y)},
                         {"v", word_json(W, st.v)}});
  return json{{"w_J", word_json(W, c.w_J)},
              {"steps", steps},
              {"terminal", subset_json(c.terminal)},
              {"terminal_y", word_json(W, c.terminal_y)}};
}

json orbit_json(const WeylOps& W, const OrbitLabel& o) {
  return json{{"J", subset_json(o.J)}, {"x", word_json(W, o.x)}, {"w", word_json(W, o.w)}};
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const CheckItem& it : r.items) {
    json c{{"claim", it.claim}, {"status", it.pass ? "pass" : "fail"}};
    if (!it.detail.empty()) c["witness"] = it.detail;
    checks.push_back(c);
  }
  return json{{"name", r.name}, {"status", r.pass() ? "pass" : "fail"}, {"checks", checks}};
}

json reports_json(const std::vector<Report>& rs) {
  json out = json::array();
  for (const Report& r : rs) out.push_back(report_json(r));
  return out;
}

} // namespace wcp
