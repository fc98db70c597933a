#include "wcpieces.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "wcp/admissible.hpp"
#include "wcp/closure.hpp"
#include "wcp/coxeter.hpp"
#include "wcp/errors.hpp"
#include "wcp/jsonio.hpp"
#include "wcp/verify.hpp"

using namespace wcp;

struct wcp_root_system {
  RootSystem rs;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::uint64_t effective_bound(std::uint64_t bound) { return bound == 0 ? kDefaultEnumBound : bound; }

template <typename Fn>
wcp_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return WCP_OK;
  } catch (const BoundExceeded& e) {
    t_last_error = e.what();
    return WCP_ERR_BOUND_EXCEEDED;
  } catch (const UncoveredCase& e) {
    t_last_error = e.what();
    return WCP_ERR_UNCOVERED_CASE;
  } catch (const std::invalid_argument& e) {
    t_last_error = e.what();
    return WCP_ERR_INVALID_ARG;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return WCP_ERR_INTERNAL;
  }
}

PieceLabel parse_piece(const RootSystem& rs, const char* J, const char* w) {
  WeylOps W(rs);
  return {SimpleSubset::parse(J ? J : "-"), W.from_word(parse_word(w ? w : "-"))};
}

OrbitLabel parse_orbit(const RootSystem& rs, const char* text) {
  if (!text) throw std::invalid_argument("null orbit label");
  const std::string s(text);
  const auto p1 = s.find('|');
  const auto p2 = s.find('|', p1 == std::string::npos ? p1 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    throw std::invalid_argument("orbit label must be J|x|w: '" + s + "'");
  WeylOps W(rs);
  return {SimpleSubset::parse(s.substr(0, p1)),
          W.from_word(parse_word(s.substr(p1 + 1, p2 - p1 - 1))),
          W.from_word(parse_word(s.substr(p2 + 1)))};
}

} // namespace

extern "C" {

const char* wcp_version(void) { return "0.1.0"; }

const char* wcp_last_error(void) { return t_last_error.c_str(); }

void wcp_string_free(char* s) { std::free(s); }

wcp_status wcp_root_system_create(const char* type, wcp_root_system** out) {
  return guarded([&] {
    if (!type || !out) throw std::invalid_argument("null argument");
    *out = new wcp_root_system{RootSystem(SeriesRank::parse(type))};
  });
}

void wcp_root_system_destroy(wcp_root_system* rs) { delete rs; }

int wcp_rank(const wcp_root_system* rs) { return rs ? rs->rs.rank() : 0; }

int wcp_positive_root_count(const wcp_root_system* rs) {
  return rs ? static_cast<int>(rs->rs.positive_roots().size()) : 0;
}

int wcp_cartan_entry(const wcp_root_system* rs, int i, int j) {
  if (!rs || i < 1 || j < 1 || i > rs->rs.rank() || j > rs->rs.rank()) return 0;
  return rs->rs.cartan(i, j);
}

wcp_status wcp_pieces_json(const wcp_root_system* rs, int with_chain, uint64_t bound, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    Pieces pieces(rs->rs);
    WeylOps W(rs->rs);
    json arr = json::array();
    for (const PieceLabel& p : pieces.enumerate_pieces(effective_bound(bound))) {
      json rec = piece_json(W, p);
      if (with_chain) {
        const BetaChain c = pieces.beta_sequence(p.J, p.w);
        rec["terminal"] = subset_json(c.terminal);
        rec["chain"] = chain_json(W, c);
      }
      arr.push_back(rec);
    }
    *out = dup_string(arr.dump());
  });
}

wcp_status wcp_beta_chain_json(const wcp_root_system* rs, const char* J, const char* w,
                               char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    Pieces pieces(rs->rs);
    WeylOps W(rs->rs);
    const PieceLabel p = parse_piece(rs->rs, J, w);
    *out = dup_string(chain_json(W, pieces.beta_sequence(p.J, p.w)).dump());
  });
}

wcp_status wcp_count_group_json(const wcp_root_system* rs, uint64_t bound, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    Pieces pieces(rs->rs);
    *out = dup_string(qpoly_json(pieces.group_compactification_count(effective_bound(bound))).dump());
  });
}

wcp_status wcp_count_boundary_json(const wcp_root_system* rs, uint64_t bound, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    Closure closure(rs->rs);
    *out = dup_string(qpoly_json(closure.boundary_count_poly(effective_bound(bound))).dump());
  });
}

wcp_status wcp_count_piece_json(const wcp_root_system* rs, const char* J, const char* w,
                                uint64_t bound, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    Pieces pieces(rs->rs);
    const PieceLabel p = parse_piece(rs->rs, J, w);
    *out = dup_string(qpoly_json(pieces.piece_count_poly(p, effective_bound(bound))).dump());
  });
}

wcp_status wcp_boundary_json(const wcp_root_system* rs, uint64_t bound, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    Closure closure(rs->rs);
    WeylOps W(rs->rs);
    json arr = json::array();
    for (const PieceLabel& p : closure.boundary_pieces(effective_bound(bound)))
      arr.push_back(piece_json(W, p));
    *out = dup_string(arr.dump());
  });
}

wcp_status wcp_closure_contains_json(const wcp_root_system* rs, const char* a, const char* b,
                                     uint64_t bound, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    Closure closure(rs->rs);
    WeylOps W(rs->rs);
    const OrbitLabel la = parse_orbit(rs->rs, a);
    const OrbitLabel lb = parse_orbit(rs->rs, b);
    const auto witness = closure.orbit_closure_contains(la, lb, effective_bound(bound));
    json res{{"a", orbit_json(W, la)}, {"b", orbit_json(W, lb)}, {"contains", witness.has_value()}};
    if (witness)
      res["witness"] = json{{"u", word_json(W, witness->u)}, {"v", word_json(W, witness->v)}};
    *out = dup_string(res.dump());
  });
}

wcp_status wcp_coxeter_piece_closure_json(const wcp_root_system* rs, int i, const char* w,
                                          uint64_t bound, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    Closure closure(rs->rs);
    WeylOps W(rs->rs);
    const WeylElem elem = W.from_word(parse_word(w ? w : "-"));
    json arr = json::array();
    for (const PieceLabel& p : closure.coxeter_piece_closure(i, elem, effective_bound(bound)))
      arr.push_back(piece_json(W, p));
    *out = dup_string(arr.dump());
  });
}

wcp_status wcp_coxeter_list_json(const wcp_root_system* rs, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    WeylOps W(rs->rs);
    json arr = json::array();
    for (const WeylElem& c : enumerate_coxeter(W)) arr.push_back(word_json(W, c));
    *out = dup_string(arr.dump());
  });
}

wcp_status wcp_coxeter_wj_json(const wcp_root_system* rs, int i, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    WeylOps W(rs->rs);
    json ls = json::array();
    for (const SimpleSubset& layer : layers(rs->rs, i)) ls.push_back(subset_json(layer));
    *out = dup_string(json{{"layers", ls}, {"wJ", word_json(W, w_J_coxeter(W, i))}}.dump());
  });
}

wcp_status wcp_conjugating_word_json(const wcp_root_system* rs, const char* c, const char* c2,
                                     int i, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    WeylOps W(rs->rs);
    const Word g = conjugating_sequence(W, W.from_word(parse_word(c ? c : "-")),
                                        W.from_word(parse_word(c2 ? c2 : "-")), i);
    *out = dup_string(json{{"word", word_str(g)}}.dump());
  });
}

wcp_status wcp_check_layer_chain_json(const wcp_root_system* rs, int i, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    WeylOps W(rs->rs);
    *out = dup_string(report_json(check_layer_chain_closed_forms(W, i)).dump());
  });
}

wcp_status wcp_case_fixture(const wcp_root_system* rs, int i, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    *out = dup_string(transcribed_case(rs->rs, i).str());
  });
}

wcp_status wcp_case_report_json(const wcp_root_system* rs, int i, char** out) {
  return guarded([&] {
    if (!rs || !out) throw std::invalid_argument("null argument");
    *out = dup_string(report_json(verify_case(rs->rs, transcribed_case(rs->rs, i))).dump());
  });
}

wcp_status wcp_verify_json(const char* suite, const char* type, int max_rank, uint64_t bound,
                           int jobs, char** out, int* all_pass) {
  return guarded([&] {
    if (!suite || !out) throw std::invalid_argument("null argument");
    SuiteOptions opts;
    opts.bound = effective_bound(bound);
    opts.jobs = jobs > 0 ? jobs : 1;
    opts.max_rank = max_rank > 0 ? max_rank : 4;
    std::optional<SeriesRank> t;
    if (type && *type) t = SeriesRank::parse(type);
    const auto reports = run_suite(suite, t, opts);
    bool pass = true;
    for (const Report& r : reports) pass = pass && r.pass();
    if (all_pass) *all_pass = pass ? 1 : 0;
    *out = dup_string(reports_json(reports).dump());
  });
}

} // extern "C"
