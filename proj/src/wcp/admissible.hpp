#pragma once

#include <string>
#include <vector>

#include "wcp/report.hpp"
#include "wcp/weyl.hpp"

namespace wcp {

// Basis gamma_j = s_{i_n} ... s_{i_{j+1}} alpha^vee_{i_j} attached to a
// reduced multiplicity-free word x = s_{i_1} ... s_{i_n}; satisfies
// (1 - x^{-1}) omega^vee_{i_j} = gamma_j.
struct AdmissibilityBasis {
  Word word;
  std::vector<CoweightVec> gamma;
};

enum class AdmMode { Integral, Rational };

struct AdmissibilityResult {
  bool in_span = false;   // lambda lies in the span of the gamma_j
  bool admissible = false;
  std::vector<Rat> coeffs; // solution of lambda = sum c_j gamma_j when in span
};

AdmissibilityBasis coroot_basis(const WeylOps& W, const Word& word);

// Solves lambda = sum c_j gamma_j (unique by independence).  Integral mode
// accepts nonnegative integers, rational mode any nonnegative rationals.
AdmissibilityResult is_admissible(const WeylOps& W, const Word& word, const CoweightVec& lambda,
                                  AdmMode mode);

// lambda - w^{-1} lambda, the admissible partner of a dominant regular
// coweight.  Throws if lambda is not dominant regular.
CoweightVec admissible_from_regular(const WeylOps& W, const WeylElem& w,
                                    const CoweightVec& lambda);

// Hypothesis check: y1 letters pairwise orthogonal, the concatenated word
// reduced and multiplicity-free, (1 - y1 y2) x omega^vee_i strictly positive
// exactly on the y1 y2 letters, (1 - y1) w omega^vee_i strictly positive
// exactly on the y1 letters.  Coefficient vectors are reported.
Report conjugation_hypotheses(const WeylOps& W, const WeylElem& w, const WeylElem& x,
                              const Word& y1, const Word& y2, int i);

// beta = -(v x)^{-1} alpha_{source}; its transcribed value is either a
// literal root vector or (w^J)^{power} applied to an earlier beta.
struct BetaEntry {
  int source = 0;
  bool has_literal = false;
  RootVec literal;
  int power = 0;     // used when !has_literal and ref >= 1
  int ref = 0;       // 1-based index of the referenced beta
};

// Transcribed identity w_k^{-1} (w^J)^{power} beta_{index} = expected, where
// w_k is the layer suffix of the case's i.
struct ClaimedRootImage {
  int wk = 0;
  int power = 0;
  int beta = 0; // 1-based
  RootVec expected;
};

// One case of the explicit construction certifying Z_{J, w^J}: elements
// (v, x, lambda) with lambda = scale . x omega^vee_i, conjugators y1, y2 with
// x^{-1} y1 y2 v x = w^J, and the transcribed root data.
struct CaseData {
  SeriesRank type;
  int i = 0;
  Word v_word;
  Word x_word;
  int x_power = 0; // x = from_word(x_word) * (w^J)^{x_power}
  CoweightVec lambda;
  Rat scale = 1;
  Word y1, y2;
  std::vector<BetaEntry> betas;
  std::vector<ClaimedRootImage> images;
  AdmMode mode = AdmMode::Integral;
  std::vector<std::string> notes;

  std::string str() const; // the structured-text fixture form
};

// Transcribed or constructed case data for (type, i); throws UncoveredCase
// for combinations without data (all of type B).
CaseData transcribed_case(const RootSystem& rs, int i);
// All i covered for a type (ascending); empty only for type B.
std::vector<int> covered_case_indices(const SeriesRank& type);

// Runs checks (a)-(e) on one case; failures carry both sides, nothing is
// corrected silently.
Report verify_case(const RootSystem& rs, const CaseData& cd);

// Type A closed forms: quantities of the general construction for PGL_n.
struct TypeAData {
  int n = 0, i = 0;
  std::vector<int> a; // a[j] for j = 1..i+1 (a[0] unused)
  std::vector<int> b; // b[k] for k = 0..n-1
  Word v_word;
  std::vector<WeylElem> vj; // v_1..v_{i+1}, v_{i+1} = 1
  std::vector<WeylElem> xj; // x_1..x_i, x_i = 1
  WeylElem v, x, y;
  CoweightVec lambda;
  Word y_word;
};
TypeAData type_a_data(const RootSystem& rs, int i);

// n x_j omega^vee_i against its closed form, exact.
Report type_a_coweight_check(int n, int i, int j);
// x^{-1} v_1 x = w^J for PGL_n.
Report type_a_conjugation_check(int n, int i);

// Fixture parsing (exposed for the fixture round-trip test).
CaseData parse_case_fixture(const std::string& text);
const std::vector<std::string>& exceptional_case_fixtures();

} // namespace wcp
