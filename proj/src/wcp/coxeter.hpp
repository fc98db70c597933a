#pragma once

#include <vector>

#include "wcp/pieces.hpp"
#include "wcp/report.hpp"
#include "wcp/weyl.hpp"

namespace wcp {

// l(w) = |supp(w)| = |I|.
bool is_coxeter(const WeylOps& W, const WeylElem& w);

// All distinct products of the |I| simple reflections, one per acyclic
// orientation of the Dynkin diagram; no W-enumeration involved.
std::vector<WeylElem> enumerate_coxeter(const WeylOps& W);

// Coxeter elements of the parabolic W_S (products of the |S| reflections).
std::vector<WeylElem> coxeter_elements_of(const WeylOps& W, SimpleSubset S);

// A word g over I - {i} with g c g^{-1} = c', found by breadth-first search
// over the cyclic-shift graph; shifts starting with s_i contribute the
// remainder of the shifted word as conjugator.
Word conjugating_sequence(const WeylOps& W, const WeylElem& c, const WeylElem& c_prime, int i);

// For w in W^J with supp(w) = I: a Coxeter element w' in W^J with w' <= w,
// built by stripping left descents as in the inductive argument.
WeylElem coxeter_below(const WeylOps& W, SimpleSubset J, const WeylElem& w);

// Breadth-first layers I_1 = {i}, I_2, ... of the Dynkin graph; indices
// within a layer are pairwise non-adjacent.
std::vector<SimpleSubset> layers(const RootSystem& rs, int i);

// s_{I_k} = prod_{j in I_k} s_j (order immaterial within a layer).
WeylElem layer_reflection(const WeylOps& W, SimpleSubset layer);

// Suffix w_k = s_{I_n} s_{I_{n-1}} ... s_{I_k}; identity for k beyond the
// last layer.
WeylElem layer_suffix(const WeylOps& W, const std::vector<SimpleSubset>& ls, int k);

// w^J = s_{I_n} ... s_{I_1}: a Coxeter element lying in W^{I-{i}}.
WeylElem w_J_coxeter(const WeylOps& W, int i);

// Replays the chain of (I-{i}, w^J) against its closed forms
// J_k = J_{k-1} - I_{k+1}, u_k = w_0^{J_{k-1}} w_0^{J_k} s_{I_{k+1}}
// w_0^{J_{k+1}} w_0^{J_k}, y_k = w_0^{J_{k-1}} w_0^{J_k} s_{I_k} ... s_{I_1},
// and the terminal J_n = {}.
Report check_layer_chain_closed_forms(const WeylOps& W, int i);

} // namespace wcp
