#include "wcp/coxeter.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wcp {

bool is_coxeter(const WeylOps& W, const WeylElem& w) {
  const int n = W.rank();
  return W.length(w) == n && W.support(w).size() == n;
}

std::vector<WeylElem> enumerate_coxeter(const WeylOps& W) {
  return coxeter_elements_of(W, W.root_system().full_set());
}

std::vector<WeylElem> coxeter_elements_of(const WeylOps& W, SimpleSubset S) {
  const RootSystem& rs = W.root_system();
  const int n = rs.rank();
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (S.contains(a) && S.contains(b) && rs.adjacent(a, b)) edges.push_back({a, b});

  // The diagram is a forest, so every orientation of its edges is acyclic
  // and Coxeter elements correspond bijectively to orientations.
  std::vector<WeylElem> out;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<std::vector<int>> succ(n + 1);
    std::vector<int> indeg(n + 1, 0);
    for (size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if (mask & (1u << e)) std::swap(a, b);
      succ[a].push_back(b); // a before b
      ++indeg[b];
    }
    Word word;
    std::vector<int> ready;
    for (int v = 1; v <= n; ++v)
      if (S.contains(v) && indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
      std::sort(ready.begin(), ready.end());
      const int v = ready.front();
      ready.erase(ready.begin());
      word.push_back(v);
      for (int s : succ[v])
        if (--indeg[s] == 0) ready.push_back(s);
    }
    out.push_back(W.from_word(word));
  }
  std::sort(out.begin(), out.end(), [&](const WeylElem& a, const WeylElem& b) {
    return W.reduced_word(a) < W.reduced_word(b);
  });
  return out;
}

Word conjugating_sequence(const WeylOps& W, const WeylElem& c, const WeylElem& c_prime, int i) {
  if (!is_coxeter(W, c) || !is_coxeter(W, c_prime))
    throw std::invalid_argument("conjugating_sequence expects Coxeter elements");
  if (i < 1 || i > W.rank()) throw std::invalid_argument("index out of range");

  std::map<WeylElem, Word> conj; // node -> word g with node = g c g^{-1}
  conj[c] = {};
  std::vector<WeylElem> queue{c};
  for (size_t head = 0; head < queue.size(); ++head) {
    const WeylElem cur = queue[head];
    if (cur == c_prime) break;
    const Word& g_word = conj[cur];
    for (int a : W.descents_left(cur).indices()) {
      const WeylElem shifted = W.mult_simple_left(a, W.mult_simple_right(cur, a));
      Word h = a != i ? Word{a} : W.reduced_word(W.mult_simple_left(a, cur));
      if (conj.count(shifted)) continue;
      Word g_new = h;
      g_new.insert(g_new.end(), g_word.begin(), g_word.end());
      conj[shifted] = std::move(g_new);
      queue.push_back(shifted);
    }
  }
  auto it = conj.find(c_prime);
  if (it == conj.end())
    throw std::logic_error("cyclic-shift graph failed to connect two Coxeter elements");
  const Word& g = it->second;
  for (int letter : g)
    if (letter == i) throw std::logic_error("conjugator word uses the excluded letter");
  const WeylElem ge = W.from_word(g);
  if (!(ge * c * W.inverse(ge) == c_prime))
    throw std::logic_error("conjugator verification failed");
  return g;
}

namespace {

WeylElem coxeter_below_rec(const WeylOps& W, SimpleSubset K, SimpleSubset J, const WeylElem& w) {
  if (W.length(w) == K.size()) return w; // Coxeter element of W_K
  int i = 0;
  for (int d : W.descents_left(w).indices()) {
    i = d;
    break;
  }
  if (i == 0) throw std::logic_error("non-identity element without left descent");
  const WeylElem w1 = W.mult_simple_left(i, w);
  const SimpleSubset supp1 = W.support(w1);
  if (supp1 == K) return coxeter_below_rec(W, K, J, w1);
  SimpleSubset K1 = K, J1 = J;
  K1.erase(i);
  J1.erase(i);
  const WeylElem below = coxeter_below_rec(W, K1, J1, w1);
  return W.mult_simple_left(i, below);
}

} // namespace

WeylElem coxeter_below(const WeylOps& W, SimpleSubset J, const WeylElem& w) {
  const SimpleSubset I = W.root_system().full_set();
  if (W.support(w) != I)
    throw std::invalid_argument("coxeter_below requires supp(w) = I");
  if (!W.is_min_rep(w, J, Side::Right))
    throw std::invalid_argument("coxeter_below requires w in W^J");
  return coxeter_below_rec(W, I, J, w);
}

std::vector<SimpleSubset> layers(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw std::invalid_argument("index out of range");
  std::vector<SimpleSubset> out;
  SimpleSubset seen = SimpleSubset::of({i});
  SimpleSubset cur = seen;
  while (!cur.empty()) {
    out.push_back(cur);
    SimpleSubset next;
    for (int j = 1; j <= rs.rank(); ++j) {
      if (seen.contains(j)) continue;
      for (int m : cur.indices())
        if (rs.adjacent(j, m)) {
          next.insert(j);
          break;
        }
    }
    seen = seen.unite(next);
    cur = next;
  }
  return out;
}

WeylElem layer_reflection(const WeylOps& W, SimpleSubset layer) {
  WeylElem s = W.identity();
  for (int j : layer.indices()) s = W.mult_simple_right(s, j);
  return s;
}

WeylElem layer_suffix(const WeylOps& W, const std::vector<SimpleSubset>& ls, int k) {
  WeylElem w = W.identity();
  for (int m = static_cast<int>(ls.size()); m >= k; --m)
    if (m >= 1) w = w * layer_reflection(W, ls[m - 1]);
  return w;
}

WeylElem w_J_coxeter(const WeylOps& W, int i) {
  return layer_suffix(W, layers(W.root_system(), i), 1);
}

Report check_layer_chain_closed_forms(const WeylOps& W, int i) {
  const RootSystem& rs = W.root_system();
  Report rep;
  rep.name = rs.type().str() + " i=" + std::to_string(i) + " chain closed forms";

  const auto ls = layers(rs, i);
  const int nl = static_cast<int>(ls.size());
  auto layer_at = [&](int k) { // I_k, empty beyond the last layer
    return (k >= 1 && k <= nl) ? ls[k - 1] : SimpleSubset();
  };

  // Closed J_k: J_{-1} = I, J_k = J_{k-1} - I_{k+1}.
  const int steps = nl + 1;
  std::vector<SimpleSubset> J(steps + 1);
  SimpleSubset prev = rs.full_set().minus(layer_at(1)); // J_0 = I - {i}
  for (int k = 0; k <= steps; ++k) {
    J[k] = k == 0 ? prev : J[k - 1].minus(layer_at(k + 1));
  }

  auto w0J = [&](int k) { // w_0^{J_k}, with J_{-1} = I; stationary past the end
    if (k < 0) return W.longest_element(rs.full_set());
    return W.longest_element(J[std::min(k, steps)]);
  };

  SimpleSubset Jfull = rs.full_set();
  Jfull.erase(i);
  Pieces pieces(rs);
  const WeylElem wJ = w_J_coxeter(W, i);
  const BetaChain chain = pieces.beta_sequence(Jfull, wJ);

  const int m = static_cast<int>(chain.steps.size()) - 1;
  bool all_ok = true;
  for (int k = 0; k <= std::max(m, steps - 1); ++k) {
    const SimpleSubset Jk = k <= steps ? J[k] : J[steps];
    const WeylElem uk =
        w0J(k - 1) * w0J(k) * layer_reflection(W, layer_at(k + 1)) * w0J(k + 1) * w0J(k);
    WeylElem yk = w0J(k - 1) * w0J(k);
    for (int t = k; t >= 1; --t) yk = yk * layer_reflection(W, layer_at(t));

    if (k <= m) {
      const BetaStep& st = chain.steps[k];
      bool ok = st.J == Jk && st.u == uk && st.y == yk;
      if (ok) {
        auto jp = W.ad_image(yk, Jk);
        ok = jp && *jp == st.Jp;
      }
      all_ok = all_ok && ok;
      if (!ok)
        rep.add("step " + std::to_string(k) + " matches closed forms", false,
                "J_k=" + st.J.str() + " expected " + Jk.str() +
                    "; u_k=" + word_str(W.reduced_word(st.u)) + " expected " +
                    word_str(W.reduced_word(uk)));
    } else {
      // Beyond the computed chain the closed forms must be stationary.
      const bool ok = uk.is_identity() && Jk == chain.terminal;
      all_ok = all_ok && ok;
      if (!ok)
        rep.add("closed form stationary at step " + std::to_string(k), false,
                "u_k=" + word_str(W.reduced_word(uk)) + " J_k=" + Jk.str());
    }
  }
  rep.add("all steps match closed forms", all_ok);
  rep.add("terminal J_n is empty", chain.terminal.empty(), chain.terminal.str());
  rep.add("terminal y equals w^J", chain.terminal_y == wJ);
  return rep;
}

} // namespace wcp
