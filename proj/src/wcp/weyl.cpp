#include "wcp/weyl.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "wcp/errors.hpp"

namespace wcp {

WeylElem WeylElem::identity(int rank) {
  WeylElem w;
  w.n_ = rank;
  w.a_.assign(static_cast<size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) w.a_[i * rank + i] = 1;
  return w;
}

bool WeylElem::is_identity() const {
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if (a_[r * n_ + c] != (r == c ? 1 : 0)) return false;
  return true;
}

WeylElem WeylElem::operator*(const WeylElem& o) const {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch in product");
  // Accumulate in int; entries of a Weyl matrix are root coordinates and fit
  // int8, but partial sums may not.
  std::vector<int> acc(a_.size(), 0);
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) {
      const int ark = a_[r * n_ + k];
      if (ark == 0) continue;
      for (int c = 0; c < n_; ++c) acc[r * n_ + c] += ark * o.a_[k * n_ + c];
    }
  WeylElem out;
  out.n_ = n_;
  out.a_.resize(a_.size());
  for (size_t k = 0; k < acc.size(); ++k) out.a_[k] = static_cast<int8_t>(acc[k]);
  return out;
}

RootVec WeylElem::act(const RootVec& v) const {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("rank mismatch in act");
  RootVec out(n_, 0);
  for (int c = 0; c < n_; ++c) {
    if (v[c] == 0) continue;
    for (int r = 0; r < n_; ++r) out[r] += a_[r * n_ + c] * v[c];
  }
  return out;
}

size_t WeylElem::hash() const {
  size_t h = 1469598103934665603ull;
  for (int8_t b : a_) {
    h ^= static_cast<size_t>(static_cast<uint8_t>(b));
    h *= 1099511628211ull;
  }
  return h;
}

void WeylOps::check_rank(const WeylElem& w) const {
  if (w.rank() != rs_.rank()) throw std::invalid_argument("element rank mismatch");
}

WeylElem WeylOps::simple_reflection(int i) const {
  const int n = rs_.rank();
  if (i < 1 || i > n) throw std::invalid_argument("reflection index out of range");
  WeylElem s = WeylElem::identity(n);
  for (int c = 1; c <= n; ++c)
    s.a_[(i - 1) * n + (c - 1)] =
        static_cast<int8_t>((c == i ? 1 : 0) - rs_.cartan(i, c));
  return s;
}

WeylElem WeylOps::from_word(const Word& word) const {
  WeylElem w = identity();
  for (int letter : word) w = mult_simple_right(w, letter);
  return w;
}

WeylElem WeylOps::mult_simple_left(int i, const WeylElem& w) const {
  check_rank(w);
  const int n = rs_.rank();
  if (i < 1 || i > n) throw std::invalid_argument("letter out of range");
  WeylElem out = w;
  // Row i of s_i*w is row_i - sum_k c[i][k] row_k.
  for (int c = 0; c < n; ++c) {
    int v = w.a_[(i - 1) * n + c];
    for (int k = 1; k <= n; ++k) {
      const int cik = rs_.cartan(i, k);
      if (cik == 0) continue;
      v -= cik * w.a_[(k - 1) * n + c];
    }
    out.a_[(i - 1) * n + c] = static_cast<int8_t>(v);
  }
  return out;
}

WeylElem WeylOps::mult_simple_right(const WeylElem& w, int i) const {
  check_rank(w);
  const int n = rs_.rank();
  if (i < 1 || i > n) throw std::invalid_argument("letter out of range");
  WeylElem out = w;
  // Column c gains -c[i][c] * column_i; column i flips sign.
  for (int r = 0; r < n; ++r) {
    const int wi = w.a_[r * n + (i - 1)];
    if (wi == 0) continue;
    for (int c = 1; c <= n; ++c) {
      if (c == i) continue;
      const int cic = rs_.cartan(i, c);
      if (cic == 0) continue;
      out.a_[r * n + (c - 1)] = static_cast<int8_t>(out.a_[r * n + (c - 1)] - cic * wi);
    }
    out.a_[r * n + (i - 1)] = static_cast<int8_t>(-wi);
  }
  return out;
}

WeylElem WeylOps::inverse(const WeylElem& w) const {
  check_rank(w);
  // Weyl matrices are orthogonal for the symmetrised Cartan form B, so
  // w^{-1} = B^{-1} w^T B = adj(B) w^T B / det(B), an exact integer matrix.
  const int n = rs_.rank();
  const auto& adjB = rs_.adjB();
  const long long det = rs_.detB();
  std::vector<long long> tmp(static_cast<size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      long long v = 0;
      for (int k = 0; k < n; ++k) v += adjB[r][k] * w.a_[c * n + k]; // (w^T)[k][c]
      tmp[r * n + c] = v;
    }
  WeylElem out;
  out.n_ = n;
  out.a_.assign(static_cast<size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      long long v = 0;
      for (int k = 0; k < n; ++k)
        v += tmp[r * n + k] * rs_.symmetrizer(k + 1) * rs_.cartan(k + 1, c + 1);
      if (v % det != 0) throw std::logic_error("non-integral inverse");
      out.a_[r * n + c] = static_cast<int8_t>(v / det);
    }
  return out;
}

WeylElem WeylOps::power(const WeylElem& w, int k) const {
  WeylElem base = k < 0 ? inverse(w) : w;
  int e = k < 0 ? -k : k;
  WeylElem out = identity();
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

CoweightVec WeylOps::act_coweight(const WeylElem& w, const CoweightVec& v) const {
  const Word word = reduced_word(w);
  CoweightVec out = v;
  for (size_t k = word.size(); k-- > 0;) out = rs_.reflect_coweight(word[k], out);
  return out;
}

bool WeylOps::root_is_negative(const RootVec& v) const {
  for (int c : v)
    if (c < 0) return true;
  return false;
}

int WeylOps::length(const WeylElem& w) const {
  check_rank(w);
  int inv = 0;
  for (const RootVec& beta : rs_.positive_roots())
    if (root_is_negative(w.act(beta))) ++inv;
  return inv;
}

Word WeylOps::reduced_word(const WeylElem& w) const {
  check_rank(w);
  const int n = rs_.rank();
  Word out;
  WeylElem m = w;
  WeylElem minv = inverse(w);
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= n && descent == 0; ++i) {
      // Left descent: w^{-1}(alpha_i) < 0, read off column i of the inverse.
      for (int r = 0; r < n; ++r) {
        int v = minv.a_[r * n + (i - 1)];
        if (v < 0) {
          descent = i;
          break;
        }
        if (v > 0) break;
      }
    }
    if (descent == 0) break;
    out.push_back(descent);
    m = mult_simple_left(descent, m);
    minv = mult_simple_right(minv, descent);
  }
  if (!m.is_identity()) throw std::logic_error("reduced_word did not terminate");
  return out;
}

SimpleSubset WeylOps::support(const WeylElem& w) const {
  SimpleSubset s;
  for (int letter : reduced_word(w)) s.insert(letter);
  return s;
}

SimpleSubset WeylOps::descents_right(const WeylElem& w) const {
  check_rank(w);
  SimpleSubset out;
  for (int i = 1; i <= rs_.rank(); ++i)
    if (root_is_negative(w.act(rs_.simple_root(i)))) out.insert(i);
  return out;
}

SimpleSubset WeylOps::descents_left(const WeylElem& w) const {
  return descents_right(inverse(w));
}

WeylElem WeylOps::longest_element(SimpleSubset J) const {
  WeylElem w = identity();
  const auto idx = J.indices();
  for (;;) {
    int ascent = 0;
    for (int j : idx) {
      if (!root_is_negative(w.act(rs_.simple_root(j)))) {
        ascent = j;
        break;
      }
    }
    if (ascent == 0) return w;
    w = mult_simple_right(w, ascent);
  }
}

bool WeylOps::is_min_rep(const WeylElem& w, SimpleSubset J, Side side) const {
  check_rank(w);
  const WeylElem m = side == Side::Right ? w : inverse(w);
  for (int j : J.indices())
    if (root_is_negative(m.act(rs_.simple_root(j)))) return false;
  return true;
}

bool WeylOps::in_parabolic(const WeylElem& w, SimpleSubset J) const {
  return support(w).subset_of(J);
}

WeylOps::CosetPair WeylOps::coset_decompose(const WeylElem& w, SimpleSubset J) const {
  check_rank(w);
  WeylElem x = w;
  WeylElem z = identity();
  const auto idx = J.indices();
  for (;;) {
    int descent = 0;
    for (int j : idx) {
      if (root_is_negative(x.act(rs_.simple_root(j)))) {
        descent = j;
        break;
      }
    }
    if (descent == 0) return {x, z};
    x = mult_simple_right(x, descent);
    z = mult_simple_left(descent, z);
  }
}

WeylOps::CosetPair WeylOps::coset_decompose_left(const WeylElem& w, SimpleSubset J) const {
  check_rank(w);
  WeylElem x = w;
  WeylElem xinv = inverse(w);
  WeylElem z = identity();
  const auto idx = J.indices();
  for (;;) {
    int descent = 0;
    for (int j : idx) {
      if (root_is_negative(xinv.act(rs_.simple_root(j)))) {
        descent = j;
        break;
      }
    }
    if (descent == 0) return {x, z};
    x = mult_simple_left(descent, x);
    xinv = mult_simple_right(xinv, descent);
    z = mult_simple_right(z, descent);
  }
}

WeylElem WeylOps::min_double_rep(const WeylElem& w, SimpleSubset J, SimpleSubset K) const {
  WeylElem m = w;
  for (;;) {
    const WeylElem before = m;
    m = coset_decompose_left(m, J).x;
    m = coset_decompose(m, K).x;
    if (m == before) return m;
  }
}

bool WeylOps::bruhat_leq(const WeylElem& u0, const WeylElem& w0) const {
  check_rank(u0);
  check_rank(w0);
  const int n = rs_.rank();
  WeylElem u = u0, uinv = inverse(u0);
  WeylElem w = w0, winv = inverse(w0);
  int lu = length(u), lw = length(w);
  for (;;) {
    if (lu > lw) return false;
    if (lu == 0) return true;
    if (lu == lw) return u == w;
    // Strip a left descent of w; u follows when it shares the descent.
    int i = 0;
    for (int c = 1; c <= n && i == 0; ++c) {
      for (int r = 0; r < n; ++r) {
        int v = winv.a_[r * n + (c - 1)];
        if (v < 0) {
          i = c;
          break;
        }
        if (v > 0) break;
      }
    }
    if (i == 0) throw std::logic_error("non-identity element without descent");
    bool u_desc = false;
    for (int r = 0; r < n; ++r) {
      int v = uinv.a_[r * n + (i - 1)];
      if (v < 0) {
        u_desc = true;
        break;
      }
      if (v > 0) break;
    }
    w = mult_simple_left(i, w);
    winv = mult_simple_right(winv, i);
    --lw;
    if (u_desc) {
      u = mult_simple_left(i, u);
      uinv = mult_simple_right(uinv, i);
      --lu;
    }
  }
}

std::optional<SimpleSubset> WeylOps::ad_image(const WeylElem& w, SimpleSubset J) const {
  SimpleSubset out;
  for (int j : J.indices()) {
    const int i = simple_index(w.act(rs_.simple_root(j)));
    if (i == 0) return std::nullopt;
    out.insert(i);
  }
  return out;
}

int WeylOps::simple_index(const RootVec& v) const {
  int idx = 0;
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (v[k] != 1 || idx != 0) return 0;
    idx = static_cast<int>(k) + 1;
  }
  return idx;
}

std::vector<WeylElem> WeylOps::bfs(const std::vector<int>& generators, std::uint64_t bound,
                                   const Int& order) const {
  if (order > Int(bound)) throw BoundExceeded(order.str(), bound);
  std::unordered_set<WeylElem, WeylElemHash> seen;
  std::vector<WeylElem> out;
  out.push_back(identity());
  seen.insert(out.back());
  for (size_t head = 0; head < out.size(); ++head) {
    const WeylElem cur = out[head];
    for (int g : generators) {
      WeylElem next = mult_simple_right(cur, g);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  if (Int(out.size()) != order)
    throw std::logic_error("enumeration size disagrees with classified order");
  // Deterministic order: (length, lexicographic canonical reduced word).
  std::vector<std::pair<Word, size_t>> keyed(out.size());
  for (size_t k = 0; k < out.size(); ++k) keyed[k] = {reduced_word(out[k]), k};
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<WeylElem> sorted;
  sorted.reserve(out.size());
  for (const auto& [word, k] : keyed) sorted.push_back(out[k]);
  return sorted;
}

std::vector<WeylElem> WeylOps::enumerate(std::uint64_t bound) const {
  std::vector<int> gens;
  for (int i = 1; i <= rs_.rank(); ++i) gens.push_back(i);
  return bfs(gens, bound, rs_.weyl_order());
}

std::vector<WeylElem> WeylOps::enumerate_parabolic(SimpleSubset J, std::uint64_t bound) const {
  return bfs(J.indices(), bound, rs_.parabolic_order(J));
}

std::vector<WeylElem> WeylOps::enumerate_min_reps(SimpleSubset J, Side side,
                                                  std::uint64_t bound) const {
  std::vector<WeylElem> out;
  for (const WeylElem& w : enumerate(bound))
    if (is_min_rep(w, J, side)) out.push_back(w);
  return out;
}

std::vector<WeylElem> WeylOps::enumerate_double_reps(SimpleSubset J, SimpleSubset K,
                                                     std::uint64_t bound) const {
  std::vector<WeylElem> out;
  for (const WeylElem& w : enumerate(bound))
    if (is_min_rep(w, J, Side::Left) && is_min_rep(w, K, Side::Right)) out.push_back(w);
  return out;
}

} // namespace wcp
