#include "wcp/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wcp {

namespace {

// Rational Gauss-Jordan; returns (inverse, det).  Throws if singular.
std::pair<std::vector<std::vector<Rat>>, Rat> invert(std::vector<std::vector<Rat>> a) {
  const size_t n = a.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  Rat det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular matrix");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
      det = -det;
    }
    det *= a[col][col];
    const Rat d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return {inv, det};
}

long long rat_to_ll(const Rat& r) {
  if (denominator(r) != 1) throw std::logic_error("expected integer");
  return static_cast<long long>(numerator(r));
}

} // namespace

bool is_zero(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

bool is_zero(const CoweightVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

RootVec negate(const RootVec& v) {
  RootVec out(v);
  for (int& c : out) c = -c;
  return out;
}

CoweightVec coweight_sub(const CoweightVec& a, const CoweightVec& b) {
  CoweightVec out(a);
  for (size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
  return out;
}

CoweightVec coweight_add(const CoweightVec& a, const CoweightVec& b) {
  CoweightVec out(a);
  for (size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return out;
}

CoweightVec coweight_scale(const Rat& c, const CoweightVec& a) {
  CoweightVec out(a);
  for (Rat& x : out) x *= c;
  return out;
}

std::string root_str(const RootVec& v) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (!out.empty()) out += v[k] > 0 ? "+" : "-";
    else if (v[k] < 0) out += "-";
    int c = std::abs(v[k]);
    if (c != 1) out += std::to_string(c);
    out += "a" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

std::string coweight_str(const CoweightVec& v) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    Rat c = v[k];
    if (!out.empty()) {
      out += c > 0 ? " + " : " - ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    if (c != 1) out += c.str() + " ";
    out += "av" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

RootSystem::RootSystem(SeriesRank type) : type_(type), n_(type.rank) {
  if (!type.valid())
    throw std::invalid_argument("invalid series/rank combination: " + type.str());

  cartan_.assign(n_, std::vector<int>(n_, 0));
  for (int i = 0; i < n_; ++i) cartan_[i][i] = 2;
  auto edge = [&](int i, int j, int cij, int cji) {
    cartan_[i - 1][j - 1] = cij;
    cartan_[j - 1][i - 1] = cji;
  };
  dsym_.assign(n_, 1);

  // Bourbaki plates, transcribed entry by entry for the non-simply-laced data.
  switch (type.series) {
    case 'A':
      for (int i = 1; i < n_; ++i) edge(i, i + 1, -1, -1);
      break;
    case 'B': // alpha_n short
      for (int i = 1; i < n_ - 1; ++i) edge(i, i + 1, -1, -1);
      edge(n_ - 1, n_, -1, -2);
      for (int i = 0; i < n_ - 1; ++i) dsym_[i] = 2;
      break;
    case 'C': // alpha_n long
      for (int i = 1; i < n_ - 1; ++i) edge(i, i + 1, -1, -1);
      edge(n_ - 1, n_, -2, -1);
      dsym_[n_ - 1] = 2;
      break;
    case 'D':
      for (int i = 1; i <= n_ - 2; ++i) edge(i, i + 1, -1, -1); // chain 1..n-1
      edge(n_ - 2, n_, -1, -1);                                 // fork at n-2
      break;
    case 'E':
      edge(1, 3, -1, -1);
      edge(3, 4, -1, -1);
      edge(2, 4, -1, -1);
      edge(4, 5, -1, -1);
      edge(5, 6, -1, -1);
      if (n_ >= 7) edge(6, 7, -1, -1);
      if (n_ >= 8) edge(7, 8, -1, -1);
      break;
    case 'F': // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      edge(1, 2, -1, -1);
      edge(2, 3, -1, -2);
      edge(3, 4, -1, -1);
      dsym_[0] = dsym_[1] = 2;
      break;
    case 'G': // alpha_1 short, alpha_2 long
      edge(1, 2, -3, -1);
      dsym_[1] = 3;
      break;
    default:
      throw std::invalid_argument("invalid series");
  }

  // Positive roots: closure of the simple roots under the simple reflections.
  std::set<RootVec> pos;
  std::vector<RootVec> frontier;
  for (int i = 1; i <= n_; ++i) {
    RootVec e(n_, 0);
    e[i - 1] = 1;
    pos.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& v : frontier) {
      for (int i = 1; i <= n_; ++i) {
        RootVec w = reflect_root(i, v);
        bool positive = true;
        for (int c : w) positive = positive && c >= 0;
        if (positive && !is_zero(w) && pos.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  positive_roots_.assign(pos.begin(), pos.end());
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const RootVec& a, const RootVec& b) {
              int ha = 0, hb = 0;
              for (int c : a) ha += c;
              for (int c : b) hb += c;
              if (ha != hb) return ha < hb;
              return a < b;
            });

  // adj(B), det(B) for the symmetrised Cartan matrix; used to invert
  // Weyl-element matrices without rational arithmetic.
  std::vector<std::vector<Rat>> B(n_, std::vector<Rat>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) B[i][j] = Rat(dsym_[i]) * cartan_[i][j];
  auto [Binv, det] = invert(B);
  detB_ = rat_to_ll(Rat(det));
  adjB_.assign(n_, std::vector<long long>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) adjB_[i][j] = rat_to_ll(Binv[i][j] * det);
}

void RootSystem::check_dims(size_t got, const char* what) const {
  if (static_cast<int>(got) != n_)
    throw std::invalid_argument(std::string("dimension mismatch in ") + what);
}

RootVec RootSystem::simple_root(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("simple root index out of range");
  RootVec e(n_, 0);
  e[i - 1] = 1;
  return e;
}

CoweightVec RootSystem::simple_coroot(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("simple coroot index out of range");
  CoweightVec e(n_, Rat(0));
  e[i - 1] = 1;
  return e;
}

bool RootSystem::is_positive_root(const RootVec& v) const {
  return std::binary_search(positive_roots_.begin(), positive_roots_.end(), v,
                            [](const RootVec& a, const RootVec& b) {
                              int ha = 0, hb = 0;
                              for (int c : a) ha += c;
                              for (int c : b) hb += c;
                              if (ha != hb) return ha < hb;
                              return a < b;
                            });
}

bool RootSystem::is_root(const RootVec& v) const {
  return is_positive_root(v) || is_positive_root(negate(v));
}

RootVec RootSystem::reflect_root(int i, const RootVec& v) const {
  check_dims(v.size(), "reflect_root");
  long long p = 0;
  for (int j = 0; j < n_; ++j) p += static_cast<long long>(cartan_[i - 1][j]) * v[j];
  RootVec out(v);
  out[i - 1] -= static_cast<int>(p);
  return out;
}

CoweightVec RootSystem::reflect_coweight(int i, const CoweightVec& v) const {
  check_dims(v.size(), "reflect_coweight");
  Rat p(0);
  for (int k = 0; k < n_; ++k) p += v[k] * cartan_[k][i - 1];
  CoweightVec out(v);
  out[i - 1] -= p;
  return out;
}

Rat RootSystem::pairing(const CoweightVec& lambda, const RootVec& beta) const {
  check_dims(lambda.size(), "pairing");
  check_dims(beta.size(), "pairing");
  Rat out(0);
  for (int k = 0; k < n_; ++k) {
    if (lambda[k] == 0) continue;
    long long row = 0;
    for (int j = 0; j < n_; ++j) row += static_cast<long long>(cartan_[k][j]) * beta[j];
    out += lambda[k] * row;
  }
  return out;
}

CoweightVec RootSystem::fundamental_coweight(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("coweight index out of range");
  // Solve (C^T) m = e_i.
  std::vector<std::vector<Rat>> ct(n_, std::vector<Rat>(n_));
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) ct[r][c] = cartan_[c][r];
  auto [inv, det] = invert(ct);
  (void)det;
  CoweightVec m(n_);
  for (int r = 0; r < n_; ++r) m[r] = inv[r][i - 1];
  return m;
}

SimpleSubset RootSystem::orthogonal_simple_set(const CoweightVec& lambda) const {
  check_dims(lambda.size(), "orthogonal_simple_set");
  SimpleSubset out;
  for (int j = 1; j <= n_; ++j)
    if (pairing(lambda, simple_root(j)) == 0) out.insert(j);
  return out;
}

Int RootSystem::parabolic_order(SimpleSubset J) const {
  Int order = 1;
  std::vector<int> nodes = J.indices();
  std::set<int> left(nodes.begin(), nodes.end());
  auto factorial = [](int m) {
    Int f = 1;
    for (int k = 2; k <= m; ++k) f *= k;
    return f;
  };
  while (!left.empty()) {
    // Extract one connected component.
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t k = 0; k < comp.size(); ++k) {
      for (auto it = left.begin(); it != left.end();) {
        if (adjacent(comp[k], *it)) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    const int m = static_cast<int>(comp.size());
    int max_mult = 1, double_edges = 0;
    bool double_edge_internal = false;
    std::vector<int> degree(m, 0);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        if (!adjacent(comp[a], comp[b])) continue;
        ++degree[a];
        ++degree[b];
      }
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        if (!adjacent(comp[a], comp[b])) continue;
        int mult = cartan_[comp[a] - 1][comp[b] - 1] * cartan_[comp[b] - 1][comp[a] - 1];
        max_mult = std::max(max_mult, mult);
        if (mult == 2) {
          ++double_edges;
          if (degree[a] == 2 && degree[b] == 2) double_edge_internal = true;
        }
      }
    Int comp_order;
    if (max_mult == 3) {
      comp_order = 12; // G2
    } else if (max_mult == 2) {
      if (m == 4 && double_edge_internal) {
        comp_order = 1152; // F4
      } else {
        comp_order = factorial(m); // B/C
        comp_order <<= m;
      }
    } else {
      int branches = 0;
      for (int a = 0; a < m; ++a)
        if (degree[a] >= 3) ++branches;
      if (branches == 0) {
        comp_order = factorial(m + 1); // A
      } else {
        // Arm lengths from the unique branch node.
        int bn = 0;
        for (int a = 0; a < m; ++a)
          if (degree[a] >= 3) bn = a;
        std::vector<int> arms;
        for (int a = 0; a < m; ++a) {
          if (a == bn || !adjacent(comp[a], comp[bn])) continue;
          int len = 1, prev = comp[bn], cur = comp[a];
          for (;;) {
            int next = -1;
            for (int b = 0; b < m; ++b)
              if (comp[b] != prev && comp[b] != cur && adjacent(comp[b], cur)) next = comp[b];
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) {
          comp_order = factorial(m); // D
          comp_order <<= (m - 1);
        } else if (arms == std::vector<int>{1, 2, 2}) {
          comp_order = 51840; // E6
        } else if (arms == std::vector<int>{1, 2, 3}) {
          comp_order = 2903040; // E7
        } else if (arms == std::vector<int>{1, 2, 4}) {
          comp_order = 696729600; // E8
        } else {
          throw std::logic_error("unrecognised subdiagram component");
        }
      }
    }
    order *= comp_order;
  }
  return order;
}

} // namespace wcp
