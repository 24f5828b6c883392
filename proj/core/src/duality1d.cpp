#include "bordcalc/duality1d.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace bordcalc {

// ---------------------------------------------------------------------------
// Rational matrices.

RMatrix rmatrix_identity(std::size_t n) {
  RMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

RMatrix rmatrix_mul(const RMatrix& a, const RMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  RMatrix out(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < k; ++t) out[i][j] += a[i][t] * b[t][j];
  return out;
}

RMatrix rmatrix_transpose(const RMatrix& a) {
  if (a.empty()) return {};
  RMatrix out(a[0].size(), std::vector<Rational>(a.size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

bool rmatrix_equal(const RMatrix& a, const RMatrix& b) { return a == b; }

RMatrix rmatrix_inverse(const RMatrix& a) {
  const std::size_t n = a.size();
  RMatrix m = a;
  RMatrix inv = rmatrix_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return {};  // singular
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Words and terms.

std::string word1d_to_string(const Word1D& w) {
  std::string s;
  for (Letter1 l : w) s += l == Letter1::X ? 'X' : 'Y';
  return s.empty() ? "I" : s;
}

Term1D Term1D::id(Word1D w) {
  Term1D t;
  t.kind = Kind::Id;
  t.word = std::move(w);
  return t;
}
Term1D Term1D::e() {
  Term1D t;
  t.kind = Kind::E;
  return t;
}
Term1D Term1D::c() {
  Term1D t;
  t.kind = Kind::C;
  return t;
}
Term1D Term1D::swap(Letter1 a, Letter1 b) {
  Term1D t;
  t.kind = Kind::Swap;
  t.word = {a, b};
  return t;
}
Term1D Term1D::compose(std::vector<Term1D> fs) {
  Term1D t;
  t.kind = Kind::Compose;
  t.parts = std::move(fs);
  return t;
}
Term1D Term1D::tensor(std::vector<Term1D> fs) {
  Term1D t;
  t.kind = Kind::Tensor;
  t.parts = std::move(fs);
  return t;
}

Expected<Typing1D> type_term(const Term1D& t) {
  switch (t.kind) {
    case Term1D::Kind::Id:
      return Typing1D{t.word, t.word};
    case Term1D::Kind::E:
      return Typing1D{{Letter1::X, Letter1::Y}, {}};
    case Term1D::Kind::C:
      return Typing1D{{}, {Letter1::Y, Letter1::X}};
    case Term1D::Kind::Swap:
      return Typing1D{t.word, {t.word[1], t.word[0]}};
    case Term1D::Kind::Compose: {
      if (t.parts.empty()) return Error{ErrorCode::IllTyped, 0, "empty composite"};
      auto first = type_term(t.parts[0]);
      if (!first) return first.error();
      Typing1D typ = first.value();
      for (std::size_t i = 1; i < t.parts.size(); ++i) {
        auto tn = type_term(t.parts[i]);
        if (!tn) return tn.error();
        if (tn.value().source != typ.target)
          return Error{ErrorCode::IllTyped, i, "composite boundary mismatch"};
        typ.target = tn.value().target;
      }
      return typ;
    }
    case Term1D::Kind::Tensor: {
      Typing1D typ;
      for (const Term1D& part : t.parts) {
        auto tp = type_term(part);
        if (!tp) return tp.error();
        typ.source.insert(typ.source.end(), tp.value().source.begin(), tp.value().source.end());
        typ.target.insert(typ.target.end(), tp.value().target.begin(), tp.value().target.end());
      }
      return typ;
    }
  }
  return Error{ErrorCode::IllTyped, 0, "unknown term"};
}

// ---------------------------------------------------------------------------
// Matchings.

Matching1D matching_identity(const Word1D& w) {
  Matching1D m;
  m.source = w;
  m.target = w;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) m.pairs.emplace_back(i, n + i);
  return m;
}

namespace {

Matching1D matching_e() {
  Matching1D m;
  m.source = {Letter1::X, Letter1::Y};
  m.pairs.emplace_back(0, 1);
  return m;
}

Matching1D matching_c() {
  Matching1D m;
  m.target = {Letter1::Y, Letter1::X};
  m.pairs.emplace_back(0, 1);
  return m;
}

Matching1D matching_swap(Letter1 a, Letter1 b) {
  Matching1D m;
  m.source = {a, b};
  m.target = {b, a};
  m.pairs.emplace_back(0, 3);
  m.pairs.emplace_back(1, 2);
  return m;
}

void canonicalize(Matching1D& m) {
  for (auto& [a, b] : m.pairs)
    if (a > b) std::swap(a, b);
  std::sort(m.pairs.begin(), m.pairs.end());
}

}  // namespace

Expected<Matching1D> matching_compose(const Matching1D& f, const Matching1D& g) {
  if (f.target != g.source)
    return Error{ErrorCode::IllTyped, 0, "matching composition boundary mismatch"};
  const int nf = static_cast<int>(f.source.size());
  const int mid = static_cast<int>(f.target.size());
  const int ng = static_cast<int>(g.target.size());
  // External ids of the composite: 0..nf-1 source, nf..nf+ng-1 target.
  // Internal nodes: the mid-boundary, nodes 0..mid-1.
  // Build adjacency: each endpoint of f/g maps to either external or mid.
  struct End {
    bool external;
    int id;
  };
  auto f_end = [&](int e) -> End {
    return e < nf ? End{true, e} : End{false, e - nf};
  };
  auto g_end = [&](int e) -> End {
    return e < mid ? End{false, e} : End{true, nf + (e - mid)};
  };
  // Mid node -> its two pair-planes (from f side and g side).
  std::vector<std::array<End, 2>> link(mid);
  std::vector<int> link_count(mid, 0);
  std::vector<std::pair<End, End>> segments;
  for (auto& [a, b] : f.pairs) {
    End ea = f_end(a), eb = f_end(b);
    segments.push_back({ea, eb});
  }
  for (auto& [a, b] : g.pairs) {
    End ea = g_end(a), eb = g_end(b);
    segments.push_back({ea, eb});
  }
  // Walk segments, splicing through mid nodes.
  std::vector<std::vector<std::pair<int, int>>> at_mid(mid);  // (segment, side)
  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    if (!segments[s].first.external) at_mid[segments[s].first.id].push_back({s, 0});
    if (!segments[s].second.external) at_mid[segments[s].second.id].push_back({s, 1});
  }
  Matching1D out;
  out.source = f.source;
  out.target = g.target;
  out.loops = f.loops + g.loops;
  std::vector<bool> used(segments.size(), false);
  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    if (used[s]) continue;
    // Trace from segment s in both directions to externals or a loop.
    used[s] = true;
    std::array<End, 2> tips{segments[s].first, segments[s].second};
    bool loop = false;
    for (int dir = 0; dir < 2 && !loop; ++dir) {
      End tip = tips[dir];
      while (!tip.external) {
        // Move to the other segment at this mid node.
        auto& here = at_mid[tip.id];
        int next_seg = -1, next_side = -1;
        for (auto& [seg, side] : here) {
          if (!used[seg]) {
            next_seg = seg;
            next_side = side;
          }
        }
        if (next_seg < 0) {
          loop = true;  // closed a cycle back onto used segments
          break;
        }
        used[next_seg] = true;
        End other = next_side == 0 ? segments[next_seg].second : segments[next_seg].first;
        tip = other;
      }
      tips[dir] = tip;
    }
    if (loop) {
      out.loops++;
    } else {
      out.pairs.emplace_back(tips[0].id, tips[1].id);
    }
  }
  canonicalize(out);
  return out;
}

Matching1D matching_tensor(const Matching1D& f, const Matching1D& g) {
  Matching1D out;
  out.source = f.source;
  out.source.insert(out.source.end(), g.source.begin(), g.source.end());
  out.target = f.target;
  out.target.insert(out.target.end(), g.target.begin(), g.target.end());
  out.loops = f.loops + g.loops;
  const int nf = static_cast<int>(f.source.size());
  const int mf = static_cast<int>(f.target.size());
  const int ng = static_cast<int>(g.source.size());
  auto f_map = [&](int e) { return e < nf ? e : e + ng; };
  auto g_map = [&](int e) {
    return e < ng ? nf + e : nf + ng + mf + (e - ng);
  };
  for (auto& [a, b] : f.pairs) out.pairs.emplace_back(f_map(a), f_map(b));
  for (auto& [a, b] : g.pairs) out.pairs.emplace_back(g_map(a), g_map(b));
  canonicalize(out);
  return out;
}

Expected<Matching1D> normal_form_1d(const Term1D& t) {
  switch (t.kind) {
    case Term1D::Kind::Id:
      return matching_identity(t.word);
    case Term1D::Kind::E:
      return matching_e();
    case Term1D::Kind::C:
      return matching_c();
    case Term1D::Kind::Swap:
      return matching_swap(t.word[0], t.word[1]);
    case Term1D::Kind::Compose: {
      if (t.parts.empty()) return Error{ErrorCode::IllTyped, 0, "empty composite"};
      auto acc = normal_form_1d(t.parts[0]);
      if (!acc) return acc;
      Matching1D m = acc.value();
      for (std::size_t i = 1; i < t.parts.size(); ++i) {
        auto next = normal_form_1d(t.parts[i]);
        if (!next) return next;
        auto composed = matching_compose(m, next.value());
        if (!composed) return composed;
        m = composed.value();
      }
      return m;
    }
    case Term1D::Kind::Tensor: {
      Matching1D m;  // empty identity on I
      for (const Term1D& part : t.parts) {
        auto next = normal_form_1d(part);
        if (!next) return next;
        m = matching_tensor(m, next.value());
      }
      return m;
    }
  }
  return Error{ErrorCode::IllTyped, 0, "unknown term"};
}

Matching1D dual_of(const Matching1D& f) {
  // Conjugation reverses and flips both boundary words and exchanges their
  // roles: source endpoint i becomes target endpoint (reversed), and vice
  // versa.
  const int n = static_cast<int>(f.source.size());
  const int m = static_cast<int>(f.target.size());
  Matching1D out;
  auto flip_word = [](const Word1D& w) {
    Word1D out_w(w.rbegin(), w.rend());
    for (Letter1& l : out_w) l = l == Letter1::X ? Letter1::Y : Letter1::X;
    return out_w;
  };
  out.source = flip_word(f.target);
  out.target = flip_word(f.source);
  out.loops = f.loops;
  auto map_end = [&](int e) {
    if (e < n) return m + (n - 1 - e);  // old source -> new target, reversed
    return m - 1 - (e - n);             // old target -> new source, reversed
  };
  for (auto& [a, b] : f.pairs) out.pairs.emplace_back(map_end(a), map_end(b));
  canonicalize(out);
  return out;
}

// ---------------------------------------------------------------------------
// Matrix target.

MatrixPair MatrixPair::standard(std::size_t n) {
  MatrixPair p;
  p.e = rmatrix_identity(n);
  p.c = rmatrix_identity(n);
  return p;
}

bool MatrixPair::triangles_hold() const {
  if (e.empty() || c.empty()) return false;
  if (e.size() != c[0].size() || c.size() != e[0].size()) return false;
  if (e.size() != e[0].size()) return false;
  const auto id = rmatrix_identity(e.size());
  return rmatrix_equal(rmatrix_mul(e, c), id) && rmatrix_equal(rmatrix_mul(c, e), id);
}

RMatrix dual_of_matrix(const RMatrix& x, const MatrixPair& pair) {
  return rmatrix_mul(pair.c, rmatrix_mul(rmatrix_transpose(x), pair.e));
}

Expected<RMatrix> complete_iso(const RMatrix& x, const MatrixPair& p1, const MatrixPair& p2) {
  if (!p1.triangles_hold() || !p2.triangles_hold())
    return Error{ErrorCode::IllTyped, 0, "matrix pair does not satisfy the triangles"};
  const RMatrix xinv = rmatrix_inverse(x);
  if (xinv.empty()) return Error{ErrorCode::NotInvertible, 0, "x is singular"};
  // e2 (x (x) y) = e1  =>  x^T e2 y = e1  =>  y = e2^-1 x^-T e1; the
  // coevaluation condition then holds automatically.
  const RMatrix e2inv = rmatrix_inverse(p2.e);
  if (e2inv.empty()) return Error{ErrorCode::NotInvertible, 0, "e2 singular"};
  return rmatrix_mul(e2inv, rmatrix_mul(rmatrix_transpose(xinv), p1.e));
}

namespace {

std::size_t letter_dim(Letter1 l, const MatrixPair& p) {
  return l == Letter1::X ? p.dim_x() : p.dim_y();
}

std::size_t word_dim(const Word1D& w, const MatrixPair& p) {
  std::size_t d = 1;
  for (Letter1 l : w) d *= letter_dim(l, p);
  return d;
}

// Unrank a flat index into per-letter indices.
std::vector<std::size_t> unrank(std::size_t flat, const Word1D& w, const MatrixPair& p) {
  std::vector<std::size_t> idx(w.size());
  for (std::size_t i = w.size(); i-- > 0;) {
    const std::size_t d = letter_dim(w[i], p);
    idx[i] = flat % d;
    flat /= d;
  }
  return idx;
}

}  // namespace

Expected<RMatrix> evaluate_matching(const Matching1D& m, const MatrixPair& pair) {
  if (!pair.triangles_hold())
    return Error{ErrorCode::IllTyped, 0, "matrix pair does not satisfy the triangles"};
  const std::size_t rows = word_dim(m.target, pair);
  const std::size_t cols = word_dim(m.source, pair);
  const int n = static_cast<int>(m.source.size());
  Rational loop_factor(1);
  for (int l = 0; l < m.loops; ++l) loop_factor *= Rational(static_cast<long long>(pair.dim_x()));

  RMatrix out(rows, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto tidx = unrank(r, m.target, pair);
    for (std::size_t cidx = 0; cidx < cols; ++cidx) {
      const auto sidx = unrank(cidx, m.source, pair);
      auto value_at = [&](int endpoint) {
        return endpoint < n ? sidx[endpoint] : tidx[endpoint - n];
      };
      auto letter_at = [&](int endpoint) {
        return endpoint < n ? m.source[endpoint] : m.target[endpoint - n];
      };
      Rational prod = loop_factor;
      for (auto& [a, b] : m.pairs) {
        const Letter1 la = letter_at(a), lb = letter_at(b);
        const bool a_src = a < n, b_src = b < n;
        const std::size_t va = value_at(a), vb = value_at(b);
        if (a_src == b_src) {
          // Same side: an e (source side) or c (target side) pairing; the X
          // endpoint indexes the first tensor slot.
          const std::size_t xi = la == Letter1::X ? va : vb;
          const std::size_t yi = la == Letter1::X ? vb : va;
          prod = prod * (a_src ? pair.e[xi][yi] : pair.c[yi][xi]);
        } else {
          if (va != vb) {
            prod = Rational(0);
            break;
          }
        }
        if (prod.is_zero()) break;
      }
      out[r][cidx] = prod;
    }
  }
  return out;
}

Expected<RMatrix> evaluate_matrix(const Term1D& t, const MatrixPair& pair) {
  auto nf = normal_form_1d(t);
  if (!nf) return nf.error();
  return evaluate_matching(nf.value(), pair);
}

}  // namespace bordcalc
