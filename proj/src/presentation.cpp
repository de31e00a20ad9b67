#include "hallforge/presentation.hpp"

#include <cmath>

#include "hallforge/error.hpp"

namespace hallforge {

Presentation module_presentation(const Quiver& q) {
  Presentation p;
  p.num_spaces = q.num_vertices();
  for (const auto& a : q.arrows()) p.blocks.push_back({a.tgt, a.src});
  return p;
}

Rep zero_rep(const Presentation& p, const std::vector<int>& dims) {
  Rep r;
  r.dims = dims;
  for (const auto& b : p.blocks) r.maps.emplace_back(dims[b.target], dims[b.source]);
  return r;
}

void check_shapes(const Presentation& p, const Rep& r) {
  if (static_cast<int>(r.dims.size()) != p.num_spaces || r.maps.size() != p.blocks.size())
    throw ConfigError("representation does not match the quiver");
  for (size_t b = 0; b < p.blocks.size(); ++b)
    if (r.maps[b].rows != r.dims[p.blocks[b].target] || r.maps[b].cols != r.dims[p.blocks[b].source])
      throw ConfigError("matrix " + std::to_string(b) + " has the wrong shape");
}

bool satisfies_relations(const Presentation& p, const Fq& f, const Rep& r) {
  for (const auto& rel : p.relations) {
    if (rel.empty()) continue;
    const auto& first = rel.front();
    Matrix sum(r.dims[p.blocks[first.outer].target], r.dims[p.blocks[first.inner].source]);
    for (const auto& t : rel) {
      Matrix m = mul(f, r.maps[t.outer], r.maps[t.inner]);
      sum = t.sign > 0 ? add(f, sum, m) : sub(f, sum, m);
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

bool is_nilpotent(const Presentation& p, const Fq& f, const Rep& r) {
  std::vector<Matrix> w(p.num_spaces);
  int current = 0;
  for (int s = 0; s < p.num_spaces; ++s) {
    w[s] = Matrix::identity(r.dims[s]);
    current += r.dims[s];
  }
  while (current > 0) {
    std::vector<Matrix> next(p.num_spaces);
    for (int s = 0; s < p.num_spaces; ++s) next[s] = Matrix(r.dims[s], 0);
    for (size_t b = 0; b < p.blocks.size(); ++b) {
      const auto& bl = p.blocks[b];
      if (w[bl.source].cols == 0) continue;
      next[bl.target] = hstack(next[bl.target], mul(f, r.maps[b], w[bl.source]));
    }
    int nt = 0;
    for (int s = 0; s < p.num_spaces; ++s) {
      next[s] = column_basis(f, next[s]);
      nt += next[s].cols;
    }
    if (nt == current) return false;
    current = nt;
    w = std::move(next);
  }
  return true;
}

Rep direct_sum(const Rep& x, const Rep& y) {
  Rep r;
  for (size_t s = 0; s < x.dims.size(); ++s) r.dims.push_back(x.dims[s] + y.dims[s]);
  for (size_t b = 0; b < x.maps.size(); ++b) r.maps.push_back(block_diag(x.maps[b], y.maps[b]));
  return r;
}

Rep transport(const Presentation& p, const Fq& f, const Rep& x, const Morphism& g) {
  std::vector<Matrix> ginv;
  for (const auto& m : g) {
    auto inv = inverse(f, m);
    if (!inv) throw DomainError("transport along a non-invertible map");
    ginv.push_back(*inv);
  }
  Rep r = x;
  for (size_t b = 0; b < p.blocks.size(); ++b)
    r.maps[b] = mul(f, mul(f, g[p.blocks[b].target], x.maps[b]), ginv[p.blocks[b].source]);
  return r;
}

bool is_morphism(const Presentation& p, const Fq& f, const Rep& x, const Rep& y, const Morphism& m) {
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    const auto& bl = p.blocks[b];
    if (mul(f, y.maps[b], m[bl.source]) != mul(f, m[bl.target], x.maps[b])) return false;
  }
  return true;
}

namespace {

struct HomSystem {
  std::vector<int> offsets;
  int unknowns = 0;
  Matrix equations;
};

HomSystem hom_system(const Presentation& p, const Fq& f, const Rep& x, const Rep& y) {
  HomSystem h;
  for (int s = 0; s < p.num_spaces; ++s) {
    h.offsets.push_back(h.unknowns);
    h.unknowns += y.dims[s] * x.dims[s];
  }
  int rows = 0;
  for (const auto& bl : p.blocks) rows += y.dims[bl.target] * x.dims[bl.source];
  h.equations = Matrix(rows, h.unknowns);
  int row = 0;
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    const auto& bl = p.blocks[b];
    int s = bl.source, t = bl.target;
    for (int i = 0; i < y.dims[t]; ++i)
      for (int j = 0; j < x.dims[s]; ++j, ++row) {
        // (Y_b f_s)(i,j) - (f_t X_b)(i,j)
        for (int k = 0; k < y.dims[s]; ++k) {
          auto& e = h.equations(row, h.offsets[s] + k * x.dims[s] + j);
          e = f.add(e, y.maps[b](i, k));
        }
        for (int k = 0; k < x.dims[t]; ++k) {
          auto& e = h.equations(row, h.offsets[t] + i * x.dims[t] + k);
          e = f.sub(e, x.maps[b](k, j));
        }
      }
  }
  return h;
}

Morphism unpack(const HomSystem& h, const Rep& x, const Rep& y, const std::vector<std::uint8_t>& vec) {
  Morphism m;
  for (size_t s = 0; s < x.dims.size(); ++s) {
    Matrix fs(y.dims[s], x.dims[s]);
    for (int i = 0; i < fs.rows; ++i)
      for (int j = 0; j < fs.cols; ++j) fs(i, j) = vec[h.offsets[s] + i * fs.cols + j];
    m.push_back(fs);
  }
  return m;
}

// Iterates all F_q-combinations of the columns of basis.
template <class Fn>
void for_each_combination(const Fq& f, const Matrix& basis, int max_bits, Fn fn) {
  double bits = basis.cols * std::log2(static_cast<double>(f.q()));
  if (bits > max_bits) throw ResourceError("enumeration of a " + std::to_string(basis.cols) +
                                           "-dimensional space over F_" + std::to_string(f.q()) +
                                           " exceeds the bound");
  std::vector<std::uint8_t> coeff(basis.cols, 0), vec(basis.rows, 0);
  while (true) {
    std::fill(vec.begin(), vec.end(), 0);
    for (int k = 0; k < basis.cols; ++k)
      if (coeff[k])
        for (int r = 0; r < basis.rows; ++r) vec[r] = f.add(vec[r], f.mul(coeff[k], basis(r, k)));
    if (fn(vec)) return;
    int k = 0;
    while (k < basis.cols && ++coeff[k] == f.q()) coeff[k++] = 0;
    if (k == basis.cols) return;
  }
}

}  // namespace

std::vector<Morphism> hom_basis(const Presentation& p, const Fq& f, const Rep& x, const Rep& y) {
  HomSystem h = hom_system(p, f, x, y);
  Matrix n = nullspace(f, h.equations);
  std::vector<Morphism> out;
  for (int k = 0; k < n.cols; ++k) {
    std::vector<std::uint8_t> vec(n.rows);
    for (int r = 0; r < n.rows; ++r) vec[r] = n(r, k);
    out.push_back(unpack(h, x, y, vec));
  }
  return out;
}

int hom_dim(const Presentation& p, const Fq& f, const Rep& x, const Rep& y) {
  HomSystem h = hom_system(p, f, x, y);
  return h.unknowns - rank(f, h.equations);
}

BigInt count_automorphisms(const Presentation& p, const Fq& f, const Rep& x, int max_bits) {
  HomSystem h = hom_system(p, f, x, x);
  Matrix n = nullspace(f, h.equations);
  BigInt count = 0;
  for_each_combination(f, n, max_bits, [&](const std::vector<std::uint8_t>& vec) {
    Morphism m = unpack(h, x, x, vec);
    bool inv = true;
    for (const auto& ms : m) inv = inv && is_invertible(f, ms);
    if (inv) ++count;
    return false;
  });
  return count;
}

bool isomorphic(const Presentation& p, const Fq& f, const Rep& x, const Rep& y, int max_bits) {
  if (x.dims != y.dims) return false;
  HomSystem h = hom_system(p, f, x, y);
  Matrix n = nullspace(f, h.equations);
  bool found = false;
  for_each_combination(f, n, max_bits, [&](const std::vector<std::uint8_t>& vec) {
    Morphism m = unpack(h, x, y, vec);
    bool inv = true;
    for (const auto& ms : m) inv = inv && is_invertible(f, ms);
    found = inv;
    return found;
  });
  return found;
}

Rep ExtensionSpace::middle(const Fq& f, const std::vector<std::uint8_t>& coeffs) const {
  std::vector<std::uint8_t> c(unknowns, 0);
  for (int k = 0; k < cocycles.cols; ++k)
    if (coeffs[k])
      for (int r = 0; r < unknowns; ++r) c[r] = f.add(c[r], f.mul(coeffs[k], cocycles(r, k)));
  Rep e;
  for (size_t s = 0; s < sub.dims.size(); ++s) e.dims.push_back(sub.dims[s] + quotient.dims[s]);
  for (size_t b = 0; b < sub.maps.size(); ++b) {
    const Matrix& sb = sub.maps[b];
    const Matrix& qb = quotient.maps[b];
    Matrix m(sb.rows + qb.rows, sb.cols + qb.cols);
    set_block(m, 0, 0, sb);
    set_block(m, sb.rows, sb.cols, qb);
    for (int i = 0; i < sb.rows; ++i)
      for (int j = 0; j < qb.cols; ++j) m(i, sb.cols + j) = c[offsets[b] + i * qb.cols + j];
    e.maps.push_back(std::move(m));
  }
  return e;
}

ExtensionSpace extension_space(const Presentation& p, const Fq& f, const Rep& quotient, const Rep& sub) {
  ExtensionSpace x;
  x.quotient = quotient;
  x.sub = sub;
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    x.offsets.push_back(x.unknowns);
    x.unknowns += sub.dims[p.blocks[b].target] * quotient.dims[p.blocks[b].source];
  }
  for (int s = 0; s < p.num_spaces; ++s) x.normaliser += quotient.dims[s] * sub.dims[s];
  int rows = 0;
  for (const auto& rel : p.relations)
    if (!rel.empty())
      rows += sub.dims[p.blocks[rel.front().outer].target] * quotient.dims[p.blocks[rel.front().inner].source];
  Matrix eq(rows, x.unknowns);
  int row0 = 0;
  for (const auto& rel : p.relations) {
    if (rel.empty()) continue;
    int nr = sub.dims[p.blocks[rel.front().outer].target];
    int nc = quotient.dims[p.blocks[rel.front().inner].source];
    for (const auto& t : rel) {
      std::uint8_t sg = t.sign > 0 ? 1 : f.neg(1);
      const Matrix& so = sub.maps[t.outer];
      const Matrix& qi = quotient.maps[t.inner];
      int ci_cols = quotient.dims[p.blocks[t.inner].source];
      int co_cols = quotient.dims[p.blocks[t.outer].source];
      for (int r = 0; r < nr; ++r)
        for (int col = 0; col < nc; ++col) {
          // sub_o * c_i
          for (int k = 0; k < so.cols; ++k) {
            auto& e = eq(row0 + r * nc + col, x.offsets[t.inner] + k * ci_cols + col);
            e = f.add(e, f.mul(sg, so(r, k)));
          }
          // c_o * quot_i
          for (int k = 0; k < qi.rows; ++k) {
            auto& e = eq(row0 + r * nc + col, x.offsets[t.outer] + r * co_cols + k);
            e = f.add(e, f.mul(sg, qi(k, col)));
          }
        }
    }
    row0 += nr * nc;
  }
  x.cocycles = rows == 0 ? Matrix::identity(x.unknowns) : nullspace(f, eq);
  return x;
}

int ext1_dim_direct(const Presentation& p, const Fq& f, const Rep& x, const Rep& z) {
  ExtensionSpace e = extension_space(p, f, x, z);
  return e.cocycle_dim() - (e.normaliser - hom_dim(p, f, x, z));
}

std::vector<Matrix> all_subspaces(const Fq& f, int n, int k) {
  std::vector<Matrix> out;
  if (k < 0 || k > n) return out;
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < n; ++c)
        if (!is_piv[c]) free.emplace_back(r, c);
    std::vector<std::uint8_t> val(free.size(), 0);
    while (true) {
      Matrix b(n, k);
      for (int r = 0; r < k; ++r) b(piv[r], r) = 1;
      for (size_t t = 0; t < free.size(); ++t) b(free[t].second, free[t].first) = val[t];
      out.push_back(std::move(b));
      size_t t = 0;
      while (t < free.size() && ++val[t] == f.q()) val[t++] = 0;
      if (t == free.size()) break;
    }
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

SubobjectEnumerator::SubobjectEnumerator(const Presentation& p, const Fq& f, const Rep& y,
                                         const std::vector<int>& sub_dims)
    : p_(p), f_(f), y_(y), sub_dims_(sub_dims), choices_(p.num_spaces) {
  for (int s = 0; s < p.num_spaces; ++s)
    if (sub_dims[s] < 0 || sub_dims[s] > y.dims[s]) return;
  size_ = 1;
  for (int s = 0; s < p.num_spaces; ++s) {
    for (auto& u : all_subspaces(f, y.dims[s], sub_dims[s])) {
      Matrix c = complement_basis(f, u);
      Matrix full = hstack(u, c);
      choices_[s].push_back({u, c, *inverse(f, full)});
    }
    size_ *= choices_[s].size();
  }
}

bool SubobjectEnumerator::get(std::uint64_t index, Rep& sub, Rep& quot) const {
  std::vector<size_t> idx(p_.num_spaces);
  for (int s = 0; s < p_.num_spaces; ++s) {
    idx[s] = index % choices_[s].size();
    index /= choices_[s].size();
  }
  sub.dims = sub_dims_;
  sub.maps.clear();
  quot.dims.clear();
  quot.maps.clear();
  for (int s = 0; s < p_.num_spaces; ++s) quot.dims.push_back(y_.dims[s] - sub_dims_[s]);
  for (size_t b = 0; b < p_.blocks.size(); ++b) {
    const auto& bl = p_.blocks[b];
    const Choice& cs = choices_[bl.source][idx[bl.source]];
    const Choice& ct = choices_[bl.target][idx[bl.target]];
    Matrix img = mul(f_, ct.pinv, mul(f_, y_.maps[b], cs.u));
    int kt = sub_dims_[bl.target];
    for (int i = kt; i < img.rows; ++i)
      for (int j = 0; j < img.cols; ++j)
        if (img(i, j) != 0) return false;
    sub.maps.push_back(submatrix(img, 0, kt, 0, img.cols));
    Matrix qimg = mul(f_, ct.pinv, mul(f_, y_.maps[b], cs.c));
    quot.maps.push_back(submatrix(qimg, kt, qimg.rows - kt, 0, qimg.cols));
  }
  return true;
}

void for_each_subobject(const Presentation& p, const Fq& f, const Rep& y, const std::vector<int>& sub_dims,
                        const std::function<void(const Rep&, const Rep&)>& fn) {
  SubobjectEnumerator en(p, f, y, sub_dims);
  Rep sub, quot;
  for (std::uint64_t i = 0; i < en.size(); ++i)
    if (en.get(i, sub, quot)) fn(sub, quot);
}

}  // namespace hallforge
