#include "hallforge/complex.hpp"

#include "hallforge/error.hpp"
#include "hallforge/kernels.hpp"
#include "hallforge/qcomb.hpp"

namespace hallforge {

Presentation complex_presentation(const Quiver& q) {
  const int n = q.num_vertices();
  const int na = q.num_arrows();
  Presentation p;
  p.num_spaces = 2 * n;
  for (int deg = 0; deg < 2; ++deg)
    for (const auto& a : q.arrows()) p.blocks.push_back({a.tgt + deg * n, a.src + deg * n});
  for (int v = 0; v < n; ++v) p.blocks.push_back({n + v, v});  // d0
  for (int v = 0; v < n; ++v) p.blocks.push_back({v, n + v});  // d1
  auto arrow = [&](int a, int deg) { return deg * na + a; };
  auto d = [&](int v, int deg) { return 2 * na + deg * n + v; };
  for (int v = 0; v < n; ++v) {
    p.relations.push_back({{1, d(v, 1), d(v, 0)}});
    p.relations.push_back({{1, d(v, 0), d(v, 1)}});
  }
  for (int a = 0; a < na; ++a)
    for (int deg = 0; deg < 2; ++deg) {
      const auto& ar = q.arrow(a);
      p.relations.push_back({{1, d(ar.tgt, deg), arrow(a, deg)}, {-1, arrow(a, 1 - deg), d(ar.src, deg)}});
    }
  return p;
}

Rep subquotient(const Presentation& p, const Fq& f, const Rep& m, const std::vector<Matrix>& w,
                const std::vector<Matrix>& u) {
  const int ns = p.num_spaces;
  std::vector<Matrix> comp(ns), pinv(ns);
  Rep out;
  for (int s = 0; s < ns; ++s) {
    auto x = solve(f, w[s], u[s]);
    if (!x) throw InternalError("subquotient: U is not contained in W");
    comp[s] = complement_basis(f, *x);
    pinv[s] = *inverse(f, hstack(*x, comp[s]));
    out.dims.push_back(comp[s].cols);
  }
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    const auto& bl = p.blocks[b];
    Matrix img = mul(f, m.maps[b], mul(f, w[bl.source], comp[bl.source]));
    auto coords = solve(f, w[bl.target], img);
    if (!coords) throw InternalError("subquotient: W is not a subrepresentation");
    Matrix full = mul(f, pinv[bl.target], *coords);
    int ut = u[bl.target].cols;
    out.maps.push_back(submatrix(full, ut, full.rows - ut, 0, full.cols));
  }
  return out;
}

ComplexCategory::ComplexCategory(const RepCategory& reps)
    : reps_(reps),
      catalog_(complex_presentation(reps.quiver()), reps.q(), reps.mode(), reps.bounds(), "cx-" + reps.hash()) {}

std::vector<int> ComplexCategory::space_dims(const DimVec& d0, const DimVec& d1) const {
  std::vector<int> d = d0;
  d.insert(d.end(), d1.begin(), d1.end());
  return d;
}

Rep ComplexCategory::to_rep(const Cx& c) const {
  Rep r;
  r.dims = space_dims(c.m0.dims, c.m1.dims);
  r.maps = c.m0.maps;
  r.maps.insert(r.maps.end(), c.m1.maps.begin(), c.m1.maps.end());
  r.maps.insert(r.maps.end(), c.d0.begin(), c.d0.end());
  r.maps.insert(r.maps.end(), c.d1.begin(), c.d1.end());
  return r;
}

Cx ComplexCategory::from_rep(const Rep& r) const {
  const int n = num_vertices();
  const int na = reps_.quiver().num_arrows();
  Cx c;
  c.m0.dims.assign(r.dims.begin(), r.dims.begin() + n);
  c.m1.dims.assign(r.dims.begin() + n, r.dims.end());
  c.m0.maps.assign(r.maps.begin(), r.maps.begin() + na);
  c.m1.maps.assign(r.maps.begin() + na, r.maps.begin() + 2 * na);
  c.d0.assign(r.maps.begin() + 2 * na, r.maps.begin() + 2 * na + n);
  c.d1.assign(r.maps.begin() + 2 * na + n, r.maps.end());
  return c;
}

Cx ComplexCategory::zero() const { return C(reps_.zero(DimVec(num_vertices(), 0))); }

Cx ComplexCategory::K(const Rep& x) const {
  Cx c{x, x, {}, {}};
  for (int v = 0; v < num_vertices(); ++v) {
    c.d0.push_back(Matrix::identity(x.dims[v]));
    c.d1.emplace_back(x.dims[v], x.dims[v]);
  }
  return c;
}

Cx ComplexCategory::Kstar(const Rep& x) const {
  Cx c{x, x, {}, {}};
  for (int v = 0; v < num_vertices(); ++v) {
    c.d0.emplace_back(x.dims[v], x.dims[v]);
    c.d1.push_back(Matrix::identity(x.dims[v]));
  }
  return c;
}

Cx ComplexCategory::C(const Rep& x) const {
  Rep z = reps_.zero(DimVec(num_vertices(), 0));
  Cx c{z, x, {}, {}};
  for (int v = 0; v < num_vertices(); ++v) {
    c.d0.emplace_back(x.dims[v], 0);
    c.d1.emplace_back(0, x.dims[v]);
  }
  return c;
}

Cx ComplexCategory::Cstar(const Rep& x) const {
  Rep z = reps_.zero(DimVec(num_vertices(), 0));
  Cx c{x, z, {}, {}};
  for (int v = 0; v < num_vertices(); ++v) {
    c.d0.emplace_back(0, x.dims[v]);
    c.d1.emplace_back(x.dims[v], 0);
  }
  return c;
}

Cx ComplexCategory::shift(const Cx& m) const {
  const Fq& f = field();
  Cx s{m.m1, m.m0, {}, {}};
  for (int v = 0; v < num_vertices(); ++v) {
    s.d0.push_back(scale(f, f.neg(1), m.d1[v]));
    s.d1.push_back(scale(f, f.neg(1), m.d0[v]));
  }
  return s;
}

Cx ComplexCategory::sum(const Cx& a, const Cx& b) const { return from_rep(direct_sum(to_rep(a), to_rep(b))); }

bool ComplexCategory::is_valid(const Cx& m) const {
  Rep r = to_rep(m);
  check_shapes(presentation(), r);
  return catalog_.valid(r);
}

void ComplexCategory::check(const Cx& m) const {
  if (!is_valid(m)) throw ConfigError("not a valid " + mode_name(reps_.mode()) + " complex");
}

Homology ComplexCategory::homology(const Cx& m) const {
  const Fq& f = field();
  const Presentation& mp = reps_.presentation();
  const int n = num_vertices();
  std::vector<Matrix> ker0(n), ker1(n), im0(n), im1(n);
  Homology h;
  for (int v = 0; v < n; ++v) {
    ker0[v] = nullspace(f, m.d0[v]);
    ker1[v] = nullspace(f, m.d1[v]);
    im0[v] = column_basis(f, m.d0[v]);
    im1[v] = column_basis(f, m.d1[v]);
    h.im0.push_back(im0[v].cols);
    h.im1.push_back(im1[v].cols);
  }
  h.h0 = subquotient(mp, f, m.m0, ker0, im1);
  h.h1 = subquotient(mp, f, m.m1, ker1, im0);
  return h;
}

HomologyClass ComplexCategory::homology_class(const Cx& m) const {
  Homology h = homology(m);
  return {reps_.classify(h.h0), reps_.classify(h.h1), h.im0, h.im1};
}

bool ComplexCategory::is_acyclic(const Cx& m) const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (rank(field(), m.d0[v]) + rank(field(), m.d1[v]) != m.m0.dims[v]) return false;
    if (rank(field(), m.d0[v]) + rank(field(), m.d1[v]) != m.m1.dims[v]) return false;
  }
  return true;
}

int ComplexCategory::hom_dim(const Cx& l, const Cx& m) const {
  return hallforge::hom_dim(presentation(), field(), to_rep(l), to_rep(m));
}

int ComplexCategory::ext1_dim(const Cx& l, const Cx& m) const {
  return ext1_dim_direct(presentation(), field(), to_rep(l), to_rep(m));
}

BigInt ComplexCategory::aut_size_bruteforce(const Cx& m) const {
  return count_automorphisms(presentation(), field(), to_rep(m), reps_.bounds().max_enum_bits);
}

bool ComplexCategory::isomorphic(const Cx& a, const Cx& b) const {
  return hallforge::isomorphic(presentation(), field(), to_rep(a), to_rep(b), reps_.bounds().max_enum_bits);
}

CxClass ComplexCategory::classify(const Cx& m) const {
  Rep r = to_rep(m);
  check_shapes(presentation(), r);
  return {m.m0.dims, m.m1.dims, catalog_.classify(r)};
}

std::vector<CxClass> ComplexCategory::enumerate(const DimVec& dim0, const DimVec& dim1) const {
  std::vector<CxClass> out;
  int cnt = catalog_.count(space_dims(dim0, dim1));
  for (int i = 0; i < cnt; ++i) out.push_back({dim0, dim1, i});
  return out;
}

Cx ComplexCategory::representative(const CxClass& c) const {
  return from_rep(catalog_.representative(space_dims(c.dim0, c.dim1), c.index));
}

BigInt ComplexCategory::aut_size(const CxClass& c) const {
  return catalog_.aut_size(space_dims(c.dim0, c.dim1), c.index);
}

std::string ComplexCategory::id(const CxClass& c) const {
  return reps_.hash() + ":" + format_dims(c.dim0) + "/" + format_dims(c.dim1) + ":" + std::to_string(c.index);
}

BigInt ComplexCategory::hall_number(const CxClass& l, const CxClass& m, const CxClass& e, Exec exec) const {
  if (l.dim0 + m.dim0 != e.dim0 || l.dim1 + m.dim1 != e.dim1) return 0;
  Rep re = to_rep(representative(e));
  SubobjectEnumerator en(presentation(), field(), re, space_dims(m.dim0, m.dim1));
  std::uint64_t n = count_subobjects(en, exec, [&](const Rep& sub, const Rep& quot) {
    return catalog_.classify(sub) == m.index && catalog_.classify(quot) == l.index;
  });
  return BigInt(static_cast<unsigned long>(n));
}

std::map<CxClass, Rational> ComplexCategory::extension_weights(const Cx& l, const Cx& m, Exec exec) const {
  ExtensionSpace ext = extension_space(presentation(), field(), to_rep(l), to_rep(m));
  auto tally = tally_extensions<int>(ext, field(), reps_.bounds().max_enum_bits, exec,
                                     [&](const Rep& e) { return catalog_.classify(e); });
  std::map<CxClass, Rational> out;
  BigInt denom = int_pow(reps_.q(), ext.normaliser);
  for (const auto& [idx, cnt] : tally) {
    Rational w(BigInt(static_cast<unsigned long>(cnt)), denom);
    w.canonicalize();
    out[CxClass{l.m0.dims + m.m0.dims, l.m1.dims + m.m1.dims, idx}] = w;
  }
  return out;
}

nlohmann::json ComplexCategory::to_json(const Cx& m) const {
  nlohmann::json d0 = nlohmann::json::array(), d1 = nlohmann::json::array();
  for (const auto& x : m.d0) d0.push_back(matrix_to_json(x));
  for (const auto& x : m.d1) d1.push_back(matrix_to_json(x));
  return {{"M0", reps_.rep_to_json(m.m0)}, {"M1", reps_.rep_to_json(m.m1)}, {"d0", d0}, {"d1", d1}};
}

Cx ComplexCategory::from_json(const nlohmann::json& j) const {
  if (!j.is_object() || !j.contains("M0") || !j.contains("M1"))
    throw ConfigError("complex JSON needs \"M0\" and \"M1\"");
  Cx c;
  c.m0 = reps_.rep_from_json(j["M0"]);
  c.m1 = reps_.rep_from_json(j["M1"]);
  const int n = num_vertices();
  for (int v = 0; v < n; ++v) {
    c.d0.emplace_back(c.m1.dims[v], c.m0.dims[v]);
    c.d1.emplace_back(c.m0.dims[v], c.m1.dims[v]);
  }
  auto read = [&](const char* key, std::vector<Matrix>& ds) {
    if (!j.contains(key)) return;
    const auto& arr = j[key];
    if (!arr.is_array() || static_cast<int>(arr.size()) != n)
      throw ConfigError(std::string("\"") + key + "\" needs one matrix per vertex");
    for (int v = 0; v < n; ++v) ds[v] = matrix_from_json(arr[v], ds[v].rows, ds[v].cols, field());
  };
  read("d0", c.d0);
  read("d1", c.d1);
  check(c);
  return c;
}

}  // namespace hallforge
