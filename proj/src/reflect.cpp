#include "hallforge/reflect.hpp"

#include "hallforge/error.hpp"
#include "hallforge/qcomb.hpp"

namespace hallforge {

namespace {

std::vector<int> arrows_at(const Quiver& q, int l, bool incoming) {
  std::vector<int> out;
  for (int a = 0; a < q.num_arrows(); ++a)
    if ((incoming ? q.arrow(a).tgt : q.arrow(a).src) == l) out.push_back(a);
  return out;
}

void require_sink(const Quiver& q, int l) {
  if (l < 0 || l >= q.num_vertices()) throw ConfigError("reflection vertex out of range");
  if (q.loops(l) > 0) throw DomainError("reflections are only defined at loop-free vertices");
  if (!q.is_sink(l)) throw DomainError("vertex " + q.vertices()[l] + " is not a sink");
  if (arrows_at(q, l, true).empty()) throw DomainError("reflection at an isolated vertex is not supported");
}

void require_source(const Quiver& q, int l) {
  if (l < 0 || l >= q.num_vertices()) throw ConfigError("reflection vertex out of range");
  if (q.loops(l) > 0) throw DomainError("reflections are only defined at loop-free vertices");
  if (!q.is_source(l)) throw DomainError("vertex " + q.vertices()[l] + " is not a source");
  if (arrows_at(q, l, false).empty()) throw DomainError("reflection at an isolated vertex is not supported");
}

/// The sum of the maps into l, as one matrix on the stacked sources.
Matrix incoming_map(const Quiver& q, const Rep& m, int l) {
  Matrix big(m.dims[l], 0);
  for (int a : arrows_at(q, l, true)) big = hstack(big, m.maps[a]);
  return big;
}

Matrix outgoing_map(const Quiver& q, const Rep& m, int l) {
  Matrix big(0, m.dims[l]);
  for (int a : arrows_at(q, l, false)) big = vstack(big, m.maps[a]);
  return big;
}

Matrix stacked_diag(const Quiver& q, const Morphism& g, int l, bool incoming) {
  Matrix d;
  for (int a : arrows_at(q, l, incoming)) {
    int j = incoming ? q.arrow(a).src : q.arrow(a).tgt;
    d = block_diag(d, g[j]);
  }
  return d;
}

/// <res L, res M> on the two degrees separately.
int res_euler(const Quiver& q, const Cx& l, const Cx& m) {
  return euler_form(q, l.m0.dims, m.m0.dims) + euler_form(q, l.m1.dims, m.m1.dims);
}

Matrix head(int n, int total) {  // [I_n | 0], n x total
  Matrix m(n, total);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

/// Builds X from M by adding y0 + y1 dimensions at j, with the given maps
/// between the new part and the old space at l.
struct Extra {
  int j;
  int arrow;
  int y0;
  int y1;
};

Cx add_neighbour_part(const ComplexCategory& cc, const Cx& m, const Extra& e, const Matrix (&c)[2][2],
                      bool at_sink) {
  const Fq& f = cc.field();
  const Quiver& q = cc.reps().quiver();
  const int y = e.y0 + e.y1;
  Cx x = m;
  for (int deg = 0; deg < 2; ++deg) {
    const Rep& src = deg == 0 ? m.m0 : m.m1;
    Rep& r = deg == 0 ? x.m0 : x.m1;
    r.dims[e.j] += y;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrow(a);
      const Matrix& old = src.maps[a];
      if (a == e.arrow) {
        r.maps[a] = at_sink ? hstack(hstack(old, c[deg][0]), c[deg][1]) : vstack(vstack(c[deg][0], c[deg][1]), old);
      } else if (ar.src == e.j && ar.tgt == e.j) {
        r.maps[a] = at_sink ? block_diag(old, Matrix(y, y)) : block_diag(Matrix(y, y), old);
      } else if (ar.src == e.j) {
        r.maps[a] = at_sink ? hstack(old, Matrix(old.rows, y)) : hstack(Matrix(old.rows, y), old);
      } else if (ar.tgt == e.j) {
        r.maps[a] = at_sink ? vstack(old, Matrix(y, old.cols)) : vstack(Matrix(y, old.cols), old);
      }
    }
  }
  // On the new part d0 = [[I,0],[0,0]], d1 = [[0,0],[0,I]] at a sink (T = K_{Y0} + K*_{Y1})
  // and the other way round at a source (T = K*_{Y0} + K_{Y1}).
  Matrix p0(y, y), p1(y, y);
  for (int i = 0; i < e.y0; ++i) p0(i, i) = 1;
  for (int i = e.y0; i < y; ++i) p1(i, i) = 1;
  if (!at_sink) std::swap(p0, p1);
  x.d0[e.j] = at_sink ? block_diag(m.d0[e.j], p0) : block_diag(p0, m.d0[e.j]);
  x.d1[e.j] = at_sink ? block_diag(m.d1[e.j], p1) : block_diag(p1, m.d1[e.j]);
  cc.check(x);
  (void)f;
  return x;
}

}  // namespace

Rep bgp_plus(const Quiver& q, const Fq& f, const Rep& m, int l) {
  require_sink(q, l);
  Matrix k = nullspace(f, incoming_map(q, m, l));
  Rep r = m;
  r.dims[l] = k.cols;
  int off = 0;
  for (int a : arrows_at(q, l, true)) {
    int d = m.dims[q.arrow(a).src];
    r.maps[a] = submatrix(k, off, d, 0, k.cols);
    off += d;
  }
  return r;
}

Morphism bgp_plus(const Quiver& q, const Fq& f, const Rep& m, const Rep& n, const Morphism& g, int l) {
  require_sink(q, l);
  Matrix km = nullspace(f, incoming_map(q, m, l));
  Matrix kn = nullspace(f, incoming_map(q, n, l));
  auto s = solve(f, kn, mul(f, stacked_diag(q, g, l, true), km));
  if (!s) throw InternalError("bgp_plus: morphism does not restrict to the kernels");
  Morphism out = g;
  out[l] = *s;
  return out;
}

Cx bgp_plus(const Quiver& q, const Fq& f, const Cx& m, int l) {
  return {bgp_plus(q, f, m.m0, l), bgp_plus(q, f, m.m1, l), bgp_plus(q, f, m.m0, m.m1, m.d0, l),
          bgp_plus(q, f, m.m1, m.m0, m.d1, l)};
}

Rep bgp_minus(const Quiver& q, const Fq& f, const Rep& m, int l) {
  require_source(q, l);
  Matrix p = left_nullspace(f, outgoing_map(q, m, l));
  Rep r = m;
  r.dims[l] = p.rows;
  int off = 0;
  for (int a : arrows_at(q, l, false)) {
    int d = m.dims[q.arrow(a).tgt];
    r.maps[a] = submatrix(p, 0, p.rows, off, d);
    off += d;
  }
  return r;
}

Morphism bgp_minus(const Quiver& q, const Fq& f, const Rep& m, const Rep& n, const Morphism& g, int l) {
  require_source(q, l);
  Matrix pm = left_nullspace(f, outgoing_map(q, m, l));
  Matrix pn = left_nullspace(f, outgoing_map(q, n, l));
  auto right_inv = solve(f, pm, Matrix::identity(pm.rows));
  if (!right_inv) throw InternalError("bgp_minus: cokernel projection is not surjective");
  Morphism out = g;
  out[l] = mul(f, mul(f, pn, stacked_diag(q, g, l, false)), *right_inv);
  return out;
}

Cx bgp_minus(const Quiver& q, const Fq& f, const Cx& m, int l) {
  return {bgp_minus(q, f, m.m0, l), bgp_minus(q, f, m.m1, l), bgp_minus(q, f, m.m0, m.m1, m.d0, l),
          bgp_minus(q, f, m.m1, m.m0, m.d1, l)};
}

Resolution sink_resolution(const ComplexCategory& cc, const Cx& m, int l, int pad) {
  const Quiver& q = cc.reps().quiver();
  const Fq& f = cc.field();
  require_sink(q, l);
  const int a0 = arrows_at(q, l, true).front();
  Extra e{q.arrow(a0).src, a0, m.m0.dims[l] + pad, m.m1.dims[l] + pad};
  Matrix xi0 = head(m.m0.dims[l], e.y0), xi1 = head(m.m1.dims[l], e.y1);
  // c[deg][part]: the map from part Y0 or Y1 of X^deg_j to M^deg_l
  const Matrix c[2][2] = {{xi0, mul(f, m.d1[l], xi1)}, {mul(f, m.d0[l], xi0), xi1}};
  Resolution r;
  r.x = add_neighbour_part(cc, m, e, c, true);
  const int n = q.num_vertices();
  r.a = unit_vec(n, e.j, e.y0);
  r.b = unit_vec(n, e.j, e.y1);
  r.t = cc.sum(cc.K(cc.reps().semisimple(r.a)), cc.Kstar(cc.reps().semisimple(r.b)));
  return r;
}

Resolution source_resolution(const ComplexCategory& cc, const Cx& m, int l, int pad) {
  const Quiver& q = cc.reps().quiver();
  const Fq& f = cc.field();
  require_source(q, l);
  const int a0 = arrows_at(q, l, false).front();
  Extra e{q.arrow(a0).tgt, a0, m.m0.dims[l] + pad, m.m1.dims[l] + pad};
  Matrix eta0 = transpose(head(m.m0.dims[l], e.y0)), eta1 = transpose(head(m.m1.dims[l], e.y1));
  // c[deg][part]: the map from M^deg_l to part Y0 or Y1 of X^deg_j
  const Matrix c[2][2] = {{eta0, mul(f, eta1, m.d0[l])}, {mul(f, eta0, m.d1[l]), eta1}};
  Resolution r;
  r.x = add_neighbour_part(cc, m, e, c, false);
  const int n = q.num_vertices();
  r.a = unit_vec(n, e.j, e.y0);
  r.b = unit_vec(n, e.j, e.y1);
  r.t = cc.sum(cc.Kstar(cc.reps().semisimple(r.a)), cc.K(cc.reps().semisimple(r.b)));
  return r;
}

Reflection::Reflection(const HallAlgebra& source, const HallAlgebra& target, int l)
    : src_(source), tgt_(target), l_(l) {
  require_sink(source_quiver(), l);
  if (target_quiver() != reflect_quiver(source_quiver(), l))
    throw ConfigError("target algebra is not over the reflected quiver");
  if (source.q() != target.q() || source.reps().mode() != target.reps().mode())
    throw ConfigError("source and target algebras differ in q or mode");
}

SDHElem Reflection::gamma_cx(const Cx& m, int pad, Exec exec) const {
  const Quiver& q = source_quiver();
  const Fq& f = src_.reps().field();
  Resolution r = sink_resolution(src_.complexes(), m, l_, pad);
  SDHElem fx = tgt_.reduce(bgp_plus(q, f, r.x, l_));
  SDHElem ft = tgt_.reduce(bgp_plus(q, f, r.t, l_));
  const long e = res_euler(q, r.t, m) - 2L * (euler_form(q, r.a, m.m0.dims) + euler_form(q, r.b, m.m1.dims));
  return Scalar::v_pow(e, src_.q()) * tgt_.mul(tgt_.k_inverse(ft), fx, exec);
}

SDHElem Reflection::gamma_minus_cx(const Cx& m, int pad, Exec exec) const {
  const Quiver& q = target_quiver();
  const Fq& f = tgt_.reps().field();
  Resolution r = source_resolution(tgt_.complexes(), m, l_, pad);
  SDHElem fx = src_.reduce(bgp_minus(q, f, r.x, l_));
  SDHElem ft = src_.reduce(bgp_minus(q, f, r.t, l_));
  const long e = res_euler(q, m, r.t) - 2L * (euler_form(q, m.m0.dims, r.a) + euler_form(q, m.m1.dims, r.b));
  return Scalar::v_pow(e, src_.q()) * src_.mul(fx, src_.k_inverse(ft), exec);
}

SDHElem Reflection::gamma_pair(const IsoClass& a, const IsoClass& b, bool minus, Exec exec) const {
  auto& memo = minus ? minus_ : plus_;
  {
    std::lock_guard lock(mu_);
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
  }
  const HallAlgebra& from = minus ? tgt_ : src_;
  const ComplexCategory& cc = from.complexes();
  const RepCategory& rc = from.reps();
  Cx m = cc.sum(cc.C(rc.representative(a)), cc.Cstar(rc.representative(b)));
  SDHElem g = minus ? gamma_minus_cx(m, 0, exec) : gamma_cx(m, 0, exec);
  std::lock_guard lock(mu_);
  return memo.emplace(std::pair{a, b}, std::move(g)).first->second;
}

SDHElem Reflection::gamma(const SDHElem& x, Exec exec) const {
  const CartanData& c = src_.reps().cartan();
  SDHElem out;
  for (const auto& [b, coeff] : x) {
    SDHElem g = gamma_pair(b.A, b.B, false, exec);
    g = tgt_.mul(tgt_.mul(g, tgt_.K(c.reflect(l_, b.alpha)), exec), tgt_.Kstar(c.reflect(l_, b.beta)), exec);
    out = out + coeff * g;
  }
  return out;
}

SDHElem Reflection::gamma_minus(const SDHElem& y, Exec exec) const {
  const CartanData& c = tgt_.reps().cartan();
  SDHElem out;
  for (const auto& [b, coeff] : y) {
    SDHElem g = gamma_pair(b.A, b.B, true, exec);
    g = src_.mul(src_.mul(g, src_.K(c.reflect(l_, b.alpha)), exec), src_.Kstar(c.reflect(l_, b.beta)), exec);
    out = out + coeff * g;
  }
  return out;
}

SDHElem Reflection::closed_form_simple(bool starred) const {
  const RepCategory& rc = tgt_.reps();
  const DimVec a = unit_vec(rc.num_vertices(), l_);
  IsoClass s = rc.classify(rc.simple(l_));
  SDHElem kinv = tgt_.k_inverse(starred ? tgt_.K(a) : tgt_.Kstar(a));
  return Scalar::v(tgt_.q()) * tgt_.mul(kinv, starred ? tgt_.C(s) : tgt_.Cstar(s));
}

SDHElem Reflection::closed_form_neighbour(int j, int n, bool starred) const {
  const RepCategory& rc = tgt_.reps();
  const int q = tgt_.q();
  const int top = -n * rc.cartan().a[l_][j];
  IsoClass nc = rc.classify(rc.semisimple(unit_vec(rc.num_vertices(), j, n)));
  SDHElem cn = starred ? tgt_.Cstar(nc) : tgt_.C(nc);
  SDHElem sum;
  for (int r = 0; r <= top; ++r) {
    Scalar c = Scalar::v_pow(r, q);
    if (r % 2 == 1) c = -c;
    SDHElem t = tgt_.mul(tgt_.mul(tgt_.divided_power_CS(l_, r, starred), cn), tgt_.divided_power_CS(l_, top - r, starred));
    sum = sum + c * t;
  }
  return Scalar(1 - q).pow(-top) * sum;
}

}  // namespace hallforge
