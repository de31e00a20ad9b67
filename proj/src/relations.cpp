#include "hallforge/relations.hpp"

#include "hallforge/qcomb.hpp"

namespace hallforge {

namespace {

std::string vtx(int i) { return std::to_string(i + 1); }

GenWord w(const GenSymbol& s) { return word(s); }

/// Sum_k (-1)^k [N choose k] x_i^{N-k} y x_i^k with N = 1 - l a_ij.
GenWord serre_word(const GenSymbol& xi, const GenSymbol& y, int n, int q) {
  GenWord out;
  for (int k = 0; k <= n; ++k) {
    Scalar c = qbinom(n, k, q);
    if (k % 2 == 1) c = -c;
    out = out + c * (power(w(xi), n - k) * w(y) * power(w(xi), k));
  }
  return out;
}

void add(std::vector<RelationCheck>& out, const RelationBounds& b, RelationCheck r) {
  if (degree(r.lhs) > b.max_degree || degree(r.rhs) > b.max_degree) return;
  out.push_back(std::move(r));
}

void k_relations(std::vector<RelationCheck>& out, int n, const RelationBounds& b) {
  for (int i = 0; i < n; ++i) {
    DimVec a = unit_vec(n, i);
    add(out, b, {"k-inverse", "K_i K_i^{-1} = K_i^{-1} K_i = 1", "i=" + vtx(i) + " side=swap",
                 w(gen::K(a)) * w(gen::K(-a)), w(gen::K(-a)) * w(gen::K(a))});
    add(out, b, {"k-inverse", "K_i K_i^{-1} = K_i^{-1} K_i = 1", "i=" + vtx(i) + " side=unit",
                 w(gen::K(a)) * w(gen::K(-a)), unit_word()});
    add(out, b, {"k-inverse", "K'_i K'_i^{-1} = K'_i^{-1} K'_i = 1", "i=" + vtx(i),
                 w(gen::Kp(-a)) * w(gen::Kp(a)), unit_word()});
    for (int j = 0; j < n; ++j) {
      DimVec c = unit_vec(n, j);
      std::string p = "i=" + vtx(i) + " j=" + vtx(j);
      add(out, b, {"k-commute", "[K_i, K_j] = 0", p, w(gen::K(a)) * w(gen::K(c)), w(gen::K(c)) * w(gen::K(a))});
      add(out, b, {"k-commute", "[K_i, K'_j] = 0", p, w(gen::K(a)) * w(gen::Kp(c)), w(gen::Kp(c)) * w(gen::K(a))});
      add(out, b,
          {"k-commute", "[K'_i, K'_j] = 0", p, w(gen::Kp(a)) * w(gen::Kp(c)), w(gen::Kp(c)) * w(gen::Kp(a))});
    }
  }
}

/// Whether the Serre relation between i and j is part of the presentation:
/// always at a real vertex i, and as plain commutation when a_ij = 0.
bool serre_applies(const CartanData& c, int i, int j) { return i != j && (c.is_real(i) || c.a[i][j] == 0); }

}  // namespace

std::vector<RelationCheck> bb_relations(const CartanData& c, int q, const RelationBounds& b) {
  const int n = c.size();
  std::vector<RelationCheck> out;
  k_relations(out, n, b);
  auto levels = [&](int i) { return c.max_level(i, b.max_level); };
  for (int i = 0; i < n; ++i) {
    DimVec a = unit_vec(n, i);
    for (int j = 0; j < n; ++j)
      for (int l = 1; l <= levels(j); ++l) {
        std::string p = "i=" + vtx(i) + " j=" + vtx(j) + " l=" + std::to_string(l);
        const long e = static_cast<long>(l) * c.a[i][j];
        add(out, b, {"k-e-commutation", "K_i e_{jl} = v^{l a_ij} e_{jl} K_i", p, w(gen::K(a)) * w(gen::e(j, l)),
                     Scalar::v_pow(e, q) * (w(gen::e(j, l)) * w(gen::K(a)))});
        add(out, b, {"k-f-commutation", "K_i f_{jl} = v^{-l a_ij} f_{jl} K_i", p, w(gen::K(a)) * w(gen::f(j, l)),
                     Scalar::v_pow(-e, q) * (w(gen::f(j, l)) * w(gen::K(a)))});
        add(out, b, {"kprime-e-commutation", "K'_i e_{jl} = v^{-l a_ij} e_{jl} K'_i", p,
                     w(gen::Kp(a)) * w(gen::e(j, l)), Scalar::v_pow(-e, q) * (w(gen::e(j, l)) * w(gen::Kp(a)))});
        add(out, b, {"kprime-f-commutation", "K'_i f_{jl} = v^{l a_ij} f_{jl} K'_i", p,
                     w(gen::Kp(a)) * w(gen::f(j, l)), Scalar::v_pow(e, q) * (w(gen::f(j, l)) * w(gen::Kp(a)))});
      }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 1; k <= levels(i); ++k)
        for (int l = 1; l <= levels(j); ++l) {
          std::string p = "i=" + vtx(i) + " k=" + std::to_string(k) + " j=" + vtx(j) + " l=" + std::to_string(l);
          add(out, b, {"e-f-commute", "e_{ik} f_{jl} - f_{jl} e_{ik} = 0", p, w(gen::e(i, k)) * w(gen::f(j, l)),
                       w(gen::f(j, l)) * w(gen::e(i, k))});
        }
    }
  // sum_{m+r=k, r+s=l} v_(i)^{r(m-s)} tau_r e_is f_im K'^r = sum v_(i)^{-r(m-s)} tau_r f_im e_is K^r
  for (int i = 0; i < n; ++i) {
    DimVec a = unit_vec(n, i);
    const long half = c.a[i][i] / 2;
    for (int l = 1; l <= levels(i); ++l)
      for (int k = 1; k <= levels(i); ++k) {
        GenWord lhs, rhs;
        for (int r = 0; r <= std::min(k, l); ++r) {
          const int m = k - r, s = l - r;
          GenWord es = s > 0 ? w(gen::e(i, s)) : unit_word();
          GenWord fm = m > 0 ? w(gen::f(i, m)) : unit_word();
          const long x = half * r * (m - s);
          lhs = lhs + (Scalar::v_pow(x, q) * tau(r, q)) * (es * fm * w(gen::Kp(scaled(a, r))));
          rhs = rhs + (Scalar::v_pow(-x, q) * tau(r, q)) * (fm * es * w(gen::K(scaled(a, r))));
        }
        add(out, b,
            {"e-f-mixed", "sum v_(i)^{r(m-s)} tau_r e_is f_im K'^r_i = sum v_(i)^{-r(m-s)} tau_r f_im e_is K^r_i",
             "i=" + vtx(i) + " l=" + std::to_string(l) + " k=" + std::to_string(k), lhs, rhs});
      }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!serre_applies(c, i, j)) continue;
      for (int l = 1; l <= levels(j); ++l) {
        const int big = 1 - l * c.a[i][j];
        std::string p = "i=" + vtx(i) + " j=" + vtx(j) + " l=" + std::to_string(l);
        add(out, b, {"serre-e", "sum_k (-1)^k [1-l a_ij, k] e_i^{1-l a_ij-k} e_{jl} e_i^k = 0", p,
                     serre_word(gen::e(i, 1), gen::e(j, l), big, q), {}});
        add(out, b, {"serre-f", "sum_k (-1)^k [1-l a_ij, k] f_i^{1-l a_ij-k} f_{jl} f_i^k = 0", p,
                     serre_word(gen::f(i, 1), gen::f(j, l), big, q), {}});
      }
    }
  return out;
}

std::vector<RelationCheck> qgkm_relations(const CartanData& c, const std::vector<int>& m, int q,
                                          const RelationBounds& b) {
  const int n = c.size();
  std::vector<RelationCheck> out;
  k_relations(out, n, b);
  for (int i = 0; i < n; ++i) {
    DimVec a = unit_vec(n, i);
    for (int j = 0; j < n; ++j)
      for (int l = 1; l <= m[j]; ++l) {
        std::string p = "i=" + vtx(i) + " j=" + vtx(j) + " l=" + std::to_string(l);
        const long e = c.a[i][j];
        add(out, b, {"qgkm-k-E", "K_i E_{jl} = v^{a_ij} E_{jl} K_i", p, w(gen::K(a)) * w(gen::E(j, l)),
                     Scalar::v_pow(e, q) * (w(gen::E(j, l)) * w(gen::K(a)))});
        add(out, b, {"qgkm-k-F", "K_i F_{jl} = v^{-a_ij} F_{jl} K_i", p, w(gen::K(a)) * w(gen::F(j, l)),
                     Scalar::v_pow(-e, q) * (w(gen::F(j, l)) * w(gen::K(a)))});
        add(out, b, {"qgkm-kprime-E", "K'_i E_{jl} = v^{-a_ij} E_{jl} K'_i", p, w(gen::Kp(a)) * w(gen::E(j, l)),
                     Scalar::v_pow(-e, q) * (w(gen::E(j, l)) * w(gen::Kp(a)))});
        add(out, b, {"qgkm-kprime-F", "K'_i F_{jl} = v^{a_ij} F_{jl} K'_i", p, w(gen::Kp(a)) * w(gen::F(j, l)),
                     Scalar::v_pow(e, q) * (w(gen::F(j, l)) * w(gen::Kp(a)))});
      }
  }
  const Scalar inv = (Scalar::v(q) - Scalar::v(q).inverse()).inverse();
  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= m[i]; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 1; l <= m[j]; ++l) {
          GenWord rhs;
          if (i == j && k == l) {
            DimVec a = unit_vec(n, i);
            rhs = inv * (w(gen::K(a)) - w(gen::Kp(a)));
          }
          add(out, b,
              {"qgkm-E-F-commutator", "E_{ik} F_{jl} - F_{jl} E_{ik} = delta_ij delta_kl (K_i - K'_i)/(v - v^{-1})",
               "i=" + vtx(i) + " k=" + std::to_string(k) + " j=" + vtx(j) + " l=" + std::to_string(l),
               w(gen::E(i, k)) * w(gen::F(j, l)) - w(gen::F(j, l)) * w(gen::E(i, k)), rhs});
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!serre_applies(c, i, j)) continue;
      for (int l = 1; l <= m[j]; ++l) {
        const int big = 1 - c.a[i][j];
        std::string p = "i=" + vtx(i) + " j=" + vtx(j) + " l=" + std::to_string(l);
        add(out, b, {"qgkm-serre-E", "sum_n (-1)^n [1-a_ij, n] E_{i1}^{1-a_ij-n} E_{jl} E_{i1}^n = 0", p,
                     serre_word(gen::E(i, 1), gen::E(j, l), big, q), {}});
        add(out, b, {"qgkm-serre-F", "sum_n (-1)^n [1-a_ij, n] F_{i1}^{1-a_ij-n} F_{jl} F_{i1}^n = 0", p,
                     serre_word(gen::F(i, 1), gen::F(j, l), big, q), {}});
      }
    }
  return out;
}

}  // namespace hallforge
