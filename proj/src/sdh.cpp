#include "hallforge/sdh.hpp"

#include <mutex>
#include <sstream>

#include "hallforge/error.hpp"
#include "hallforge/kernels.hpp"
#include "hallforge/qcomb.hpp"

namespace hallforge {

void add_term(SDHElem& x, const NormalBasisElt& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

SDHElem operator+(SDHElem x, const SDHElem& y) {
  for (const auto& [b, c] : y) add_term(x, b, c);
  return x;
}

SDHElem operator-(SDHElem x, const SDHElem& y) {
  for (const auto& [b, c] : y) add_term(x, b, -c);
  return x;
}

SDHElem operator*(const Scalar& c, const SDHElem& x) {
  SDHElem out;
  for (const auto& [b, d] : x) add_term(out, b, c * d);
  return out;
}

HallAlgebra::HallAlgebra(const RepCategory& reps) : reps_(reps), cx_(reps) {}

SDHElem HallAlgebra::unit() const { return K(zero_dim()); }

SDHElem HallAlgebra::basis(const NormalBasisElt& b, const Scalar& c) const {
  SDHElem out;
  add_term(out, b, c * Scalar::rational(1, q()));
  return out;
}

SDHElem HallAlgebra::K(const DimVec& alpha) const {
  return basis({reps_.zero_class(), reps_.zero_class(), alpha, zero_dim()});
}

SDHElem HallAlgebra::Kstar(const DimVec& beta) const {
  return basis({reps_.zero_class(), reps_.zero_class(), zero_dim(), beta});
}

SDHElem HallAlgebra::C(const IsoClass& x) const {
  return basis({x, reps_.zero_class(), zero_dim(), zero_dim()});
}

SDHElem HallAlgebra::Cstar(const IsoClass& x) const {
  return basis({reps_.zero_class(), x, zero_dim(), zero_dim()});
}

SDHElem HallAlgebra::bracket(const IsoClass& x, bool starred) const {
  Scalar c = Scalar::rational(Rational(1) / Rational(reps_.aut_size(x)), q());
  return c * (starred ? Cstar(x) : C(x));
}

SDHElem HallAlgebra::divided_power_CS(int vertex, int r, bool starred) const {
  if (!reps_.cartan().is_real(vertex))
    throw DomainError("divided powers of [C_S] are defined at loop-free vertices only");
  IsoClass x = reps_.classify(reps_.semisimple(unit_vec(num_vertices(), vertex, r)));
  Scalar c = Scalar::v_pow(-static_cast<long>(r) * (r - 1) / 2, q()) / qfact(r, q());
  return c * (starred ? Cstar(x) : C(x));
}

SDHElem HallAlgebra::reduce(const Cx& m) const {
  HomologyClass h = cx_.homology_class(m);
  int e = -reps_.euler(h.h0.dim - h.h1.dim, h.im0 - h.im1);
  return basis({h.h1, h.h0, h.im0, h.im1}, Scalar::v_pow(e, q()));
}

SDHElem HallAlgebra::cx_product(const Cx& l, const Cx& m, Exec exec) const {
  const Presentation& p = cx_.presentation();
  ExtensionSpace ext = extension_space(p, reps_.field(), cx_.to_rep(l), cx_.to_rep(m));
  auto tally = tally_extensions<HomologyClass>(ext, reps_.field(), reps_.bounds().max_enum_bits, exec,
                                               [&](const Rep& e) { return cx_.homology_class(cx_.from_rep(e)); });
  const int twist = reps_.euler(l.m0.dims, m.m0.dims) + reps_.euler(l.m1.dims, m.m1.dims);
  const Rational denom(int_pow(q(), ext.normaliser));
  SDHElem out;
  for (const auto& [h, cnt] : tally) {
    int e = twist - reps_.euler(h.h0.dim - h.h1.dim, h.im0 - h.im1);
    Scalar w = Scalar::rational(Rational(BigInt(static_cast<unsigned long>(cnt))) / denom, q());
    add_term(out, {h.h1, h.h0, h.im0, h.im1}, w * Scalar::v_pow(e, q()));
  }
  return out;
}

SDHElem HallAlgebra::c_product(const IsoClass& a, const IsoClass& b, const IsoClass& a2, const IsoClass& b2,
                               Exec exec) const {
  const std::array<IsoClass, 4> key{a, b, a2, b2};
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Cx l = cx_.sum(cx_.C(reps_.representative(a)), cx_.Cstar(reps_.representative(b)));
  Cx m = cx_.sum(cx_.C(reps_.representative(a2)), cx_.Cstar(reps_.representative(b2)));
  SDHElem out = cx_product(l, m, exec);
  std::unique_lock lock(mu_);
  return cache_.emplace(key, std::move(out)).first->second;
}

SDHElem HallAlgebra::mul(const SDHElem& x, const SDHElem& y, Exec exec) const {
  SDHElem out;
  for (const auto& [bx, cx] : x)
    for (const auto& [by, cy] : y) {
      // Move K_alpha K*_beta of the left factor across the C-part of the right one.
      DimVec a = by.A.dim, b = by.B.dim;
      int phase = reps_.cartan().form(bx.alpha, a - b) + reps_.cartan().form(bx.beta, b - a);
      Scalar c = cx * cy * Scalar::v_pow(phase, q());
      bool trivial_left = is_zero(bx.A.dim) && is_zero(bx.B.dim);
      bool trivial_right = is_zero(a) && is_zero(b);
      if (trivial_left || trivial_right) {
        NormalBasisElt r{trivial_left ? by.A : bx.A, trivial_left ? by.B : bx.B, bx.alpha + by.alpha,
                         bx.beta + by.beta};
        add_term(out, r, c);
        continue;
      }
      for (const auto& [bz, cz] : c_product(bx.A, bx.B, by.A, by.B, exec))
        add_term(out, {bz.A, bz.B, bz.alpha + bx.alpha + by.alpha, bz.beta + bx.beta + by.beta}, c * cz);
    }
  return out;
}

SDHElem HallAlgebra::pow(const SDHElem& x, int n, Exec exec) const {
  if (n < 0) throw DomainError("negative powers are only defined for K-exponents");
  SDHElem out = unit();
  for (int i = 0; i < n; ++i) out = mul(out, x, exec);
  return out;
}

SDHElem HallAlgebra::k_inverse(const SDHElem& x) const {
  if (x.size() != 1) throw DomainError("only single basis elements of K-type are invertible here");
  const auto& [b, c] = *x.begin();
  if (!is_zero(b.A.dim) || !is_zero(b.B.dim)) throw DomainError("element has a nonzero C-part");
  return basis({b.A, b.B, -b.alpha, -b.beta}, c.inverse());
}

nlohmann::json HallAlgebra::to_json(const SDHElem& x) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [b, c] : x)
    out.push_back({{"A", reps_.id(b.A)}, {"B", reps_.id(b.B)}, {"alpha", b.alpha}, {"beta", b.beta}, {"coeff", c}});
  return out;
}

SDHElem HallAlgebra::from_json(const nlohmann::json& j) const {
  if (!j.is_array()) throw ConfigError("Hall algebra element must be a JSON array of terms");
  SDHElem out;
  for (const auto& t : j) {
    if (!t.is_object()) throw ConfigError("Hall algebra term must be an object");
    for (const char* k : {"A", "B", "alpha", "beta", "coeff"})
      if (!t.contains(k)) throw ConfigError(std::string("Hall algebra term missing \"") + k + "\"");
    NormalBasisElt b{reps_.parse_id(t["A"].get<std::string>()), reps_.parse_id(t["B"].get<std::string>()),
                     t["alpha"].get<DimVec>(), t["beta"].get<DimVec>()};
    if (static_cast<int>(b.alpha.size()) != num_vertices() || static_cast<int>(b.beta.size()) != num_vertices())
      throw ConfigError("K-exponent has the wrong length");
    Scalar c = t["coeff"].get<Scalar>();
    if (c.q() != 0 && c.q() != q()) throw ConfigError("coefficient belongs to a different field size");
    add_term(out, b, c * Scalar::rational(1, q()));
  }
  return out;
}

std::string HallAlgebra::to_string(const SDHElem& x) const { return format_elem(x); }

std::string format_elem(const SDHElem& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (!is_zero(b.A.dim)) os << " C[" << format_dims(b.A.dim) << "#" << b.A.index << "]";
    if (!is_zero(b.B.dim)) os << " C*[" << format_dims(b.B.dim) << "#" << b.B.index << "]";
    if (!is_zero(b.alpha)) os << " K^(" << format_dims(b.alpha) << ")";
    if (!is_zero(b.beta)) os << " K*^(" << format_dims(b.beta) << ")";
  }
  return os.str();
}

std::size_t HallAlgebra::cache_size() const {
  std::shared_lock lock(mu_);
  return cache_.size();
}

}  // namespace hallforge
