#pragma once

#include <map>
#include <string>
#include <vector>

#include "hallforge/quiver.hpp"
#include "hallforge/scalar.hpp"

namespace hallforge {

/// Generators of the two quantum algebras.  Lower-case e/f belong to the
/// Borcherds-Bozec family, upper-case E/F to the generalized Kac-Moody one;
/// K and K' are shared.  The *_div kinds are divided powers x^(r) = x^r/[r]!
/// of a level-one generator at a real vertex, with the power stored in level.
enum class GenKind { K, Kp, e, f, E, F, e_div, f_div, E_div, F_div };

struct GenSymbol {
  GenKind kind = GenKind::K;
  int vertex = 0;
  int level = 0;
  DimVec mu;  // exponent of K_mu, K'_mu

  friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;
};

using Monomial = std::vector<GenSymbol>;
/// Scalar-linear combination of monomials, evaluated at v = sqrt(q).
using GenWord = std::map<Monomial, Scalar>;

enum class Family { bb, qgkm };
std::string family_name(Family f);

namespace gen {
GenSymbol K(const DimVec& mu);
GenSymbol Kp(const DimVec& mu);
GenSymbol e(int i, int l = 1);
GenSymbol f(int i, int l = 1);
GenSymbol E(int i, int l = 1);
GenSymbol F(int i, int l = 1);
GenSymbol e_div(int i, int r);
GenSymbol f_div(int i, int r);
GenSymbol E_div(int i, int r);
GenSymbol F_div(int i, int r);
}  // namespace gen

bool is_k(const GenSymbol& s);
bool is_divided(const GenSymbol& s);
/// e, e_div, E, E_div.
bool is_positive(const GenSymbol& s);
/// The family a symbol belongs to; K symbols belong to both.
bool in_family(const GenSymbol& s, Family f);
/// Total level of the e/f/E/F letters.
int degree(const Monomial& m);
int degree(const GenWord& w);

GenWord word(const Monomial& m, const Scalar& c = 1);
GenWord word(const GenSymbol& s, const Scalar& c = 1);
GenWord unit_word();
void add_term(GenWord& w, const Monomial& m, const Scalar& c);
GenWord operator+(GenWord a, const GenWord& b);
GenWord operator-(GenWord a, const GenWord& b);
GenWord operator*(const Scalar& c, const GenWord& w);
GenWord operator*(const GenWord& a, const GenWord& b);
GenWord power(const GenWord& w, int n);

/// Rewrites every letter by fn and multiplies out (fn must return words).
template <class Fn>
GenWord substitute(const GenWord& w, Fn fn) {
  GenWord out;
  for (const auto& [m, c] : w) {
    GenWord t = unit_word();
    for (const auto& s : m) t = t * fn(s);
    out = out + c * t;
  }
  return out;
}

/// The involution exchanging e and f (E and F) and K with K'.
GenWord omega(const GenWord& w);
/// The anti-involution fixing e, f, E, F and exchanging K with K'.
GenWord sigma(const GenWord& w);

std::string symbol_name(const GenSymbol& s);
std::string format_word(const GenWord& w);
/// Parses "e_1_2" style names: K_<dims>, Kp_<dims>, e_<i>_<l>, f_<i>_<l>,
/// E_<i>_<l>, F_<i>_<l> with 1-based vertex positions.
GenSymbol parse_symbol(const std::string& s, int num_vertices);

}  // namespace hallforge
