#include "hallforge/words.hpp"

#include <sstream>

#include "hallforge/error.hpp"
#include "hallforge/qcomb.hpp"

namespace hallforge {

std::string family_name(Family f) { return f == Family::bb ? "bb" : "qgkm"; }

namespace gen {
GenSymbol K(const DimVec& mu) { return {GenKind::K, 0, 0, mu}; }
GenSymbol Kp(const DimVec& mu) { return {GenKind::Kp, 0, 0, mu}; }
GenSymbol e(int i, int l) { return {GenKind::e, i, l, {}}; }
GenSymbol f(int i, int l) { return {GenKind::f, i, l, {}}; }
GenSymbol E(int i, int l) { return {GenKind::E, i, l, {}}; }
GenSymbol F(int i, int l) { return {GenKind::F, i, l, {}}; }
GenSymbol e_div(int i, int r) { return {GenKind::e_div, i, r, {}}; }
GenSymbol f_div(int i, int r) { return {GenKind::f_div, i, r, {}}; }
GenSymbol E_div(int i, int r) { return {GenKind::E_div, i, r, {}}; }
GenSymbol F_div(int i, int r) { return {GenKind::F_div, i, r, {}}; }
}  // namespace gen

bool is_k(const GenSymbol& s) { return s.kind == GenKind::K || s.kind == GenKind::Kp; }

bool is_divided(const GenSymbol& s) {
  return s.kind == GenKind::e_div || s.kind == GenKind::f_div || s.kind == GenKind::E_div ||
         s.kind == GenKind::F_div;
}

bool is_positive(const GenSymbol& s) {
  return s.kind == GenKind::e || s.kind == GenKind::e_div || s.kind == GenKind::E || s.kind == GenKind::E_div;
}

bool in_family(const GenSymbol& s, Family f) {
  switch (s.kind) {
    case GenKind::K:
    case GenKind::Kp:
      return true;
    case GenKind::e:
    case GenKind::f:
    case GenKind::e_div:
    case GenKind::f_div:
      return f == Family::bb;
    default:
      return f == Family::qgkm;
  }
}

int degree(const Monomial& m) {
  int d = 0;
  for (const auto& s : m)
    if (!is_k(s)) d += s.level;
  return d;
}

int degree(const GenWord& w) {
  int d = 0;
  for (const auto& [m, c] : w) d = std::max(d, degree(m));
  return d;
}

void add_term(GenWord& w, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = w.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) w.erase(it);
}

GenWord word(const Monomial& m, const Scalar& c) {
  GenWord w;
  add_term(w, m, c);
  return w;
}

GenWord word(const GenSymbol& s, const Scalar& c) { return word(Monomial{s}, c); }

GenWord unit_word() { return word(Monomial{}); }

GenWord operator+(GenWord a, const GenWord& b) {
  for (const auto& [m, c] : b) add_term(a, m, c);
  return a;
}

GenWord operator-(GenWord a, const GenWord& b) {
  for (const auto& [m, c] : b) add_term(a, m, -c);
  return a;
}

GenWord operator*(const Scalar& c, const GenWord& w) {
  GenWord out;
  for (const auto& [m, d] : w) add_term(out, m, c * d);
  return out;
}

GenWord operator*(const GenWord& a, const GenWord& b) {
  GenWord out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      add_term(out, m, ca * cb);
    }
  return out;
}

GenWord power(const GenWord& w, int n) {
  GenWord out = unit_word();
  for (int i = 0; i < n; ++i) out = out * w;
  return out;
}

namespace {

GenSymbol omega_symbol(GenSymbol s) {
  switch (s.kind) {
    case GenKind::K: s.kind = GenKind::Kp; break;
    case GenKind::Kp: s.kind = GenKind::K; break;
    case GenKind::e: s.kind = GenKind::f; break;
    case GenKind::f: s.kind = GenKind::e; break;
    case GenKind::E: s.kind = GenKind::F; break;
    case GenKind::F: s.kind = GenKind::E; break;
    case GenKind::e_div: s.kind = GenKind::f_div; break;
    case GenKind::f_div: s.kind = GenKind::e_div; break;
    case GenKind::E_div: s.kind = GenKind::F_div; break;
    case GenKind::F_div: s.kind = GenKind::E_div; break;
  }
  return s;
}

}  // namespace

GenWord omega(const GenWord& w) {
  GenWord out;
  for (const auto& [m, c] : w) {
    Monomial n;
    for (const auto& s : m) n.push_back(omega_symbol(s));
    add_term(out, n, c);
  }
  return out;
}

GenWord sigma(const GenWord& w) {
  GenWord out;
  for (const auto& [m, c] : w) {
    Monomial n(m.rbegin(), m.rend());
    for (auto& s : n) {
      if (s.kind == GenKind::K)
        s.kind = GenKind::Kp;
      else if (s.kind == GenKind::Kp)
        s.kind = GenKind::K;
    }
    add_term(out, n, c);
  }
  return out;
}

std::string symbol_name(const GenSymbol& s) {
  auto vl = [&](const char* base) {
    return std::string(base) + "_" + std::to_string(s.vertex + 1) + "_" + std::to_string(s.level);
  };
  switch (s.kind) {
    case GenKind::K: return "K_" + format_dims(s.mu);
    case GenKind::Kp: return "Kp_" + format_dims(s.mu);
    case GenKind::e: return vl("e");
    case GenKind::f: return vl("f");
    case GenKind::E: return vl("E");
    case GenKind::F: return vl("F");
    case GenKind::e_div: return "e_" + std::to_string(s.vertex + 1) + "^(" + std::to_string(s.level) + ")";
    case GenKind::f_div: return "f_" + std::to_string(s.vertex + 1) + "^(" + std::to_string(s.level) + ")";
    case GenKind::E_div: return "E_" + std::to_string(s.vertex + 1) + "^(" + std::to_string(s.level) + ")";
    case GenKind::F_div: return "F_" + std::to_string(s.vertex + 1) + "^(" + std::to_string(s.level) + ")";
  }
  return "?";
}

std::string format_word(const GenWord& w) {
  if (w.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : w) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (const auto& s : m) os << " " << symbol_name(s);
  }
  return os.str();
}

GenSymbol parse_symbol(const std::string& s, int num_vertices) {
  auto fail = [&]() -> GenSymbol { throw ConfigError("cannot parse generator \"" + s + "\""); };
  auto us = s.find('_');
  if (us == std::string::npos) return fail();
  std::string head = s.substr(0, us), rest = s.substr(us + 1);
  if (head == "K" || head == "Kp") {
    DimVec mu = parse_dims(rest);
    if (static_cast<int>(mu.size()) != num_vertices) return fail();
    return head == "K" ? gen::K(mu) : gen::Kp(mu);
  }
  int i = 0, l = 1;
  try {
    auto us2 = rest.find('_');
    i = std::stoi(rest.substr(0, us2)) - 1;
    if (us2 != std::string::npos) l = std::stoi(rest.substr(us2 + 1));
  } catch (const std::exception&) {
    return fail();
  }
  if (i < 0 || i >= num_vertices || l < 1) return fail();
  if (head == "e") return gen::e(i, l);
  if (head == "f") return gen::f(i, l);
  if (head == "E") return gen::E(i, l);
  if (head == "F") return gen::F(i, l);
  return fail();
}

}  // namespace hallforge
