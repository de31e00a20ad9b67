#include "hallforge/quiver.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "hallforge/error.hpp"

namespace hallforge {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw ConfigError("duplicate vertex id '" + v + "'");
  for (const auto& a : arrows_)
    if (a.src < 0 || a.src >= num_vertices() || a.tgt < 0 || a.tgt >= num_vertices())
      throw ConfigError("arrow endpoint out of range");
}

Quiver Quiver::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw ConfigError("quiver JSON needs a \"vertices\" array");
  std::vector<std::string> vs;
  for (const auto& v : j["vertices"]) {
    if (v.is_string())
      vs.push_back(v.get<std::string>());
    else if (v.is_number_integer())
      vs.push_back(std::to_string(v.get<long>()));
    else
      throw ConfigError("vertex ids must be strings");
  }
  Quiver tmp(vs, {});
  std::vector<Arrow> as;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw ConfigError("\"arrows\" must be an array");
    for (const auto& a : j["arrows"]) {
      if (!a.is_object() || !a.contains("src") || !a.contains("tgt"))
        throw ConfigError("each arrow needs \"src\" and \"tgt\"");
      auto id = [](const nlohmann::json& x) {
        return x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>());
      };
      as.push_back({tmp.vertex_index(id(a["src"])), tmp.vertex_index(id(a["tgt"]))});
    }
  }
  return Quiver(std::move(vs), std::move(as));
}

Quiver Quiver::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open quiver file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed quiver JSON in " + path + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::json Quiver::to_json() const {
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : arrows_) arrows.push_back({{"src", vertices_[a.src]}, {"tgt", vertices_[a.tgt]}});
  return {{"vertices", vertices_}, {"arrows", arrows}};
}

int Quiver::vertex_index(const std::string& id) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices_[i] == id) return i;
  throw ConfigError("unknown vertex '" + id + "'");
}

int Quiver::loops(int i) const {
  int g = 0;
  for (const auto& a : arrows_) g += (a.src == i && a.tgt == i) ? 1 : 0;
  return g;
}

int Quiver::arrows_between(int i, int j) const {
  int n = 0;
  for (const auto& a : arrows_) n += (a.src == i && a.tgt == j) ? 1 : 0;
  return n;
}

bool Quiver::is_sink(int l) const {
  for (const auto& a : arrows_)
    if (a.src == l) return false;
  return true;
}

bool Quiver::is_source(int l) const {
  for (const auto& a : arrows_)
    if (a.tgt == l) return false;
  return true;
}

std::string Quiver::hash() const { return content_hash(to_json().dump()); }

std::string content_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Quiver reflect_quiver(const Quiver& q, int l) {
  std::vector<Arrow> as = q.arrows();
  for (auto& a : as)
    if ((a.src == l) != (a.tgt == l)) std::swap(a.src, a.tgt);
  return Quiver(q.vertices(), as);
}

int euler_form(const Quiver& q, const DimVec& x, const DimVec& y) {
  int s = 0;
  for (int i = 0; i < q.num_vertices(); ++i) s += x[i] * y[i];
  for (const auto& a : q.arrows()) s -= x[a.src] * y[a.tgt];
  return s;
}

int sym_form(const Quiver& q, const DimVec& x, const DimVec& y) { return euler_form(q, x, y) + euler_form(q, y, x); }

CartanData cartan_from_quiver(const Quiver& q) {
  int n = q.num_vertices();
  CartanData c;
  c.a.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c.a[i][j] = i == j ? 2 - 2 * q.loops(i) : -q.arrows_between(i, j) - q.arrows_between(j, i);
  return c;
}

DimVec CartanData::reflect(int i, const DimVec& x) const {
  if (!is_real(i)) throw DomainError("simple reflection at an imaginary vertex");
  DimVec y = x;
  int c = 0;
  for (int j = 0; j < size(); ++j) c += a[i][j] * x[j];
  y[i] -= c;
  return y;
}

int CartanData::form(const DimVec& x, const DimVec& y) const {
  int s = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) s += x[i] * a[i][j] * y[j];
  return s;
}

DimVec unit_vec(int n, int i, int scale) {
  DimVec d(n, 0);
  d[i] = scale;
  return d;
}

DimVec operator+(const DimVec& x, const DimVec& y) {
  DimVec z = x;
  for (size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

DimVec operator-(const DimVec& x, const DimVec& y) {
  DimVec z = x;
  for (size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

DimVec operator-(const DimVec& x) { return scaled(x, -1); }

DimVec scaled(const DimVec& x, int c) {
  DimVec z = x;
  for (auto& e : z) e *= c;
  return z;
}

int total(const DimVec& x) {
  int s = 0;
  for (int e : x) s += e;
  return s;
}

bool is_zero(const DimVec& x) {
  for (int e : x)
    if (e != 0) return false;
  return true;
}

bool is_nonneg(const DimVec& x) {
  for (int e : x)
    if (e < 0) return false;
  return true;
}

std::string format_dims(const DimVec& x) {
  std::ostringstream os;
  for (size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  return os.str();
}

DimVec parse_dims(const std::string& s) {
  DimVec d;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      d.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError("bad dimension vector '" + s + "'");
    }
  }
  return d;
}

}  // namespace hallforge
