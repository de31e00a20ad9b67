#include "hallforge/repcat.hpp"

#include "hallforge/error.hpp"
#include "hallforge/kernels.hpp"
#include "hallforge/qcomb.hpp"

namespace hallforge {

RepCategory::RepCategory(Quiver q, int field_size, Mode mode, Bounds bounds)
    : quiver_(std::move(q)),
      cartan_(cartan_from_quiver(quiver_)),
      hash_(content_hash(quiver_.hash() + ":" + std::to_string(field_size) + ":" + mode_name(mode))),
      catalog_(module_presentation(quiver_), field_size, mode, bounds, "rep-" + hash_) {}

IsoClass RepCategory::classify(const Rep& r) const {
  check_shapes(presentation(), r);
  return IsoClass{r.dims, catalog_.classify(r)};
}

std::vector<IsoClass> RepCategory::enumerate(const DimVec& d) const {
  std::vector<IsoClass> out;
  int n = catalog_.count(d);
  for (int i = 0; i < n; ++i) out.push_back({d, i});
  return out;
}

Rep RepCategory::representative(const IsoClass& c) const { return catalog_.representative(c.dim, c.index); }

BigInt RepCategory::aut_size(const IsoClass& c) const { return catalog_.aut_size(c.dim, c.index); }

BigInt RepCategory::aut_size_bruteforce(const Rep& r) const {
  return count_automorphisms(presentation(), field(), r, bounds().max_enum_bits);
}

bool RepCategory::isomorphic(const Rep& x, const Rep& y) const {
  return hallforge::isomorphic(presentation(), field(), x, y, bounds().max_enum_bits);
}

std::string RepCategory::id(const IsoClass& c) const {
  return hash_ + ":" + format_dims(c.dim) + ":" + std::to_string(c.index);
}

IsoClass RepCategory::parse_id(const std::string& id) const {
  auto a = id.find(':');
  auto b = id.rfind(':');
  if (a == std::string::npos || a == b) throw ConfigError("malformed class id '" + id + "'");
  if (id.substr(0, a) != hash_)
    throw ConfigError("class id '" + id + "' belongs to a different quiver, field or mode");
  IsoClass c{parse_dims(id.substr(a + 1, b - a - 1)), 0};
  if (static_cast<int>(c.dim.size()) != num_vertices()) throw ConfigError("class id has wrong dimension vector");
  try {
    c.index = std::stoi(id.substr(b + 1));
  } catch (const std::exception&) {
    throw ConfigError("malformed class id '" + id + "'");
  }
  if (c.index < 0 || c.index >= catalog_.count(c.dim)) throw ConfigError("class id '" + id + "' out of range");
  return c;
}

Rep RepCategory::zero(const DimVec& d) const { return zero_rep(presentation(), d); }

Rep RepCategory::simple(int i) const { return zero(unit_vec(num_vertices(), i)); }

Rep RepCategory::simple(int i, const std::vector<int>& lambda) const {
  Rep r = simple(i);
  size_t k = 0;
  for (int a = 0; a < quiver_.num_arrows(); ++a) {
    const auto& ar = quiver_.arrow(a);
    if (ar.src == i && ar.tgt == i) {
      if (k >= lambda.size()) throw ConfigError("parameter tuple shorter than the number of loops");
      r.maps[a](0, 0) = field().from_int(lambda[k++]);
    }
  }
  if (k != lambda.size()) throw ConfigError("parameter tuple longer than the number of loops");
  return r;
}

Rep RepCategory::semisimple(const DimVec& d) const { return zero(d); }

int RepCategory::hom_dim(const Rep& x, const Rep& y) const { return hallforge::hom_dim(presentation(), field(), x, y); }

int RepCategory::ext1_dim(const Rep& x, const Rep& y) const {
  int e = hom_dim(x, y) - euler(x.dims, y.dims);
  if (e < 0) throw InternalError("negative Ext^1 dimension: Euler form and Hom disagree");
  return e;
}

int RepCategory::ext1_dim_direct(const Rep& x, const Rep& y) const {
  return hallforge::ext1_dim_direct(presentation(), field(), x, y);
}

BigInt RepCategory::hall_number(const IsoClass& x, const IsoClass& z, const IsoClass& y, Exec exec) const {
  if (x.dim + z.dim != y.dim) return 0;
  Rep ry = representative(y);
  SubobjectEnumerator en(presentation(), field(), ry, z.dim);
  std::uint64_t n = count_subobjects(en, exec, [&](const Rep& sub, const Rep& quot) {
    return catalog_.classify(sub) == z.index && catalog_.classify(quot) == x.index;
  });
  return BigInt(static_cast<unsigned long>(n));
}

std::map<IsoClass, Rational> RepCategory::extension_weights(const Rep& x, const Rep& z, Exec exec) const {
  ExtensionSpace ext = extension_space(presentation(), field(), x, z);
  auto tally = tally_extensions<int>(ext, field(), bounds().max_enum_bits, exec,
                                     [&](const Rep& e) { return catalog_.classify(e); });
  std::map<IsoClass, Rational> out;
  BigInt denom = int_pow(q(), ext.normaliser);
  DimVec d = x.dims + z.dims;
  for (const auto& [idx, cnt] : tally) {
    Rational w(BigInt(static_cast<unsigned long>(cnt)), denom);
    w.canonicalize();
    out[IsoClass{d, idx}] = w;
  }
  return out;
}

ModElem RepCategory::hall_product(const ModElem& x, const ModElem& z, bool twisted, Exec exec) const {
  ModElem out;
  for (const auto& [cx, ax] : x)
    for (const auto& [cz, az] : z) {
      DimVec d = cx.dim + cz.dim;
      Scalar base = ax * az;
      if (twisted) base *= Scalar::v_pow(euler(cx.dim, cz.dim), q());
      BigInt autx = aut_size(cx), autz = aut_size(cz);
      for (const auto& cy : enumerate(d)) {
        BigInt f = hall_number(cx, cz, cy, exec);
        if (f == 0) continue;
        Rational w(f * autx * autz, aut_size(cy));
        w.canonicalize();
        Scalar& slot = out[cy];
        slot += base * Scalar::rational(w, q());
        if (slot.is_zero()) out.erase(cy);
      }
    }
  return out;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(static_cast<int>(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, int rows, int cols, const Fq& f) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ConfigError("matrix must have " + std::to_string(rows) + " rows: " + j.dump());
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw ConfigError("matrix row must have " + std::to_string(cols) + " entries: " + j.dump());
    for (int c = 0; c < cols; ++c) m(i, c) = f.from_int(j[i][c].get<long>());
  }
  return m;
}

nlohmann::json RepCategory::rep_to_json(const Rep& r) const {
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& m : r.maps) maps.push_back(matrix_to_json(m));
  return {{"dim", r.dims}, {"maps", maps}};
}

Rep RepCategory::rep_from_json(const nlohmann::json& j) const {
  if (!j.is_object() || !j.contains("dim")) throw ConfigError("representation JSON needs \"dim\"");
  DimVec d = j["dim"].get<DimVec>();
  if (static_cast<int>(d.size()) != num_vertices()) throw ConfigError("dimension vector has wrong length");
  Rep r = zero(d);
  if (j.contains("maps")) {
    const auto& maps = j["maps"];
    if (!maps.is_array() || static_cast<int>(maps.size()) != quiver_.num_arrows())
      throw ConfigError("representation needs one matrix per arrow");
    for (int a = 0; a < quiver_.num_arrows(); ++a)
      r.maps[a] = matrix_from_json(maps[a], d[quiver_.arrow(a).tgt], d[quiver_.arrow(a).src], field());
  }
  if (!is_valid(r)) throw ConfigError("representation is not " + mode_name(mode()));
  return r;
}

nlohmann::json RepCategory::class_to_json(const IsoClass& c) const {
  return {{"id", id(c)},
          {"dim", c.dim},
          {"aut", aut_size(c).get_str()},
          {"representative", rep_to_json(representative(c))}};
}

}  // namespace hallforge
