#include "hallforge/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hallforge/error.hpp"
#include "hallforge/qcomb.hpp"

namespace hallforge {

std::string mode_name(Mode m) { return m == Mode::nilpotent ? "nilpotent" : "full"; }

Mode parse_mode(const std::string& s) {
  if (s == "nilpotent") return Mode::nilpotent;
  if (s == "full") return Mode::full;
  throw ConfigError("unknown mode '" + s + "' (expected nilpotent or full)");
}

Catalog::Catalog(Presentation p, int q, Mode mode, Bounds bounds, std::string key)
    : pres_(std::move(p)), field_(q), mode_(mode), bounds_(bounds), key_(std::move(key)) {}

bool Catalog::valid(const Rep& r) const {
  if (!satisfies_relations(pres_, field_, r)) return false;
  return mode_ == Mode::full || is_nilpotent(pres_, field_, r);
}

namespace {

constexpr std::uint32_t kMagic = 0x48464f54;  // table file tag

std::string cache_file(const std::string& dir, const std::string& key, const std::vector<int>& dims) {
  std::string name = key;
  for (int d : dims) name += "_" + std::to_string(d);
  return dir + "/" + name + ".tbl";
}

bool read_table(const std::string& path, const std::vector<int>& dims, OrbitTable& t) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  auto get = [&](auto& x) { in.read(reinterpret_cast<char*>(&x), sizeof x); };
  std::uint32_t magic = 0, ndims = 0, nclasses = 0;
  get(magic);
  get(ndims);
  if (!in || magic != kMagic || ndims != dims.size()) return false;
  t.dims.resize(ndims);
  for (auto& d : t.dims) get(d);
  if (t.dims != dims) return false;
  get(t.entries);
  get(t.space);
  get(nclasses);
  t.classes.resize(nclasses);
  for (auto& c : t.classes) {
    get(c.code);
    get(c.orbit_size);
  }
  t.class_of.resize(t.space);
  in.read(reinterpret_cast<char*>(t.class_of.data()), static_cast<std::streamsize>(t.space * sizeof(std::int32_t)));
  return static_cast<bool>(in);
}

void write_table(const std::string& path, const OrbitTable& t) {
  std::string tmp = path + ".tmp" + std::to_string(std::rand());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    auto put = [&](const auto& x) { out.write(reinterpret_cast<const char*>(&x), sizeof x); };
    put(kMagic);
    put(static_cast<std::uint32_t>(t.dims.size()));
    for (int d : t.dims) put(d);
    put(t.entries);
    put(t.space);
    put(static_cast<std::uint32_t>(t.classes.size()));
    for (const auto& c : t.classes) {
      put(c.code);
      put(c.orbit_size);
    }
    out.write(reinterpret_cast<const char*>(t.class_of.data()),
              static_cast<std::streamsize>(t.space * sizeof(std::int32_t)));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

std::unique_ptr<OrbitTable> Catalog::load_or_build(const std::vector<int>& dims) const {
  int tot = 0;
  for (int d : dims) tot += d;
  if (tot > bounds_.max_total_dim)
    throw ResourceError("total dimension " + std::to_string(tot) + " exceeds the bound " +
                        std::to_string(bounds_.max_total_dim));
  int entries = entry_count(pres_, dims);
  if (entries * std::log2(static_cast<double>(field_.q())) > bounds_.max_code_bits)
    throw ResourceError("enumerating " + std::to_string(entries) + " matrix entries over F_" +
                        std::to_string(field_.q()) + " exceeds the bound of 2^" +
                        std::to_string(bounds_.max_code_bits) + " tuples");
  auto t = std::make_unique<OrbitTable>();
  const char* dir = std::getenv("HALLFORGE_CACHE_DIR");
  std::string path;
  if (dir != nullptr && *dir != '\0') {
    path = cache_file(dir, key_, dims);
    if (read_table(path, dims, *t)) return t;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
  }
  *t = build_orbit_table(pres_, field_, dims, [this](const Rep& r) { return valid(r); }, exec_);
  if (!path.empty()) write_table(path, *t);
  return t;
}

const OrbitTable& Catalog::table(const std::vector<int>& dims) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = tables_.find(dims);
  if (it != tables_.end()) return *it->second;
  auto t = load_or_build(dims);
  const OrbitTable& ref = *t;
  tables_.emplace(dims, std::move(t));
  return ref;
}

int Catalog::classify(const Rep& r) const {
  const OrbitTable& t = table(r.dims);
  std::int32_t c = t.class_of[encode(r, field_.q())];
  if (c < 0) throw DomainError("representation is not valid in " + mode_name(mode_) + " mode");
  return c;
}

Rep Catalog::representative(const std::vector<int>& dims, int index) const {
  const OrbitTable& t = table(dims);
  if (index < 0 || index >= t.size()) throw ConfigError("iso-class index out of range");
  return decode(pres_, dims, t.classes[index].code, field_.q());
}

std::uint64_t Catalog::orbit_size(const std::vector<int>& dims, int index) const {
  return table(dims).classes.at(index).orbit_size;
}

BigInt Catalog::aut_size(const std::vector<int>& dims, int index) const {
  BigInt g = 1;
  for (int d : dims) g *= gl_size(d, field_.q());
  BigInt o = static_cast<unsigned long>(orbit_size(dims, index));
  if (g % o != 0) throw InternalError("orbit size does not divide the group order");
  return g / o;
}

}  // namespace hallforge
