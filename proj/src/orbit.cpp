#include "hallforge/orbit.hpp"

#include "hallforge/error.hpp"

namespace hallforge {

int entry_count(const Presentation& p, const std::vector<int>& dims) {
  int e = 0;
  for (const auto& b : p.blocks) e += dims[b.target] * dims[b.source];
  return e;
}

std::uint64_t encode(const Rep& r, int q) {
  std::uint64_t code = 0;
  for (const auto& m : r.maps)
    for (auto x : m.data) code = code * q + x;
  return code;
}

Rep decode(const Presentation& p, const std::vector<int>& dims, std::uint64_t code, int q) {
  Rep r = zero_rep(p, dims);
  for (auto b = r.maps.rbegin(); b != r.maps.rend(); ++b)
    for (auto x = b->data.rbegin(); x != b->data.rend(); ++x) {
      *x = static_cast<std::uint8_t>(code % q);
      code /= q;
    }
  return r;
}

namespace {

struct BlockLayout {
  int offset, rows, cols, target, source;
};

struct Generator {
  int space;
  bool scaling;  // diag(w, 1, ..., 1); otherwise the transvection I + E_{p,r}
  int p, r;
};

class GroupAction {
 public:
  GroupAction(const Presentation& pres, const Fq& f, const std::vector<int>& dims) : f_(f) {
    int off = 0;
    for (const auto& b : pres.blocks) {
      layout_.push_back({off, dims[b.target], dims[b.source], b.target, b.source});
      off += dims[b.target] * dims[b.source];
    }
    entries_ = off;
    w_ = f.primitive_root();
    winv_ = f.inv(w_);
    for (int s = 0; s < pres.num_spaces; ++s) {
      int n = dims[s];
      if (n == 0) continue;
      if (f.q() > 2) gens_.push_back({s, true, 0, 0});
      for (int p = 0; p < n; ++p)
        for (int r = 0; r < n; ++r)
          if (p != r) gens_.push_back({s, false, p, r});
    }
  }

  int entries() const { return entries_; }
  const std::vector<Generator>& generators() const { return gens_; }

  void apply(const Generator& g, std::vector<std::uint8_t>& e) const {
    for (const auto& b : layout_) {
      auto at = [&](int i, int j) -> std::uint8_t& { return e[b.offset + i * b.cols + j]; };
      if (b.target == g.space) {
        if (g.scaling) {
          for (int c = 0; c < b.cols; ++c) at(0, c) = f_.mul(w_, at(0, c));
        } else {
          for (int c = 0; c < b.cols; ++c) at(g.p, c) = f_.add(at(g.p, c), at(g.r, c));
        }
      }
      if (b.source == g.space) {
        if (g.scaling) {
          for (int i = 0; i < b.rows; ++i) at(i, 0) = f_.mul(winv_, at(i, 0));
        } else {
          for (int i = 0; i < b.rows; ++i) at(i, g.r) = f_.sub(at(i, g.r), at(i, g.p));
        }
      }
    }
  }

 private:
  const Fq& f_;
  std::vector<BlockLayout> layout_;
  std::vector<Generator> gens_;
  int entries_ = 0;
  std::uint8_t w_ = 1, winv_ = 1;
};

std::uint64_t pack(const std::vector<std::uint8_t>& e, int q) {
  std::uint64_t c = 0;
  for (auto x : e) c = c * q + x;
  return c;
}

void unpack(std::uint64_t c, int q, std::vector<std::uint8_t>& e) {
  for (auto x = e.rbegin(); x != e.rend(); ++x) {
    *x = static_cast<std::uint8_t>(c % q);
    c /= q;
  }
}

// Marks the orbit of start with label; returns its size.
std::uint64_t walk_orbit(const GroupAction& act, int q, std::uint64_t start, std::int32_t label,
                         std::vector<std::int32_t>& class_of) {
  std::vector<std::uint64_t> stack{start};
  class_of[start] = label;
  std::uint64_t size = 1;
  std::vector<std::uint8_t> cur(act.entries()), nxt(act.entries());
  while (!stack.empty()) {
    std::uint64_t c = stack.back();
    stack.pop_back();
    unpack(c, q, cur);
    for (const auto& g : act.generators()) {
      nxt = cur;
      act.apply(g, nxt);
      std::uint64_t d = pack(nxt, q);
      if (class_of[d] == -2) {
        class_of[d] = label;
        ++size;
        stack.push_back(d);
      }
    }
  }
  return size;
}

}  // namespace

OrbitTable build_orbit_table(const Presentation& p, const Fq& f, const std::vector<int>& dims,
                             const RepPredicate& valid, Exec exec) {
  OrbitTable t;
  t.dims = dims;
  t.entries = entry_count(p, dims);
  const int q = f.q();
  for (int i = 0; i < t.entries; ++i) {
    if (t.space > (std::uint64_t{1} << 40) / q) throw ResourceError("orbit table too large");
    t.space *= q;
  }
  t.class_of.assign(t.space, -2);
  GroupAction act(p, f, dims);

  std::vector<std::uint8_t> ok;
  if (run_parallel(exec)) {
    ok.assign(t.space, 0);
    const auto n = static_cast<long long>(t.space);
#pragma omp parallel for schedule(dynamic, 256)
    for (long long c = 0; c < n; ++c) ok[c] = valid(decode(p, dims, static_cast<std::uint64_t>(c), q)) ? 1 : 0;
  }
  for (std::uint64_t c = 0; c < t.space; ++c) {
    if (t.class_of[c] != -2) continue;
    bool good = ok.empty() ? valid(decode(p, dims, c, q)) : ok[c] != 0;
    if (!good) {
      walk_orbit(act, q, c, -1, t.class_of);
      continue;
    }
    auto label = static_cast<std::int32_t>(t.classes.size());
    std::uint64_t size = walk_orbit(act, q, c, label, t.class_of);
    t.classes.push_back({c, size});
  }
  return t;
}

}  // namespace hallforge
