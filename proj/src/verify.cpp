#include "hallforge/verify.hpp"

#include <omp.h>

#include <chrono>

#include "hallforge/error.hpp"

namespace hallforge {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skipped";
  }
}

int Report::count(Status s) const {
  int n = 0;
  for (const auto& r : rows) n += r.status == s;
  return n;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["config"] = config;
  j["summary"] = {{"pass", count(Status::pass)}, {"fail", count(Status::fail)}, {"skipped", count(Status::skipped)}};
  j["results"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = {{"id", r.id},         {"anchor", r.anchor},    {"params", r.params},
                          {"status", status_name(r.status)}, {"seconds", r.seconds}};
    if (!r.message.empty()) row["message"] = r.message;
    if (!r.witness.is_null()) row["witness"] = r.witness;
    j["results"].push_back(row);
  }
  return j;
}

std::vector<CheckResult> run_checks(const HallAlgebra& h, const std::vector<CheckJob>& jobs, int threads) {
  std::vector<CheckResult> out(jobs.size());
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const CheckJob& job = jobs[k];
    CheckResult r;
    r.id = job.id;
    r.anchor = job.anchor;
    r.params = job.params;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [lhs, rhs] = job.sides();
      SDHElem diff = lhs - rhs;
      if (diff.empty()) {
        r.status = Status::pass;
      } else {
        r.status = Status::fail;
        r.message = "sides differ";
        r.witness = h.to_json(diff);
      }
    } catch (const ResourceError& e) {
      r.status = Status::skipped;
      r.message = std::string("resource: ") + e.what();
    } catch (const std::exception& e) {
      r.status = Status::fail;
      r.message = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out[k] = std::move(r);
  }
  return out;
}

Report verify_relations(const Realization& r, const std::vector<RelationCheck>& rels, int threads) {
  std::vector<CheckJob> jobs;
  for (const auto& rel : rels)
    jobs.push_back({rel.id, rel.anchor, rel.params, [&r, &rel] {
                      return std::pair{r.eval(rel.lhs), r.eval(rel.rhs)};
                    }});
  Report rep;
  rep.suite = r.family() == Family::bb ? "bb-relations" : "qgkm-relations";
  rep.rows = run_checks(r.algebra(), jobs, threads);
  return rep;
}

std::vector<GenSymbol> square_generators(const CartanData& c, int l, int max_level) {
  std::vector<GenSymbol> out;
  for (int j = 0; j < c.size(); ++j) {
    if (j == l) continue;
    for (int k = 1; k <= c.max_level(j, max_level); ++k) {
      out.push_back(gen::e(j, k));
      out.push_back(gen::f(j, k));
    }
  }
  out.push_back(gen::e(l));
  out.push_back(gen::f(l));
  for (int i = 0; i < c.size(); ++i) {
    out.push_back(gen::K(unit_vec(c.size(), i)));
    out.push_back(gen::Kp(unit_vec(c.size(), i)));
  }
  return out;
}

Report verify_square(const Reflection& g, const Realization& psi_q, const Realization& psi_sq,
                     const std::vector<GenSymbol>& gens, int threads) {
  const int l = g.vertex();
  const int q = psi_q.q();
  const CartanData& c = psi_q.cartan();
  std::vector<CheckJob> sink, source;
  for (const auto& s : gens) {
    const std::string p = "l=" + std::to_string(l + 1) + " g=" + symbol_name(s);
    sink.push_back({"square-sink", "Gamma_l Psi_Q(g) = Psi_{s_l Q}(T'_{l,1}(g))", p, [&, s] {
                      return std::pair{g.gamma(psi_q.eval(word(s))),
                                       psi_sq.eval(braid_T(c, l, word(s), BraidVariant::t_prime_plus, q))};
                    }});
    source.push_back({"square-source", "Gamma^-_l Psi_{s_l Q}(g) = Psi_Q(T''_{l,-1}(g))", p, [&, s] {
                        return std::pair{g.gamma_minus(psi_sq.eval(word(s))),
                                         psi_q.eval(braid_T(c, l, word(s), BraidVariant::t_second_minus, q))};
                      }});
  }
  Report rep;
  rep.suite = "square";
  rep.rows = run_checks(g.target(), sink, threads);
  for (auto& r : run_checks(g.source(), source, threads)) rep.rows.push_back(std::move(r));
  return rep;
}

namespace {

void dimvecs_up_to(int n, int max_total, DimVec& cur, int pos, std::vector<DimVec>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (int d = 0; d + total(cur) <= max_total; ++d) {
    cur[pos] = d;
    dimvecs_up_to(n, max_total, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

}  // namespace

Report verify_inverse(const Reflection& g, const Realization& psi_q, const std::vector<GenSymbol>& gens,
                      int max_dim, int threads) {
  const HallAlgebra& h = g.source();
  const RepCategory& rc = h.reps();
  const int n = rc.num_vertices();
  const int l = g.vertex();
  const int q = h.q();
  std::vector<DimVec> dims;
  DimVec cur(n, 0);
  dimvecs_up_to(n, max_dim, cur, 0, dims);
  std::vector<SDHElem> basis;
  for (const auto& da : dims)
    for (const auto& db : dims) {
      if (total(da) + total(db) > max_dim) continue;
      for (const auto& a : rc.enumerate(da))
        for (const auto& b : rc.enumerate(db)) basis.push_back(h.basis({a, b, h.zero_dim(), h.zero_dim()}));
    }
  for (int i = 0; i < n; ++i)
    for (int sgn : {1, -1}) {
      basis.push_back(h.K(unit_vec(n, i, sgn)));
      basis.push_back(h.Kstar(unit_vec(n, i, sgn)));
    }
  std::vector<CheckJob> jobs;
  for (const auto& x : basis)
    jobs.push_back({"gamma-inverse", "Gamma^-_l Gamma_l(x) = x", "l=" + std::to_string(l + 1) + " x=" + format_elem(x),
                    [&g, x] { return std::pair{g.gamma_minus(g.gamma(x)), x}; }});
  const CartanData& c = rc.cartan();
  for (const auto& s : gens)
    jobs.push_back({"braid-inverse", "Psi_Q(T''_{l,-1} T'_{l,1}(g)) = Psi_Q(g)",
                    "l=" + std::to_string(l + 1) + " g=" + symbol_name(s), [&, s] {
                      GenWord t = braid_T(c, l, word(s), BraidVariant::t_prime_plus, q);
                      return std::pair{psi_q.eval(braid_T(c, l, t, BraidVariant::t_second_minus, q)),
                                       psi_q.eval(word(s))};
                    }});
  Report rep;
  rep.suite = "inverse";
  rep.rows = run_checks(h, jobs, threads);
  return rep;
}

Report verify_braid_rank2(const Realization& r, int threads) {
  const CartanData& c = r.cartan();
  if (c.size() != 2 || !c.is_real(0) || !c.is_real(1))
    throw DomainError("the rank-two braid check needs two real vertices");
  const int a = c.a[0][1];
  if (a != 0 && a != -1) throw DomainError("braid relations are only checked for a_12 in {0, -1}");
  const int q = r.q();
  const Family fam = r.family();
  // Composition T_{s_1} ... T_{s_k}: the last one listed is applied first.
  auto apply = [&](std::vector<int> seq, GenWord x) {
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) x = braid_T(c, *it, x, BraidVariant::t_prime_plus, q);
    return x;
  };
  const std::vector<int> s12 = a == 0 ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 0};
  const std::vector<int> s21 = a == 0 ? std::vector<int>{1, 0} : std::vector<int>{1, 0, 1};
  std::vector<GenSymbol> gens;
  for (int i = 0; i < 2; ++i) {
    gens.push_back(fam == Family::qgkm ? gen::E(i) : gen::e(i));
    gens.push_back(fam == Family::qgkm ? gen::F(i) : gen::f(i));
  }
  for (int i = 0; i < 2; ++i) {
    gens.push_back(gen::K(unit_vec(2, i)));
    gens.push_back(gen::Kp(unit_vec(2, i)));
  }
  const std::string anchor = a == 0 ? "T_1 T_2 (g) = T_2 T_1 (g)" : "T_1 T_2 T_1 (g) = T_2 T_1 T_2 (g)";
  std::vector<CheckJob> jobs;
  for (const auto& s : gens)
    jobs.push_back({"braid-rank2", anchor, "a_12=" + std::to_string(a) + " g=" + symbol_name(s), [&, s] {
                      return std::pair{r.eval(apply(s12, word(s))), r.eval(apply(s21, word(s)))};
                    }});
  Report rep;
  rep.suite = "rank2";
  rep.rows = run_checks(r.algebra(), jobs, threads);
  return rep;
}

}  // namespace hallforge
