// hallforge command line: exact semi-derived Hall algebra computations and
// verification suites.  Exit status 0 = ok (skips allowed), 1 = a check
// failed, 2 = bad configuration or input.
#include <omp.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>

#include "hallforge/braid.hpp"
#include "hallforge/error.hpp"
#include "hallforge/qalg.hpp"
#include "hallforge/reflect.hpp"
#include "hallforge/relations.hpp"
#include "hallforge/verify.hpp"

using namespace hallforge;
using nlohmann::json;

namespace {

struct Options {
  std::string quiver;
  int q = 2;
  std::string mode;
  int max_level = 3;
  int max_dim = 0;  // 0: command default
  std::string charge;
  std::string out;
  int jobs = 0;
  int max_degree = 4;
  std::string suite;
  std::string vertex;
  std::string elem;
  std::string lhs, rhs;
  std::string cx;
  std::string dim;
  std::string x, z;
  bool untwisted = false;
  bool csv = false;
};

struct Failed {};  // a report with failures was written

// Inline JSON, or @path to read it from a file.
json parse_json_arg(const std::string& flag, const std::string& s) {
  std::string text = s;
  if (!s.empty() && s[0] == '@') {
    std::ifstream in(s.substr(1));
    if (!in) throw ConfigError("cannot open " + s.substr(1) + " for " + flag);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON for " + flag + ": " + e.what());
  }
}

void emit(const Options& o, const json& j) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ConfigError("cannot write " + o.out);
  f << j.dump(2) << "\n";
}

void emit_text(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ConfigError("cannot write " + o.out);
  f << text;
}

void emit_report(const Options& o, const Report& r) {
  emit(o, r.to_json());
  int skipped = r.count(Status::skipped);
  if (skipped > 0) std::cerr << "warning: " << skipped << " check(s) skipped at the resource bounds\n";
  int failed = r.count(Status::fail);
  if (failed > 0) {
    std::cerr << failed << " check(s) failed\n";
    throw Failed{};
  }
}

Mode mode_or(const Options& o, Mode dflt) { return o.mode.empty() ? dflt : parse_mode(o.mode); }

Quiver load_quiver(const Options& o) {
  if (o.quiver.empty()) throw ConfigError("--quiver is required");
  return Quiver::load(o.quiver);
}

Bounds bounds_or(const Options& o, int dflt) {
  Bounds b;
  b.max_total_dim = o.max_dim > 0 ? o.max_dim : dflt;
  return b;
}

int vertex_arg(const Quiver& q, const Options& o) {
  if (o.vertex.empty()) throw ConfigError("--vertex is required");
  return q.vertex_index(o.vertex);
}

json base_config(const Options& o, Mode mode) {
  return {{"quiver", o.quiver}, {"q", o.q}, {"mode", mode_name(mode)}, {"max_level", o.max_level},
          {"max_degree", o.max_degree}};
}

// Every command owns its categories; the algebra objects hold references.
struct Stack {
  std::unique_ptr<RepCategory> reps;
  std::unique_ptr<HallAlgebra> h;
  Stack(const Quiver& q, int field, Mode mode, const Bounds& b, bool parallel) {
    reps = std::make_unique<RepCategory>(q, field, mode, b);
    if (parallel) reps->catalog().set_exec(Exec::parallel);
    h = std::make_unique<HallAlgebra>(*reps);
  }
};

Exec exec_of(const Options& o) { return o.jobs == 1 ? Exec::serial : Exec::parallel; }

void cmd_cartan(const Options& o) {
  Quiver q = load_quiver(o);
  emit(o, json{{"a", cartan_from_quiver(q).a}});
}

void cmd_enum(const Options& o) {
  Quiver q = load_quiver(o);
  Stack s(q, o.q, mode_or(o, Mode::nilpotent), bounds_or(o, 6), exec_of(o) == Exec::parallel);
  std::vector<DimVec> dims;
  if (!o.dim.empty()) {
    DimVec d = parse_dims(o.dim);
    if (static_cast<int>(d.size()) != q.num_vertices() || !is_nonneg(d))
      throw ConfigError("--dim needs one nonnegative entry per vertex");
    dims.push_back(d);
  } else {
    // every dimension vector of total dimension <= max-dim (default 2)
    const int top = o.max_dim > 0 ? o.max_dim : 2;
    DimVec d(q.num_vertices(), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == q.num_vertices()) {
        dims.push_back(d);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        d[i] = k;
        rec(i + 1, left - k);
      }
      d[i] = 0;
    };
    rec(0, top);
    std::sort(dims.begin(), dims.end(), [](const DimVec& a, const DimVec& b) {
      return total(a) != total(b) ? total(a) < total(b) : a < b;
    });
  }
  json out = json::array();
  std::string csv = "id,dim,index,aut\n";
  for (const auto& d : dims)
    for (const auto& c : s.reps->enumerate(d)) {
      out.push_back(s.reps->id(c));
      csv += s.reps->id(c) + ",\"" + format_dims(c.dim) + "\"," + std::to_string(c.index) + "," +
             s.reps->aut_size(c).get_str() + "\n";
    }
  if (o.csv) emit_text(o, csv);
  else emit(o, out);
}

void cmd_hall(const Options& o) {
  Quiver q = load_quiver(o);
  Stack s(q, o.q, mode_or(o, Mode::nilpotent), bounds_or(o, 6), exec_of(o) == Exec::parallel);
  if (o.x.empty() || o.z.empty()) throw ConfigError("hall needs --x and --z class ids");
  ModElem x{{s.reps->parse_id(o.x), Scalar(1)}}, z{{s.reps->parse_id(o.z), Scalar(1)}};
  ModElem p = s.reps->hall_product(x, z, !o.untwisted, exec_of(o));
  json out = json::array();
  std::string csv = "class,coeff\n";
  for (const auto& [c, coeff] : p) {
    out.push_back({{"class", s.reps->id(c)}, {"coeff", json(coeff)}});
    csv += s.reps->id(c) + ",\"" + coeff.to_string() + "\"\n";
  }
  if (o.csv) emit_text(o, csv);
  else emit(o, out);
}

void cmd_mul(const Options& o) {
  Quiver q = load_quiver(o);
  Stack s(q, o.q, mode_or(o, Mode::nilpotent), bounds_or(o, 6), exec_of(o) == Exec::parallel);
  if (o.lhs.empty() || o.rhs.empty()) throw ConfigError("mul needs --lhs and --rhs elements");
  SDHElem a = s.h->from_json(parse_json_arg("--lhs", o.lhs));
  SDHElem b = s.h->from_json(parse_json_arg("--rhs", o.rhs));
  emit(o, s.h->to_json(s.h->mul(a, b, exec_of(o))));
}

void cmd_reduce(const Options& o) {
  Quiver q = load_quiver(o);
  Stack s(q, o.q, mode_or(o, Mode::nilpotent), bounds_or(o, 6), exec_of(o) == Exec::parallel);
  if (!o.cx.empty()) {
    Cx m = s.h->complexes().from_json(parse_json_arg("--cx", o.cx));
    emit(o, s.h->to_json(s.h->reduce(m)));
  } else if (!o.elem.empty()) {
    // round trip through the normal form; rejects malformed elements
    emit(o, s.h->to_json(s.h->from_json(parse_json_arg("--elem", o.elem))));
  } else {
    throw ConfigError("reduce needs --cx (a complex) or --elem");
  }
}

// Gamma at a sink, Gamma^- at a source.  The output lives over the reflected
// quiver, which is included in the result.
void cmd_reflect(const Options& o) {
  Quiver q = load_quiver(o);
  const int l = vertex_arg(q, o);
  if (o.elem.empty()) throw ConfigError("reflect needs --elem");
  const Mode mode = mode_or(o, Mode::nilpotent);
  const Bounds b = bounds_or(o, 12);
  Quiver sq = reflect_quiver(q, l);
  Stack here(q, o.q, mode, b, exec_of(o) == Exec::parallel);
  Stack there(sq, o.q, mode, b, exec_of(o) == Exec::parallel);
  SDHElem x = here.h->from_json(parse_json_arg("--elem", o.elem));
  json out;
  if (q.is_sink(l)) {
    Reflection g(*here.h, *there.h, l);
    out = {{"direction", "sink"}, {"quiver", sq.to_json()}, {"elem", there.h->to_json(g.gamma(x, exec_of(o)))}};
  } else if (q.is_source(l)) {
    Reflection g(*there.h, *here.h, l);
    out = {{"direction", "source"},
           {"quiver", sq.to_json()},
           {"elem", there.h->to_json(g.gamma_minus(x, exec_of(o)))}};
  } else {
    throw DomainError("vertex " + o.vertex + " is neither a sink nor a source");
  }
  emit(o, out);
}

void cmd_verify(const Options& o) {
  Quiver q = load_quiver(o);
  const bool qgkm = o.suite == "qgkm-relations";
  if (!qgkm && o.suite != "bb-relations") throw ConfigError("--suite must be bb-relations or qgkm-relations");
  const Mode mode = mode_or(o, qgkm ? Mode::full : Mode::nilpotent);
  Stack s(q, o.q, mode, bounds_or(o, 6), exec_of(o) == Exec::parallel);
  RelationBounds rb{o.max_level, o.max_degree};
  json cfg = base_config(o, mode);
  std::optional<Realization> r;
  std::vector<RelationCheck> rels;
  if (qgkm) {
    Charge ch = o.charge.empty() ? Charge::trivial(q, o.q) : Charge::parse(o.charge, q, o.q);
    ch.validate(q, o.q);
    std::vector<int> m;
    for (int i = 0; i < q.num_vertices(); ++i) m.push_back(ch.m(i));
    cfg["charge"] = m;
    r.emplace(*s.h, Family::qgkm, ch);
    rels = qgkm_relations(s.reps->cartan(), m, o.q, rb);
  } else {
    r.emplace(*s.h, Family::bb);
    rels = bb_relations(s.reps->cartan(), o.q, rb);
  }
  Report rep = verify_relations(*r, rels, o.jobs);
  rep.config = cfg;
  emit_report(o, rep);
}

void cmd_braid(const Options& o) {
  Quiver q = load_quiver(o);
  if (o.suite != "rank2" && o.suite != "square" && o.suite != "inverse")
    throw ConfigError("--suite must be rank2, square or inverse");
  const bool nil = o.mode.empty() ? o.charge.empty() : parse_mode(o.mode) == Mode::nilpotent;
  const Mode mode = nil ? Mode::nilpotent : Mode::full;
  const Family fam = nil ? Family::bb : Family::qgkm;
  const Bounds b = bounds_or(o, 12);
  json cfg = base_config(o, mode);
  cfg["family"] = family_name(fam);
  Charge ch = fam == Family::qgkm ? (o.charge.empty() ? Charge::trivial(q, o.q) : Charge::parse(o.charge, q, o.q))
                                  : Charge{};
  if (fam == Family::qgkm) ch.validate(q, o.q);

  Stack s(q, o.q, mode, b, exec_of(o) == Exec::parallel);
  if (o.suite == "rank2") {
    Realization r(*s.h, fam, ch);
    Report rep = verify_braid_rank2(r, o.jobs);
    rep.config = cfg;
    emit_report(o, rep);
    return;
  }
  int l = -1;
  if (!o.vertex.empty()) {
    l = q.vertex_index(o.vertex);
  } else {
    for (int i = 0; i < q.num_vertices() && l < 0; ++i)
      if (q.is_sink(i) && q.loops(i) == 0) l = i;
    if (l < 0) throw DomainError("the quiver has no loop-free sink; pass --vertex");
  }
  if (!q.is_sink(l)) throw DomainError("vertex " + q.vertices()[l] + " is not a sink");
  cfg["vertex"] = q.vertices()[l];
  if (fam != Family::bb) throw ConfigError("the square and inverse suites use the nilpotent Borcherds-Bozec realisation");
  Stack t(reflect_quiver(q, l), o.q, mode, b, exec_of(o) == Exec::parallel);
  Reflection g(*s.h, *t.h, l);
  Realization psi_q(*s.h, fam), psi_sq(*t.h, fam);
  auto gens = square_generators(s.reps->cartan(), l, o.max_level);
  Report rep = o.suite == "square" ? verify_square(g, psi_q, psi_sq, gens, o.jobs)
                                   : verify_inverse(g, psi_q, gens, o.max_dim > 0 ? std::min(o.max_dim, 2) : 2, o.jobs);
  rep.config = cfg;
  emit_report(o, rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact semi-derived Hall algebras of quivers over finite fields"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--quiver", o.quiver, "quiver JSON file")->required();
    c->add_option("--q", o.q, "field size (2, 3 or 5)");
    c->add_option("--mode", o.mode, "nilpotent or full");
    c->add_option("--max-level", o.max_level, "highest level of imaginary generators")->capture_default_str();
    c->add_option("--max-dim", o.max_dim, "bound on total dimension of enumerated representations");
    c->add_option("--charge", o.charge, "charge multiplicities, e.g. 2 or 1,2");
    c->add_option("--out", o.out, "write the JSON result here instead of stdout");
    c->add_option("--jobs", o.jobs, "worker threads (0 = all, 1 = serial)");
  };
  auto* cartan = app.add_subcommand("cartan", "Borcherds-Cartan matrix of the quiver");
  auto* en = app.add_subcommand("enum", "isomorphism class ids");
  auto* hall = app.add_subcommand("hall", "Hall product of two module classes");
  auto* mul = app.add_subcommand("mul", "product in the semi-derived Hall algebra");
  auto* red = app.add_subcommand("reduce", "normal form of a complex");
  auto* refl = app.add_subcommand("reflect", "reflection isomorphism at a sink or source");
  auto* ver = app.add_subcommand("verify", "defining relations of the quantum algebra");
  auto* br = app.add_subcommand("braid", "braid group action checks");
  for (auto* c : {cartan, en, hall, mul, red, refl, ver, br}) common(c);
  en->add_flag("--csv", o.csv, "CSV table instead of JSON");
  hall->add_flag("--csv", o.csv, "CSV table instead of JSON");
  en->add_option("--dim", o.dim, "single dimension vector, e.g. 1,0");
  hall->add_option("--x", o.x, "class id of the first factor")->required();
  hall->add_option("--z", o.z, "class id of the second factor")->required();
  hall->add_flag("--untwisted", o.untwisted, "omit the Euler form twist");
  mul->add_option("--lhs", o.lhs, "element JSON or @file")->required();
  mul->add_option("--rhs", o.rhs, "element JSON or @file")->required();
  red->add_option("--cx", o.cx, "complex JSON or @file");
  red->add_option("--elem", o.elem, "element JSON or @file");
  refl->add_option("--vertex", o.vertex, "vertex id")->required();
  refl->add_option("--elem", o.elem, "element JSON or @file")->required();
  ver->add_option("--suite", o.suite, "bb-relations or qgkm-relations")->required();
  ver->add_option("--max-degree", o.max_degree, "skip relations of higher total level")->capture_default_str();
  br->add_option("--suite", o.suite, "rank2, square or inverse")->required();
  br->add_option("--vertex", o.vertex, "sink vertex for square and inverse");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (o.q != 2 && o.q != 3 && o.q != 5) throw ConfigError("--q must be 2, 3 or 5");
    if (o.max_level < 1 || o.max_degree < 0 || o.max_dim < 0 || o.jobs < 0)
      throw ConfigError("bounds must be positive");
    if (o.jobs > 0) omp_set_num_threads(o.jobs);
    if (*cartan) cmd_cartan(o);
    else if (*en) cmd_enum(o);
    else if (*hall) cmd_hall(o);
    else if (*mul) cmd_mul(o);
    else if (*red) cmd_reduce(o);
    else if (*refl) cmd_reflect(o);
    else if (*ver) cmd_verify(o);
    else if (*br) cmd_braid(o);
    return 0;
  } catch (const Failed&) {
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource bound exceeded: " << e.what() << " (raise --max-dim)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
