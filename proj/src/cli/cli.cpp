#include "omega/cli/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "omega/blcoll/collection.hpp"
#include "omega/coalgebra/coalgebra.hpp"
#include "omega/gcore/globset.hpp"
#include "omega/gcore/ngraph.hpp"
#include "omega/monads/laws.hpp"
#include "omega/monads/pasting.hpp"
#include "omega/opweak/trimble.hpp"

namespace omega::cli {

using gcore::GlobSet;
using gcore::ParseError;
using nlohmann::json;

namespace {

/// Raised for outcomes that are reported as a JSON violation (exit 3).
struct DomainFailure {
  json report;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

json read_json(const std::string& path) {
  std::filesystem::path p(path);
  if (!std::filesystem::exists(p)) {
    if (const char* dir = std::getenv("OMEGA_FIXTURE_DIR"); dir && std::filesystem::exists(std::filesystem::path(dir) / p))
      p = std::filesystem::path(dir) / p;
    else
      throw ParseError("cannot open " + path);
  }
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

GlobSet read_globset(const RunConfig& c, std::size_t defaultN) {
  if (c.input.empty()) return GlobSet::terminal(defaultN);
  return gcore::globset_from_json(read_json(c.input));
}

GlobSet valid_globset(const RunConfig& c, std::size_t defaultN) {
  GlobSet g = read_globset(c, defaultN);
  if (auto v = gcore::validate_globset(g)) throw DomainFailure{json::parse(gcore::violation_json(*v))};
  return g;
}

opweak::Mode parse_mode(const std::string& m) {
  if (m == "incoherent") return opweak::Mode::Incoherent;
  if (m == "coherent") return opweak::Mode::Coherent;
  throw ParseError("mode must be incoherent or coherent");
}

opweak::FinOperad seed_operad(const RunConfig& c) {
  if (c.seedOperad == "terminal") return opweak::terminal_operad(gcore::finset_base(), std::max<std::size_t>(c.bound, 1));
  auto p = opweak::operad_from_json(read_json(c.seedOperad));
  if (auto v = opweak::check_operad_laws(p))
    throw DomainFailure{{{"ok", false}, {"law", v->law}, {"dim", v->dim}, {"detail", v->detail}}};
  return p;
}

opweak::Space read_space(const RunConfig& c) {
  opweak::Space x = c.input.empty() ? opweak::discrete_space({Term::atom("p")}) : opweak::space_from_json(read_json(c.input));
  if (c.model == "discrete") return opweak::discrete_space(x.points);
  if (c.model == "graph") return x;
  throw ParseError("model must be discrete or graph");
}

json count_json(const std::vector<std::string>& cells) { return {{"count", cells.size()}, {"cells", cells}}; }

json cmd_validate(const RunConfig& c) {
  std::string kind = c.kind.empty() ? "globset" : c.kind;
  if (c.input.empty()) throw ParseError("validate needs --input");
  json j = read_json(c.input);
  if (kind == "globset") {
    auto g = gcore::globset_from_json(j);
    if (auto v = gcore::validate_globset(g)) throw DomainFailure{json::parse(gcore::violation_json(*v))};
  } else if (kind == "operad") {
    auto p = opweak::operad_from_json(j);
    if (auto v = opweak::check_operad_laws(p))
      throw DomainFailure{{{"ok", false}, {"law", v->law}, {"dim", v->dim}, {"detail", v->detail}}};
  } else if (kind == "collection") {
    auto col = blcoll::collection_from_json(j);
    if (auto v = blcoll::check_collection(col)) throw DomainFailure{json::parse(gcore::violation_json(*v))};
  } else if (kind == "space") {
    opweak::space_from_json(j);
  } else {
    throw ParseError("unknown kind " + kind);
  }
  return {{"ok", true}};
}

json cmd_free_cat(const RunConfig& c) {
  GlobSet g = valid_globset(c, 1);
  if (g.n == 0) throw gcore::DimensionError("free-cat needs a graph of dimension >= 1");
  auto x = gcore::globset_to_ngraph(g);
  monads::MonadPtr fc;
  if (c.operad.empty()) {
    fc = monads::fc_monad(gcore::ngraph_base(g.n - 1));
  } else {
    if (g.n != 1) throw gcore::DimensionError("weighted free categories need a 1-graph");
    auto p = opweak::operad_from_json(read_json(c.operad));
    if (auto v = opweak::check_operad_laws(p))
      throw DomainFailure{{{"ok", false}, {"law", v->law}, {"dim", v->dim}, {"detail", v->detail}}};
    fc = opweak::vp_free_monad(p);
  }
  auto fx = fc->apply(x, c.bound);
  if (!c.from.empty() || !c.to.empty()) {
    Term a = Term::atom(c.from), b = Term::atom(c.to);
    auto hom = renderAll(fx.hom(a, b).members());
    json out = count_json(hom);
    if (g.n == 1 && c.operad.empty()) out["kelly"] = monads::kelly_count(x, a, b, c.bound);
    return out;
  }
  return count_json(renderAll(gcore::cells(fx, c.dim, c.bound)));
}

monads::MonadPtr law_monad(const RunConfig& c, monads::ObjGenerator& gen) {
  const std::string& m = c.monad;
  auto graphs = [](Rng& r) { return monads::random_graph(r, 4, 5); };
  if (m == "fc") {
    gen = graphs;
    return monads::fc_monad(gcore::finset_base());
  }
  if (m == "identity") {
    gen = [](Rng& r) { return monads::random_set(r, 4); };
    return monads::identity_monad(gcore::finset_base());
  }
  if (m == "writer") {
    gen = [](Rng& r) { return monads::random_set(r, 4); };
    return monads::writer_z2();
  }
  if (m == "fm-writer") {
    gen = graphs;
    return monads::fm_step(monads::writer_z2());
  }
  if (m.size() == 2 && (m[0] == 't' || m[0] == 'T') && std::isdigit(static_cast<unsigned char>(m[1]))) {
    std::size_t k = static_cast<std::size_t>(m[1] - '0');
    gen = [k](Rng& r) { return monads::random_ngraph(k, 3, r); };
    return monads::strict_tower(k)[k].monad;
  }
  if (m.rfind("trimble", 0) == 0 && m.size() == 8 && std::isdigit(static_cast<unsigned char>(m[7]))) {
    std::size_t k = static_cast<std::size_t>(m[7] - '0');
    gen = [k](Rng& r) { return monads::random_ngraph(k, 3, r); };
    return opweak::trimble_tower(seed_operad(c), k, parse_mode(c.mode))[k].monad;
  }
  if (m == "vp") {
    if (c.operad.empty()) throw ParseError("--monad vp needs --operad");
    gen = graphs;
    return opweak::vp_free_monad(opweak::operad_from_json(read_json(c.operad)));
  }
  throw ParseError("unknown monad " + m);
}

json cmd_laws(const RunConfig& c) {
  monads::ObjGenerator gen;
  auto t = law_monad(c, gen);
  auto report = monads::monad_law_report(*t, c.samples, c.bound, c.seed, gen);
  json j = monads::to_json(report);
  if (!report.ok()) throw DomainFailure{j};
  return j;
}

coalgebra::FunctorPtr functor_of(const RunConfig& c) {
  if (c.functor == "word") return coalgebra::word_functor(split(c.alphabet));
  if (c.functor == "identity") return coalgebra::identity_functor();
  if (c.functor == "free-monoid") return coalgebra::free_monoid_functor(c.grade);
  throw ParseError("unknown functor " + c.functor);
}

json cmd_adamek(const RunConfig& c) {
  auto f = functor_of(c);
  auto chain = coalgebra::adamek_chain(f, c.depth);
  json stages = json::array();
  for (std::size_t k = 0; k <= c.depth; ++k) stages.push_back(chain.stage(k).size());
  auto lambek = coalgebra::lambek_probe(chain, c.depth);
  json j{{"functor", f->describe()}, {"stages", stages}, {"lambek", coalgebra::to_json(lambek)}};
  if (!lambek.bijective) throw DomainFailure{j};
  return j;
}

json cmd_unfold(const RunConfig& c) {
  if (c.functor != "word") throw ParseError("unfold needs the word functor");
  auto labels = split(c.alphabet);
  const std::size_t k = labels.size();
  if (k == 0) throw ParseError("empty alphabet");
  std::vector<std::size_t> next(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (c.map == "swap") {
      if (k != 2) throw ParseError("swap needs two states");
      next[i] = 1 - i;
    } else if (c.map == "identity") {
      next[i] = i;
    } else if (c.map == "cycle") {
      next[i] = (i + 1) % k;
    }
  }
  if (c.map != "swap" && c.map != "identity" && c.map != "cycle") {
    auto parts = split(c.map);
    if (parts.size() != k) throw ParseError("--map needs one successor per state");
    for (std::size_t i = 0; i < k; ++i) {
      if (parts[i].find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad successor " + parts[i]);
      next[i] = std::stoul(parts[i]);
      if (next[i] >= k) throw ParseError("successor out of range");
    }
  }
  if (c.start.empty() || c.start.find_first_not_of("0123456789") != std::string::npos || std::stoul(c.start) >= k)
    throw ParseError("--start must name a state");
  auto coalg = coalgebra::word_coalgebra(labels, next);
  auto f = coalgebra::word_functor(labels);
  Term w = coalgebra::unfold(*f, coalg, coalg.carrier[std::stoul(c.start)], c.depth);
  return coalgebra::flatten_word(w);
}

json cmd_trimble(const RunConfig& c) {
  auto seed = seed_operad(c);
  auto mode = parse_mode(c.mode);
  auto x = read_space(c);
  auto levels = opweak::trimble_tower(seed, c.n, mode);
  json out = json::array();
  for (const auto& l : levels) {
    gcore::Obj f = l.fundamental(x, c.bound);
    json counts = json::array();
    for (std::size_t d = 0; d <= l.n; ++d) counts.push_back(gcore::cellCount(f, d, c.bound));
    auto alg = monads::check_algebra(*l.monad, f, l.action(), c.bound);
    auto collapse = opweak::check_strict_collapse(seed, mode, l.n, gcore::globset_to_ngraph(GlobSet::terminal(l.n)), c.bound);
    json lj{{"n", l.n}, {"monad", l.monad->name()}, {"fundamental_counts", counts},
            {"algebra", alg.value_or("ok")}, {"strict_collapse", collapse.value_or("ok")}};
    if (l.operad) lj["operad"] = opweak::to_json(*l.operad);
    out.push_back(lj);
  }
  return {{"model", c.model}, {"mode", c.mode}, {"levels", out}};
}

json cmd_composite(const RunConfig& c) {
  auto seed = seed_operad(c);
  GlobSet g = valid_globset(c, c.n);
  auto r = opweak::composite_check(seed, parse_mode(c.mode), g, c.n, c.bound);
  json j = opweak::to_json(r);
  if (!r.ok()) throw DomainFailure{j};
  return j;
}

json cmd_collection(const RunConfig& c) {
  if (c.input.empty()) throw ParseError("collection-check needs --input");
  auto col = blcoll::collection_from_json(read_json(c.input));
  if (auto v = blcoll::check_collection(col)) throw DomainFailure{json::parse(gcore::violation_json(*v))};
  std::size_t mMax = c.mMax ? *c.mMax : (col.n == 0 ? 0 : col.n - 1);
  blcoll::Lift lift = c.lift.empty() ? blcoll::search_lift(col, mMax) : blcoll::lift_from_json(read_json(c.lift));
  auto missing = col.n == 0 ? std::vector<blcoll::MissingLift>{} : blcoll::check_contraction(col, lift, mMax);
  json j{{"ok", missing.empty()}, {"m_max", mMax}, {"lift", c.lift.empty() ? "searched" : "given"},
         {"missing", blcoll::to_json(missing)}};
  if (!missing.empty()) throw DomainFailure{j};
  return j;
}

json dispatch(const RunConfig& c) {
  const auto& cmd = c.command;
  if (cmd == "validate") return cmd_validate(c);
  if (cmd == "truncate") return gcore::to_json(gcore::truncate_globset(valid_globset(c, c.n), c.dim));
  if (cmd == "free-cat") return cmd_free_cat(c);
  if (cmd == "tn-cells") return count_json(monads::enumerate_tn_cells(c.n, valid_globset(c, c.n), c.dim, c.bound));
  if (cmd == "oracle") {
    GlobSet g = valid_globset(c, c.n);
    if (g.n != c.n) throw gcore::DimensionError("input is not " + std::to_string(c.n) + "-dimensional");
    return {{"count", monads::pasting_oracle(c.n, g, c.dim, c.bound)}};
  }
  if (cmd == "laws") return cmd_laws(c);
  if (cmd == "adamek") return cmd_adamek(c);
  if (cmd == "unfold") return cmd_unfold(c);
  if (cmd == "trimble") return cmd_trimble(c);
  if (cmd == "composite-check") return cmd_composite(c);
  if (cmd == "collection-check") return cmd_collection(c);
  if (cmd == "gen-random") return gen_random(c.kind.empty() ? "globset" : c.kind, c.n, c.size, c.seed);
  throw ParseError("unknown command " + cmd);
}

void emit(const RunConfig& c, std::ostream& out, const json& j) {
  std::string text = j.dump() + "\n";
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw ParseError("cannot write " + c.output);
  f << text;
}

}  // namespace

json gen_random(const std::string& kind, std::size_t n, std::size_t size, std::uint64_t seed) {
  Rng rng(seed);
  if (kind == "globset") return gcore::to_json(gcore::random_globset(n, size, rng));
  if (kind == "graph") return gcore::to_json(gcore::random_globset(1, size, rng));
  if (kind == "space") {
    std::vector<Term> pts;
    for (std::size_t i = 0; i < size; ++i) pts.push_back(Term::atom("p" + std::to_string(i)));
    std::vector<opweak::Space::Edge> edges;
    if (size > 0) {
      std::size_t k = rng.between(0, size);
      for (std::size_t i = 0; i < k; ++i)
        edges.push_back({Term::atom("e" + std::to_string(i)), pts[rng.below(size)], pts[rng.below(size)]});
    }
    return opweak::to_json(opweak::graph_space(pts, edges));
  }
  if (kind == "collection") return blcoll::to_json(blcoll::random_collection(n, std::max<std::size_t>(size, 1), 2, rng));
  if (kind == "operad") {
    // Arity-blind composition in a cyclic group: p(q_1..q_k) = p + Σ q_i.
    std::size_t m = 1 + rng.below(std::max<std::size_t>(std::min<std::size_t>(size, 3), 1));
    std::size_t cap = std::clamp<std::size_t>(n, 1, 3);
    auto name = [](std::size_t i) { return "g" + std::to_string(i); };
    json ops = json::object(), comp = json::object();
    std::vector<std::string> elems;
    for (std::size_t i = 0; i < m; ++i) elems.push_back(name(i));
    for (std::size_t k = 0; k <= cap; ++k) {
      ops[std::to_string(k)] = elems;
      std::vector<std::size_t> idx(k + 1, 0);
      while (true) {
        std::string key = name(idx[0]) + "(";
        std::size_t sum = idx[0];
        for (std::size_t i = 1; i <= k; ++i) {
          key += (i > 1 ? "," : "") + name(idx[i]);
          sum += idx[i];
        }
        comp[key + ")"] = name(sum % m);
        std::size_t i = 0;
        while (i <= k && ++idx[i] == m) idx[i++] = 0;
        if (i > k) break;
      }
    }
    return {{"name", "cyclic" + std::to_string(m)}, {"cap", cap}, {"ops", ops}, {"comp", comp}, {"unit", name(0)}};
  }
  throw ParseError("unknown kind " + kind);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    emit(config, out, dispatch(config));
    return kExitOk;
  } catch (const DomainFailure& f) {
    json j = f.report;
    if (j.is_object() && !j.contains("ok")) j["ok"] = false;
    emit(config, out, j);
    return kExitViolation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const monads::UnsupportedDepth& e) {
    err << "unsupported depth: " << e.what() << "\n";
    return kExitDepth;
  } catch (const std::exception& e) {
    emit(config, out, {{"ok", false}, {"error", e.what()}});
    return kExitViolation;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"omega: globular sets, monads and operads at desk scale"};
  app.require_subcommand(1);
  RunConfig c;
  std::size_t mMax = 0;
  auto add = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--input", c.input, "input JSON file");
    s->add_option("--output", c.output, "write JSON here instead of standard output");
    return s;
  };
  auto* validate = add("validate", "check an input against its invariants");
  validate->add_option("--kind", c.kind, "globset | operad | collection | space");
  auto* truncate = add("truncate", "drop the cells above a dimension");
  truncate->add_option("--dim", c.dim)->required();
  auto* freeCat = add("free-cat", "cells of the free category on a graph");
  freeCat->add_option("--dim", c.dim);
  freeCat->add_option("--bound", c.bound);
  freeCat->add_option("--from", c.from);
  freeCat->add_option("--to", c.to);
  freeCat->add_option("--operad", c.operad, "weight by a finite-set operad");
  for (const char* name : {"tn-cells", "oracle"}) {
    auto* s = add(name, std::string(name) == "oracle" ? "count T_n cells by labelled trees" : "enumerate T_n cells");
    s->add_option("--n", c.n);
    s->add_option("--dim", c.dim);
    s->add_option("--bound", c.bound);
  }
  auto* laws = add("laws", "monad laws on seeded random inputs");
  laws->add_option("--monad", c.monad, "fc | identity | writer | fm-writer | t1..t3 | trimble0..trimble2 | vp");
  laws->add_option("--samples", c.samples);
  laws->add_option("--seed", c.seed);
  laws->add_option("--bound", c.bound);
  laws->add_option("--operad", c.operad);
  laws->add_option("--seed-operad", c.seedOperad);
  laws->add_option("--mode", c.mode);
  for (const char* name : {"adamek", "unfold"}) {
    auto* s = add(name, std::string(name) == "adamek" ? "approximant chain and Lambek probe" : "anamorphism prefix");
    s->add_option("--functor", c.functor);
    s->add_option("--alphabet", c.alphabet);
    s->add_option("--grade", c.grade);
    s->add_option("--depth", c.depth);
    if (std::string(name) == "unfold") {
      s->add_option("--map", c.map, "swap | identity | cycle | comma-separated successors");
      s->add_option("--start", c.start);
    }
  }
  for (const char* name : {"trimble", "composite-check"}) {
    auto* s = add(name, std::string(name) == "trimble" ? "incoherent Trimble tower" : "tower against P_0 ... P_{n-1}");
    s->add_option("--model", c.model, "discrete | graph");
    s->add_option("--seed-operad", c.seedOperad, "terminal or an operad JSON file");
    s->add_option("--mode", c.mode, "incoherent | coherent");
    s->add_option("--n", c.n);
    s->add_option("--bound", c.bound);
  }
  auto* coll = add("collection-check", "collection and contraction checks");
  coll->add_option("--lift", c.lift, "lift JSON; searched when absent");
  auto* mm = coll->add_option("--m-max", mMax, "highest m checked; n-1 by default");
  auto* gen = add("gen-random", "seeded random instance");
  gen->add_option("--kind", c.kind, "globset | graph | space | operad | collection");
  gen->add_option("--n", c.n);
  gen->add_option("--size", c.size);
  gen->add_option("--seed", c.seed);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (mm->count() > 0) c.mMax = mMax;
  return run(c, out, err);
}

}  // namespace omega::cli
