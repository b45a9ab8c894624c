// Command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 usage error, 3 timeout with a partial result.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rainbow/acceptance.hpp"
#include "rainbow/catalog.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/embedding.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/io.hpp"
#include "rainbow/lemma10.hpp"
#include "rainbow/shadow_partition.hpp"

using namespace rainbow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

struct Globals {
  int threads = 1;
  std::string format = "json";
};

// CSV: one header row of the top-level scalar fields and one row of values.
void emit(const Json& j, const Globals& g) {
  if (g.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::vector<std::string> keys, values;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_structured()) continue;
    keys.push_back(it.key());
    values.push_back(it->is_string() ? it->get<std::string>() : it->dump());
  }
  auto row = [](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
    std::cout << "\n";
  };
  row(keys);
  row(values);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

Json coloring_json(const Coloring& c) {
  return Json{{"n", c.ground_size()}, {"colors", c.color_count()},
              {"color_of", std::vector<ColorId>(c.colors().begin(), c.colors().end())}};
}

Json result_json(const ExtremalResult& r) {
  Json j{{"value", r.value}, {"exact", r.exact}, {"nodes", r.nodes}};
  if (std::holds_alternative<SetFamily>(r.witness)) {
    j["witness"] = family_to_json(r.family());
  } else {
    j["witness"] = coloring_json(r.coloring());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

Json spider_json(const SpiderResult& r) {
  static const char* names[] = {"ok", "stuck", "not_strong"};
  Json j{{"status", names[static_cast<int>(r.status)]}, {"legs_done", r.legs_done}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  const SpiderEmbedding& s = r.spider;
  j["center"] = to_hex(s.center);
  j["center_upper"] = s.center_upper;
  Json legs = Json::array();
  for (std::size_t i = 0; i < s.legs.size(); ++i) {
    Json leg = Json::array();
    for (std::size_t t = 0; t < s.legs[i].size(); ++t) {
      leg.push_back({{"set", to_hex(s.legs[i][t])}, {"colors", to_hex(s.edge_colors[i][t])}});
    }
    legs.push_back(leg);
  }
  j["legs"] = legs;
  j["used_colors"] = popcount(s.used_colors);
  if (r.status == SpiderStatus::kOk) {
    const Poset shape = catalog(CatalogId{CatalogKind::kSpider, {s.leg_length(), static_cast<int>(s.legs.size())}});
    j["embedding"] = embedding_to_json(CopyEmbedding{shape, s.images(), CopyMode::kStrong});
  }
  return j;
}

struct SpiderOptions {
  std::string family;
  int j = 1;
  int legs = 3;
  int leg_length = 2;
  std::string discipline = "full";
  int fraction_k = 3;
  std::string upper = "all";
  double epsilon = 0.5;
  int partition_k = 3;
  int min_degree = 1;
};

void add_spider_options(CLI::App* cmd, SpiderOptions& o, bool crown) {
  cmd->add_option("--family", o.family, "family file or spec (layer:N:K, middle:N:H, kt:N, full:N)")->required();
  cmd->add_option("--j", o.j, "level gap of the inclusion graph")->check(CLI::PositiveNumber);
  cmd->add_option("--legs", o.legs, "number of legs")->check(CLI::PositiveNumber);
  if (!crown) cmd->add_option("--leglen", o.leg_length, "leg length")->check(CLI::PositiveNumber);
  cmd->add_option("--discipline", o.discipline, "full: disjoint color sets; fraction: overlap below j/k")
      ->check(CLI::IsMember({"full", "fraction"}));
  cmd->add_option("--fraction-k", o.fraction_k, "k of the fraction discipline")->check(CLI::PositiveNumber);
  cmd->add_option("--upper", o.upper, "upper part: the whole family or the f1/f2 slice at j")
      ->check(CLI::IsMember({"all", "f1", "f2"}));
  cmd->add_option("--epsilon", o.epsilon, "epsilon of the shadow partition");
  cmd->add_option("--partition-k", o.partition_k, "k of the shadow partition");
  cmd->add_option("--min-degree", o.min_degree, "peel vertices below this degree")->check(CLI::PositiveNumber);
}

struct SpiderRun {
  SetFamily family;
  SpiderResult spider;
  InclusionBigraph core;
};

SpiderRun run_spider(const SpiderOptions& o, int leg_length) {
  SpiderRun run;
  run.family = resolve_family(o.family);
  SetFamily upper = run.family;
  if (o.upper != "all") {
    const ShadowPartition part = partition_f123(run.family, o.epsilon, o.partition_k);
    upper = slice(part, o.upper == "f1" ? ShadowClass::kF1 : ShadowClass::kF2, o.j);
  }
  run.core = min_degree_subgraph(build_bigraph(run.family, upper, o.j), o.min_degree);
  run.spider = greedy_spider(run.core, o.legs, leg_length,
                             o.discipline == "full" ? Discipline::kDisjoint : Discipline::kFraction,
                             o.fraction_k);
  return run;
}

int threads_from_env() {
  if (const char* env = std::getenv("POSET_RAINBOW_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow copies and extremal families in the Boolean lattice"};
  app.require_subcommand(1);
  Globals g;
  g.threads = threads_from_env();
  app.add_option("--threads", g.threads, "worker threads (env POSET_RAINBOW_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));

  app.fallthrough();

  int exit_code = kExitOk;
  // Caps every OpenMP region at --threads.
  auto start = [&] {
#ifdef _OPENMP
    omp_set_num_threads(g.threads);
#endif
  };

  // poset
  std::string poset_spec, show = "summary";
  auto* poset_cmd = app.add_subcommand("poset", "describe a catalog or JSON poset");
  poset_cmd->add_option("--catalog,--poset", poset_spec, "catalog id or poset JSON file")->required();
  poset_cmd->add_option("--show", show, "what to print")
      ->check(CLI::IsMember({"summary", "hasse", "relations", "minus"}));
  poset_cmd->callback([&] {
    start();
    const Poset p = resolve_poset(poset_spec);
    Json j{{"poset", poset_spec}, {"size", p.size()}};
    if (show == "summary") {
      j["height"] = height(p);
      j["connected"] = is_connected(p);
      j["tree"] = is_tree_poset(p);
      j["json"] = poset_to_json(p);
    } else if (show == "hasse") {
      const HasseDiagram h = hasse(p);
      j["count"] = h.arcs.size();
      j["arcs"] = h.arcs;
    } else if (show == "relations") {
      const auto rel = p.relations();
      j["count"] = rel.size();
      j["relations"] = rel;
    } else {
      Json minus = Json::array();
      for (const Poset& q : p_minus(p)) minus.push_back(poset_to_json(q));
      j["count"] = minus.size();
      j["minus"] = minus;
    }
    emit(j, g);
  });

  // la
  int la_n = 0;
  std::string la_posets, la_mode = "weak", la_method = "bb", la_witness;
  bool la_convex_only = false;
  double la_limit = 0;
  auto* la_cmd = app.add_subcommand("la", "largest family with no copy of the given posets");
  la_cmd->add_option("--n", la_n, "ground set size")->required()->check(CLI::Range(1, 6));
  la_cmd->add_option("--posets,--poset", la_posets, "comma separated catalog ids or files")->required();
  la_cmd->add_option("--mode", la_mode)->check(CLI::IsMember({"weak", "strong"}));
  la_cmd->add_option("--method", la_method)->check(CLI::IsMember({"bb", "exhaustive", "convex"}));
  la_cmd->add_flag("--convex", la_convex_only, "only convex families");
  la_cmd->add_option("--time-limit", la_limit, "seconds, 0 for none")->check(CLI::NonNegativeNumber);
  la_cmd->add_option("--emit-witness", la_witness, "write the witness family as JSON");
  la_cmd->callback([&] {
    start();
    SearchConfig cfg;
    cfg.n = la_n;
    for (const auto& s : split_list(la_posets)) cfg.posets.push_back(resolve_poset(s));
    if (cfg.posets.empty()) throw ParseError("--posets is empty");
    cfg.mode = parse_copy_mode(la_mode);
    cfg.convex_only = la_convex_only;
    cfg.time_limit = la_limit;
    cfg.threads = g.threads;
    const ExtremalResult r = la_method == "bb"           ? la_exact(cfg)
                             : la_method == "exhaustive" ? la_exhaustive(cfg)
                                                         : la_convex(cfg);
    Json j = result_json(r);
    if (!la_witness.empty()) write_json_file(la_witness, j["witness"]);
    emit(j, g);
    if (!r.exact) exit_code = kExitTimeout;
  });

  // ar
  int ar_n = 0;
  std::string ar_poset, ar_mode = "weak", ar_method = "bb", ar_witness;
  bool ar_no_symmetry = false;
  double ar_limit = 0;
  auto* ar_cmd = app.add_subcommand("ar", "most colors with no rainbow copy");
  ar_cmd->add_option("--n", ar_n, "ground set size")->required()->check(CLI::Range(1, 6));
  ar_cmd->add_option("--poset", ar_poset, "catalog id or file")->required();
  ar_cmd->add_option("--mode", ar_mode)->check(CLI::IsMember({"weak", "strong"}));
  ar_cmd->add_option("--method", ar_method)->check(CLI::IsMember({"bb", "partitions"}));
  ar_cmd->add_flag("--no-symmetry", ar_no_symmetry, "disable symmetry pruning");
  ar_cmd->add_option("--time-limit", ar_limit, "seconds, 0 for none")->check(CLI::NonNegativeNumber);
  ar_cmd->add_option("--emit-witness", ar_witness, "write the witness coloring as JSON");
  ar_cmd->callback([&] {
    start();
    const Poset p = resolve_poset(ar_poset);
    const CopyMode mode = parse_copy_mode(ar_mode);
    ExtremalResult r;
    if (ar_method == "partitions") {
      r = ar_by_partitions(ar_n, p, mode);
    } else {
      SearchConfig cfg;
      cfg.n = ar_n;
      cfg.posets = {p};
      cfg.mode = mode;
      cfg.time_limit = ar_limit;
      cfg.threads = g.threads;
      cfg.symmetry_reduction = !ar_no_symmetry;
      r = ar_exact(cfg);
    }
    Json j = result_json(r);
    if (!ar_witness.empty()) write_json_file(ar_witness, j["witness"]);
    emit(j, g);
    if (!r.exact) exit_code = kExitTimeout;
  });

  // construct
  std::string kind, construct_out, construct_family;
  int cn = 0, cs = 2, ck = 2;
  auto* construct_cmd = app.add_subcommand("construct", "build one of the explicit colorings");
  construct_cmd->add_option("--kind", kind)->required()->check(
      CLI::IsMember({"butterfly", "broom", "antichain", "lowertriv"}));
  construct_cmd->add_option("--n", cn, "ground set size");
  construct_cmd->add_option("--s", cs, "broom size");
  construct_cmd->add_option("--k", ck, "antichain size");
  construct_cmd->add_option("--family", construct_family, "convex family for lowertriv");
  construct_cmd->add_option("--out", construct_out, "coloring file to write");
  construct_cmd->callback([&] {
    start();
    Coloring c;
    if (kind == "butterfly") {
      c = butterfly_coloring(cn);
    } else if (kind == "broom") {
      c = broom_chain_coloring(cn, cs);
    } else if (kind == "antichain") {
      c = antichain_chain_coloring(cn, ck);
    } else {
      if (construct_family.empty()) throw ParseError("lowertriv needs --family");
      c = lowertriv_coloring(resolve_family(construct_family));
    }
    Json j{{"kind", kind}, {"n", c.ground_size()}, {"colors", c.color_count()}};
    if (!construct_out.empty()) {
      std::ofstream out(construct_out);
      if (!out) throw ParseError("cannot write '" + construct_out + "'");
      write_coloring(out, c);
      j["file"] = construct_out;
    } else {
      j["color_of"] = coloring_json(c)["color_of"];
    }
    emit(j, g);
  });

  // certify
  std::string cert_coloring, cert_poset, cert_mode = "strong";
  auto* certify_cmd = app.add_subcommand("certify", "check a coloring has no rainbow copy");
  certify_cmd->add_option("--coloring", cert_coloring, "coloring file or spec")->required();
  certify_cmd->add_option("--poset", cert_poset, "catalog id or file")->required();
  certify_cmd->add_option("--mode", cert_mode)->check(CLI::IsMember({"weak", "strong"}));
  certify_cmd->callback([&] {
    start();
    const CertifyReport rep = certify(resolve_coloring(cert_coloring), resolve_poset(cert_poset),
                                      parse_copy_mode(cert_mode));
    Json j{{"colors", rep.color_count}, {"rainbow", nullptr}};
    if (rep.rainbow) {
      j["rainbow"] = embedding_to_json(*rep.rainbow);
      exit_code = kExitFailed;
    }
    emit(j, g);
  });

  // find-copy
  std::string fc_poset, fc_family, fc_mode = "weak", fc_coloring;
  auto* find_cmd = app.add_subcommand("find-copy", "search a family for a copy of a poset");
  find_cmd->add_option("--poset", fc_poset, "catalog id or file")->required();
  find_cmd->add_option("--family", fc_family, "family file or spec")->required();
  find_cmd->add_option("--mode", fc_mode)->check(CLI::IsMember({"weak", "strong"}));
  find_cmd->add_option("--coloring", fc_coloring, "also require distinct colors");
  find_cmd->callback([&] {
    start();
    const Poset p = resolve_poset(fc_poset);
    const SetFamily f = resolve_family(fc_family);
    const CopyMode mode = parse_copy_mode(fc_mode);
    std::optional<Coloring> coloring;
    if (!fc_coloring.empty()) {
      coloring = resolve_coloring(fc_coloring);
      if (coloring->ground_size() != f.ground_size()) throw BadParams("coloring and family ground sizes differ");
    }
    CopyQuery q;
    q.poset = &p;
    q.candidates = f.members();
    q.ground_size = f.ground_size();
    q.mode = mode;
    if (coloring) q.colors = coloring->colors();
    const auto images = g.threads > 1 ? search_copy_parallel(q) : search_copy(q);
    Json j{{"found", images.has_value()}, {"copy", nullptr}};
    if (images) j["copy"] = embedding_to_json(CopyEmbedding{p, *images, mode});
    emit(j, g);
  });

  // embed-spider
  SpiderOptions so;
  auto* spider_cmd = app.add_subcommand("embed-spider", "grow a spider greedily in an inclusion graph");
  add_spider_options(spider_cmd, so, false);
  spider_cmd->callback([&] {
    start();
    const SpiderRun run = run_spider(so, so.leg_length);
    Json j = spider_json(run.spider);
    j["core_vertices"] = run.core.vertex_count();
    emit(j, g);
    if (run.spider.status != SpiderStatus::kOk) exit_code = kExitFailed;
  });

  // embed-crown
  SpiderOptions co;
  int crown_k = 3;
  auto* crown_cmd = app.add_subcommand("embed-crown", "spider, then P_{2k-1}, then the crown O_2k");
  crown_cmd->add_option("--k", crown_k, "crown half-size")->check(CLI::Range(3, 16));
  add_spider_options(crown_cmd, co, true);
  crown_cmd->callback([&] {
    start();
    const SpiderRun run = run_spider(co, crown_k - 2);
    Json j{{"spider", spider_json(run.spider)}, {"path", nullptr}, {"crown", nullptr}};
    if (run.spider.status != SpiderStatus::kOk) {
      emit(j, g);
      exit_code = kExitFailed;
      return;
    }
    const PathCompletion path = complete_p2km1(run.spider.spider, run.family, crown_k);
    j["triples_tried"] = path.triples_tried;
    if (!path.found) {
      emit(j, g);
      exit_code = kExitFailed;
      return;
    }
    j["path"] = embedding_to_json(*path.copy);
    j["y"] = path.y;
    const CrownCompletion crown = complete_crown(*path.copy, run.family.ground_size());
    j["crown"] = embedding_to_json(crown.copy);
    j["top_in_band"] = crown.top_in_band;
    emit(j, g);
  });

  // lemma10
  double ln = 1e6;
  int lk = 3, lj = 1000;
  auto* lemma_cmd = app.add_subcommand("lemma10", "log-margins of the three binomial estimates");
  lemma_cmd->add_option("--n", ln)->check(CLI::PositiveNumber);
  lemma_cmd->add_option("--k", lk)->check(CLI::PositiveNumber);
  lemma_cmd->add_option("--j", lj)->check(CLI::PositiveNumber);
  lemma_cmd->callback([&] {
    start();
    const Lemma10Report r = check_lemma10(ln, lk, lj);
    auto margin = [](const MarginReport& m) {
      return Json{{"lhs_log", m.lhs_log}, {"rhs_log", m.rhs_log}, {"margin", m.margin}, {"holds", m.holds()}};
    };
    emit(Json{{"n", r.n}, {"k", r.k}, {"j", r.j}, {"all_hold", r.all_hold()}, {"ratio", margin(r.ratio)},
              {"sum", margin(r.sum)}, {"single", margin(r.single)}},
         g);
    if (!r.all_hold()) exit_code = kExitFailed;
  });

  // partition
  std::string part_family, part_out;
  double part_eps = 0.5;
  int part_k = 3;
  bool part_serial = false;
  auto* part_cmd = app.add_subcommand("partition", "split a band family by shadow density");
  part_cmd->add_option("--family", part_family, "family file or spec")->required();
  part_cmd->add_option("--epsilon", part_eps);
  part_cmd->add_option("--k", part_k);
  part_cmd->add_flag("--serial", part_serial, "use the serial reference");
  part_cmd->add_option("--out-prefix", part_out, "write <prefix>.f1/.f2/.f3 family files");
  part_cmd->callback([&] {
    start();
    const SetFamily f = resolve_family(part_family);
    const ShadowPartition p = part_serial ? partition_f123_serial(f, part_eps, part_k)
                                          : partition_f123(f, part_eps, part_k);
    if (!part_out.empty()) {
      for (auto [suffix, fam] : {std::pair{".f1", &p.f1}, {".f2", &p.f2}, {".f3", &p.f3}}) {
        std::ofstream out(part_out + suffix);
        if (!out) throw ParseError("cannot write '" + part_out + suffix + "'");
        write_family(out, *fam);
      }
    }
    emit(partition_to_json(p), g);
  });

  // sandwich
  int sw_n = 3;
  std::string sw_poset, sw_mode = "weak";
  double sw_limit = 0;
  auto* sw_cmd = app.add_subcommand("sandwich", "compare ar with the La bounds around it");
  sw_cmd->add_option("--n", sw_n)->check(CLI::Range(1, 6));
  sw_cmd->add_option("--poset", sw_poset)->required();
  sw_cmd->add_option("--mode", sw_mode)->check(CLI::IsMember({"weak", "strong"}));
  sw_cmd->add_option("--time-limit", sw_limit)->check(CLI::NonNegativeNumber);
  sw_cmd->callback([&] {
    start();
    const SandwichReport r =
        check_sandwich(sw_n, resolve_poset(sw_poset), parse_copy_mode(sw_mode), sw_limit, g.threads);
    Json j{{"n", r.n},          {"mode", to_string(r.mode)}, {"ar", r.ar},
           {"la", r.la},        {"la_minus", r.la_minus},   {"la_con_minus", r.la_con_minus},
           {"exact", r.exact},  {"holds", r.holds()},      {"violations", r.violations}};
    j["extreme_bound"] = r.extreme_bound ? Json(*r.extreme_bound) : Json(nullptr);
    emit(j, g);
    if (!r.exact) {
      exit_code = kExitTimeout;
    } else if (!r.holds()) {
      exit_code = kExitFailed;
    }
  });

  // repro
  std::vector<std::string> repro_ids;
  auto* repro_cmd = app.add_subcommand("repro", "run acceptance criteria (AC1..AC12 or all)");
  repro_cmd->add_option("ids", repro_ids, "criterion ids, default all");
  repro_cmd->callback([&] {
    start();
    std::vector<std::string> ids;
    for (const auto& id : repro_ids) {
      if (id == "all") {
        ids = criterion_ids();
        break;
      }
      const auto known = criterion_ids();
      if (std::find(known.begin(), known.end(), id) == known.end()) {
        throw CLI::ValidationError("ids", "unknown criterion '" + id + "'");
      }
      ids.push_back(id);
    }
    if (ids.empty()) ids = criterion_ids();
    Json rows = Json::array();
    bool all = true;
    for (const auto& id : ids) {
      const CriterionResult r = run_criterion(id, AcceptanceOptions{g.threads});
      all &= r.pass;
      std::fprintf(stderr, "%-5s %s %7.2fs\n", r.id.c_str(), r.pass ? "PASS" : "FAIL", r.seconds);
      rows.push_back({{"id", r.id}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
    }
    if (g.format == "csv") {
      std::cout << "id,pass,seconds\n";
      for (const auto& r : rows) {
        std::cout << r["id"].get<std::string>() << "," << (r["pass"].get<bool>() ? "true" : "false") << ","
                  << r["seconds"].get<double>() << "\n";
      }
    } else {
      std::cout << Json{{"all_pass", all}, {"criteria", rows}}.dump(2) << "\n";
    }
    if (!all) exit_code = kExitFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BadParams& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BadRange& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeViolation& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TooLarge& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return exit_code;
}
