#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdasculpt/hdasculpt.hpp"

using namespace hdasculpt;

namespace {

struct Args {
  std::string file;
  std::string from, to;
  std::string format = "json";
  std::string dir = "corpus";
  std::vector<int> sizes;
  int d = 0;
  std::uint64_t seed = 1;
  int max_labels = 6;
  bool oracle = false;
  std::size_t max_events = 10;
  std::size_t node_budget = 1000000;
  bool states = false;
};

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

SearchOptions search_options(const Args& a) {
  SearchOptions o;
  o.oracle = a.oracle;
  o.max_events = a.max_events;
  o.node_budget = a.node_budget;
  return o;
}

int run_check(const Args& a, bool oracle) {
  Hda h = hda_from_any_json(load_json_file(a.file));
  SearchOptions o = search_options(a);
  o.oracle = o.oracle || oracle;
  Verdict v = decide_sculptable(h, o);
  print(to_json(h, v));
  return v.sculptable ? 0 : 1;
}

int run_cover(const Args& a) {
  Hda h = hda_from_any_json(load_json_file(a.file));
  auto cov = hintost(h);
  Json out = to_json(cov.st);
  if (a.states) {
    Json per = Json::object();
    for (CellIdx q = 0; q < h.cells.size(); ++q) {
      Json cs = Json::array();
      for (int i : cov.at[q]) cs.push_back(config_json(cov.states[i].config, cov.st.events));
      per[h.cells.name(q)] = cs;
    }
    out["states"] = per;
  }
  print(out);
  return 0;
}

StStructure read_as_st(const std::string& kind, const Json& j) {
  if (kind == "st") return st_from_json(j);
  if (kind == "chu") return chu_to_st(chu_from_json(j));
  if (kind == "sculpture") return sculpture_to_st(sculpture_from_json(j));
  throw Error(ErrorKind::InvalidInput, "unknown --from kind " + kind);
}

int run_convert(const Args& a) {
  StStructure st = read_as_st(a.from, load_json_file(a.file));
  if (a.to == "st") print(to_json(st));
  else if (a.to == "chu") print(to_json(st_to_chu(st)));
  else if (a.to == "sculpture") print(to_json(st_to_sculpture(st)));
  else if (a.to == "hda") print(to_json(st_to_sculpture(st).hda));
  else throw Error(ErrorKind::InvalidInput, "unknown --to kind " + a.to);
  return 0;
}

int run_pv(const Args& a) {
  auto prog = parse_pv(read_file(a.file));
  auto pv = pv_to_complex(prog);
  Json out = Json::object();
  out["sizes"] = pv.sizes;
  out["complex"] = to_json(pv.complex);
  out["hda"] = to_json(pv.hda.hda);
  out["reachable"] = to_json(pv.reachable.hda);
  print(out);
  return 0;
}

int run_corpus(const Args& a) {
  Json rows = Json::array();
  bool all_ok = true;
  for (const auto& f : fixtures()) {
    auto t0 = std::chrono::steady_clock::now();
    auto res = check_fixture(f, search_options(a));
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    Json row = Json::object();
    row["name"] = f.name;
    row["verdict"] = res.verdict.kind();
    if (res.verdict.sculptable) row["d"] = res.verdict.d();
    row["ok"] = res.ok();
    row["problems"] = res.problems;
    row["ms"] = ms;
    rows.push_back(row);
    all_ok = all_ok && res.ok();
  }
  print(rows);
  return all_ok ? 0 : 1;
}

int run_corpus_export(const Args& a) {
  std::filesystem::create_directories(a.dir);
  for (const auto& f : fixtures()) {
    auto path = std::filesystem::path(a.dir) / (f.name + ".json");
    std::ofstream os(path);
    if (!os) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
    os << to_json(f).dump(2) << "\n";
    std::cout << path.string() << "\n";
  }
  return 0;
}

int run_export(const Args& a) {
  Hda h = hda_from_any_json(load_json_file(a.file));
  if (a.format == "dot") std::cout << to_dot(h);
  else if (a.format == "tikz") std::cout << to_tikz(h);
  else print(to_json(h));
  return 0;
}

int run_random(const Args& a) {
  Rng rng(a.seed);
  print(to_json(random_hda(rng, a.max_labels)));
  return 0;
}

void add_search_flags(CLI::App* cmd, Args& a) {
  cmd->add_flag("--oracle", a.oracle, "decide by exhaustive search over label partitions");
  cmd->add_option("--max-events", a.max_events, "largest label count the exhaustive search accepts")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--node-budget", a.node_budget, "search nodes before giving up")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sculpting higher-dimensional automata"};
  app.require_subcommand(1);
  Args a;
  int (*action)(const Args&) = nullptr;

  auto* check = app.add_subcommand("check", "decide sculptability; exit 0 sculptable, 1 not, 2 invalid");
  check->add_option("hda", a.file, "HDA or fixture JSON")->required()->check(CLI::ExistingFile);
  add_search_flags(check, a);
  check->callback([&] { action = [](const Args& x) { return run_check(x, false); }; });

  auto* oracle = app.add_subcommand("oracle", "decide by exhaustive search");
  oracle->add_option("hda", a.file, "HDA or fixture JSON")->required()->check(CLI::ExistingFile);
  add_search_flags(oracle, a);
  oracle->callback([&] { action = [](const Args& x) { return run_check(x, true); }; });

  auto* cover = app.add_subcommand("cover", "ST-structure of rooted paths");
  cover->add_option("hda", a.file, "HDA or fixture JSON")->required()->check(CLI::ExistingFile);
  cover->add_flag("--states", a.states, "also list the configurations reaching each cell");
  cover->callback([&] { action = run_cover; });

  auto* convert = app.add_subcommand("convert", "convert between ST-structures, Chu spaces and sculptures");
  convert->add_option("--from", a.from)->required()->check(CLI::IsMember({"st", "chu", "sculpture"}));
  convert->add_option("--to", a.to)->required()->check(CLI::IsMember({"st", "chu", "sculpture", "hda"}));
  convert->add_option("input", a.file)->required()->check(CLI::ExistingFile);
  convert->callback([&] { action = run_convert; });

  auto* bulk = app.add_subcommand("bulk", "emit the bulk of dimension d");
  bulk->add_option("d", a.d)->required()->check(CLI::Range(0, kMaxBulkDim));
  bulk->callback([&] { action = [](const Args& x) { print(to_json(make_bulk(x.d))); return 0; }; });

  auto* grid = app.add_subcommand("grid", "emit the grid with the given side lengths");
  grid->add_option("sizes", a.sizes)->required()->check(CLI::NonNegativeNumber);
  grid->callback([&] { action = [](const Args& x) { print(to_json(make_grid(x.sizes))); return 0; }; });

  auto* pv = app.add_subcommand("pv", "PV programs");
  pv->require_subcommand(1);
  auto* pv_build = pv->add_subcommand("build", "complex and HDA of a PV program");
  pv_build->add_option("file", a.file)->required()->check(CLI::ExistingFile);
  pv_build->callback([&] { action = run_pv; });

  auto* corpus = app.add_subcommand("corpus", "built-in fixtures");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "decide every fixture and compare with its expectations");
  add_search_flags(corpus_run, a);
  corpus_run->callback([&] { action = run_corpus; });
  auto* corpus_export = corpus->add_subcommand("export", "write every fixture as JSON");
  corpus_export->add_option("dir", a.dir, "output directory");
  corpus_export->callback([&] { action = run_corpus_export; });

  auto* exp = app.add_subcommand("export", "render an HDA");
  exp->add_option("--format", a.format)->check(CLI::IsMember({"json", "dot", "tikz"}));
  exp->add_option("hda", a.file)->required()->check(CLI::ExistingFile);
  exp->callback([&] { action = run_export; });

  auto* rnd = app.add_subcommand("random", "emit a random connected acyclic HDA");
  rnd->add_option("--seed", a.seed);
  rnd->add_option("--max-labels", a.max_labels)->check(CLI::Range(1, 12));
  rnd->callback([&] { action = run_random; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print(error_json(Error(ErrorKind::InvalidInput, e.what())));
    return 2;
  }

  try {
    return action(a);
  } catch (const Error& e) {
    print(error_json(e));
  } catch (const std::exception& e) {
    print(error_json(Error(ErrorKind::InvalidInput, e.what())));
  }
  return 2;
}
