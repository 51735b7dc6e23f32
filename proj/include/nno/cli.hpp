#pragma once

// Command-line front end. Everything lives in run() so tests can drive it
// with in-memory streams; tools/nno.cpp only forwards argv.
//
// Exit codes: 0 ok, 1 graph not in class, 2 bad input (including oracle
// size guards and timeouts), 3 theory violation or sweep disagreement.

#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "nno/fixtures.hpp"
#include "nno/generator.hpp"
#include "nno/longest_path.hpp"
#include "nno/oracle.hpp"
#include "nno/steiner.hpp"

namespace nno::cli {

struct Options {
  std::string format = "json";
  std::string input_format = "auto";
  std::string output;
  long timeout_ms = 0;
  std::string file;
  std::string terminals;
  std::string task;
  // gen
  int i = 0, j = 0;
  std::string a2, b2;
  std::uint64_t seed = 7;
  bool shuffle = false;
  bool random = false;
  // sweep / gen --random
  int max_n = 10;
  int gen_count = 100;
  int gen_max_n = 14;
  int jobs = 1;
  bool timings = false;
};

namespace detail {

inline std::vector<int> parse_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError(std::string("bad ") + what + " entry '" + tok + "'");
    }
  }
  return out;
}

inline Graph load(const Options& o) {
  bool json = o.input_format == "json" ||
              (o.input_format == "auto" && o.file.size() > 5 && o.file.ends_with(".json"));
  auto format = json ? GraphFormat::adjacency_json : GraphFormat::edge_list;
  if (o.file == "-") return parse_graph(std::cin, format);
  std::ifstream in(o.file);
  if (!in) throw InputError("cannot open " + o.file);
  return parse_graph(in, format);
}

inline std::vector<Vertex> terminals(const Options& o, const Graph& g) {
  std::vector<Vertex> r;
  for (int id : parse_list(o.terminals, "terminal")) {
    if (id < 1 || id > g.order()) throw InputError("terminal " + std::to_string(id) + " outside the graph");
    r.push_back(id - 1);
  }
  if (r.empty()) throw InputError("--terminals is required");
  return r;
}

inline Deadline deadline(const Options& o) {
  return o.timeout_ms > 0 ? Deadline(std::chrono::milliseconds(o.timeout_ms)) : Deadline();
}

// Plain "key: value" rendering of a JSON document.
inline void render_text(std::ostream& out, const nlohmann::json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar_list = [](const nlohmann::json& a) {
    if (!a.is_array()) return false;
    for (const auto& e : a)
      if (e.is_structured() && !(e.is_array() && std::all_of(e.begin(), e.end(), [](auto& x) { return x.is_primitive(); })))
        return false;
    return true;
  };
  auto flat = [](const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (!v.is_array()) return v.dump();
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ' ';
      if (e.is_array()) {
        std::string inner;
        for (const auto& x : e) inner += (inner.empty() ? "" : "-") + x.dump();
        s += inner;
      } else {
        s += e.is_string() ? e.get<std::string>() : e.dump();
      }
    }
    return s.empty() ? std::string("-") : s;
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_text(out, v, indent + 2);
    } else if (v.is_array() && !scalar_list(v)) {
      out << pad << it.key() << ":\n";
      for (const auto& e : v) {
        render_text(out, e, indent + 2);
        out << pad << "  --\n";
      }
    } else {
      out << pad << it.key() << ": " << flat(v) << '\n';
    }
  }
}

inline void emit(const Options& o, std::ostream& out, const nlohmann::json& j) {
  std::ofstream file;
  std::ostream* dst = &out;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw InputError("cannot write " + o.output);
    dst = &file;
  }
  if (o.format == "text")
    render_text(*dst, j);
  else
    *dst << j.dump(2) << '\n';
}

inline void emit_raw(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw InputError("cannot write " + o.output);
  file << text;
}

// ---- subcommands --------------------------------------------------------

inline int cmd_classify(const Options& o, std::ostream& out) {
  Graph g = load(o);
  auto r = classify(g);
  auto j = to_json(r);
  j["witnessCheck"] = to_json(validate_report(g, r), "class-witnesses");
  emit(o, out, j);
  return r.in_class ? 0 : 1;
}

inline int cmd_decompose(const Options& o, std::ostream& out) {
  auto d = decompose(load(o));
  emit(o, out, to_json(d));
  return check_lemmas(d).ok() ? 0 : 3;
}

inline int cmd_hamiltonian(const Options& o, std::ostream& out, bool cycle) {
  auto d = decompose(load(o));
  auto dec = cycle ? hamiltonian_cycle(d) : hamiltonian_path(d);
  auto j = to_json(dec);
  if (dec.witness) j["check"] = to_json(validate_hamiltonian(d.g(), *dec.witness), cycle ? "cycle" : "path");
  if (dec.certificate) j["check"] = to_json(validate_cut(d.g(), *dec.certificate), "cut");
  emit(o, out, j);
  return 0;
}

inline int cmd_longest(const Options& o, std::ostream& out) {
  auto d = decompose(load(o));
  auto r = longest_path(d);
  emit(o, out,
       {{"length", r.path.length()},
        {"path", ids(r.path.seq)},
        {"hamiltonian", r.hamiltonian},
        {"pattern", r.pattern},
        {"check", to_json(validate_sequence(d.g(), r.path), "path")}});
  return 0;
}

inline int cmd_mlst(const Options& o, std::ostream& out) {
  auto d = decompose(load(o));
  auto p = longest_path(d).path;
  auto t = min_leaf_spanning_tree(d, p);
  auto j = to_json(t);
  j["path"] = ids(p.seq);
  j["check"] = to_json(validate_tree(d.g(), t), "spanning-tree");
  emit(o, out, j);
  return 0;
}

inline nlohmann::json oracle_steiner_json(const Graph& g, std::span<const Vertex> r, const Deadline& dl) {
  auto p = brute_steiner_path(g, r, dl);
  if (!p) return {{"answer", "no"}};
  return {{"answer", "yes"}, {"path", ids(p->seq)}, {"steinerCount", static_cast<int>(p->length() - r.size())}};
}

inline int cmd_steiner(const Options& o, std::ostream& out) {
  auto d = decompose(load(o));
  auto r = terminals(o, d.g());
  auto res = steiner_path(d, r);
  auto j = to_json(res);
  if (res.answer == SteinerAnswer::unsupported && d.g().order() <= 14)
    j["oracle"] = oracle_steiner_json(d.g(), nno::detail::normalise_terminals(d.g(), r), deadline(o));
  else if (res.answer != SteinerAnswer::unsupported)
    j["minimality"] = to_json(verify_minimality(d.g(), res, r), "steiner-minimality");
  emit(o, out, j);
  return 0;
}

inline int cmd_oracle(const Options& o, std::ostream& out) {
  Graph g = load(o);
  if (!is_connected(g)) throw InputError("graph is disconnected");
  auto dl = deadline(o);
  nlohmann::json j{{"task", o.task}};
  if (o.task == "hamcycle" || o.task == "hampath") {
    auto w = brute_hamiltonian(g, o.task == "hamcycle" ? HamMode::cycle : HamMode::path, dl);
    j["answer"] = w ? "yes" : "no";
    if (w) j["witness"] = ids(w->seq);
  } else if (o.task == "longest") {
    auto p = brute_longest_path(g, dl);
    j["length"] = p.length();
    j["path"] = ids(p.seq);
  } else if (o.task == "mlst") {
    j.update(to_json(brute_mlst(g, dl)));
  } else if (o.task == "steiner") {
    auto r = terminals(o, g);
    j.update(oracle_steiner_json(g, nno::detail::normalise_terminals(g, r), dl));
  } else {
    throw InputError("unknown oracle task '" + o.task + "'");
  }
  emit(o, out, j);
  return 0;
}

inline int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  GenSpec spec;
  if (o.random) {
    spec = random_spec(o.seed, o.max_n);
  } else {
    spec.i = o.i;
    spec.j = o.j;
    spec.a2_degrees = parse_list(o.a2, "a2 degree");
    spec.b2_degrees = parse_list(o.b2, "b2 degree");
    spec.seed = o.seed;
    spec.shuffle = o.shuffle;
  }
  auto gen = generate(spec);
  if (gen.rejections > 0) err << "gen: " << gen.rejections << " rejected attempt(s)\n";
  if (o.output.ends_with(".json")) {
    auto j = to_adjacency_json(gen.graph);
    j["spec"] = to_json(gen.accepted);
    emit_raw(o, out, j.dump(2) + "\n");
  } else {
    emit_raw(o, out, "# spec " + to_json(gen.accepted).dump() + "\n" + to_edge_list(gen.graph));
  }
  return 0;
}

// ---- sweep --------------------------------------------------------------

struct SweepRow {
  std::string instance;
  int n = 0;
  std::size_t m = 0;
  std::string task, decision, witness_length, oracle_length, agree;
  long micros = 0;
};

inline std::vector<SweepRow> sweep_instance(const std::string& id, const Graph& g, std::uint64_t seed,
                                            const Options& o) {
  std::vector<SweepRow> rows;
  auto row = [&](std::string task, auto&& body) {
    SweepRow r{id, g.order(), g.size(), std::move(task), "", "", "", "", 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(r);
    } catch (const OracleTimeout&) {
      r.oracle_length = "timeout";
      r.agree = "-";
    } catch (const std::exception& e) {
      r.decision = "error";
      r.agree = "0";
    }
    r.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back(std::move(r));
  };
  auto flag = [](bool b) { return std::string(b ? "1" : "0"); };
  auto d = decompose(g);
  for (bool cycle : {true, false}) {
    row(cycle ? "hamcycle" : "hampath", [&](SweepRow& r) {
      auto dec = cycle ? hamiltonian_cycle(d) : hamiltonian_path(d);
      r.decision = dec.yes ? "yes" : "no";
      r.witness_length = std::to_string(dec.witness ? dec.witness->length() : 0);
      bool valid = dec.witness ? static_cast<bool>(validate_hamiltonian(g, *dec.witness))
                               : !dec.certificate || static_cast<bool>(validate_cut(g, *dec.certificate));
      auto w = brute_hamiltonian(g, cycle ? HamMode::cycle : HamMode::path, deadline(o));
      r.oracle_length = std::to_string(w ? w->length() : 0);
      r.agree = flag(valid && dec.yes == w.has_value());
    });
  }
  row("longest", [&](SweepRow& r) {
    auto p = longest_path(d).path;
    r.decision = "yes";
    r.witness_length = std::to_string(p.length());
    auto best = brute_longest_path(g, deadline(o)).length();
    r.oracle_length = std::to_string(best);
    r.agree = flag(p.length() == best);
  });
  if (g.order() <= 12)
    row("mlst", [&](SweepRow& r) {
      auto t = min_leaf_spanning_tree(d);
      r.decision = "yes";
      r.witness_length = std::to_string(t.leaf_count);
      int best = brute_mlst(g, deadline(o)).leaf_count;
      r.oracle_length = std::to_string(best);
      r.agree = flag(t.leaf_count == best);
    });
  if (g.order() >= 2 && g.order() <= 14) {
    std::mt19937_64 rng(seed);
    std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    for (int k = 0; k < 2; ++k) {
      std::shuffle(all.begin(), all.end(), rng);
      const int size = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(3, g.order() - 1)));
      std::vector<Vertex> r(all.begin(), all.begin() + size);
      std::sort(r.begin(), r.end());
      std::string name = "steiner:";
      for (Vertex v : r) name += (name.back() == ':' ? "" : "+") + std::to_string(v + 1);
      row(name, [&](SweepRow& out) {
        auto res = steiner_path(d, r);
        static const char* answers[] = {"yes", "no", "unsupported"};
        out.decision = answers[static_cast<int>(res.answer)];
        out.witness_length = std::to_string(res.path ? res.path->length() : 0);
        auto best = SteinerOracle(g, deadline(o)).min_vertices(r);
        out.oracle_length = std::to_string(best.value_or(0));
        if (res.answer == SteinerAnswer::unsupported)
          out.agree = "-";
        else
          out.agree = flag(res.path ? best && static_cast<int>(res.path->length()) == *best : !best);
      });
    }
  }
  return rows;
}

inline int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, Graph>> instances;
  int k = 0;
  char buf[32];
  for_each_in_class(o.max_n, [&](const Graph& g) {
    std::snprintf(buf, sizeof buf, "enum-%04d", ++k);
    instances.emplace_back(buf, g);
  });
  for (int t = 0; t < o.gen_count; ++t) {
    std::uint64_t s = o.seed * 1000003ULL + static_cast<std::uint64_t>(t);
    std::snprintf(buf, sizeof buf, "gen-%04d", t + 1);
    instances.emplace_back(buf, generate(random_spec(s, o.gen_max_n)).graph);
  }

  std::vector<std::vector<SweepRow>> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx; (idx = next++) < instances.size();) {
      std::uint64_t s = o.seed ^ (0x9E3779B97F4A7C15ULL * (idx + 1));
      results[idx] = sweep_instance(instances[idx].first, instances[idx].second, s, o);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, o.jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << "instance,n,m,task,decision,witness_length,oracle_length,agree" << (o.timings ? ",runtime_us" : "") << '\n';
  int rows = 0, bad = 0;
  for (const auto& rs : results)
    for (const auto& r : rs) {
      ++rows;
      bad += r.agree == "0";
      csv << r.instance << ',' << r.n << ',' << r.m << ',' << r.task << ',' << r.decision << ',' << r.witness_length
          << ',' << r.oracle_length << ',' << r.agree;
      if (o.timings) csv << ',' << r.micros;
      csv << '\n';
    }
  emit_raw(o, out, csv.str());
  err << "sweep: " << instances.size() << " instances, " << rows << " rows, " << bad << " disagreement(s)\n";
  return bad == 0 ? 0 : 3;
}

}  // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tools for P5-free chordal bipartite graphs", "nno"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--input-format", o.input_format, "Graph file format (auto picks json for *.json)")
      ->check(CLI::IsMember({"auto", "edges", "json"}));
  app.add_option("-o,--output", o.output, "Write output to this file");
  app.add_option("--timeout-ms", o.timeout_ms, "Per-oracle-call time budget (0 = none)");

  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Graph file, or - for standard input")->required();
    return sub;
  };
  auto* classify_cmd = with_file("classify", "Membership test with forbidden-structure witnesses");
  auto* decompose_cmd = with_file("decompose", "Biclique core, nested tails and lemma checks");
  auto* hamcycle_cmd = with_file("hamcycle", "Hamiltonian cycle: witness or cut certificate");
  auto* hampath_cmd = with_file("hampath", "Hamiltonian path: witness or cut certificate");
  auto* longest_cmd = with_file("longest", "Longest path");
  auto* mlst_cmd = with_file("mlst", "Minimum-leaf spanning tree");
  auto* steiner_cmd = with_file("steiner", "Shortest path through a terminal set");
  steiner_cmd->add_option("--terminals", o.terminals, "Comma-separated 1-based vertex ids")->required();
  auto* oracle_cmd = with_file("oracle", "Exhaustive-search answer (small graphs only)");
  oracle_cmd->add_option("--task", o.task, "hamcycle|hampath|longest|mlst|steiner")
      ->required()
      ->check(CLI::IsMember({"hamcycle", "hampath", "longest", "mlst", "steiner"}));
  oracle_cmd->add_option("--terminals", o.terminals, "Terminals for --task steiner");

  auto* gen_cmd = app.add_subcommand("gen", "Generate an in-class instance (edge list; adjacency JSON when -o ends in .json)");
  gen_cmd->add_option("--i", o.i, "Core size on side A");
  gen_cmd->add_option("--j", o.j, "Core size on side B");
  gen_cmd->add_option("--a2", o.a2, "Degrees of the A-side tails, comma-separated");
  gen_cmd->add_option("--b2", o.b2, "Degrees of the B-side tails, comma-separated");
  gen_cmd->add_option("--seed", o.seed, "Seed for the label shuffle or random spec");
  gen_cmd->add_flag("--shuffle", o.shuffle, "Shuffle vertex labels");
  gen_cmd->add_flag("--random", o.random, "Draw the spec at random from --seed and --max-n");
  gen_cmd->add_option("--max-n", o.max_n, "Vertex budget for --random");

  auto* sweep_cmd = app.add_subcommand("sweep", "Compare every algorithm with its oracle; CSV output");
  sweep_cmd->add_option("--max-n", o.max_n, "Enumerate every in-class graph up to this size (<= 10)");
  sweep_cmd->add_option("--seed", o.seed, "Seed for generated instances and terminal sets");
  sweep_cmd->add_option("--gen-count", o.gen_count, "Number of generated instances");
  sweep_cmd->add_option("--gen-max-n", o.gen_max_n, "Vertex budget of generated instances (<= 14)");
  sweep_cmd->add_option("--jobs", o.jobs, "Worker threads");
  sweep_cmd->add_flag("--timings", o.timings, "Add a runtime_us column (output no longer reproducible)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) return detail::cmd_classify(o, out);
    if (decompose_cmd->parsed()) return detail::cmd_decompose(o, out);
    if (hamcycle_cmd->parsed()) return detail::cmd_hamiltonian(o, out, true);
    if (hampath_cmd->parsed()) return detail::cmd_hamiltonian(o, out, false);
    if (longest_cmd->parsed()) return detail::cmd_longest(o, out);
    if (mlst_cmd->parsed()) return detail::cmd_mlst(o, out);
    if (steiner_cmd->parsed()) return detail::cmd_steiner(o, out);
    if (oracle_cmd->parsed()) return detail::cmd_oracle(o, out);
    if (gen_cmd->parsed()) return detail::cmd_gen(o, out, err);
    if (sweep_cmd->parsed()) return detail::cmd_sweep(o, out, err);
  } catch (const NotInClassError& e) {
    err << "nno: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "nno: input error: " << e.what() << '\n';
    return 2;
  } catch (const SizeGuardError& e) {
    err << "nno: " << e.what() << '\n';
    return 2;
  } catch (const OracleTimeout& e) {
    err << "nno: " << e.what() << '\n';
    return 2;
  } catch (const RejectionLimitError& e) {
    err << "nno: " << e.what() << "\n" << e.instance;
    return 3;
  } catch (const TheoryViolation& e) {
    err << "nno: theory violation: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "nno: internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace nno::cli
