// Command-line surface: instance I/O, catalog discovery, experiment drivers.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cox/instance_io.hpp"
#include "cox/twist.hpp"
#include "cox/verification.hpp"

using namespace cox;

namespace {

struct Options {
  int radius = 10;
  int cutoff = 100;
  int depth = 8;
  std::size_t cap = 100000;
  unsigned seed = 0;
};

void echo(const std::string& cmd, const Options& opt) {
  std::cout << "# coxtwist " << cmd << " radius=" << opt.radius << " cutoff=" << opt.cutoff
            << " depth=" << opt.depth << " cap=" << opt.cap << " seed=" << opt.seed << "\n";
}

std::string subset_names(const DefiningGraph& g, GenSet s) {
  std::string out = "{";
  bool first = true;
  for (Gen v : members(s)) {
    if (!first) out += ",";
    first = false;
    out += g.name(v);
  }
  return out + "}";
}

GenSet subset_by_names(const DefiningGraph& g, const std::vector<std::string>& names) {
  GenSet s = 0;
  for (const auto& n : names) {
    Gen v = g.index_of(n);
    if (v < 0) throw CoxError(Err::parse_error, "unknown generator '" + n + "'");
    s |= single(v);
  }
  return s;
}

std::vector<std::string> split_commas(const std::string& arg) {
  std::vector<std::string> out;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

int cmd_classify(const std::string& file, const Options& opt) {
  echo("classify " + file, opt);
  DefiningGraph g = load_instance(file);
  for (GenSet j = 1; j < (GenSet{1} << g.rank()); ++j) {
    auto type = classify(g, j);
    std::cout << subset_names(g, j) << ": " << type.to_string();
    if (type.spherical()) std::cout << " order " << type.order();
    std::cout << "\n";
  }
  std::cout << "spherical subsets: ";
  int count = 0;
  for (GenSet j = 1; j < (GenSet{1} << g.rank()); ++j) count += is_spherical(g, j);
  std::cout << count << "\n";
  return 0;
}

int cmd_fc(const std::string& file, const Options& opt) {
  echo("fc " + file, opt);
  DefiningGraph g = load_instance(file);
  bool fc = is_fc(g);
  std::cout << "fc: " << (fc ? "true" : "false") << "\n";
  if (!fc)
    for (GenSet c : maximal_cliques(g))
      if (!is_spherical(g, c))
        std::cout << "witness clique " << subset_names(g, c) << " is not spherical\n";
  return 0;
}

int cmd_rigidity(const std::string& file, int k, const Options& opt) {
  echo("rigidity " + file + " k=" + std::to_string(k), opt);
  DefiningGraph g = load_instance(file);
  bool rigid = true;
  for (GenSet j = 1; j < (GenSet{1} << g.rank()); ++j) {
    if (size_of(j) < k || !is_irreducible(g, j) || !is_spherical(g, j)) continue;
    if (weakly_separates(g, j)) {
      rigid = false;
      std::cout << "witness J=" << subset_names(g, j) << " weakly separates\n";
    }
  }
  std::cout << k << "-rigid: " << (rigid ? "true" : "false") << "\n";
  return 0;
}

int cmd_twists(const std::string& file, const Options& opt) {
  echo("twists " + file, opt);
  DefiningGraph g = load_instance(file);
  auto twists = enumerate_twists(g);
  std::cout << twists.size() << " elementary twists\n";
  for (const auto& t : twists)
    std::cout << "J=" << subset_names(g, t.j) << " A=" << subset_names(g, t.a)
              << " B=" << subset_names(g, t.b) << "\n";
  return 0;
}

int cmd_twist_class(const std::string& file, const Options& opt) {
  echo("twist-class " + file, opt);
  DefiningGraph g = load_instance(file);
  auto cls = twist_class(g, opt.cap);
  std::cout << cls.graphs.size() << " canonical graphs"
            << (cls.complete ? "" : " (partial: cap exceeded)") << "\n";
  for (const auto& node : cls.graphs) {
    std::cout << "graph " << canonical_graph_key(node) << " 3-rigid="
              << (is_k_rigid(node, 3) ? "true" : "false") << "\n";
  }
  if (!cls.complete) return 3;
  return 0;
}

int cmd_apply(const std::string& file, const std::string& j_arg, const std::string& b_arg,
              const std::string& out_file, const std::string& words_file, const Options& opt) {
  echo("apply " + file + " j=" + j_arg + " b=" + b_arg, opt);
  DefiningGraph g = load_instance(file);
  GenSet j = subset_by_names(g, split_commas(j_arg));
  GenSet b = subset_by_names(g, split_commas(b_arg));
  GenSet rest = g.all() & ~(j | perp(g, j));
  ElementaryTwist t{j, rest & ~b, b};
  validate_twist(g, t);

  WordEngine amb(g);
  auto gens = apply_twist_generators(amb, standard_set(g), t);
  std::ostringstream inst, words;
  write_instance(inst, gens.graph);
  write_words(words, amb, gens.graph.names(), gens.elements);
  std::cout << inst.str() << words.str();
  if (!out_file.empty()) std::ofstream(out_file) << inst.str();
  if (!words_file.empty()) std::ofstream(words_file) << words.str();
  return 0;
}

int cmd_complexity(const std::string& ref_file, const std::string& words_file,
                   const Options& opt) {
  echo("complexity " + ref_file + " " + words_file, opt);
  WordEngine amb(load_instance(ref_file));
  GeneratingSet gens = set_from_words(amb, load_words(words_file, amb), opt.cutoff);
  MarkedSet ms(amb, gens);
  auto value = complexity(ms, opt.radius, opt.cutoff);
  std::cout << "complexity: (" << value.k1 << ", " << value.k2 << ")\n";
  return 0;
}

int cmd_minimize(const std::string& ref_file, const std::string& words_file, std::size_t beam,
                 const Options& opt) {
  echo("minimize " + ref_file + " " + words_file + " beam=" + std::to_string(beam), opt);
  WordEngine amb(load_instance(ref_file));
  GeneratingSet gens = set_from_words(amb, load_words(words_file, amb), opt.cutoff);
  auto res = minimize_complexity(amb, gens, opt.depth, beam, opt.radius, opt.cutoff, opt.cap);

  std::cout << "minimal complexity: (" << res.value.k1 << ", " << res.value.k2 << ")"
            << (res.exhaustive ? "" : " (partial search)") << "\n";
  if (res.saw_large_twist)
    std::cout << "note: twists with |J| >= 3 were available; they are never applied\n";
  const DefiningGraph& g0 = gens.graph;
  for (std::size_t i = 0; i < res.sequence.size(); ++i)
    std::cout << "step " << i + 1 << ": twist J=" << subset_names(g0, res.sequence[i].j)
              << " B=" << subset_names(g0, res.sequence[i].b) << "\n";
  std::ostringstream words;
  write_words(words, amb, res.best.graph.names(), res.best.elements);
  std::cout << words.str();

  auto conj = find_conjugator(amb, res.best.elements, standard_set(amb.graph()).elements,
                              opt.radius);
  if (conj)
    std::cout << "conjugator: " << amb.spell(*conj) << "\n";
  else
    std::cout << "conjugator: not found within radius " << opt.radius << "\n";
  return res.exhaustive ? 0 : 3;
}

int cmd_verify(const std::string& name, const Options& opt) {
  echo("verify " + name, opt);
  auto rep = run_named_check(name, opt.radius, opt.cutoff);
  for (const auto& line : rep.lines) std::cout << "  " << line << "\n";
  std::cout << name << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_find_instances(int max_n, const std::string& labels_arg, const std::string& filter,
                       const std::string& out_file, const Options& opt) {
  echo("find-instances max-n=" + std::to_string(max_n) + " labels=" + labels_arg +
           (filter.empty() ? "" : " filter=" + filter),
       opt);
  std::vector<int> labels;
  for (const auto& tok : split_commas(labels_arg)) labels.push_back(std::stoi(tok));
  auto result = discover_instances(max_n, labels, opt.cap);
  if (filter == "dihedral-twistable") {
    std::erase_if(result.instances,
                  [](const DiscoveredInstance& d) { return !d.dihedral_twistable; });
  } else if (!filter.empty()) {
    throw CoxError(Err::parse_error, "unknown filter '" + filter + "'");
  }
  std::ostringstream out;
  write_catalog(out, result);
  std::cout << out.str();
  if (!out_file.empty()) std::ofstream(out_file) << out.str();
  return result.complete ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for Coxeter generating sets, twists, and complexity"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--radius", opt.radius, "ball radius for searches")->capture_default_str();
  app.add_option("--cutoff", opt.cutoff, "product order cutoff")->capture_default_str();
  app.add_option("--depth", opt.depth, "twist search depth")->capture_default_str();
  app.add_option("--cap", opt.cap, "node cap for enumerations")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized drivers")->capture_default_str();

  std::string file, words_file, out_file, j_arg, b_arg, name, labels = "2,3,4,5", filter;
  int k = 3, max_n = 4;
  std::size_t beam = 0;

  auto* classify_cmd = app.add_subcommand("classify", "classify every generator subset");
  classify_cmd->add_option("file", file)->required();

  auto* fc_cmd = app.add_subcommand("fc", "FC verdict");
  fc_cmd->add_option("file", file)->required();

  auto* rig_cmd = app.add_subcommand("rigidity", "k-rigidity verdict with witnesses");
  rig_cmd->add_option("file", file)->required();
  rig_cmd->add_option("-k", k, "rigidity parameter")->capture_default_str();

  auto* tw_cmd = app.add_subcommand("twists", "enumerate elementary twists");
  tw_cmd->add_option("file", file)->required();

  auto* cls_cmd = app.add_subcommand("twist-class", "canonical twist class of the graph");
  cls_cmd->add_option("file", file)->required();

  auto* apply_cmd = app.add_subcommand("apply", "apply a twist, emit instance + words");
  apply_cmd->add_option("file", file)->required();
  apply_cmd->add_option("--j", j_arg, "members of J, comma separated")->required();
  apply_cmd->add_option("--b", b_arg, "members of B, comma separated")->required();
  apply_cmd->add_option("-o,--out", out_file, "write the twisted instance here");
  apply_cmd->add_option("--words-out", words_file, "write the generator words here");

  auto* cx_cmd = app.add_subcommand("complexity", "complexity of a generating set");
  cx_cmd->add_option("reference", file)->required();
  cx_cmd->add_option("words", words_file)->required();

  auto* min_cmd = app.add_subcommand("minimize", "minimize complexity over twist sequences");
  min_cmd->add_option("reference", file)->required();
  min_cmd->add_option("words", words_file)->required();
  min_cmd->add_option("--beam", beam, "beam width (0 = exhaustive)")->capture_default_str();

  auto* ver_cmd = app.add_subcommand("verify", "run a named verification");
  ver_cmd->add_option("name", name, "f4-roots | move-invariance | fold-lemma | "
                                    "exposed-preserved | doubles")
      ->required();

  auto* find_cmd = app.add_subcommand("find-instances", "discover pipeline-ready instances");
  find_cmd->add_option("--max-n", max_n, "largest generator count")->capture_default_str();
  find_cmd->add_option("--labels", labels, "finite labels, comma separated")
      ->capture_default_str();
  find_cmd->add_option("--filter", filter, "keep only flagged instances (dihedral-twistable)");
  find_cmd->add_option("-o,--out", out_file, "write the catalog here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) return cmd_classify(file, opt);
    if (fc_cmd->parsed()) return cmd_fc(file, opt);
    if (rig_cmd->parsed()) return cmd_rigidity(file, k, opt);
    if (tw_cmd->parsed()) return cmd_twists(file, opt);
    if (cls_cmd->parsed()) return cmd_twist_class(file, opt);
    if (apply_cmd->parsed()) return cmd_apply(file, j_arg, b_arg, out_file, words_file, opt);
    if (cx_cmd->parsed()) return cmd_complexity(file, words_file, opt);
    if (min_cmd->parsed()) return cmd_minimize(file, words_file, beam, opt);
    if (ver_cmd->parsed()) return cmd_verify(name, opt);
    if (find_cmd->parsed()) return cmd_find_instances(max_n, labels, filter, out_file, opt);
  } catch (const CoxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
