// facto: batch front end for factorization-semigroup computations.
// Subcommands: validate, cgraph, orbits, chi, ambiguity, wordeq, partition,
// report. Results are JSON on stdout (or --out); identical inputs produce
// byte-identical output. Exit codes: 0 ok, 2 partial/undecided, 1 error.

#include <fcntl.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "facto/ambiguity.hpp"

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;
using namespace facto;

namespace {

constexpr const char* kToolVersion = "facto 1.0.0";

struct CommonArgs {
  std::string group_file;
  std::string equipment_file;
  std::vector<std::string> class_reps;
  std::string out_path;
  std::string cache_dir;
  unsigned threads = 1;
  Caps caps;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> parse_rep_lines(const std::string& text) {
  std::vector<std::string> reps;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r\n");
    reps.push_back(line.substr(a, b - a + 1));
  }
  return reps;
}

EquippedGroup load_equipment(const CommonArgs& args, std::string* digest_text) {
  std::string group_text = slurp(args.group_file);
  std::vector<std::string> reps = args.class_reps;
  std::string equip_text;
  if (!args.equipment_file.empty()) {
    equip_text = slurp(args.equipment_file);
    auto lines = parse_rep_lines(equip_text);
    reps.insert(reps.end(), lines.begin(), lines.end());
  }
  if (digest_text) {
    *digest_text = group_text + "\x1f" + equip_text;
    for (const auto& r : reps) *digest_text += "\x1f" + r;
  }
  auto G = std::make_shared<FiniteGroup>(parse_group_file(group_text));
  return make_equipment_cycles(std::move(G), reps);
}

uint64_t fnv64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// process-exclusive cache access through a lock file
struct CacheLock {
  fs::path lock;
  int fd = -1;
  explicit CacheLock(const fs::path& dir) : lock(dir / "cache.lock") {
    for (int i = 0; i < 250; ++i) {
      fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
      if (fd >= 0) return;
      ::usleep(20000);
    }
  }
  ~CacheLock() {
    if (fd >= 0) {
      ::close(fd);
      std::error_code ec;
      fs::remove(lock, ec);
    }
  }
};

std::optional<std::string> cache_get(const std::string& dir, uint64_t key) {
  if (dir.empty()) return std::nullopt;
  fs::path p = fs::path(dir) / (std::to_string(key) + ".json");
  if (!fs::exists(p)) return std::nullopt;
  CacheLock lock(dir);
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void cache_put(const std::string& dir, uint64_t key, const std::string& payload) {
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  CacheLock lock(dir);
  std::ofstream(fs::path(dir) / (std::to_string(key) + ".json")) << payload;
}

json graph_json(const EquippedGroup& eg, const CGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (Vid v = 0; v < g.nv; ++v) j["vertices"].push_back(eg.G().cycles(g.vertex_elem[v]));
  j["components"] = json::array();
  for (const auto& comp : g.comps) {
    json c;
    c["class_index"] = comp.class_index;
    c["period"] = comp.period;
    c["vertices"] = comp.verts;
    j["components"].push_back(c);
  }
  j["action"] = json::array();
  for (Vid u = 0; u < g.nv; ++u) {
    json row = json::array();
    for (Vid v = 0; v < g.nv; ++v) row.push_back(g.pi(u, v));
    j["action"].push_back(row);
  }
  return j;
}

int emit(const CommonArgs& args, const json& result, int exit_code,
         const std::string& digest_text, const std::string& command) {
  json wrapper;
  wrapper["tool_version"] = kToolVersion;
  wrapper["command"] = command;
  wrapper["result"] = result;
  std::string payload = wrapper.dump(2) + "\n";
  if (!digest_text.empty())
    cache_put(args.cache_dir, fnv64(std::string(kToolVersion) + command + digest_text),
              payload);
  if (args.out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
  } else {
    std::ofstream(args.out_path) << payload;
  }
  return exit_code;
}

Eid parse_product_target(const EquippedGroup& eg, const std::string& s) {
  Perm p = Perm::parse_cycles(s, eg.G().degree());
  int64_t id = eg.G().index_of(p);
  if (id < 0) throw Error(ErrorKind::ParseError, "product target not in group: " + s);
  return static_cast<Eid>(id);
}

Word parse_word(const EquippedGroup& eg, const CGraph& g, const std::string& s) {
  // whitespace-separated group elements; each element is one or more cycles
  // written back to back, e.g. "(1 2)(3 4) (1 3)" is a two-letter word
  std::vector<std::string> tokens;
  std::string cur;
  bool inside = false;
  for (char ch : s) {
    if (ch == '(') inside = true;
    if (ch == ')') {
      cur.push_back(ch);
      inside = false;
      continue;
    }
    if (!inside && std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur.push_back(ch);
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));

  Word w;
  std::vector<int32_t> vid_of(eg.G().size(), -1);
  for (Vid v = 0; v < g.nv; ++v) vid_of[g.vertex_elem[v]] = static_cast<int32_t>(v);
  for (const auto& tok : tokens) {
    // bare integers are vertex labels, anything else is cycle notation
    if (!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos) {
      uint32_t v = static_cast<uint32_t>(std::stoul(tok));
      if (v >= g.nv) throw Error(ErrorKind::ParseError, "vertex label out of range: " + tok);
      w.push_back(v);
      continue;
    }
    Eid e = parse_product_target(eg, tok);
    if (e >= vid_of.size() || vid_of[e] < 0)
      throw Error(ErrorKind::ParseError, "letter not in O: " + tok);
    w.push_back(static_cast<Vid>(vid_of[e]));
  }
  return w;
}

json corpus_report(const std::string& dir, const Caps& caps, unsigned threads,
                   bool with_orbits) {
  json rows = json::array();
  std::vector<fs::path> groups;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".group") groups.push_back(entry.path());
  std::sort(groups.begin(), groups.end());
  for (const auto& gp : groups) {
    json row;
    row["name"] = gp.stem().string();
    try {
      fs::path ep = gp;
      ep.replace_extension(".equip");
      auto G = std::make_shared<FiniteGroup>(parse_group_file(slurp(gp.string())));
      auto eg = make_equipment_cycles(G, parse_rep_lines(slurp(ep.string())));
      row["order"] = eg.G().size();
      row["classes"] = eg.num_classes();
      CGraph g = build_cgraph(eg);
      auto val = validate_cgraph(g);
      row["axioms_pass"] = val.all_pass;
      auto rep = ambiguity_report(eg, caps, with_orbits, threads);
      row["ambiguity"] = rep.value;
      row["methods_agree"] = rep.methods_agree;
      if (with_orbits) row["plateau_certified"] = rep.via_orbits.certified;
    } catch (const std::exception& e) {
      row["error"] = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorization semigroups over equipped finite groups"};
  app.require_subcommand(1);

  CommonArgs args;
  if (const char* env = std::getenv("FACTO_CACHE")) args.cache_dir = env;
  std::string config_file;
  app.add_option("--config", config_file, "key=value file with default caps")
      ->check(CLI::ExistingFile);
  app.add_option("--group", args.group_file, "group file: one generator per line");
  app.add_option("--equipment", args.equipment_file, "class representatives file");
  app.add_option("--classes", args.class_reps, "class representatives (cycle notation)");
  app.add_option("--out", args.out_path, "write JSON here instead of stdout");
  app.add_option("--cache-dir", args.cache_dir, "on-disk result cache");
  app.add_option("--threads", args.threads, "worker threads");
  app.add_option("--cap-orbit", args.caps.orbit, "orbit closure cap");
  app.add_option("--cap-tuples", args.caps.tuples, "tuple enumeration cap");
  app.add_option("--cap-universe", args.caps.universe, "word universe cap");
  app.add_option("--cap-rounds", args.caps.rounds, "refinement round cap");
  app.add_option("--pad", args.caps.pad, "stabilization padding attempts");

  auto* c_validate = app.add_subcommand("validate", "check the C-graph axioms");
  auto* c_cgraph = app.add_subcommand("cgraph", "emit the C-graph");
  auto* c_orbits = app.add_subcommand("orbits", "count Hurwitz classes of a type");
  auto* c_chi = app.add_subcommand("chi", "generating-function coefficients");
  auto* c_amb = app.add_subcommand("ambiguity", "the ambiguity index, three ways");
  auto* c_wordeq = app.add_subcommand("wordeq", "word problem in the C-group");
  auto* c_partition = app.add_subcommand("partition", "word-class partition trace");
  auto* c_report = app.add_subcommand("report", "aggregate a corpus directory");

  std::vector<uint32_t> tau;
  std::string product = "identity";
  bool require_generating = false;
  c_orbits->add_option("--tau", tau, "type vector, e.g. --tau 1 1 1")->required();
  c_orbits->add_option("--product", product, "target product (cycle notation)");
  c_orbits->add_flag("--require-generating", require_generating, "G_s = G filter");

  uint32_t max_length = 8;
  c_chi->add_option("--max-length", max_length, "max total type length");

  std::string method = "all";
  c_amb->add_option("--method", method, "partition|commutator|orbits|all");

  std::string w1_text, w2_text;
  c_wordeq->add_option("--w1", w1_text, "first word (elements in cycle notation)")
      ->required();
  c_wordeq->add_option("--w2", w2_text, "second word")->required();

  std::string corpus_dir;
  bool with_orbits = false;
  c_report->add_option("--corpus", corpus_dir, "directory of .group/.equip files")
      ->required();
  c_report->add_flag("--with-orbits", with_orbits, "also run the orbit plateau");

  app.parse_complete_callback([&] {
    if (config_file.empty()) return;
    // config keys: cap-orbit, cap-tuples, cap-universe, cap-rounds, pad,
    // threads, cache-dir; explicit flags win over the file
    std::ifstream in(config_file);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) return std::string();
        size_t b = s.find_last_not_of(" \t\r\n");
        return s.substr(a, b - a + 1);
      };
      std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
      auto set_u64 = [&](const char* flag, uint64_t& slot) {
        if (key == flag && app.count(std::string("--") + flag) == 0)
          slot = std::stoull(val);
      };
      set_u64("cap-orbit", args.caps.orbit);
      set_u64("cap-tuples", args.caps.tuples);
      set_u64("cap-universe", args.caps.universe);
      if (key == "cap-rounds" && app.count("--cap-rounds") == 0)
        args.caps.rounds = std::stoi(val);
      if (key == "pad" && app.count("--pad") == 0) args.caps.pad = std::stoi(val);
      if (key == "threads" && app.count("--threads") == 0)
        args.threads = static_cast<unsigned>(std::stoul(val));
      if (key == "cache-dir" && app.count("--cache-dir") == 0) args.cache_dir = val;
    }
  });
  CLI11_PARSE(app, argc, argv);

  try {
    std::string command = app.get_subcommands().front()->get_name();

    if (c_report->parsed()) {
      json rows = corpus_report(corpus_dir, args.caps, args.threads, with_orbits);
      return emit(args, rows, 0, "", command);
    }

    std::string digest_text;
    EquippedGroup eg = load_equipment(args, &digest_text);

    // parameter digest for the cache key
    {
      std::ostringstream params;
      params << command;
      for (uint32_t t : tau) params << " " << t;
      params << "|" << product << "|" << require_generating << "|" << max_length
             << "|" << method << "|" << w1_text << "|" << w2_text;
      digest_text += "\x1f" + params.str();
    }
    if (!args.cache_dir.empty()) {
      uint64_t key = fnv64(std::string(kToolVersion) + command + digest_text);
      if (auto hit = cache_get(args.cache_dir, key)) {
        if (args.out_path.empty()) std::fwrite(hit->data(), 1, hit->size(), stdout);
        else std::ofstream(args.out_path) << *hit;
        return 0;
      }
    }

    if (c_validate->parsed()) {
      CGraph g = build_cgraph(eg);
      auto rep = validate_cgraph(g);
      json j;
      j["all_pass"] = rep.all_pass;
      j["condition_v"] = rep.condition_v;
      j["conditions"] = json::array();
      for (const auto& r : rep.results) {
        json c;
        c["condition"] = r.condition;
        c["pass"] = r.pass;
        if (!r.detail.empty()) c["witness"] = r.detail;
        j["conditions"].push_back(c);
      }
      return emit(args, j, rep.all_pass ? 0 : 1, digest_text, command);
    }

    if (c_cgraph->parsed()) {
      CGraph g = build_cgraph(eg);
      return emit(args, graph_json(eg, g), 0, digest_text, command);
    }

    if (c_orbits->parsed()) {
      Eid target = parse_product_target(eg, product);
      if (tau.size() != eg.num_classes())
        throw Error(ErrorKind::ParseError, "--tau length must match the class count");
      auto cc = enumerate_classes(eg, TypeVector{tau}, target, require_generating,
                                  args.caps.tuples, args.threads);
      json j;
      j["count"] = cc.count;
      j["capped"] = cc.capped;
      j["certified"] = !cc.capped;
      j["tuples"] = cc.tuples;
      j["representatives"] = json::array();
      for (const auto& rep : cc.representatives) {
        json r = json::array();
        for (Eid e : rep) r.push_back(eg.G().cycles(e));
        j["representatives"].push_back(r);
      }
      return emit(args, j, cc.capped ? 2 : 0, digest_text, command);
    }

    if (c_chi->parsed()) {
      auto chi = chi_coefficients(eg, max_length, args.caps.tuples, args.threads);
      json j;
      j["capped"] = chi.capped;
      j["certified"] = !chi.capped;
      j["coefficients"] = json::array();
      for (const auto& [t, h] : chi.coefficients) {
        json c;
        c["tau"] = t;
        c["h"] = h;
        j["coefficients"].push_back(c);
      }
      return emit(args, j, chi.capped ? 2 : 0, digest_text, command);
    }

    if (c_amb->parsed()) {
      json j;
      int code = 0;
      if (method == "partition" || method == "commutator") {
        CGroupOracle oracle(eg, args.caps);
        uint64_t v = method == "partition" ? ambiguity_via_partition(oracle)
                                           : ambiguity_via_commutator(oracle);
        j["value"] = v;
        j["method"] = method;
      } else if (method == "orbits") {
        CGraph g = build_cgraph(eg);
        auto plateau = ambiguity_via_orbit_stabilization(eg, g, args.caps.tuples,
                                                         args.threads);
        j["value"] = plateau.value;
        j["certified"] = plateau.certified;
        j["tau_witness"] = plateau.tau_witness;
        code = plateau.certified ? 0 : 2;
      } else {
        auto rep = ambiguity_report(eg, args.caps, true, args.threads);
        j["value"] = rep.value;
        j["methodsAgree"] = rep.methods_agree;
        j["perMethod"]["partitionCount"] = rep.via_partition;
        j["perMethod"]["commutatorFormula"] = rep.via_commutator;
        j["perMethod"]["orbitPlateau"]["value"] = rep.via_orbits.value;
        j["perMethod"]["orbitPlateau"]["certified"] = rep.via_orbits.certified;
        j["perMethod"]["orbitPlateau"]["tauWitness"] = rep.via_orbits.tau_witness;
        j["diagnostics"]["tildeOrder"] = rep.tilde_order;
        j["diagnostics"]["tildeCommutatorOrder"] = rep.tilde_commutator_order;
        j["diagnostics"]["groupCommutatorOrder"] = rep.group_commutator_order;
        j["diagnostics"]["periodProduct"] = rep.period_product;
        j["diagnostics"]["thresholdT1"] = rep.threshold_t1;
        j["diagnostics"]["unityClasses"] = rep.unity_classes;
        code = rep.methods_agree ? 0 : 1;
        if (!rep.via_orbits.certified) code = std::max(code, 0);
      }
      return emit(args, j, code, digest_text, command);
    }

    if (c_wordeq->parsed() || c_partition->parsed()) {
      CGroupOracle oracle(eg, args.caps);
      if (c_partition->parsed()) {
        const auto& p = oracle.partition();
        json j;
        j["rounds"] = p.rounds;
        j["N"] = p.classes.size();
        j["n_history"] = p.n_history;
        std::vector<size_t> sizes;
        for (const auto& c : p.classes) sizes.push_back(c.size());
        j["class_sizes"] = sizes;
        j["universe"] = p.universe.size();
        return emit(args, j, 0, digest_text, command);
      }
      const CGraph& pg = oracle.pruned();
      Word w1 = parse_word(eg, pg, w1_text);
      Word w2 = parse_word(eg, pg, w2_text);
      bool equal = words_equal_in_cgroup(pg, oracle.partition(), oracle.tilde(), w1, w2);
      json j;
      j["equal"] = equal;
      j["ab1"] = word_ab(pg, w1);
      j["ab2"] = word_ab(pg, w2);
      j["class1"] = word_class(pg, oracle.partition(), oracle.tilde(), w1);
      j["class2"] = word_class(pg, oracle.partition(), oracle.tilde(), w2);
      return emit(args, j, 0, digest_text, command);
    }

    throw Error(ErrorKind::ParseError, "unknown command");
  } catch (const Error& e) {
    json j;
    j["error"] = e.what();
    j["kind"] = Error::kind_name(e.kind());
    std::fprintf(stderr, "%s\n", json(j).dump(2).c_str());
    return e.kind() == ErrorKind::CapExceeded ? 2 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "{\"error\": \"%s\"}\n", e.what());
    return 1;
  }
}
