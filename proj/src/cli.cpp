#include "dyckal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dyckal/birkhoff.hpp"
#include "dyckal/dyck.hpp"
#include "dyckal/heyting.hpp"
#include "dyckal/itl.hpp"
#include "dyckal/poset.hpp"
#include "dyckal/render.hpp"
#include "dyckal/serialize.hpp"
#include "dyckal/verify.hpp"

namespace dyckal::cli {

namespace {

// Path arguments accept either a plain u/d word or the JSON form.
DyckPath path_arg(const std::string& s) {
  if (!s.empty() && s.front() == '{') return path_from_json(s);
  return DyckPath::from_word(s);
}

std::string iv_str(const Interval& iv) {
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

std::string read_file(const std::string& name) {
  std::ifstream in(name);
  if (!in) throw std::invalid_argument("cannot open file \"" + name + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string downset_str(const FinitePoset& q, const DownSet& d) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < q.size(); ++i)
    if (d.contains(i)) {
      if (!first) s += ",";
      s += q.label(i);
      first = false;
    }
  return s + "}";
}

// Comma-separated element labels; "" and "{}" denote the empty set.  The
// result must be downward closed.
DownSet downset_arg(const FinitePoset& q, const std::string& text) {
  std::string body = text == "{}" ? "" : text;
  if (!body.empty() && body.front() == '{' && body.back() == '}')
    body = body.substr(1, body.size() - 2);
  DownSet d;
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    size_t end = comma == std::string::npos ? body.size() : comma;
    d.bits |= 1ull << q.index(body.substr(pos, end - pos));
    pos = end + 1;
  }
  for (int a = 0; a < q.size(); ++a)
    if (d.contains(a))
      for (int b = 0; b < q.size(); ++b)
        if (q.leq(b, a) && !d.contains(b))
          throw std::invalid_argument("\"" + text + "\" is not a down-set: " +
                                      q.label(b) + " <= " + q.label(a) +
                                      " is missing");
  return d;
}

// Covers of the pointwise order: raising one valley du -> ud.
std::vector<std::pair<int, int>> dyck_cover_edges(const std::vector<DyckPath>& paths) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < paths.size(); ++i) index[paths[i].word()] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < paths.size(); ++i) {
    std::string w = paths[i].word();
    for (size_t x = 0; x + 1 < w.size(); ++x)
      if (w[x] == 'd' && w[x + 1] == 'u') {
        std::string v = w;
        v[x] = 'u';
        v[x + 1] = 'd';
        edges.push_back({static_cast<int>(i), index.at(v)});
      }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string composition_label(const Composition& c) {
  std::string s;
  for (size_t i = 0; i < c.parts.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(c.parts[i]);
  }
  return s;
}

nlohmann::json poset_json(const FinitePoset& p) {
  nlohmann::json j;
  auto elements = nlohmann::json::array();
  for (int i = 0; i < p.size(); ++i) elements.push_back(p.label(i));
  j["elements"] = elements;
  auto leq = nlohmann::json::array();
  for (const auto& [a, b] : p.covers())
    leq.push_back({p.label(a), p.label(b)});
  j["leq"] = leq;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Heyting algebra of Dyck paths: lattice operations, the "
               "antichain representation, the subinterval logic, down-set "
               "lattices of interval posets, and brute-force verification"};
  app.name("dyckal");
  app.require_subcommand(1);
  int exit_code = 0;

  // ------------------------------------------------------------------ path
  auto* path = app.add_subcommand("path", "Operations on single paths");
  path->require_subcommand(1);

  {
    auto* c = path->add_subcommand("stats", "The seven statistics of a path");
    auto word = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    c->add_option("word", *word, "u/d word or path JSON")->required();
    c->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
    c->callback([word, format, &out] {
      auto p = path_arg(*word);
      auto g = stats_geometric(p);
      auto f = stats_formula(to_antichain(p));
      if (*format == "json") {
        nlohmann::json j;
        j["peak_count"] = g.peak_count;
        j["hill_count"] = g.hill_count;
        j["peak_height_sum"] = g.peak_height_sum;
        j["return_count"] = g.return_count;
        j["first_peak_height"] = g.first_peak_height;
        j["peaks_before_first_return"] = g.peaks_before_first_return;
        j["duu_count"] = g.duu_count;
        j["peak_height_sum_union"] = f.peak_height_sum_union;
        out << j.dump() << "\n";
      } else {
        out << "peak_count: " << g.peak_count << "\n"
            << "hill_count: " << g.hill_count << "\n"
            << "peak_height_sum: " << g.peak_height_sum << "\n"
            << "return_count: " << g.return_count << "\n"
            << "first_peak_height: " << g.first_peak_height << "\n"
            << "peaks_before_first_return: " << g.peaks_before_first_return << "\n"
            << "duu_count: " << g.duu_count << "\n"
            << "peak_height_sum_union: " << f.peak_height_sum_union << "\n";
      }
    });
  }

  {
    auto* c = path->add_subcommand("render", "ASCII picture of a path");
    auto word = std::make_shared<std::string>();
    c->add_option("word", *word, "u/d word or path JSON")->required();
    c->callback([word, &out] { out << ascii_path(path_arg(*word)); });
  }

  {
    auto* c = path->add_subcommand("op", "Lattice and Heyting operations");
    auto name = std::make_shared<std::string>();
    auto words = std::make_shared<std::vector<std::string>>();
    auto format = std::make_shared<std::string>("text");
    c->add_option("operation", *name, "meet|join|imp|not|closure")
        ->required()
        ->check(CLI::IsMember({"meet", "join", "imp", "not", "closure"}));
    c->add_option("words", *words, "one path for not/closure, two otherwise")
        ->expected(1, 2);
    c->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
    c->callback([name, words, format, &out] {
      const bool unary = *name == "not" || *name == "closure";
      if (words->size() != (unary ? 1u : 2u))
        throw std::invalid_argument("operation \"" + *name + "\" takes " +
                                    (unary ? std::string("one path") :
                                             std::string("two paths")));
      auto p = path_arg(words->at(0));
      DyckPath r;
      if (*name == "not") r = pseudocomplement(p);
      else if (*name == "closure") r = closure(p);
      else {
        auto q = path_arg(words->at(1));
        if (*name == "meet") r = meet(p, q);
        else if (*name == "join") r = join(p, q);
        else r = rel_pseudocomplement(p, q);
      }
      if (*format == "json") out << to_json(r) << "\n";
      else out << r.word() << "\n";
    });
  }

  {
    auto* c = path->add_subcommand("crossing", "Crossing set of two paths");
    auto words = std::make_shared<std::vector<std::string>>();
    auto format = std::make_shared<std::string>("text");
    c->add_option("words", *words)->expected(2)->required();
    c->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
    c->callback([words, format, &out] {
      auto cs = crossing_set(path_arg(words->at(0)), path_arg(words->at(1)));
      if (*format == "json") {
        out << to_json(cs) << "\n";
      } else {
        for (size_t i = 0; i < cs.abscissas.size(); ++i)
          out << (i ? " " : "") << cs.abscissas[i];
        out << "\n";
      }
    });
  }

  {
    auto* c = path->add_subcommand("intervals", "Antichain of intervals of a path");
    auto word = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    c->add_option("word", *word)->required();
    c->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
    c->callback([word, format, &out] {
      auto f = to_antichain(path_arg(*word));
      if (*format == "json") {
        out << to_json(f) << "\n";
      } else {
        for (size_t i = 0; i < f.intervals.size(); ++i)
          out << (i ? " " : "") << iv_str(f.intervals[i]);
        out << "\n";
      }
    });
  }

  {
    auto* c = path->add_subcommand("from-intervals", "Path of an antichain JSON");
    auto text = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    c->add_option("antichain", *text, "JSON {\"n\":..,\"intervals\":[[a,b],..]}")
        ->required();
    c->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
    c->callback([text, format, &out] {
      auto p = from_antichain(antichain_from_json(*text));
      if (*format == "json") out << to_json(p) << "\n";
      else out << p.word() << "\n";
    });
  }

  // ----------------------------------------------------------------- logic
  auto* logic = app.add_subcommand("logic", "Subinterval temporal logic");
  logic->require_subcommand(1);

  auto add_order = [](CLI::App* c, std::shared_ptr<int> n, const char* what) {
    c->add_option("-n", *n, what)->required();
  };

  {
    auto* c = logic->add_subcommand("eval", "Intervals where a formula is true");
    auto n = std::make_shared<int>(0);
    auto text = std::make_shared<std::string>();
    add_order(c, n, "chain order");
    c->add_option("formula", *text)->required();
    c->callback([n, text, &out] {
      auto v = itl::evaluate(itl::parse_formula(*text), *n);
      auto ivs = v.true_intervals();
      for (size_t i = 0; i < ivs.size(); ++i) out << (i ? " " : "") << iv_str(ivs[i]);
      out << "\n";
    });
  }

  {
    auto* c = logic->add_subcommand("valid", "Truth on every interval");
    auto n = std::make_shared<int>(0);
    auto text = std::make_shared<std::string>();
    add_order(c, n, "chain order");
    c->add_option("formula", *text)->required();
    c->callback([n, text, &out] {
      out << (itl::is_valid(itl::parse_formula(*text), *n) ? "true" : "false")
          << "\n";
    });
  }

  {
    auto* c = logic->add_subcommand("theta", "Down-closed fragment membership");
    auto n = std::make_shared<int>(0);
    auto text = std::make_shared<std::string>();
    add_order(c, n, "chain order");
    c->add_option("formula", *text)->required();
    c->callback([n, text, &out] {
      auto chk = itl::in_theta(itl::parse_formula(*text), *n);
      if (chk.member) {
        out << "true\n";
      } else {
        out << "false witness I=" << iv_str(chk.witness->outer)
            << " J=" << iv_str(chk.witness->inner) << "\n";
      }
    });
  }

  {
    auto* c = logic->add_subcommand("equiv", "Semantic equivalence of two formulas");
    auto n = std::make_shared<int>(0);
    auto texts = std::make_shared<std::vector<std::string>>();
    add_order(c, n, "chain order");
    c->add_option("formulas", *texts)->expected(2)->required();
    c->callback([n, texts, &out] {
      out << (itl::equivalent(itl::parse_formula(texts->at(0)),
                              itl::parse_formula(texts->at(1)), *n)
                  ? "true"
                  : "false")
          << "\n";
    });
  }

  {
    auto* c = logic->add_subcommand("cdf", "Canonical disjunctive form");
    auto n = std::make_shared<int>(0);
    auto text = std::make_shared<std::string>();
    add_order(c, n, "chain order");
    c->add_option("formula", *text)->required();
    c->callback([n, text, &out] {
      out << itl::to_string(itl::cdf(itl::parse_formula(*text), *n)) << "\n";
    });
  }

  {
    auto* c = logic->add_subcommand(
        "to-path", "Dyck path of a down-closed formula");
    auto n = std::make_shared<int>(0);
    auto text = std::make_shared<std::string>();
    add_order(c, n, "path semilength (chain order + 1)");
    c->add_option("formula", *text)->required();
    c->callback([n, text, &out] {
      if (*n < 1) throw std::invalid_argument("semilength must be positive");
      out << itl::theta_to_dyck(itl::parse_formula(*text), *n - 1).word() << "\n";
    });
  }

  {
    auto* c = logic->add_subcommand("from-path", "Formula of a Dyck path");
    auto word = std::make_shared<std::string>();
    c->add_option("word", *word)->required();
    c->callback([word, &out] {
      out << itl::to_string(itl::dyck_to_theta(path_arg(*word))) << "\n";
    });
  }

  // --------------------------------------------------------------- lattice
  auto* lattice = app.add_subcommand("lattice", "Whole-lattice enumerations");
  lattice->require_subcommand(1);

  {
    auto* c = lattice->add_subcommand("enum", "All paths of a semilength");
    auto n = std::make_shared<int>(0);
    auto format = std::make_shared<std::string>("text");
    c->add_option("-n", *n, "semilength")->required();
    c->add_option("--format", *format)
        ->check(CLI::IsMember({"text", "json", "dot"}));
    c->callback([n, format, &out] {
      auto paths = enumerate(*n);
      if (*format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& p : paths)
          arr.push_back(nlohmann::json::parse(to_json(p)));
        out << arr.dump() << "\n";
      } else if (*format == "dot") {
        std::vector<std::string> labels;
        for (const auto& p : paths) labels.push_back(p.word());
        out << dot_hasse("paths", labels, dyck_cover_edges(paths));
      } else {
        for (const auto& p : paths) out << p.word() << "\n";
      }
    });
  }

  {
    auto* c = lattice->add_subcommand(
        "regulars", "Regular elements and their compositions");
    auto n = std::make_shared<int>(0);
    auto format = std::make_shared<std::string>("text");
    c->add_option("-n", *n, "semilength")->required();
    c->add_option("--format", *format)
        ->check(CLI::IsMember({"text", "json", "dot"}));
    c->callback([n, format, &out] {
      std::vector<DyckPath> regs;
      for (const auto& p : enumerate(*n))
        if (is_regular(p)) regs.push_back(p);
      std::vector<Composition> comps;
      for (const auto& r : regs) comps.push_back(regular_to_composition(r));
      if (*format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& comp : comps)
          arr.push_back(nlohmann::json::parse(to_json(*n, comp)));
        out << arr.dump() << "\n";
      } else if (*format == "dot") {
        std::vector<std::string> labels;
        for (const auto& comp : comps) labels.push_back(composition_label(comp));
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < comps.size(); ++i)
          for (size_t j = 0; j < comps.size(); ++j)
            if (refinement_covers(comps[i], comps[j]))
              edges.push_back({static_cast<int>(i), static_cast<int>(j)});
        std::sort(edges.begin(), edges.end());
        out << dot_hasse("regulars", labels, edges);
      } else {
        for (size_t i = 0; i < regs.size(); ++i)
          out << regs[i].word() << " " << composition_label(comps[i]) << "\n";
      }
    });
  }

  // ----------------------------------------------------------------- poset
  auto* poset = app.add_subcommand("poset", "Interval posets and down-set lattices");
  poset->require_subcommand(1);

  {
    auto* c = poset->add_subcommand("intervals", "Interval poset of a poset");
    auto file = std::make_shared<std::string>();
    c->add_option("--file", *file, "poset JSON file")->required();
    c->callback([file, &out] {
      auto ip = intervals_poset(parse_poset(read_file(*file)));
      out << poset_json(ip.poset).dump() << "\n";
    });
  }

  {
    auto* c = poset->add_subcommand("downsets", "Down-set lattice of a poset");
    auto file = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    c->add_option("--file", *file, "poset JSON file")->required();
    c->add_option("--format", *format)
        ->check(CLI::IsMember({"text", "json", "dot"}));
    c->callback([file, format, &out] {
      auto q = parse_poset(read_file(*file));
      auto all = downset_lattice(q);
      if (*format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& d : all) {
          auto set = nlohmann::json::array();
          for (int i = 0; i < q.size(); ++i)
            if (d.contains(i)) set.push_back(q.label(i));
          arr.push_back(set);
        }
        out << arr.dump() << "\n";
      } else if (*format == "dot") {
        std::vector<std::string> labels;
        for (const auto& d : all) labels.push_back(downset_str(q, d));
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < all.size(); ++i)
          for (size_t j = 0; j < all.size(); ++j)
            if (all[i].subset_of(all[j]) && all[j].size() == all[i].size() + 1)
              edges.push_back({static_cast<int>(i), static_cast<int>(j)});
        std::sort(edges.begin(), edges.end());
        out << dot_hasse("downsets", labels, edges);
      } else {
        for (const auto& d : all) out << downset_str(q, d) << "\n";
      }
    });
  }

  {
    auto* c = poset->add_subcommand("atoms", "Atoms of the down-set lattice");
    auto file = std::make_shared<std::string>();
    c->add_option("--file", *file, "poset JSON file")->required();
    c->callback([file, &out] {
      auto q = parse_poset(read_file(*file));
      for (const auto& a : lattice_atoms(q)) out << downset_str(q, a) << "\n";
    });
  }

  {
    auto* c = poset->add_subcommand(
        "imp", "Relative pseudocomplement of two down-sets");
    auto file = std::make_shared<std::string>();
    auto sets = std::make_shared<std::vector<std::string>>();
    c->add_option("--file", *file, "poset JSON file")->required();
    c->add_option("downsets", *sets, "two comma-separated element lists")
        ->expected(2)
        ->required();
    c->callback([file, sets, &out] {
      auto q = parse_poset(read_file(*file));
      auto r = ds_implies(q, downset_arg(q, sets->at(0)),
                          downset_arg(q, sets->at(1)));
      out << downset_str(q, r) << "\n";
    });
  }

  {
    auto* c = poset->add_subcommand("not", "Pseudocomplement of a down-set");
    auto file = std::make_shared<std::string>();
    auto set = std::make_shared<std::string>();
    c->add_option("--file", *file, "poset JSON file")->required();
    c->add_option("downset", *set, "comma-separated element list")->required();
    c->callback([file, set, &out] {
      auto q = parse_poset(read_file(*file));
      out << downset_str(q, ds_pseudo(q, downset_arg(q, *set))) << "\n";
    });
  }

  {
    auto* c = poset->add_subcommand(
        "iso", "Isomorphism of two down-set lattices");
    auto files = std::make_shared<std::vector<std::string>>();
    c->add_option("--file", *files, "two poset JSON files")
        ->expected(2)
        ->required();
    c->callback([files, &out] {
      auto q1 = parse_poset(read_file(files->at(0)));
      auto q2 = parse_poset(read_file(files->at(1)));
      auto l1 = FiniteLattice::from_downsets(q1, downset_lattice(q1));
      auto l2 = FiniteLattice::from_downsets(q2, downset_lattice(q2));
      auto iso = is_isomorphic(l1, l2);
      if (!iso) {
        out << "false\n";
        return;
      }
      out << "true\n";
      for (int i = 0; i < l1.size(); ++i)
        out << l1.label(i) << " -> " << l2.label((*iso)[static_cast<size_t>(i)])
            << "\n";
    });
  }

  // ---------------------------------------------------------------- verify
  {
    auto* c = app.add_subcommand("verify", "Brute-force verification suites");
    auto suite = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
    c->add_option("--suite", *suite, "heyting|stats|logic|poset|all")->required();
    c->add_option("-n", *n, "size parameter")->required();
    c->add_option("--seed", *seed, "seed for the randomized logic cases");
    c->callback([suite, n, seed, &out, &exit_code] {
      auto report = run_suite(*suite, *n, *seed);
      out << to_json(report) << "\n";
      if (!report.ok()) exit_code = 1;
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace dyckal::cli
