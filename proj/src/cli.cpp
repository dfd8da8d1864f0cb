#include "quandles/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <variant>

#include "quandles/classify.hpp"
#include "quandles/extension.hpp"
#include "quandles/geometry.hpp"
#include "quandles/io.hpp"
#include "quandles/parallel.hpp"
#include "quandles/quandle.hpp"
#include "quandles/wdigraph.hpp"

namespace quandles::cli {

namespace {

constexpr std::size_t kCheckInnerCap = 100'000;

struct Config {
  int jobs = default_jobs();
  std::uint64_t budget = SearchBudget::from_env().max_nodes;
  std::string format = "text";
  std::string out;
};

SearchBudget budget_of(const Config& c) { return SearchBudget{c.budget}; }

bool has_extension(const std::string& path, const char* ext) {
  return std::filesystem::path(path).extension() == ext;
}

std::string images_of(const Permutation& f) {
  std::string s;
  for (int i = 0; i < f.degree(); ++i) s += (i ? " " : "") + std::to_string(f(i));
  return s;
}

std::string orbit_summary(const std::vector<std::vector<int>>& orbs) {
  std::ostringstream out;
  const bool uniform = std::all_of(orbs.begin(), orbs.end(),
                                   [&](const auto& o) { return o.size() == orbs.front().size(); });
  if (orbs.empty()) return "0";
  if (uniform) {
    out << orbs.size() << " of size " << orbs.front().size();
  } else {
    std::vector<std::size_t> sizes;
    for (const auto& o : orbs) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    out << orbs.size() << " (sizes";
    for (auto s : sizes) out << ' ' << s;
    out << ')';
  }
  return out.str();
}

// Writes to --out if given, else to out.
template <class Fn>
void emit(const Config& c, std::ostream& out, Fn write) {
  if (c.out.empty()) {
    write(out);
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw Error("cannot write " + c.out);
  write(file);
}

int cmd_check(const Config& c, const std::string& path, std::ostream& out) {
  auto checked = check_axioms(read_quandle_table_file(path));
  if (auto* v = std::get_if<AxiomViolation>(&checked)) {
    out << "axioms: " << v->message() << '\n';
    return kExitError;
  }
  const Quandle q = std::get<Quandle>(std::move(checked));
  out << "axioms: ok\n";
  out << "|Q|: " << q.order() << '\n';
  std::vector<Permutation> gens;
  for (int x = 0; x < q.order(); ++x) gens.push_back(symmetry(q, x));
  const PermGroup inn(q.order(), gens, kCheckInnerCap);
  try {
    const std::size_t order = inn.order();
    out << "|Inn|: " << order << '\n';
  } catch (const EnumerationTooLarge&) {
    out << "|Inn|: >" << kCheckInnerCap << '\n';
  }
  const bool abelian = is_abelian(inn);
  out << "abelian: " << (abelian ? "yes" : "no") << '\n';
  out << "orbits: " << orbit_summary(orbits(inn)) << '\n';
  out << "connected: " << (is_transitive(inn) ? "yes" : "no") << '\n';
  try {
    out << "homogeneous: " << (is_homogeneous(q, budget_of(c)) ? "yes" : "no") << '\n';
  } catch (const BudgetExceeded&) {
    out << "homogeneous: budget-exceeded\n";
  }
  if (!abelian) {
    out << "not in class: inner automorphism group is not abelian\n";
    return kExitError;
  }
  return kExitOk;
}

int cmd_build(const Config& c, const std::string& path, std::ostream& out) {
  const Quandle q = build(read_wdigraph_file(path));
  emit(c, out, [&](std::ostream& o) { write_quandle(o, q); });
  return kExitOk;
}

int cmd_present(const Config& c, const std::string& path, bool witness, std::ostream& out) {
  const Presentation p = presentation(read_quandle_file(path));
  emit(c, out, [&](std::ostream& o) {
    if (c.format == "dot") {
      write_dot(o, p.digraph);
    } else {
      write_wdigraph(o, p.digraph);
    }
  });
  if (witness) {
    reconstruct_iso(read_quandle_file(path), p);
    write_witness(out, p.witness);
  }
  return kExitOk;
}

int cmd_iso(const Config& c, const std::string& a, const std::string& b, std::ostream& out) {
  const bool wa = has_extension(a, ".wdg");
  const bool wb = has_extension(b, ".wdg");
  if (wa && wb) {
    const auto w1 = read_wdigraph_file(a);
    const auto w2 = read_wdigraph_file(b);
    if (!(w1.group() == w2.group())) {
      out << "not isomorphic (groups " << w1.group().name() << " and " << w2.group().name() << ")\n";
      return kExitNo;
    }
    const auto iso = weak_isomorphism(w1, w2, budget_of(c));
    if (!iso) {
      out << "not isomorphic\n";
      return kExitNo;
    }
    out << "weakly isomorphic\n";
    out << "f: " << images_of(iso->f) << '\n';
    const GroupTable& t = w1.table();
    for (std::size_t y = 0; y < iso->sigma.size(); ++y) {
      const Permutation& aut = t.automorphisms()[iso->sigma[y]];
      out << "sigma_" << y << ": " << (aut.is_identity() ? "id" : aut.to_string()) << '\n';
    }
    return kExitOk;
  }
  const Quandle q1 = wa ? build(read_wdigraph_file(a)) : read_quandle_file(a);
  const Quandle q2 = wb ? build(read_wdigraph_file(b)) : read_quandle_file(b);
  const auto f = quandle_isomorphic(q1, q2, budget_of(c));
  if (!f) {
    out << "not isomorphic\n";
    return kExitNo;
  }
  out << "isomorphic\n";
  out << "f: " << images_of(*f) << '\n';
  return kExitOk;
}

int cmd_classify(const Config& c, int n, std::ostream& out) {
  const ClassCatalog catalog = classify_order(n, ClassifyOptions{c.jobs, budget_of(c)});
  if (!c.out.empty()) write_catalog(c.out, catalog);
  if (c.format == "tsv") {
    write_catalog_index(out, catalog);
    return kExitOk;
  }
  out << "order " << n << ": " << catalog.count() << " classes\n";
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const CatalogEntry& e = catalog.entries[i];
    out << "  " << catalog_file_name(catalog, i) << "  |X|=" << e.vertex_count() << "  A=" << e.group().name()
        << "  " << to_string(e.provenance) << '\n';
    if (c.format == "dot") write_dot(out, e.digraph, "W" + std::to_string(i));
  }
  return kExitOk;
}

int cmd_table(const Config& c, int max_n, std::ostream& out) {
  const auto table = reproduce_table(max_n, ClassifyOptions{c.jobs, budget_of(c)});
  std::vector<std::string> orders, counts;
  for (const auto& [n, count] : table) {
    orders.push_back(std::to_string(n));
    counts.push_back(std::to_string(count));
  }
  out << "order";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    out << ' ' << std::setw(static_cast<int>(std::max(orders[i].size(), counts[i].size()))) << orders[i];
  }
  out << "\ncount";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out << ' ' << std::setw(static_cast<int>(std::max(orders[i].size(), counts[i].size()))) << counts[i];
  }
  out << '\n';
  return kExitOk;
}

int cmd_burnside(int p, int q, std::ostream& out) {
  const BurnsideSum b = burnside_fixed_points(p, q);
  out << "terms:";
  for (auto t : b.terms) out << ' ' << t;
  out << "\nsum: " << b.sum << "\ngroup order: " << b.group_order << "\norbits: " << b.orbits()
      << "\nnontrivial: " << b.orbits() - 1 << '\n';
  return kExitOk;
}

int cmd_qid_verify(const Config& c, std::ostream& out) {
  bool ok = true;
  auto line = [&](const std::string& what, bool pass, const std::string& detail = "") {
    out << (pass ? "ok    " : "FAIL  ") << what;
    if (!detail.empty()) out << ": " << detail;
    out << '\n';
    ok = ok && pass;
  };
  const Qid qid = build_qid();
  const Quandle& q = qid.quandle;
  line("order 150", q.order() == 150, std::to_string(q.order()));
  line("axioms", std::holds_alternative<Quandle>(check_axioms(q.table())));
  const PermGroup inn = inner_group(q);
  line("inner automorphism group abelian", is_abelian(inn));
  const auto orbs = orbits(inn);
  line("30 Inn-orbits of size 5",
       orbs.size() == 30 && std::all_of(orbs.begin(), orbs.end(), [](const auto& o) { return o.size() == 5; }),
       orbit_summary(orbs));
  line("indecomposable", is_indecomposable(qid.digraph));

  const QidHomogeneityReport hom = verify_qid_homogeneous(budget_of(c));
  line("weak projection group transitive", hom.projections_transitive,
       "order " + std::to_string(hom.projection_order));
  line("weak projection group order >= 60", hom.projection_order >= 60);
  line("flip homogeneous (Q_ID homogeneous)", hom.homogeneous);
  const PermGroup strict = a_automorphisms(qid.digraph, budget_of(c));
  line("A-automorphism group not transitive", !is_transitive(strict), "order " + std::to_string(strict.order()));

  const NoHomogeneousWeightReport no = verify_no_homogeneous_weight(c.jobs, budget_of(c));
  line("skeleton automorphism group order 120", no.graph_automorphisms == 120,
       std::to_string(no.graph_automorphisms));
  line("24 order-5 rotations", no.rotations.size() == 24, std::to_string(no.rotations.size()));
  for (std::size_t i = 0; i < no.rotations.size(); ++i) {
    const RotationReport& r = no.rotations[i];
    std::ostringstream detail;
    detail << r.invariant_flips << " invariant flips, " << r.homogeneous_flips << " with transitive A-automorphisms";
    line("rotation " + std::to_string(i) + " infeasible", r.infeasible(), detail.str());
  }
  line("no homogeneous Z5-weight", no.holds());
  out << "reasoning: a homogeneous Z5-weight for Q_ID would be a flip of d up to relabeling, with a\n"
         "transitive A-automorphism group inside the weak projection group; its order is divisible\n"
         "by 30, so it contains an order-5 rotation rho, and the flip is rho-invariant. Every\n"
         "rho-invariant flip was enumerated above and none has a transitive A-automorphism group.\n";
  out << (ok ? "all checks passed\n" : "some checks FAILED\n");
  return ok ? kExitOk : kExitNo;
}

int cmd_qid_export(const std::string& dir, std::ostream& out) {
  const Qid qid = build_qid();
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  {
    std::ofstream f(base / "qid.wdg");
    write_wdigraph(f, qid.digraph);
  }
  {
    std::ofstream f(base / "qid.qnd");
    write_quandle(f, qid.quandle);
  }
  {
    std::ofstream f(base / "qid.dot");
    write_dot(f, qid.digraph, "QID");
  }
  out << "wrote " << (base / "qid.wdg").string() << ", " << (base / "qid.qnd").string() << ", "
      << (base / "qid.dot").string() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homogeneous quandles with abelian inner automorphism groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", c.budget, "search node budget (>= 10000)")
      ->check(CLI::Range(std::uint64_t{10'000}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "tsv", "dot"}));
  app.add_option("--out,-o", c.out, "output file or directory");

  std::string path, path_b;
  auto* check = app.add_subcommand("check", "diagnose a .qnd file");
  check->add_option("file", path)->required();
  auto* build_cmd = app.add_subcommand("build", "build X x_d A from a .wdg file");
  build_cmd->add_option("file", path)->required();
  bool witness = false;
  auto* present = app.add_subcommand("present", "extract the weighted digraph of a .qnd file");
  present->add_option("file", path)->required();
  present->add_flag("--witness", witness, "print and verify the orbit/fiber witness");
  auto* iso = app.add_subcommand("iso", "compare two .qnd or .wdg files");
  iso->add_option("a", path)->required();
  iso->add_option("b", path_b)->required();
  int n = 0;
  auto* classify = app.add_subcommand("classify", "catalog of classes of order n");
  classify->add_option("n", n)->required()->check(CLI::Range(1, kMaxClassifyOrder));
  int max_n = kMaxClassifyOrder;
  auto* table = app.add_subcommand("table", "class counts for orders 1..max");
  table->add_option("--max", max_n)->check(CLI::Range(1, kMaxClassifyOrder));
  int two_p = 0;
  std::vector<int> burnside;
  auto* count = app.add_subcommand("count", "closed-form counts");
  auto* two_p_opt = count->add_option("--two-p", two_p, "classes of order 2p");
  auto* burnside_opt = count->add_option("--burnside", burnside, "orbit count for |X| = P, A = Z_Q")->expected(2);
  two_p_opt->excludes(burnside_opt);
  bool verify = false;
  std::string export_dir;
  auto* qid = app.add_subcommand("qid", "the icosidodecahedron quandle");
  auto* verify_opt = qid->add_flag("--verify", verify, "run every check");
  auto* export_opt = qid->add_option("--export", export_dir, "write qid.wdg, qid.qnd, qid.dot");
  verify_opt->excludes(export_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (check->parsed()) return cmd_check(c, path, out);
    if (build_cmd->parsed()) return cmd_build(c, path, out);
    if (present->parsed()) return cmd_present(c, path, witness, out);
    if (iso->parsed()) return cmd_iso(c, path, path_b, out);
    if (classify->parsed()) return cmd_classify(c, n, out);
    if (table->parsed()) return cmd_table(c, max_n, out);
    if (count->parsed()) {
      if (*two_p_opt) {
        out << count_two_p(two_p) << '\n';
        return kExitOk;
      }
      if (*burnside_opt) return cmd_burnside(burnside.at(0), burnside.at(1), out);
      err << "count: give --two-p P or --burnside P Q\n";
      return kExitError;
    }
    if (qid->parsed()) {
      if (verify) return cmd_qid_verify(c, out);
      if (*export_opt) return cmd_qid_export(export_dir, out);
      err << "qid: give --verify or --export DIR\n";
      return kExitError;
    }
  } catch (const NotInClass& e) {
    err << "not in class: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace quandles::cli
