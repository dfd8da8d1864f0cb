#include "quandles/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <variant>

namespace quandles {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<std::string> split(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// All physical lines with comments stripped; blank ones kept so callers can
// address "the line after the header".
std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  for (int number = 1; std::getline(in, text); ++number) {
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    lines.push_back(Line{number, split(text)});
  }
  return lines;
}

int parse_int(const std::string& token, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

std::size_t skip_blank(const std::vector<Line>& lines, std::size_t i) {
  while (i < lines.size() && lines[i].tokens.empty()) ++i;
  return i;
}

int last_line(const std::vector<Line>& lines) { return lines.empty() ? 1 : lines.back().number; }

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<std::vector<int>> read_quandle_table(std::istream& in) {
  const auto lines = read_lines(in);
  std::size_t i = skip_blank(lines, 0);
  if (i == lines.size()) throw ParseError(last_line(lines), "missing 'quandle <n>' header");
  const Line& header = lines[i];
  if (header.tokens.size() != 2 || header.tokens[0] != "quandle") {
    throw ParseError(header.number, "expected 'quandle <n>'");
  }
  const int n = parse_int(header.tokens[1], header.number);
  if (n < 0) throw ParseError(header.number, "negative order");
  std::vector<std::vector<int>> table;
  for (int x = 0; x < n; ++x) {
    i = skip_blank(lines, i + 1);
    if (i == lines.size()) throw ParseError(last_line(lines), "expected " + std::to_string(n) + " rows");
    const Line& row = lines[i];
    if (row.tokens.size() != static_cast<std::size_t>(n)) {
      throw ParseError(row.number, "expected " + std::to_string(n) + " entries");
    }
    std::vector<int> values;
    for (const auto& tok : row.tokens) {
      const int v = parse_int(tok, row.number);
      if (v < 0 || v >= n) throw ParseError(row.number, "entry " + tok + " out of range");
      values.push_back(v);
    }
    table.push_back(std::move(values));
  }
  if (const std::size_t extra = skip_blank(lines, i + 1); extra < lines.size()) {
    throw ParseError(lines[extra].number, "unexpected content after the table");
  }
  return table;
}

Quandle read_quandle(std::istream& in) {
  auto checked = check_axioms(read_quandle_table(in));
  if (auto* v = std::get_if<AxiomViolation>(&checked)) throw ParseError(1, v->message());
  return std::get<Quandle>(std::move(checked));
}

void write_quandle(std::ostream& out, const Quandle& q) {
  out << "quandle " << q.order() << '\n';
  for (int x = 0; x < q.order(); ++x) {
    for (int y = 0; y < q.order(); ++y) out << (y ? " " : "") << q(x, y);
    out << '\n';
  }
}

WeightedDigraph read_wdigraph(std::istream& in) {
  const auto lines = read_lines(in);
  std::size_t i = skip_blank(lines, 0);
  if (i == lines.size()) throw ParseError(last_line(lines), "missing 'wdg <m> <k>' header");
  const Line& header = lines[i];
  if (header.tokens.size() != 3 || header.tokens[0] != "wdg") {
    throw ParseError(header.number, "expected 'wdg <m> <k>'");
  }
  const int m = parse_int(header.tokens[1], header.number);
  const int k = parse_int(header.tokens[2], header.number);
  if (m < 0 || k < 0) throw ParseError(header.number, "negative size");
  ++i;
  if (i == lines.size() && k > 0) throw ParseError(last_line(lines), "missing moduli line");
  const int moduli_line = i < lines.size() ? lines[i].number : header.number + 1;
  std::vector<int> moduli;
  if (i < lines.size()) {
    if (lines[i].tokens.size() != static_cast<std::size_t>(k)) {
      throw ParseError(moduli_line, "expected " + std::to_string(k) + " moduli");
    }
    for (const auto& tok : lines[i].tokens) moduli.push_back(parse_int(tok, moduli_line));
  }
  AbelianGroup group;
  try {
    group = AbelianGroup(moduli);
  } catch (const ContractViolation& e) {
    throw ParseError(moduli_line, e.what());
  }
  WeightedDigraph w(m, group);
  std::set<std::pair<int, int>> seen;
  for (++i; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.empty()) continue;
    if (line.tokens.size() != static_cast<std::size_t>(k + 2)) {
      throw ParseError(line.number, "expected 'x y' and " + std::to_string(k) + " residues");
    }
    const int x = parse_int(line.tokens[0], line.number);
    const int y = parse_int(line.tokens[1], line.number);
    if (x < 0 || y < 0 || x >= m || y >= m) throw ParseError(line.number, "vertex out of range");
    if (x == y) throw ParseError(line.number, "diagonal weights must be zero");
    if (!seen.emplace(x, y).second) throw ParseError(line.number, "duplicate weight");
    GroupElement a;
    for (int j = 0; j < k; ++j) {
      const int r = parse_int(line.tokens[static_cast<std::size_t>(j + 2)], line.number);
      if (r < 0 || r >= moduli[static_cast<std::size_t>(j)]) throw ParseError(line.number, "residue out of range");
      a.residues.push_back(r);
    }
    if (a == group.zero()) throw ParseError(line.number, "zero weights are not listed");
    w.set_weight(x, y, a);
  }
  return w;
}

void write_wdigraph(std::ostream& out, const WeightedDigraph& w) {
  const auto& moduli = w.group().moduli();
  out << "wdg " << w.vertex_count() << ' ' << moduli.size() << '\n';
  for (std::size_t i = 0; i < moduli.size(); ++i) out << (i ? " " : "") << moduli[i];
  out << '\n';
  for (const auto& [x, y] : support_graph(w)) {
    out << x << ' ' << y;
    for (int r : w.weight(x, y).residues) out << ' ' << r;
    out << '\n';
  }
}

std::vector<std::vector<int>> read_quandle_table_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_quandle_table(in);
}

Quandle read_quandle_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_quandle(in);
}

WeightedDigraph read_wdigraph_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_wdigraph(in);
}

std::string weight_label(const WeightedDigraph& w, int x, int y) {
  const auto residues = w.weight(x, y).residues;
  if (residues.size() == 1) return "+" + std::to_string(residues[0]);
  std::string out = "+(";
  for (std::size_t i = 0; i < residues.size(); ++i) out += (i ? "," : "") + std::to_string(residues[i]);
  return out + ")";
}

void write_dot(std::ostream& out, const WeightedDigraph& w, const std::string& name) {
  const bool labels = !(w.group() == AbelianGroup::cyclic(2));
  out << "digraph " << name << " {\n";
  for (int v = 0; v < w.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [x, y] : support_graph(w)) {
    const bool merged = w.rank(x, y) == w.rank(y, x);
    if (merged && x > y) continue;
    out << "  " << x << " -> " << y;
    std::vector<std::string> attrs;
    if (merged) attrs.emplace_back("dir=both");
    if (labels) attrs.push_back("label=\"" + weight_label(w, x, y) + "\"");
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << ']';
    }
    out << ";\n";
  }
  out << "}\n";
}

void write_witness(std::ostream& out, const PresentationWitness& witness) {
  out << "witness\n";
  out << "moduli";
  for (int m : witness.group.moduli()) out << ' ' << m;
  out << '\n';
  out << "orbits " << witness.orbits.size() << '\n';
  for (std::size_t x = 0; x < witness.orbits.size(); ++x) {
    out << "orbit " << x << ':';
    for (int p : witness.orbits[x]) out << ' ' << p;
    out << '\n';
  }
  out << "base";
  for (int o : witness.base_points) out << ' ' << o;
  out << '\n';
  for (std::size_t x = 0; x < witness.fibers.size(); ++x) {
    out << "fiber " << x << ':';
    for (int p : witness.fibers[x]) out << ' ' << p;
    out << '\n';
  }
  out << "end\n";
}

namespace {

std::string moduli_tag(const AbelianGroup& g) {
  if (g.is_trivial()) return "1";
  std::string out;
  for (std::size_t i = 0; i < g.moduli().size(); ++i) out += (i ? "x" : "") + std::to_string(g.moduli()[i]);
  return out;
}

}  // namespace

std::string catalog_file_name(const ClassCatalog& catalog, std::size_t index) {
  const CatalogEntry& e = catalog.entries.at(index);
  std::size_t seq = 1;
  for (std::size_t i = 0; i < index; ++i) {
    const CatalogEntry& o = catalog.entries[i];
    seq += o.vertex_count() == e.vertex_count() && o.group() == e.group();
  }
  return "n" + std::to_string(catalog.order) + "_x" + std::to_string(e.vertex_count()) + "_a" +
         moduli_tag(e.group()) + "_" + std::to_string(seq) + ".wdg";
}

void write_catalog_index(std::ostream& out, const ClassCatalog& catalog) {
  out << "order\tx\tmoduli\tprovenance\tfile\n";
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const CatalogEntry& e = catalog.entries[i];
    out << catalog.order << '\t' << e.vertex_count() << '\t' << moduli_tag(e.group()) << '\t'
        << to_string(e.provenance) << '\t' << catalog_file_name(catalog, i) << '\n';
  }
}

void write_catalog(const std::filesystem::path& dir, const ClassCatalog& catalog) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    std::ofstream out(dir / catalog_file_name(catalog, i));
    if (!out) throw Error("cannot write to " + dir.string());
    write_wdigraph(out, catalog.entries[i].digraph);
  }
  std::ofstream index(dir / "index.tsv");
  if (!index) throw Error("cannot write to " + dir.string());
  write_catalog_index(index, catalog);
}

}  // namespace quandles
