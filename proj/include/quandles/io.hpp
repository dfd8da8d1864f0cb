#pragma once

// Text formats.
//
//   .qnd   quandle <n>            .wdg   wdg <m> <k>
//          s_0(0) ... s_0(n-1)           m_1 ... m_k        (empty line if k = 0)
//          ...                           x y r_1 ... r_k    (one line per nonzero weight)
//
// '#' starts a comment; blank lines and trailing whitespace are ignored
// except for the moduli line of a .wdg file, which is always line 2.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "quandles/classify.hpp"
#include "quandles/extension.hpp"
#include "quandles/quandle.hpp"
#include "quandles/wdigraph.hpp"

namespace quandles {

/// Table only; entries are range-checked but the axioms are not.
std::vector<std::vector<int>> read_quandle_table(std::istream& in);
std::vector<std::vector<int>> read_quandle_table_file(const std::filesystem::path& path);

/// Checks the axioms; a violation is reported as a ParseError on line 1.
Quandle read_quandle(std::istream& in);
void write_quandle(std::ostream& out, const Quandle& q);

WeightedDigraph read_wdigraph(std::istream& in);
void write_wdigraph(std::ostream& out, const WeightedDigraph& w);

Quandle read_quandle_file(const std::filesystem::path& path);
WeightedDigraph read_wdigraph_file(const std::filesystem::path& path);

/// Edge labels "+r"; omitted over Z2. Equal antiparallel weights become one
/// dir=both edge.
void write_dot(std::ostream& out, const WeightedDigraph& w, const std::string& name = "W");

void write_witness(std::ostream& out, const PresentationWitness& witness);

std::string weight_label(const WeightedDigraph& w, int x, int y);

/// n<order>_x<|X|>_a<moduli>_<seq>.wdg
std::string catalog_file_name(const ClassCatalog& catalog, std::size_t index);

/// Writes one .wdg per entry and index.tsv into dir (created if missing).
void write_catalog(const std::filesystem::path& dir, const ClassCatalog& catalog);

/// index.tsv contents: order, |X|, moduli, provenance, file.
void write_catalog_index(std::ostream& out, const ClassCatalog& catalog);

}  // namespace quandles
