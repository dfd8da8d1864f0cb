#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "quandles/classify.hpp"
#include "quandles/extension.hpp"
#include "quandles/io.hpp"

using namespace quandles;

namespace {

int parse_error_line(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

WeightedDigraph wdg(const std::string& text) {
  std::istringstream in(text);
  return read_wdigraph(in);
}

Quandle qnd(const std::string& text) {
  std::istringstream in(text);
  return read_quandle(in);
}

}  // namespace

TEST_CASE("quandle files") {
  const Quandle q = qnd("# dihedral\nquandle 3\n0 2 1\n\n2 1 0   \n1 0 2\n");
  CHECK(q == Quandle::dihedral(3));
  std::ostringstream out;
  write_quandle(out, q);
  CHECK(out.str() == "quandle 3\n0 2 1\n2 1 0\n1 0 2\n");
}

TEST_CASE("quandle parse errors carry line numbers") {
  CHECK(parse_error_line([] { qnd(""); }) == 1);
  CHECK(parse_error_line([] { qnd("quandel 2\n0 1\n0 1\n"); }) == 1);
  CHECK(parse_error_line([] { qnd("quandle 2\n0 1\n0\n"); }) == 3);
  CHECK(parse_error_line([] { qnd("quandle 2\n0 1\n0 x\n"); }) == 3);
  CHECK(parse_error_line([] { qnd("quandle 2\n0 1\n0 2\n"); }) == 3);
  CHECK(parse_error_line([] { qnd("quandle 2\n0 1\n"); }) == 2);
  CHECK(parse_error_line([] { qnd("quandle 1\n0\n0\n"); }) == 3);
  CHECK(parse_error_line([] { qnd("quandle 2\n1 0\n0 1\n"); }) == 1);
}

TEST_CASE("weighted digraph files") {
  const auto w = wdg("wdg 3 2\n2 4\n0 1 1 3\n2 0 0 2  # comment\n\n");
  CHECK(w.group() == AbelianGroup({2, 4}));
  CHECK(w.weight(0, 1).residues == std::vector<int>{1, 3});
  CHECK(w.weight(2, 0).residues == std::vector<int>{0, 2});
  CHECK(w.rank(1, 2) == 0);
  const auto trivial = wdg("wdg 4 0\n\n");
  CHECK(trivial.vertex_count() == 4);
  CHECK(trivial.group().is_trivial());
  std::ostringstream out;
  write_wdigraph(out, trivial);
  CHECK(out.str() == "wdg 4 0\n\n");
}

TEST_CASE("weighted digraph parse errors carry line numbers") {
  CHECK(parse_error_line([] { wdg("wdg 2\n3\n"); }) == 1);
  CHECK(parse_error_line([] { wdg("wdg 2 1\n"); }) == 1);
  CHECK(parse_error_line([] { wdg("wdg 2 1\n3 3\n"); }) == 2);
  CHECK(parse_error_line([] { wdg("wdg 2 2\n4 2\n"); }) == 2);
  CHECK(parse_error_line([] { wdg("wdg 2 1\n3\n0 1 3\n"); }) == 3);
  CHECK(parse_error_line([] { wdg("wdg 2 1\n3\n0 1 0\n"); }) == 3);
  CHECK(parse_error_line([] { wdg("wdg 2 1\n3\n0 0 1\n"); }) == 3);
  CHECK(parse_error_line([] { wdg("wdg 2 1\n3\n0 2 1\n"); }) == 3);
  CHECK(parse_error_line([] { wdg("wdg 2 1\n3\n0 1 1\n\n0 1 2\n"); }) == 5);
  CHECK(parse_error_line([] { wdg("wdg 2 1\n3\n0 1\n"); }) == 3);
}

TEST_CASE("round trips are byte-identical") {
  std::mt19937 rng(53);
  for (const auto& g : {AbelianGroup::cyclic(2), AbelianGroup::cyclic(6), AbelianGroup({2, 2}), AbelianGroup({3, 3})}) {
    for (int i = 0; i < 25; ++i) {
      const auto w = oracle::random_digraph(rng, 4, g, false);
      std::ostringstream first;
      write_wdigraph(first, w);
      std::istringstream in(first.str());
      const auto back = read_wdigraph(in);
      CHECK(back == w);
      std::ostringstream second;
      write_wdigraph(second, back);
      CHECK(second.str() == first.str());

      const Quandle q = build(w);
      std::ostringstream qa;
      write_quandle(qa, q);
      std::istringstream qin(qa.str());
      std::ostringstream qb;
      write_quandle(qb, read_quandle(qin));
      CHECK(qb.str() == qa.str());
    }
  }
}

TEST_CASE("DOT output") {
  WeightedDigraph z3(2, AbelianGroup::cyclic(3));
  z3.set_rank(0, 1, 1);
  z3.set_rank(1, 0, 1);
  std::ostringstream a;
  write_dot(a, z3);
  CHECK(a.str() == "digraph W {\n  0;\n  1;\n  0 -> 1 [dir=both, label=\"+1\"];\n}\n");

  z3.set_rank(1, 0, 2);
  std::ostringstream b;
  write_dot(b, z3, "G");
  CHECK(b.str() == "digraph G {\n  0;\n  1;\n  0 -> 1 [label=\"+1\"];\n  1 -> 0 [label=\"+2\"];\n}\n");

  WeightedDigraph z2(3, AbelianGroup::cyclic(2));
  z2.set_rank(0, 1, 1);
  std::ostringstream c;
  write_dot(c, z2);
  CHECK(c.str() == "digraph W {\n  0;\n  1;\n  2;\n  0 -> 1;\n}\n");

  WeightedDigraph v4(2, AbelianGroup({2, 2}));
  v4.set_rank(0, 1, 3);
  CHECK(weight_label(v4, 0, 1) == "+(1,1)");
}

TEST_CASE("catalog files") {
  const auto c = classify_order(6);
  CHECK(catalog_file_name(c, 0) == "n6_x2_a3_1.wdg");
  CHECK(catalog_file_name(c, 1) == "n6_x3_a2_1.wdg");
  CHECK(catalog_file_name(c, 2) == "n6_x3_a2_2.wdg");
  CHECK(catalog_file_name(c, 3) == "n6_x6_a1_1.wdg");
  std::ostringstream index;
  write_catalog_index(index, c);
  CHECK(index.str().rfind("order\tx\tmoduli\tprovenance\tfile\n6\t2\t3\t", 0) == 0);

  const auto dir = std::filesystem::temp_directory_path() / "quandles_io_test";
  std::filesystem::remove_all(dir);
  write_catalog(dir, c);
  for (std::size_t i = 0; i < c.count(); ++i) {
    CHECK(read_wdigraph_file(dir / catalog_file_name(c, i)) == c.entries[i].digraph);
  }
  CHECK(std::filesystem::exists(dir / "index.tsv"));
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(read_wdigraph_file(dir / "missing.wdg"), Error);
}

TEST_CASE("witness output") {
  const auto p = presentation(Quandle::trivial(2));
  std::ostringstream out;
  write_witness(out, p.witness);
  CHECK(out.str() == "witness\nmoduli\norbits 2\norbit 0: 0\norbit 1: 1\nbase 0 1\nfiber 0: 0\nfiber 1: 1\nend\n");
}
