#include <doctest.h>

#include <json.hpp>
#include <random>
#include <string>

#include "common.hpp"
#include "oracle.hpp"
#include "szc/graph_io.hpp"
#include "szc/szeged.hpp"

using szc::ErrorCode;
using szc::Graph;
using szc_test::code_of;

TEST_CASE("graph6 fixed vectors encode") {
  CHECK(szc::write_graph6(Graph::build(1, {})) == "@");
  CHECK(szc::write_graph6(Graph::build(2, {{0, 1}})) == "A_");
  CHECK(szc::write_graph6(Graph::build(2, {})) == "A?");
  CHECK(szc::write_graph6(szc_test::path(3)) == "Bg");
  CHECK(szc::write_graph6(szc_test::cycle(3)) == "Bw");
  CHECK(szc::write_graph6(szc_test::cycle(4)) == "Cl");
  CHECK(szc::write_graph6(szc_test::cycle(5)) == "Dhc");
  CHECK(szc::write_graph6(szc_test::cycle(6)) == "EhEG");
  CHECK(szc::write_graph6(szc_test::path(4)) == "Ch");
  CHECK(szc::write_graph6(szc_test::path(5)) == "DhC");
  CHECK(szc::write_graph6(szc_test::path(6)) == "EhCG");
  CHECK(szc::write_graph6(szc_test::star(4)) == "Cs");
  CHECK(szc::write_graph6(szc_test::star(7)) == "FsaC?");
  CHECK(szc::write_graph6(szc_test::complete(4)) == "C~");

  Graph petersen = Graph::build(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  CHECK(szc::write_graph6(petersen) == "IheA@GUAo");
}

TEST_CASE("graph6 fixed vectors decode") {
  CHECK(szc::parse_graph6("@") == Graph::build(1, {}));
  CHECK(szc::parse_graph6("A_") == Graph::build(2, {{0, 1}}));
  CHECK(szc::parse_graph6("Bw") == szc_test::cycle(3));
  CHECK(szc::parse_graph6("Cl") == szc_test::cycle(4));
  CHECK(szc::parse_graph6("Cs") == szc_test::star(4));
  CHECK(szc::parse_graph6("C~") == szc_test::complete(4));
  // trailing newline is tolerated
  CHECK(szc::parse_graph6("Bg\n") == szc_test::path(3));
  CHECK(szc::parse_graph6("Bg\r\n") == szc_test::path(3));
}

TEST_CASE("graph6 long-form size prefix") {
  std::string empty63 = "~??~" + std::string(326, '?');
  Graph g = szc::parse_graph6(empty63);
  CHECK(g.order() == 63);
  CHECK(g.size() == 0);
  CHECK(szc::write_graph6(g) == empty63);
  CHECK(szc_test::encode_graph6_reference(g) == empty63);
}

TEST_CASE("graph6 strict parse failures") {
  auto parse_code = [](std::string s) {
    return code_of([s] { (void)szc::parse_graph6(s); });
  };
  CHECK(parse_code("") == ErrorCode::MalformedHeader);
  CHECK(parse_code("\n") == ErrorCode::MalformedHeader);
  CHECK(parse_code("B") == ErrorCode::TruncatedBitstream);     // body missing
  CHECK(parse_code("Bw?") == ErrorCode::TruncatedBitstream);   // body too long
  CHECK(parse_code("~??") == ErrorCode::TruncatedBitstream);   // header cut off
  CHECK(parse_code("B ") == ErrorCode::InvalidCharacter);      // byte < 63
  CHECK(parse_code(" w") == ErrorCode::InvalidCharacter);      // bad header byte
  CHECK(parse_code("B\x7f") == ErrorCode::InvalidCharacter);   // byte > 126
  CHECK(parse_code("A`") == ErrorCode::InvalidCharacter);      // padding bits set
  // 4-byte prefix holding a value that fits in 1 byte is non-canonical
  CHECK(parse_code("~??B?") == ErrorCode::MalformedHeader);
  // 8-byte prefix holding a small value likewise
  CHECK(parse_code("~~?????B") == ErrorCode::MalformedHeader);
  // absurd order is rejected before the body length check
  CHECK(parse_code("~~~??????") == ErrorCode::GraphTooLarge);
}

TEST_CASE("graph6 round-trip and reference codec agreement") {
  std::mt19937 rng(7201);
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = szc_test::random_graph(rng, int(rng() % 14));
    std::string mine = szc::write_graph6(g);
    CHECK(mine == szc_test::encode_graph6_reference(g));
    CHECK(szc::parse_graph6(mine) == g);
    CHECK(szc_test::decode_graph6_reference(mine) == g);
  }
  // a couple of larger orders to cross the 62-vertex prefix boundary
  for (int order : {61, 62, 63, 64, 80}) {
    Graph g = szc_test::random_graph(rng, order);
    std::string mine = szc::write_graph6(g);
    CHECK(mine == szc_test::encode_graph6_reference(g));
    CHECK(szc::parse_graph6(mine) == g);
  }
}

TEST_CASE("edge list parsing") {
  Graph c4 = szc_test::cycle(4);
  CHECK(szc::parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n") == c4);
  CHECK(szc::parse_edge_list("0 1\n1 2\n2 3\n3 0\n") == c4);
  CHECK(szc::parse_edge_list("# comment\n\n0 1 # inline\n1 2\n") ==
        szc_test::path(3));
  CHECK(szc::parse_edge_list("0 1") == Graph::build(2, {{0, 1}}));
  // header declares isolated vertex 2
  Graph with_isolated = szc::parse_edge_list("3 1\n0 1\n");
  CHECK(with_isolated.order() == 3);
  CHECK(with_isolated.size() == 1);
  // first row only counts as a header when the remaining row count matches
  Graph no_header = szc::parse_edge_list("1 2\n2 3\n");
  CHECK(no_header.order() == 4);
  CHECK(no_header.size() == 2);
  CHECK(no_header.has_edge(1, 2));
  // "5 2" with two following rows of small endpoints is a header
  Graph header = szc::parse_edge_list("5 2\n0 1\n1 2\n");
  CHECK(header.order() == 5);
  CHECK(header.size() == 2);
}

TEST_CASE("edge list parse failures") {
  auto parse_code = [](std::string s) {
    return code_of([s] { (void)szc::parse_edge_list(s); });
  };
  CHECK(parse_code("") == ErrorCode::ParseError);
  CHECK(parse_code("# only a comment\n") == ErrorCode::ParseError);
  CHECK(parse_code("0 1 2\n") == ErrorCode::ParseError);
  CHECK(parse_code("a b\n") == ErrorCode::ParseError);
  CHECK(parse_code("-1 0\n") == ErrorCode::ParseError);
  CHECK(parse_code("0\n1\n") == ErrorCode::ParseError);
  CHECK(parse_code("2 2\n") == ErrorCode::SelfLoop);
  CHECK(parse_code("0 1\n1 0\n") == ErrorCode::DuplicateEdge);
  // "0 0" alone reads as a header declaring the order-0 graph
  CHECK(szc::parse_edge_list("0 0\n").order() == 0);
}

TEST_CASE("edge list writing round-trips") {
  Graph g = Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  std::string text = szc::write_edge_list(g);
  CHECK(text == "5 4\n0 1\n0 2\n0 3\n1 2\n");
  CHECK(szc::parse_edge_list(text) == g);

  std::mt19937 rng(7202);
  for (int trial = 0; trial < 100; ++trial) {
    Graph h = szc_test::random_graph(rng, 1 + int(rng() % 10));
    CHECK(szc::parse_edge_list(szc::write_edge_list(h)) == h);
  }
}

TEST_CASE("json report fields") {
  Graph g = szc_test::cycle(4);
  auto report = szc::compute_indices(g);
  auto parsed = nlohmann::json::parse(szc::report_to_json(g, report));
  CHECK(parsed["graph"] == "Cl");
  CHECK(parsed["n"] == 4);
  CHECK(parsed["m"] == 4);
  CHECK(parsed["k"] == 1);
  CHECK(parsed["wiener"] == 8);
  CHECK(parsed["szeged"] == 16);
  CHECK(parsed["edge_szeged"] == 4);
  CHECK(parsed["edge_vertex_szeged_x2"] == 16);
  REQUIRE(parsed["per_edge"].size() == 4);
  CHECK(parsed["per_edge"][0]["u"] == 0);
  CHECK(parsed["per_edge"][0]["v"] == 1);
  CHECK(parsed["per_edge"][0]["n_u"] == 2);
  CHECK(parsed["per_edge"][0]["m_0"] == 2);
  // no floating point anywhere: the doubled field is the only ev form
  CHECK_FALSE(parsed.contains("edge_vertex_szeged"));
}

TEST_CASE("csv report bytes") {
  Graph g = szc_test::star(4);
  auto report = szc::compute_indices(g);
  CHECK(szc::report_to_csv(g, report) ==
        "graph,n,m,k,wiener,szeged,edge_szeged,edge_vertex_szeged_x2\n"
        "Cs,4,3,0,9,9,0,6\n");
}
