#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "tautint/io.hpp"

using namespace tautint;

namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("tautint_io_test_" + std::to_string(++counter) + ".json");
    std::ofstream out(path_);
    out << content;
  }

  ~TempFile() { std::filesystem::remove(path_); }

  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("graph files") {
  SECTION("loops and edges load") {
    TempFile file(R"({"vertices": 2, "edges": [[1, 1], [1, 2]]})");
    const auto graph = load_graph_file(file.path());
    REQUIRE(graph.num_vertices == 2);
    REQUIRE(graph.edges ==
            std::vector<std::pair<int, int>>{{1, 1}, {1, 2}});
  }

  SECTION("bad endpoints are rejected") {
    TempFile file(R"({"vertices": 2, "edges": [[0, 1]]})");
    REQUIRE_THROWS_AS(load_graph_file(file.path()), std::invalid_argument);
  }

  SECTION("missing pieces are rejected") {
    TempFile no_edges(R"({"vertices": 2})");
    REQUIRE_THROWS_AS(load_graph_file(no_edges.path()), std::invalid_argument);
    TempFile bad_edge(R"({"vertices": 2, "edges": [[1]]})");
    REQUIRE_THROWS_AS(load_graph_file(bad_edge.path()), std::invalid_argument);
    REQUIRE_THROWS_AS(load_graph_file("/nonexistent/path.json"),
                      std::invalid_argument);
  }
}

TEST_CASE("tensor files") {
  SECTION("symmetric completion on load") {
    TempFile file(R"({"r": 2, "factors": 2, "entries": [
      {"l": 1, "j": 1, "k": 2, "t": "-3/4"},
      {"l": 2, "j": 1, "k": 1, "t": "2"}]})");
    const auto tensor = load_tensor_file(file.path());
    REQUIRE(tensor.at(1, 2, 1) == make_rational(-3, 4));
    REQUIRE(tensor.at(1, 1, 2) == make_rational(-3, 4));
    REQUIRE(tensor.at(2, 1, 1) == 2);
    REQUIRE(tensor.at(2, 2, 2) == 0);
  }

  SECTION("conflicting duplicates are rejected") {
    TempFile file(R"({"r": 2, "factors": 2, "entries": [
      {"l": 1, "j": 1, "k": 2, "t": "1"},
      {"l": 1, "j": 2, "k": 1, "t": "2"}]})");
    REQUIRE_THROWS_AS(load_tensor_file(file.path()), std::invalid_argument);
  }

  SECTION("agreeing duplicates are tolerated") {
    TempFile file(R"({"r": 2, "factors": 2, "entries": [
      {"l": 1, "j": 1, "k": 2, "t": "1/2"},
      {"l": 1, "j": 2, "k": 1, "t": "1/2"}]})");
    REQUIRE(load_tensor_file(file.path()).at(1, 1, 2) == make_rational(1, 2));
  }

  SECTION("numbers are not accepted as fractions") {
    TempFile file(R"({"r": 1, "factors": 1, "entries": [
      {"l": 1, "j": 1, "k": 1, "t": 0.5}]})");
    REQUIRE_THROWS_AS(load_tensor_file(file.path()), std::invalid_argument);
  }

  SECTION("out-of-range indices are rejected") {
    TempFile file(R"({"r": 1, "factors": 1, "entries": [
      {"l": 1, "j": 1, "k": 2, "t": "1"}]})");
    REQUIRE_THROWS_AS(load_tensor_file(file.path()), std::invalid_argument);
  }
}

TEST_CASE("bound matrix files") {
  SECTION("row-major entries with symmetry validation") {
    TempFile file(R"({"r": 2, "t": ["1", "3", "3", "1"]})");
    const auto matrix = load_bound_matrix_file(file.path());
    REQUIRE(matrix.at(1, 2) == 3);
  }

  SECTION("asymmetry is rejected") {
    TempFile file(R"({"r": 2, "t": ["1", "3", "4", "1"]})");
    REQUIRE_THROWS_AS(load_bound_matrix_file(file.path()),
                      std::invalid_argument);
  }

  SECTION("wrong entry counts are rejected") {
    TempFile file(R"({"r": 2, "t": ["1", "3", "3"]})");
    REQUIRE_THROWS_AS(load_bound_matrix_file(file.path()),
                      std::invalid_argument);
  }
}

TEST_CASE("flag parsing helpers") {
  REQUIRE(parse_multipliers("1,-1,2") == std::vector<long>{1, -1, 2});
  REQUIRE_THROWS_AS(parse_multipliers("1,x"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_multipliers("1/2"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_multipliers(""), std::invalid_argument);

  const auto inv = parse_invariants("omega2=4,phi=5/2,hnt=0");
  REQUIRE(inv.omega2 == 4);
  REQUIRE(inv.phi == make_rational(5, 2));
  REQUIRE(inv.hnt == 0);
  REQUIRE_THROWS_AS(parse_invariants("omega2=4,phi=1"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_invariants("omega2=4,phi=1,hnt=0,x=1"),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(parse_invariants("omega2=0.5,phi=1,hnt=0"),
                    std::invalid_argument);
}
