#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sperner/poset_io.hpp"
#include "sperner/truncation.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sperner::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SPERNER_TEST_DATA) + "/" + name; }

std::size_t count_lines(const std::string& s, const std::string& prefix) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    n += line.rfind(prefix, 0) == 0;
  return n;
}

} // namespace

TEST_CASE("check-finite") {
  CHECK(run({"check-finite", data("diamond.poset"), "--splitting"}).code == 0);
  const auto tree = run({"check-finite", data("binary_tree_depth2.poset"), "--splitting"});
  CHECK(tree.code == 1);
  CHECK(tree.out.find("witness={0,1}") != std::string::npos);
  const auto cyc = run({"check-finite", data("cycle.poset"), "--splitting"});
  CHECK(cyc.code == 2);
  CHECK(cyc.err.find("cycle") != std::string::npos);
  CHECK(run({"check-finite", data("missing.poset")}).code == 2);

  const auto dense = run({"check-finite", data("binary_tree_depth3.poset"), "--strongly-dense"});
  CHECK(dense.code == 1);
  CHECK(dense.out.find("strongly_dense=false interval=(e,00) between={0}") != std::string::npos);

  const auto list = run({"check-finite", data("diamond.poset"), "--list-maximal-antichains",
                         "--strongly-dense"});
  CHECK(list.code == 0);
  CHECK(list.out.find("maximal_antichains=3\n  {bot}\n  {a,b}\n  {top}\n") != std::string::npos);

  CHECK(run({"--max-bruteforce", "3", "check-finite", data("diamond.poset"),
             "--list-maximal-antichains"})
            .code == 2);
}

TEST_CASE("check-finite --dot writes the Hasse diagram") {
  const std::string path = "cli_test_diamond.dot";
  CHECK(run({"check-finite", data("diamond.poset"), "--dot", path}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("\"bot\" -> \"a\";") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("c-leq") {
  CHECK(run({"c-leq", "(0,e)", "(1,(0,e),0)"}).out == "<\n");
  CHECK(run({"c-leq", "(1,(0,e),0)", "(0,e)"}).out == ">\n");
  CHECK(run({"c-leq", "(1,(0,e),0)", "(1,(0,e),1)"}).out == "incomparable\n");
  CHECK(run({"c-leq", "(0,e)", "(0,e)"}).out == "=\n");
  CHECK(run({"c-leq", "(0,e)", "(0,e)"}).code == 0);
  const auto bad = run({"c-leq", "(1,(0,e),)", "(0,e)"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position 9") != std::string::npos);
}

TEST_CASE("c-truncate") {
  auto t = run({"c-truncate", "--levels", "0", "--depth", "1"});
  CHECK(t.code == 0);
  CHECK(count_lines(t.out, "elem ") == 3);
  t = run({"c-truncate", "--levels", "2", "--depth", "1"});
  CHECK(count_lines(t.out, "elem ") == 27);
  CHECK(sperner::parse_poset_text(t.out).relation() == sperner::truncate({2, 1}).poset().relation());
  t = run({"c-truncate", "--levels", "0", "--depth", "0"});
  CHECK(count_lines(t.out, "elem ") == 1);
  CHECK(count_lines(t.out, "cover ") == 0);
  const auto dot = run({"c-truncate", "--levels", "1", "--depth", "1", "--format", "dot"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(sperner::parse_dot(dot.out).relation() == sperner::truncate({1, 1}).poset().relation());
  CHECK(run({"c-truncate", "--levels", "9", "--depth", "3"}).code == 2);
  CHECK(run({"c-truncate", "--levels", "1", "--depth", "1", "--format", "svg"}).code == 2);
}

TEST_CASE("c-claims") {
  const auto r = run({"c-claims", "--levels", "2", "--depth", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("elements_checked=343") != std::string::npos);
  CHECK(r.out.find("partitions_refuted=4") != std::string::npos);
  CHECK(r.out.find("D={(1,(0,e),0)} U={(1,(0,e),1)} refuted w=(1,(0,e),01)") != std::string::npos);
  CHECK(r.out.find("D={} U={(1,(0,e),0),(1,(0,e),1)} refuted w=(0,e)") != std::string::npos);
}

TEST_CASE("verify-aeg") {
  const auto r = run({"verify-aeg", "--size", "8", "--count", "200", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("samples=200") != std::string::npos);
  CHECK(r.out.find("failures=0 pass") != std::string::npos);
  CHECK(r.out == run({"verify-aeg", "--size", "8", "--count", "200", "--seed", "7"}).out);
  CHECK(run({"verify-aeg", "--size", "1", "--count", "1"}).code == 0);
  const auto cap = run({"verify-aeg", "--size", "30"});
  CHECK(cap.code == 2);
  CHECK(cap.err.find("brute-force bound") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"c-leq", "(0,e)"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
