#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "loopkit/io.hpp"

namespace fs = std::filesystem;
using loopkit::IsotopismTriple;
using loopkit::Loop;
using loopkit::Permutation;
namespace io = loopkit::io;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("loopkit_io_" + name);
}

io::ParseError capture_loop_error(const std::string& text) {
  std::istringstream in(text);
  try {
    io::read_loop(in, "input");
  } catch (const io::ParseError& e) {
    return e;
  }
  throw std::logic_error("expected ParseError");
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("bundled assets are byte-stable") {
    const std::string loop_bytes = fixtures::read_file(fixtures::asset_path("counterexample.loop"));
    CHECK(loop_bytes.size() == 113);
    CHECK(fixtures::fnv1a(loop_bytes) == 0xbc0856cec288dfe5ull);
    const std::string a_bytes = fixtures::read_file(fixtures::asset_path("counterexample_a.perm"));
    CHECK(a_bytes == "1 3 0 4 2\n");
    CHECK(fixtures::fnv1a(a_bytes) == 0x451cc3ac49258243ull);
    const std::string b_bytes = fixtures::read_file(fixtures::asset_path("counterexample_b.perm"));
    CHECK(b_bytes == "2 0 4 1 3\n");
    CHECK(fixtures::fnv1a(b_bytes) == 0x33cd17becc6e3c93ull);
    const std::string t_bytes =
        fixtures::read_file(fixtures::asset_path("counterexample_triple.txt"));
    CHECK(t_bytes.size() == 66);
    CHECK(fixtures::fnv1a(t_bytes) == 0xf0968c43d443d065ull);
  }

  TEST_CASE("bundled assets parse to the expected objects") {
    CHECK(io::read_loop_file(fixtures::asset_path("counterexample.loop")) == fixtures::table5());
    CHECK(io::read_permutation_file(fixtures::asset_path("counterexample_a.perm")) ==
          Permutation({1, 3, 0, 4, 2}));
    CHECK(io::read_permutation_file(fixtures::asset_path("counterexample_b.perm")) ==
          Permutation({2, 0, 4, 1, 3}));
    const IsotopismTriple t =
        io::read_triple_file(fixtures::asset_path("counterexample_triple.txt"));
    CHECK(t.a == Permutation({1, 3, 0, 4, 2}));
    CHECK(t.b == Permutation({2, 0, 4, 1, 3}));
    CHECK(t.c.is_identity());
  }

  TEST_CASE("loop text format") {
    CHECK(io::write_loop(fixtures::cyclic(3)) == "3\n0 1 2\n1 2 0\n2 0 1\n");
    std::istringstream in("# comment\n\n  3\n0 1 2\n# interleaved\n1 2 0\n2 0 1\n");
    CHECK(io::read_loop(in) == fixtures::cyclic(3));
    std::istringstream crlf("3\r\n0 1 2\r\n1 2 0\r\n2 0 1\r\n");
    CHECK(io::read_loop(crlf) == fixtures::cyclic(3));
  }

  TEST_CASE("permutation and triple text formats") {
    CHECK(io::write_permutation(Permutation({1, 3, 0, 4, 2})) == "1 3 0 4 2\n");
    std::istringstream in("# images\n1 3 0 4 2\n");
    CHECK(io::read_permutation(in) == Permutation({1, 3, 0, 4, 2}));
    const IsotopismTriple t{Permutation({1, 2, 0}), Permutation({0, 2, 1}),
                            Permutation::identity(3)};
    CHECK(io::write_triple(t) == "1 2 0\n0 2 1\n0 1 2\n");
    std::istringstream tin(io::write_triple(t));
    CHECK(io::read_triple(tin) == t);
  }

  TEST_CASE("file round trips") {
    const fs::path lp = temp_file("rt.loop");
    io::write_loop_file(fixtures::exp2cip5(), lp.string());
    CHECK(io::read_loop_file(lp.string()) == fixtures::exp2cip5());
    const fs::path pp = temp_file("rt.perm");
    io::write_permutation_file(Permutation({2, 0, 4, 1, 3}), pp.string());
    CHECK(io::read_permutation_file(pp.string()) == Permutation({2, 0, 4, 1, 3}));
    const fs::path tp = temp_file("rt_triple.txt");
    const IsotopismTriple t{Permutation({1, 3, 0, 4, 2}), Permutation({2, 0, 4, 1, 3}),
                            Permutation::identity(5)};
    io::write_triple_file(t, tp.string());
    CHECK(io::read_triple_file(tp.string()) == t);
    fs::remove(lp);
    fs::remove(pp);
    fs::remove(tp);
  }

  TEST_CASE("parse errors carry file, line, and column") {
    const io::ParseError empty = capture_loop_error("");
    CHECK(empty.file() == "input");
    CHECK(empty.line() == 1);
    CHECK(empty.col() == 1);
    CHECK(std::string(empty.what()) ==
          "input:1:1: unexpected end of input, expected the loop order");

    const io::ParseError bad_token = capture_loop_error("x\n");
    CHECK(bad_token.line() == 1);
    CHECK(std::string(bad_token.what()).find("expected an integer, got 'x'") != std::string::npos);

    const io::ParseError zero = capture_loop_error("0\n");
    CHECK(std::string(zero.what()).find("order must be positive, got 0") != std::string::npos);

    const io::ParseError short_row = capture_loop_error("2\n0 1\n1\n");
    CHECK(short_row.line() == 3);
    CHECK(short_row.col() == 2);
    CHECK(std::string(short_row.what()).find("expected 2 entries, got 1") != std::string::npos);

    const io::ParseError long_row = capture_loop_error("2\n0 1 1\n1 0\n");
    CHECK(long_row.line() == 2);
    CHECK(long_row.col() == 5);

    const io::ParseError truncated = capture_loop_error("3\n0 1 2\n");
    CHECK(truncated.line() == 3);
    CHECK(std::string(truncated.what()).find("table row 1") != std::string::npos);
  }

  TEST_CASE("table defects are reported at their position in the file") {
    const io::ParseError latin = capture_loop_error("# c\n2\n0 1\n0 1\n");
    CHECK(latin.line() == 4);
    CHECK(latin.col() == 1);
    CHECK(std::string(latin.what()).find("column 0 repeats value 0 at row 1") !=
          std::string::npos);

    const io::ParseError no_identity = capture_loop_error("3\n0 1 2\n2 0 1\n1 2 0\n");
    CHECK(no_identity.line() == 2);
    CHECK(std::string(no_identity.what()).find("no two-sided identity") != std::string::npos);
  }

  TEST_CASE("permutation parse errors") {
    std::istringstream dup("0 0\n");
    CHECK_THROWS_AS(io::read_permutation(dup, "p"), io::ParseError);
    std::istringstream gap("0 2\n");
    CHECK_THROWS_AS(io::read_permutation(gap, "p"), io::ParseError);
    std::istringstream none("# only a comment\n");
    try {
      io::read_permutation(none, "p");
      FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
      CHECK(std::string(e.what()).find("a permutation line") != std::string::npos);
    }
  }

  TEST_CASE("triple lines must share one degree") {
    std::istringstream in("0 1\n0 1 2\n0 1\n");
    try {
      io::read_triple(in, "t");
      FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find(
                "permutation degree 3 does not match first line's degree 2 (line 1)") !=
            std::string::npos);
    }
  }

  TEST_CASE("missing files") {
    try {
      io::read_loop_file("/nonexistent/loopkit.loop");
      FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
      CHECK(std::string(e.what()).find("cannot open file") != std::string::npos);
      CHECK(e.line() == 0);
    }
    CHECK_THROWS_AS(io::read_permutation_file("/nonexistent/p.perm"), io::ParseError);
    CHECK_THROWS_AS(io::read_triple_file("/nonexistent/t.txt"), io::ParseError);
  }
}
