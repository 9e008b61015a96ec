#include <filesystem>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "loopkit/catalog.hpp"
#include "loopkit/io.hpp"

namespace fs = std::filesystem;
using loopkit::CatalogEntry;
using loopkit::CatalogFilter;
using loopkit::Loop;

TEST_SUITE("catalog") {
  TEST_CASE("reduced square counts") {
    CHECK(loopkit::enumerate_loops(1).size() == 1);
    CHECK(loopkit::enumerate_loops(2).size() == 1);
    CHECK(loopkit::enumerate_loops(3).size() == 1);
    CHECK(loopkit::enumerate_loops(4).size() == 4);
    CHECK(loopkit::enumerate_loops(5).size() == 56);
    CHECK(loopkit::enumerate_loops(6).size() == 9408);
  }

  TEST_CASE("visitor and vector enumeration agree") {
    std::vector<Loop> seen;
    loopkit::enumerate_loops(5, [&](const Loop& l) { seen.push_back(l); });
    CHECK(seen == loopkit::enumerate_loops(5));
    CHECK(seen.front() == fixtures::non_wip5());
    for (const Loop& l : seen) {
      CHECK(l.identity() == 0);
      CHECK(l.left_translation(0).is_identity());
      CHECK(l.right_translation(0).is_identity());
    }
  }

  TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(loopkit::enumerate_loops(7), loopkit::OrderTooLarge);
    CHECK_THROWS_AS(loopkit::build_catalog(7), loopkit::OrderTooLarge);
  }

  TEST_CASE("normalize relabels the identity to zero") {
    const Loop norm = loopkit::normalize(fixtures::permuted_z3());
    CHECK(norm.identity() == 0);
    CHECK_FALSE(loopkit::find_isomorphisms(norm, fixtures::cyclic(3)).empty());
    CHECK(loopkit::normalize(fixtures::cyclic(3)) == fixtures::cyclic(3));
    CHECK(loopkit::normalize(fixtures::table5()) == fixtures::table5());
  }

  TEST_CASE("canonical keys separate exactly the isomorphism classes") {
    CHECK(loopkit::canonical_key(fixtures::table5()) ==
          loopkit::canonical_key(fixtures::cyclic(5)));
    CHECK(loopkit::canonical_key(fixtures::permuted_z3()) ==
          loopkit::canonical_key(fixtures::cyclic(3)));
    CHECK(loopkit::canonical_key(fixtures::klein4()) !=
          loopkit::canonical_key(fixtures::cyclic(4)));
    CHECK(loopkit::canonical_key(fixtures::exp2cip5()) !=
          loopkit::canonical_key(fixtures::cyclic(5)));
  }

  TEST_CASE("order 5 classes") {
    const std::vector<CatalogEntry> entries = loopkit::build_catalog(5);
    REQUIRE(entries.size() == 6);
    const std::vector<int> sizes = {8, 8, 2, 8, 24, 6};
    const std::vector<std::string> bits = {"0000000", "0000000", "0011111",
                                           "0000000", "0000001", "1101111"};
    long total = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      CHECK(entries[i].iso_class_id == static_cast<int>(i));
      CHECK(entries[i].members == sizes[i]);
      CHECK(entries[i].flags.bits() == bits[i]);
      CHECK(entries[i].key == loopkit::canonical_key(entries[i].loop));
      total += entries[i].members;
    }
    CHECK(total == 56);
    CHECK(entries[0].loop == fixtures::non_wip5());
    CHECK(entries[2].loop == fixtures::exp2cip5());
    CHECK(entries[4].loop == fixtures::m1only5());
    CHECK(loopkit::canonical_key(entries[5].loop) == loopkit::canonical_key(fixtures::cyclic(5)));
  }

  TEST_CASE("order 4 classes") {
    const std::vector<CatalogEntry> entries = loopkit::build_catalog(4);
    REQUIRE(entries.size() == 2);
    const auto klein_key = loopkit::canonical_key(fixtures::klein4());
    const auto z4_key = loopkit::canonical_key(fixtures::cyclic(4));
    for (const CatalogEntry& e : entries) {
      if (e.key == klein_key) {
        CHECK(e.members == 1);
        CHECK(e.flags.bits() == "1111111");
      } else {
        CHECK(e.key == z4_key);
        CHECK(e.members == 3);
        CHECK(e.flags.bits() == "1101111");
      }
    }
  }

  TEST_CASE("tiny orders have one class each") {
    for (int n = 1; n <= 3; ++n) {
      const std::vector<CatalogEntry> entries = loopkit::build_catalog(n);
      REQUIRE(entries.size() == 1);
      CHECK(entries[0].members == 1);
      CHECK(entries[0].flags.wip);
      CHECK(entries[0].flags.cip);
      CHECK(entries[0].flags.associative);
      CHECK(entries[0].flags.exponent2 == (n <= 2));
    }
  }

  TEST_CASE("filtered catalogs renumber classes") {
    const std::vector<CatalogEntry> wip = loopkit::build_catalog(5, CatalogFilter::WipOnly);
    REQUIRE(wip.size() == 2);
    CHECK(wip[0].iso_class_id == 0);
    CHECK(wip[0].loop == fixtures::exp2cip5());
    CHECK(wip[0].members == 2);
    CHECK(wip[1].iso_class_id == 1);
    CHECK(wip[1].members == 6);
    CHECK(wip[0].members + wip[1].members == 8);
    const std::vector<CatalogEntry> cip = loopkit::build_catalog(5, CatalogFilter::CipOnly);
    REQUIRE(cip.size() == 2);
    CHECK(cip[0].members + cip[1].members == 8);
    const std::vector<CatalogEntry> cip6 = loopkit::build_catalog(6, CatalogFilter::CipOnly);
    REQUIRE(cip6.size() == 1);
    CHECK(cip6[0].members == 60);
    CHECK(cip6[0].flags.bits() == "1101111");
    CHECK(loopkit::canonical_key(cip6[0].loop) == loopkit::canonical_key(fixtures::cyclic(6)));
  }

  TEST_CASE("crossed inverse counts at small orders") {
    const std::vector<int> reduced = {1, 1, 1, 4, 8};
    const std::vector<int> classes = {1, 1, 1, 2, 2};
    for (int n = 1; n <= 5; ++n) {
      const std::vector<CatalogEntry> entries = loopkit::build_catalog(n, CatalogFilter::CipOnly);
      long total = 0;
      for (const CatalogEntry& e : entries) total += e.members;
      CHECK(total == reduced[n - 1]);
      CHECK(static_cast<int>(entries.size()) == classes[n - 1]);
    }
  }

  TEST_CASE("worker count does not change the catalog") {
    const auto serial = loopkit::build_catalog(5, CatalogFilter::All, 6, 1);
    const auto parallel = loopkit::build_catalog(5, CatalogFilter::All, 6, 3);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].loop == parallel[i].loop);
      CHECK(serial[i].key == parallel[i].key);
      CHECK(serial[i].members == parallel[i].members);
    }
  }

  TEST_CASE("catalog files round trip") {
    const fs::path dir = fs::temp_directory_path() / "loopkit_catalog_rt";
    fs::remove_all(dir);
    const std::vector<CatalogEntry> entries = loopkit::build_catalog(4);
    loopkit::write_catalog(entries, dir.string());
    CHECK(fs::exists(dir / "index.tsv"));
    CHECK(fs::exists(dir / "n4_c000.loop"));
    CHECK(fs::exists(dir / "n4_c001.loop"));
    const std::string index = fixtures::read_file((dir / "index.tsv").string());
    CHECK(index.find("# path\torder\tflags(commutative,associative,exponent2,wip,cip,aip,m1)"
                     "\tclass") == 0);
    const std::vector<CatalogEntry> back = loopkit::read_catalog(dir.string());
    REQUIRE(back.size() == entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      CHECK(back[i].loop == entries[i].loop);
      CHECK(back[i].flags == entries[i].flags);
      CHECK(back[i].key == entries[i].key);
      CHECK(back[i].iso_class_id == entries[i].iso_class_id);
    }
    fs::remove_all(dir);
  }

  TEST_CASE("reading a missing catalog fails") {
    try {
      loopkit::read_catalog("/nonexistent/loopkit_catalog");
      FAIL("expected Error");
    } catch (const loopkit::Error& e) {
      CHECK(e.code() == "io");
    }
  }
}
