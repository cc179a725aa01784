#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "haarlab/atlas.hpp"
#include "haarlab/error.hpp"
#include "haarlab/repro.hpp"

using namespace haarlab;
using nlohmann::json;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("haarlab-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::size_t line_count(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += !line.empty();
  return n;
}

const ReportRow* find_row(const VerificationReport& r, const std::string& group) {
  for (const auto& row : r.rows)
    if (row.group == group) return &row;
  return nullptr;
}

}  // namespace

TEST_SUITE("repro-cli") {
  TEST_CASE("report json round trip") {
    Classifier c;
    auto r = target_dihedral_cross_zp(c, {3}, {3, 5});
    json j = r.to_json();
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["version"] == version());
    auto back = VerificationReport::from_json(json::parse(j.dump()));
    CHECK(back.to_json() == j);
    for (const auto& row : back.rows) {
      CHECK_FALSE(row.expected.is_null());
      CHECK_FALSE(row.computed.is_null());
    }
    json bad = j;
    bad["schema"] = "other/1";
    CHECK_THROWS_AS(VerificationReport::from_json(bad), ParseError);
    CHECK_THROWS_AS(VerificationReport::from_json(json::array()), ParseError);
  }

  TEST_CASE("cache") {
    auto dir = scratch_dir("cache");
    auto file = dir / "verdicts.jsonl";
    FiniteGroup g = atlas("D6");
    {
      ResultCache cache(file);
      CHECK(cache.size() == 0);
      cache.store("D6", {3, 0, 1}, json{{"status", "CAYLEY"}});
      CHECK(cache.lookup("D6", {0, 1, 3}));
      CHECK_FALSE(cache.lookup("D6", {0, 1}));
      CHECK_FALSE(cache.lookup("D8", {0, 1, 3}));
    }
    ResultCache reopened(file);
    CHECK(reopened.size() == 1);
    CHECK((*reopened.lookup("D6", {0, 1, 3}))["status"] == "CAYLEY");

    // records from another version are ignored
    {
      std::ofstream out(file, std::ios::app);
      out << json{{"group", "D6"}, {"S", {0, 2}}, {"version", "0.0.0-old"}, {"record", {{"status", "X"}}}}.dump()
          << "\nnot json\n";
    }
    ResultCache mixed(file);
    CHECK(mixed.size() == 1);
    CHECK_FALSE(mixed.lookup("D6", {0, 2}));
  }

  TEST_CASE("warm cache performs no new automorphism computations") {
    auto dir = scratch_dir("warm");
    ResultCache cache(dir / "v.jsonl");
    Classifier cold(&cache);
    auto first = target_small_table(cold);
    auto first_d = target_dihedral_cross_zp(cold, {3, 4}, {3, 5});
    CHECK(cold.aut_computations() == first.rows.size() + first_d.rows.size());
    CHECK(line_count(dir / "v.jsonl") == cold.aut_computations());

    ResultCache reloaded(dir / "v.jsonl");
    Classifier warm(&reloaded);
    auto second = target_small_table(warm);
    auto second_d = target_dihedral_cross_zp(warm, {3, 4}, {3, 5});
    CHECK(warm.aut_computations() == 0);
    CHECK(warm.cache_hits() == cold.aut_computations());
    REQUIRE(second.rows.size() == first.rows.size());
    for (std::size_t i = 0; i < first.rows.size(); ++i) {
      CHECK(second.rows[i].computed == first.rows[i].computed);
      CHECK(second.rows[i].status == first.rows[i].status);
    }
    for (std::size_t i = 0; i < first_d.rows.size(); ++i) CHECK(second_d.rows[i].computed == first_d.rows[i].computed);
  }

  TEST_CASE("dihedral-cross-zp target") {
    Classifier c;
    auto r = run_target(c, "dihedral-cross-zp");
    CHECK(r.rows.size() == 12);
    CHECK(r.passed());
    const ReportRow* row = find_row(r, "D8xZ3");
    REQUIRE(row);
    CHECK(row->computed["aut_order"] == "24");
    CHECK(row->computed["vertex_transitive"] == false);
    auto big = target_dihedral_cross_zp(c, {3}, {7});
    CHECK(big.rows.front().computed["four_cycles"]["1_0~b_1"] == 4);
    CHECK_THROWS_AS(target_dihedral_cross_zp(c, {2}, {3}), std::invalid_argument);
    CHECK_THROWS_AS(target_dihedral_cross_zp(c, {3}, {9}), std::invalid_argument);
    CHECK_THROWS_AS(target_dihedral_cross_zp(c, {100}, {11}), ScaleExceeded);
  }

  TEST_CASE("q8-cross-zp target") {
    Classifier c;
    auto r = target_q8_cross_zp(c, {5, 7, 11});
    CHECK(r.passed());
    CHECK(r.rows[1].computed["four_cycles"]["1_0"] == 2);
    CHECK(r.rows[1].computed["difference_set_size"] == 19);

    // at p = 3 the graph is vertex-transitive: c^2 = c^-1 collapses S^-1 S
    auto small = target_q8_cross_zp(c, {3});
    CHECK_FALSE(small.passed());
    CHECK(small.rows[0].computed["aut_order"] == "48");
    CHECK(small.rows[0].computed["status"] == "CAYLEY");
    CHECK(small.rows[0].computed["difference_set_size"] == 17);
    CHECK_THROWS_AS(target_q8_cross_zp(c, {251}), ScaleExceeded);
  }

  TEST_CASE("small-table target") {
    Classifier c;
    auto r = target_small_table(c);
    CHECK(r.rows.size() == 13);
    for (const auto& row : r.rows) {
      CAPTURE(row.group);
      CHECK(row.computed["status"] == "NOT_CAYLEY");
      if (row.computed["row"] == 8) {
        CHECK(row.status == RowStatus::Fail);
        CHECK(row.computed["vertex_transitive"] == true);
        CHECK(row.computed["reason"] == "NO_REGULAR_SUBGROUP");
      } else {
        CHECK(row.status == RowStatus::Pass);
      }
    }
  }

  TEST_CASE("scan") {
    Classifier c;
    auto z6 = scan(c, "Z6");
    CHECK(z6.passed());
    CHECK(z6.summary["total"] == 32);
    CHECK(z6.summary["cayley"] == 32);
    CHECK(z6.summary["connected"].get<std::size_t>() + z6.summary["disconnected"].get<std::size_t>() == 32);

    ScanOptions find;
    find.find_non_cayley = true;
    auto d12 = scan(c, "D12", find);
    REQUIRE(d12.summary.contains("witness"));
    CHECK(d12.rows.back().computed["status"] == "NOT_CAYLEY");
    CHECK(d12.rows.back().s == d12.summary["witness"]);

    ScanOptions conn;
    conn.connected_only = true;
    auto d8 = scan(c, "D8", conn);
    CHECK(d8.summary["cayley"].get<std::size_t>() + d8.summary["not_cayley"].get<std::size_t>() +
              d8.summary["unknown"].get<std::size_t>() ==
          d8.summary["connected"].get<std::size_t>());
    CHECK(d8.rows.size() == d8.summary["connected"].get<std::size_t>());

    ScanOptions bounded;
    bounded.max_size = 3;
    auto q8 = scan(c, "Q8", bounded);
    CHECK(q8.summary["total"] == 1 + 7 + 21);
    for (const auto& row : q8.rows) CHECK(atlas("Q8").parse_set(row.s).size() <= 3);

    ScanOptions reduced;
    reduced.orbit_reduce = true;
    auto z6r = scan(c, "Z6", reduced);
    CHECK(z6r.summary["total"].get<std::size_t>() < 32);
    CHECK(z6r.passed());

    CHECK_THROWS_AS(scan(c, "Z40"), ScaleExceeded);
    CHECK_THROWS_AS(scan(c, "nonsense"), UnknownName);
  }

  TEST_CASE("scan is independent of the worker count") {
    Classifier a, b;
    ScanOptions one, four;
    one.jobs = 1;
    four.jobs = 4;
    auto r1 = scan(a, "D10", one);
    auto r4 = scan(b, "D10", four);
    REQUIRE(r1.rows.size() == r4.rows.size());
    for (std::size_t i = 0; i < r1.rows.size(); ++i) {
      CHECK(r1.rows[i].s == r4.rows[i].s);
      CHECK(r1.rows[i].computed == r4.rows[i].computed);
    }
  }

  TEST_CASE("graph6 export") {
    auto dir = scratch_dir("export");
    Classifier c;
    ScanOptions options;
    options.export_graph6 = dir;
    options.max_size = 3;
    auto r = scan(c, "D8", options);
    std::ifstream g6(dir / "D8.g6");
    std::size_t n = 0;
    for (std::string line; std::getline(g6, line); ++n) CHECK(Graph::from_graph6(line).order() == 16);
    CHECK(n == r.rows.size());
    CHECK(line_count(dir / "D8.index.tsv") == n);
  }

  TEST_CASE("dihedral-threshold target") {
    Classifier c;
    auto r = target_dihedral_threshold(c);
    CHECK(r.passed());
    const ReportRow* d12 = find_row(r, "D12");
    REQUIRE(d12);
    CHECK(d12->computed.contains("witness"));
  }

  TEST_CASE("q8z2 scan agrees with the generic scan") {
    ResultCache cache;
    Classifier c(&cache);
    auto target = target_q8z2_scan(c);
    CHECK(target.passed());
    CHECK(target.summary["connected"] == kQ8Z2ConnectedGolden);
    CHECK(target.summary["disconnected"] == 800);
    const auto computed = c.aut_computations();
    ScanOptions conn;
    conn.connected_only = true;
    auto generic = scan(c, "Q8xZ2", conn);
    CHECK(c.aut_computations() == computed);
    CHECK(generic.summary["connected"] == target.summary["connected"]);
    CHECK(generic.summary["cayley"] == target.summary["cayley"]);
    CHECK(generic.summary["disconnected"] == target.summary["disconnected"]);
  }
}
