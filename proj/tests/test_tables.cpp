#include <doctest.h>

#include <algorithm>

#include "epcodes/errors.hpp"
#include "epcodes/tables.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

const RowVerdict* find_row(const TableReport& r, std::string_view label) {
  for (const auto& row : r.rows)
    if (row.label == label) return &row;
  return nullptr;
}

std::vector<const RowVerdict*> discrepancies(const TableReport& r) {
  std::vector<const RowVerdict*> out;
  for (const auto& row : r.rows)
    if (row.verdict == Verdict::Discrepancy) out.push_back(&row);
  return out;
}

}  // namespace

TEST_CASE("every fixture parses") {
  CHECK(table_ids() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(fixture_texts().size() == 10);
  for (int id : table_ids()) {
    const auto& t = paper_table(id);
    CHECK(t.id == id);
    CHECK_FALSE(t.caption.empty());
    CHECK((t.p == 2 || t.p == 3));
  }
  CHECK_THROWS_AS((void)paper_table(11), std::out_of_range);
  CHECK_THROWS_AS((void)verify_table(0), std::out_of_range);
}

TEST_CASE("fixture contents") {
  const auto& t1 = paper_table(1);
  CHECK(t1.kind == TableKind::LcdCount);
  REQUIRE(t1.counts.size() >= 6);
  CHECK(t1.counts[5].n == 6);
  CHECK(t1.counts[5].total == 34);

  const auto& t3 = paper_table(3);
  const auto row6 = std::find_if(t3.distances.begin(), t3.distances.end(), [](const auto& r) { return r.n == 6; });
  REQUIRE(row6 != t3.distances.end());
  CHECK(row6->cells[0] == 18u);
  CHECK(row6->cells[1] == 11u);
  CHECK(row6->cells[2] == 3u);
  CHECK(row6->cells[4] == 1u);

  const auto& t7 = paper_table(7);
  const auto n8 = std::find_if(t7.codes.begin(), t7.codes.end(), [](const auto& c) { return c.n == 8; });
  REQUIRE(n8 != t7.codes.end());
  CHECK(n8->label() == "n=8 #1");
  REQUIRE(n8->variants.size() == 1);
  CHECK(n8->variants[0].label == "odd-row-replaced");

  const auto& t8 = paper_table(8);
  CHECK(std::any_of(t8.codes.begin(), t8.codes.end(), [](const auto& c) { return c.n == 12 && c.d == 6; }));
}

TEST_CASE("fixture parse errors carry line numbers") {
  CHECK_THROWS_AS((void)parse_table_fixture("table 1\nkind nonsense\n"), ParseError);
  CHECK_THROWS_AS((void)parse_table_fixture("table 1\np 2\nkind lcd-count\ncount n=x 3\n"), ParseError);
  try {
    (void)parse_table_fixture("table 1\np 2\nkind mds-amds-lcd\ncode n=2 d=1 MDS\nr q\nend\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(std::string(e.what()).rfind("line 5, column 3: ", 0) == 0);
    CHECK(std::string(e.what()).find("line 2") == std::string::npos);
  }
}

TEST_CASE("table 5 is confirmed in full") {
  const auto r = verify_table(5);
  CHECK(r.count(Verdict::Discrepancy) == 0);
  CHECK(r.count(Verdict::Confirmed) > 20);
  CHECK(r.passes(true));
}

TEST_CASE("table 6 has one inconsistent row at n = 3") {
  const auto r = verify_table(6);
  const auto bad = discrepancies(r);
  REQUIRE(bad.size() == 2);
  CHECK(bad[0]->label == "n=3 #2");
  CHECK(bad[0]->detail.find("equivalent to n=3 #1") != std::string::npos);
  CHECK(bad[1]->label == "n=3 classification");
  CHECK(bad[1]->detail.find("[r 0 0 / 0 r r]") != std::string::npos);
  CHECK_FALSE(bad[0]->allowlisted);
  CHECK_FALSE(r.passes(false));
  for (const char* label : {"n=2 #1", "n=4 #1", "n=5 #11", "n=6 #13", "n=5 classification"}) {
    const auto* row = find_row(r, label);
    REQUIRE(row != nullptr);
    CHECK(row->verdict == Verdict::Confirmed);
  }
}

TEST_CASE("table 7 flags the printed length-8 matrix and confirms its variant") {
  const auto r = verify_table(7);
  const auto* printed = find_row(r, "n=8 #1");
  REQUIRE(printed != nullptr);
  CHECK(printed->verdict == Verdict::Discrepancy);
  CHECK(printed->allowlisted);
  CHECK(printed->detail.find("weight 1") != std::string::npos);

  const auto* variant = find_row(r, "n=8 #1 variant odd-row-replaced");
  REQUIRE(variant != nullptr);
  CHECK(variant->verdict == Verdict::Confirmed);
  CHECK(variant->detail.find("d=4, AMDS") != std::string::npos);

  const auto* cls = find_row(r, "n=8 classification");
  REQUIRE(cls != nullptr);
  CHECK(cls->verdict == Verdict::Confirmed);

  CHECK(r.passes(false));
  CHECK_FALSE(r.passes(true));
  CHECK(is_known_discrepancy(7, "n=8 #1"));
  CHECK_FALSE(is_known_discrepancy(6, "n=3 #2"));
}

TEST_CASE("tables 8, 9 and 10 are confirmed") {
  for (int id : {8, 9, 10}) {
    const auto r = verify_table(id);
    CAPTURE(id);
    CHECK(r.count(Verdict::Discrepancy) == 0);
    CHECK(r.passes(true));
  }
  const auto* n12 = find_row(verify_table(8), "n=12 #1");
  REQUIRE(n12 != nullptr);
  CHECK(n12->verdict == Verdict::Confirmed);
}

TEST_CASE("count tables at small limits") {
  VerifyOptions opts;
  opts.max_n = 4;
  for (int id : {1, 2, 3, 4}) {
    const auto r = verify_table(id, opts);
    CAPTURE(id);
    CHECK(r.count(Verdict::Discrepancy) == 0);
    CHECK(r.count(Verdict::Confirmed) == 4);
    CHECK(r.count(Verdict::Skipped) > 0);
  }
}

TEST_CASE("report text") {
  const std::string text = format_report(verify_table(9));
  CHECK(text.rfind("Table 9:", 0) == 0);
  CHECK(text.find("[confirmed]") != std::string::npos);
  CHECK(text.find("0 discrepancies") != std::string::npos);
}
