#include "binconc/table.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace binconc;

namespace {

struct Printed {
  std::int64_t n;
  std::int64_t k;
  double value;
};

std::vector<Printed> load(const std::string& name) {
  std::ifstream in(std::string(BINCONC_TEST_DATA) + "/" + name);
  std::vector<Printed> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string n, k, v;
    std::getline(ss, n, ',');
    std::getline(ss, k, ',');
    std::getline(ss, v, ',');
    rows.push_back({std::stoll(n), std::stoll(k), std::stod(v)});
  }
  return rows;
}

}  // namespace

TEST(Golden, PrintedTablesWithinOneHundredth) {
  const auto rows = load("printed_tables.csv");
  ASSERT_EQ(rows.size(), 702U);
  for (const auto& r : rows) {
    EXPECT_NEAR(f(r.n, r.k).to_double(), r.value, 0.01) << "n=" << r.n << " k=" << r.k;
  }
}

TEST(Golden, PrintedTablesCoverFullPolicy) {
  TableSpec spec;
  spec.n_min = 3;
  spec.n_max = 38;
  spec.k_policy = KPolicy::Full;
  const auto rows = load("printed_tables.csv");
  const auto entries = table_entries(spec);
  ASSERT_EQ(entries.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(entries[i].n, rows[i].n);
    EXPECT_EQ(entries[i].k, rows[i].k);
  }
}

TEST(Golden, ThirtyNineList) {
  const auto rows = load("printed_n39.csv");
  ASSERT_EQ(rows.size(), 19U);
  for (const auto& r : rows) EXPECT_NEAR(f(39, r.k).to_double(), r.value, 5e-7) << "k=" << r.k;

  TableSpec spec;
  spec.n_min = spec.n_max = 39;
  spec.k_policy = KPolicy::Half;
  spec.digits = 6;
  const auto entries = table_entries(spec);
  ASSERT_EQ(entries.size(), 19U);
  EXPECT_EQ(entries[0].decimal, "0.372668");
  EXPECT_EQ(entries[1].decimal, "0.733642");
}

TEST(Table, SpecCells) {
  TableSpec t1;
  t1.n_min = 3;
  t1.n_max = 20;
  const auto md = render_table(t1);
  EXPECT_NE(md.find("| 1 | 0.44 | 0.42 |"), std::string::npos);

  TableSpec t2;
  t2.n_min = 21;
  t2.n_max = 38;
  for (const auto& e : table_entries(t2)) {
    if (e.n == 27 && e.k == 26) {
      EXPECT_EQ(e.decimal, "0.37");
    }
  }
  TableSpec half = t1;
  half.k_policy = KPolicy::Half;
  for (const auto& e : table_entries(half)) {
    if (e.n == 12 && e.k == 1) {
      EXPECT_EQ(e.decimal, "0.38");
    }
    EXPECT_LE(2 * e.k, e.n);
  }
}

TEST(Table, CsvSchemaRoundTrips) {
  TableSpec spec;
  spec.n_min = 4;
  spec.n_max = 5;
  spec.format = TableFormat::Csv;
  const std::string csv = render_table(spec);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,k,f_exact_num,f_exact_den,f_decimal");
  EXPECT_NE(csv.find("\n4,2,7,8,0.88\n"), std::string::npos);
}

TEST(Table, JsonAndLatex) {
  TableSpec spec;
  spec.n_min = spec.n_max = 4;
  spec.format = TableFormat::Json;
  const auto j = nlohmann::json::parse(render_table(spec));
  ASSERT_EQ(j.size(), 3U);
  EXPECT_EQ(j[1]["f_exact_num"], "7");
  EXPECT_EQ(j[1]["f_decimal"], "0.88");

  spec.format = TableFormat::Latex;
  const auto tex = render_table(spec);
  EXPECT_NE(tex.find("\\begin{tabular}"), std::string::npos);
  EXPECT_NE(tex.find("2 & 0.88 \\\\"), std::string::npos);
}

TEST(Table, DeterministicAndValidated) {
  TableSpec spec;
  EXPECT_EQ(render_table(spec), render_table(spec));
  spec.n_min = 0;
  EXPECT_THROW(render_table(spec), std::domain_error);
  spec.n_min = 5;
  spec.n_max = 4;
  EXPECT_THROW(render_table(spec), std::domain_error);
  spec.n_max = 6;
  spec.digits = 51;
  EXPECT_THROW(render_table(spec), std::domain_error);
}

TEST(Table, RegeneratesPrintedRangeQuickly) {
  TableSpec spec;
  spec.n_min = 3;
  spec.n_max = 39;
  const auto start = std::chrono::steady_clock::now();
  const auto out = render_table(spec);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_FALSE(out.empty());
  EXPECT_LT(secs, 60.0);
}
