#pragma once

#include "binconc/concentration.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace binconc {

enum class KPolicy { Half, Full };
enum class TableFormat { Csv, Markdown, Latex, Json };

/// Grid of f_n(k) values. `Half` lists k = 1..floor(n/2), `Full` lists
/// k = 1..n-1; the endpoints k = 0, n are always 1 and are not tabulated.
struct TableSpec {
  std::int64_t n_min = 3;
  std::int64_t n_max = 20;
  KPolicy k_policy = KPolicy::Full;
  int digits = 2;
  TableFormat format = TableFormat::Markdown;
  Rounding rounding = Rounding::HalfEven;

  void validate() const {
    if (n_min < 1) throw std::domain_error("table: n_min must be >= 1");
    if (n_min > n_max) throw std::domain_error("table: n_min must not exceed n_max");
    if (digits < 1 || digits > 50) throw std::domain_error("table: digits must be in [1, 50]");
  }

  std::int64_t k_max(std::int64_t n) const { return k_policy == KPolicy::Half ? n / 2 : n - 1; }
};

struct TableEntry {
  std::int64_t n = 0;
  std::int64_t k = 0;
  ExactProb value;
  std::string decimal;
};

/// Entries ordered by n, then k.
inline std::vector<TableEntry> table_entries(const TableSpec& spec) {
  spec.validate();
  std::vector<TableEntry> out;
  for (std::int64_t n = spec.n_min; n <= spec.n_max; ++n) {
    for (std::int64_t k = 1; k <= spec.k_max(n); ++k) {
      ExactProb v = f(n, k);
      std::string d = to_decimal(v, spec.digits, spec.rounding);
      out.push_back({n, k, std::move(v), std::move(d)});
    }
  }
  return out;
}

namespace detail {

inline std::string render_csv(const std::vector<TableEntry>& entries) {
  std::ostringstream out;
  out << "n,k,f_exact_num,f_exact_den,f_decimal\n";
  for (const auto& e : entries) {
    out << e.n << ',' << e.k << ',' << e.value.num() << ',' << e.value.den() << ',' << e.decimal << '\n';
  }
  return out.str();
}

inline std::string render_json(const std::vector<TableEntry>& entries) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["n"] = e.n;
    j["k"] = e.k;
    j["f_exact_num"] = e.value.num().str();
    j["f_exact_den"] = e.value.den().str();
    j["f_decimal"] = e.decimal;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

// Rows k, columns n, blank where k is outside the policy for that n.
struct Grid {
  std::vector<std::int64_t> columns;
  std::int64_t rows = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, std::string> cells;  // (k, n)
};

inline Grid to_grid(const TableSpec& spec, const std::vector<TableEntry>& entries) {
  Grid g;
  for (std::int64_t n = spec.n_min; n <= spec.n_max; ++n) g.columns.push_back(n);
  for (const auto& e : entries) {
    g.rows = std::max(g.rows, e.k);
    g.cells[{e.k, e.n}] = e.decimal;
  }
  return g;
}

inline std::string cell(const Grid& g, std::int64_t k, std::int64_t n) {
  const auto it = g.cells.find({k, n});
  return it == g.cells.end() ? std::string() : it->second;
}

inline std::string render_markdown(const Grid& g) {
  std::ostringstream out;
  out << "| k \\ n |";
  for (auto n : g.columns) out << ' ' << n << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < g.columns.size(); ++i) out << "---|";
  out << '\n';
  for (std::int64_t k = 1; k <= g.rows; ++k) {
    out << "| " << k << " |";
    for (auto n : g.columns) {
      const std::string c = cell(g, k, n);
      out << (c.empty() ? " |" : ' ' + c + " |");
    }
    out << '\n';
  }
  return out.str();
}

inline std::string render_latex(const Grid& g) {
  std::ostringstream out;
  out << "\\begin{tabular}{|l|";
  for (std::size_t i = 0; i < g.columns.size(); ++i) out << "l|";
  out << "}\n\\hline\n$k \\backslash n$";
  for (auto n : g.columns) out << " & " << n;
  out << " \\\\\n\\hline\n";
  for (std::int64_t k = 1; k <= g.rows; ++k) {
    out << k;
    for (auto n : g.columns) out << " & " << cell(g, k, n);
    out << " \\\\\n\\hline\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

}  // namespace detail

/// Deterministic rendering of the table described by `spec`.
inline std::string render_table(const TableSpec& spec) {
  const auto entries = table_entries(spec);
  switch (spec.format) {
    case TableFormat::Csv: return detail::render_csv(entries);
    case TableFormat::Json: return detail::render_json(entries);
    case TableFormat::Markdown: return detail::render_markdown(detail::to_grid(spec, entries));
    case TableFormat::Latex: return detail::render_latex(detail::to_grid(spec, entries));
  }
  return {};
}

}  // namespace binconc
