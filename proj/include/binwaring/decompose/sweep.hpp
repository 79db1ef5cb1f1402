#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/decompose/report.hpp>

#include <functional>
#include <future>
#include <optional>
#include <string>
#include <vector>

namespace binwaring::decompose {

enum class Jump { None, Up, Down };

inline std::string to_string(Jump j) {
  switch (j) {
    case Jump::Up: return "up";
    case Jump::Down: return "down";
    default: return "none";
  }
}

/// Compares the limit's signature set with a grid point's: identical sets are
/// no jump; a limit set whose every member lies below some grid signature is
/// a downward jump; anything else is upward.
inline Jump classify_jump(const std::vector<Badge>& grid, const std::vector<Badge>& limit) {
  std::vector<Badge> g = grid, l = limit;
  std::sort(g.begin(), g.end());
  std::sort(l.begin(), l.end());
  if (g == l) return Jump::None;
  for (const auto& lb : l) {
    bool below = false;
    for (const auto& gb : g)
      if (precedes(lb, gb)) below = true;
    if (!below) return Jump::Up;
  }
  return Jump::Down;
}

struct SweepRow {
  std::string label;  // the parameter value, or "limit"
  std::optional<Rational> parameter;
  std::optional<BinaryForm> form;
  std::optional<SignatureReport> report;
  std::string error_kind, error;  // set when the row failed
  Jump jump = Jump::None;         // relative to the limit row
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::optional<SweepRow> limit;
};

using FormFamily = std::function<BinaryForm(const Rational&)>;

namespace detail {

inline SweepRow run_row(const std::function<BinaryForm()>& make, const SearchConfig& cfg) {
  SweepRow row;
  try {
    row.form = make();
    row.report = signature_report(*row.form, cfg);
  } catch (const Error& e) {
    row.error_kind = e.kind();
    row.error = e.what();
  } catch (const std::exception& e) {
    row.error_kind = "Error";
    row.error = e.what();
  }
  return row;
}

}  // namespace detail

/// Signature reports over a parameter grid plus an optional limit form; each
/// row is flagged with its jump relative to the limit. Rows are independent
/// and may run on `jobs` threads; the output is always in grid order.
inline SweepResult sweep(const FormFamily& family, const std::vector<Rational>& grid,
                         const std::optional<BinaryForm>& limit, const SearchConfig& cfg = {}, unsigned jobs = 1) {
  SweepResult out;
  out.rows.resize(grid.size());
  auto job = [&](std::size_t i) {
    SweepRow row = detail::run_row([&] { return family(grid[i]); }, cfg);
    row.label = to_text(grid[i]);
    row.parameter = grid[i];
    return row;
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) out.rows[i] = job(i);
  } else {
    for (std::size_t start = 0; start < grid.size(); start += jobs) {
      std::vector<std::future<SweepRow>> futs;
      for (std::size_t i = start; i < std::min(grid.size(), start + jobs); ++i)
        futs.push_back(std::async(std::launch::async, job, i));
      for (std::size_t k = 0; k < futs.size(); ++k) out.rows[start + k] = futs[k].get();
    }
  }
  if (limit) {
    out.limit = detail::run_row([&] { return *limit; }, cfg);
    out.limit->label = "limit";
    if (out.limit->report)
      for (auto& row : out.rows)
        if (row.report) row.jump = classify_jump(row.report->signatures, out.limit->report->signatures);
  }
  return out;
}

}  // namespace binwaring::decompose
