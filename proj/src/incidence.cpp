#include "unitarea/incidence.hpp"

#include <algorithm>

#include "unitarea/error.hpp"

namespace unitarea {

std::vector<SpannedLine> spanned_lines(std::span<const Point> points) {
  require_distinct(points);
  std::unordered_map<Line, std::vector<std::size_t>, LineHash> table;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& members = table[line_through(points[i], points[j])];
      // Duplicates are removed after the scan.
      members.push_back(i);
      members.push_back(j);
    }
  }
  std::vector<SpannedLine> out;
  out.reserve(table.size());
  for (auto& [line, idx] : table) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    SpannedLine sl{line, {}};
    sl.members.reserve(idx.size());
    for (std::size_t i : idx) sl.members.push_back(points[i]);
    std::sort(sl.members.begin(), sl.members.end());
    out.push_back(std::move(sl));
  }
  std::sort(out.begin(), out.end(), [](const SpannedLine& l, const SpannedLine& m) { return l.line < m.line; });
  return out;
}

std::vector<SpannedLine> filter_rich(const std::vector<SpannedLine>& lines, std::size_t k) {
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  std::vector<SpannedLine> out;
  for (const SpannedLine& l : lines) {
    if (l.members.size() >= k) out.push_back(l);
  }
  return out;
}

std::vector<SpannedLine> rich_lines(std::span<const Point> points, std::size_t k) {
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  return filter_rich(spanned_lines(points), k);
}

std::vector<IncidencePairParam> build_incidence_set(const std::vector<SpannedLine>& rich) {
  std::vector<IncidencePairParam> q;
  for (const SpannedLine& l : rich) {
    if (l.line.is_vertical()) {
      throw Error(Errc::VerticalLinePresent, to_string(l.line) + " is vertical; shear the point set first");
    }
    for (const Point& p : l.members) q.push_back(to_param(l.line, p));
  }
  return q;
}

std::vector<IncidencePairParam> build_incidence_set(std::span<const Point> points, std::size_t k) {
  return build_incidence_set(rich_lines(points, k));
}

IncidenceStats incidence_stats(std::span<const Point> points, std::size_t k) {
  const auto rich = rich_lines(points, k);
  IncidenceStats st;
  st.n = points.size();
  st.k = k;
  st.m = rich.size();
  for (const SpannedLine& l : rich) st.N += l.members.size();
  const Integer n(static_cast<unsigned long>(st.n));
  const Integer kk(static_cast<unsigned long>(k));
  if (st.n > 0) {
    st.ratio_m = make_rational(Integer(static_cast<unsigned long>(st.m)) * kk * kk * kk, n * n);
    st.ratio_N = make_rational(Integer(static_cast<unsigned long>(st.N)) * kk * kk, n * n);
  }
  // Each rich line uses up at least C(k,2) of the C(n,2) point pairs.
  const Integer pairs_total = n * (n - 1) / 2;
  const Integer pairs_per_line = kk * (kk - 1) / 2;
  if (Integer(static_cast<unsigned long>(st.m)) * pairs_per_line > pairs_total) {
    throw Error(Errc::InvariantViolation, "m*C(k,2) exceeds C(n,2)");
  }
  return st;
}

LineIndex::LineIndex(std::span<const Point> points) : LineIndex(points, spanned_lines(points)) {}

LineIndex::LineIndex(std::span<const Point> points, const std::vector<SpannedLine>& lines)
    : points_(points.begin(), points.end()), lines_(lines) {
  sizes_.reserve(lines_.size() * 2);
  for (const SpannedLine& l : lines_) sizes_.emplace(l.line, l.members.size());
}

std::size_t LineIndex::count_on(const Line& l) const {
  if (auto it = sizes_.find(l); it != sizes_.end()) return it->second;
  // Not spanned: at most one point of S lies on it.
  for (const Point& p : points_) {
    if (l.contains(p)) return 1;
  }
  return 0;
}

bool LineIndex::is_rich(const Line& l, std::size_t k) const {
  if (k <= 1) return count_on(l) >= k;
  auto it = sizes_.find(l);
  return it != sizes_.end() && it->second >= k;
}

}  // namespace unitarea
