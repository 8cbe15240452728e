#include "dp2/les.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "dp2/error.hpp"

namespace dp2 {

namespace {

// a + c * t_group, c in {-1, 0, 1}
struct AffineRank {
  std::int64_t a = 0;
  int c = 0;
  std::size_t group = 0;
};

struct Range {
  std::int64_t lo = 0;
  std::optional<std::int64_t> hi;
};

DimInterval evaluate(const AffineRank& r, const std::vector<Range>& groups) {
  if (r.c == 0) return {r.a, r.a};
  const Range& g = groups[r.group];
  if (r.c > 0) {
    DimInterval out{r.a + g.lo, std::nullopt};
    if (g.hi) out.hi = r.a + *g.hi;
    return out;
  }
  // c = -1 always has a finite upper bound on t from r >= 0
  return {r.a - *g.hi, r.a - g.lo};
}

}  // namespace

DimSequence DimSequence::parse(const std::string& text) {
  DimSequence seq;
  std::string field;
  auto flush = [&]() {
    if (field.empty()) throw ParseError("empty entry in sequence '" + text + "'");
    if (field == "?" || field == "x" || field == "y") {
      seq.entries.emplace_back(std::nullopt);
    } else {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || p != field.data() + field.size() || v < 0)
        throw ParseError("bad dimension '" + field + "' in sequence '" + text + "'");
      seq.entries.emplace_back(v);
    }
    field.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      flush();
    } else {
      field.push_back(ch);
    }
  }
  flush();
  return seq;
}

std::string DimSequence::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) s += ",";
    s += entries[k] ? std::to_string(*entries[k]) : "?";
  }
  return s;
}

std::string DimInterval::to_string() const {
  if (fixed()) return std::to_string(lo);
  return "[" + std::to_string(lo) + "," + (hi ? std::to_string(*hi) : "inf") + "]";
}

std::optional<std::int64_t> LesSolution::value(std::size_t k) const {
  if (k < entries.size() && entries[k].fixed()) return entries[k].lo;
  return std::nullopt;
}

LesSolution les_solve(const DimSequence& seq) {
  const std::size_t n = seq.entries.size();
  std::vector<Range> groups;
  std::vector<AffineRank> ranks(n + 1);  // r_0 = 0
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& d = seq.entries[i - 1];
    if (d) {
      if (*d < 0) throw Infeasible("negative dimension in sequence " + seq.to_string());
      ranks[i] = {*d - ranks[i - 1].a, -ranks[i - 1].c, ranks[i - 1].group};
    } else {
      groups.push_back({});
      ranks[i] = {0, 1, groups.size() - 1};
    }
  }

  auto infeasible = [&]() { return Infeasible("no rank assignment fits " + seq.to_string()); };
  auto clamp_lo = [&](std::size_t g, std::int64_t v) { groups[g].lo = std::max(groups[g].lo, v); };
  auto clamp_hi = [&](std::size_t g, std::int64_t v) { groups[g].hi = groups[g].hi ? std::min(*groups[g].hi, v) : v; };

  // r_n = 0
  const AffineRank& last = ranks[n];
  if (last.c == 0) {
    if (last.a != 0) throw infeasible();
  } else {
    const std::int64_t t = last.c > 0 ? -last.a : last.a;
    clamp_lo(last.group, t);
    clamp_hi(last.group, t);
  }
  // r_i >= 0
  for (const auto& r : ranks) {
    if (r.c == 0) {
      if (r.a < 0) throw infeasible();
    } else if (r.c > 0) {
      clamp_lo(r.group, -r.a);
    } else {
      clamp_hi(r.group, r.a);
    }
  }
  for (const auto& g : groups)
    if (g.hi && *g.hi < g.lo) throw infeasible();

  LesSolution sol;
  for (const auto& r : ranks) sol.ranks.push_back(evaluate(r, groups));
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& d = seq.entries[i - 1];
    if (d) {
      sol.entries.push_back({*d, *d});
      continue;
    }
    // r_{i-1} and r_i depend on different groups, so their ranges add.
    const DimInterval& left = sol.ranks[i - 1];
    const DimInterval& right = sol.ranks[i];
    DimInterval sum{left.lo + right.lo, std::nullopt};
    if (left.hi && right.hi) sum.hi = *left.hi + *right.hi;
    sol.entries.push_back(sum);
    if (!sum.fixed()) sol.status = LesStatus::Underdetermined;
  }
  return sol;
}

}  // namespace dp2
