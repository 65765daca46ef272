#include "tess/pattern_tables.hpp"

#include <algorithm>

#include "tess/error.hpp"

namespace tess {

bool PatternFamily::contains(const Pattern& p) const {
  if (static_cast<int>(p.size()) != length()) return false;
  Pattern s = p;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (s[i] != fixed[i]) return false;
  if (!parametric) return true;
  int k = s.back();
  return k >= lo && (!hi || k <= *hi);
}

std::string PatternFamily::format() const {
  std::string out = "(";
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(fixed[i]);
  }
  if (parametric) {
    if (!fixed.empty()) out += ",";
    out += "k";
  }
  out += ")";
  if (parametric) {
    out += hi ? " " + std::to_string(lo) + "<=k<=" + std::to_string(*hi)
              : " k>=" + std::to_string(lo);
  }
  out += " : ";
  if (!parametric) {
    out += format_rational(constant_term);
  } else if (constant_term == 0) {
    out += "1/k";
  } else if (constant_term > 0) {
    out += format_rational(constant_term) + "+1/k";
  } else {
    out += "1/k-" + format_rational(-constant_term);
  }
  return out;
}

Q family_curvature(const PatternFamily& f, int k) {
  if (!f.parametric) return f.constant_term;
  if (k < f.lo || (f.hi && k > *f.hi))
    fail(errc::invalid_argument,
         "parameter " + std::to_string(k) + " outside family range");
  return f.constant_term + Q(1, k);
}

namespace {

// Extends the prefix (nondecreasing, entries >= 3) one slot at a time; when
// all but the last slot are placed, the final slot's admissible range follows
// from the sign constraint on 1 - n/2 + sum 1/a_i.
void extend(int n, std::vector<int>& prefix, const Q& partial, TableSign sign,
            std::vector<PatternFamily>& out) {
  if (static_cast<int>(prefix.size()) == n - 1) {
    Q c = 1 - Q(n, 2) + partial;
    int lo = prefix.back();
    if (sign == TableSign::positive) {
      if (c >= 0) {
        out.push_back({prefix, true, lo, std::nullopt, c});
      } else {
        // largest k with 1/k > -c, i.e. k < 1/(-c)
        Q inv = 1 / -c;
        BigInt f = floor_rational(inv);
        int hi = static_cast<int>(f) - (inv == f ? 1 : 0);
        if (hi >= lo) out.push_back({prefix, true, lo, hi, c});
      }
    } else {
      if (c < 0) {
        Q inv = 1 / -c;
        BigInt f = floor_rational(inv);
        if (inv == f && f >= lo) {
          std::vector<int> fixed = prefix;
          fixed.push_back(static_cast<int>(f));
          out.push_back({fixed, false, 0, std::nullopt, Q(0)});
        }
      }
      // c >= 0 with 1/k > 0 can never sum to zero
    }
    return;
  }
  int rest = n - static_cast<int>(prefix.size());
  for (int v = prefix.empty() ? 3 : prefix.back();; ++v) {
    // all remaining slots at v maximizes the final sum
    Q best = 1 - Q(n, 2) + partial + Q(rest, v);
    if (sign == TableSign::positive ? best <= 0 : best < 0) break;
    prefix.push_back(v);
    extend(n, prefix, partial + Q(1, v), sign, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PatternFamily> enumerate_families(TableSign sign) {
  std::vector<PatternFamily> out;
  for (int n = 3; n <= 6; ++n) {
    std::vector<int> prefix;
    extend(n, prefix, Q(0), sign, out);
  }
  std::sort(out.begin(), out.end(),
            [](const PatternFamily& a, const PatternFamily& b) {
              if (a.length() != b.length()) return a.length() < b.length();
              return a.fixed < b.fixed;
            });
  return out;
}

std::optional<PatternFamily> match_pattern(const Pattern& p) {
  Q phi = pattern_curvature(p);
  if (phi < 0) return std::nullopt;
  auto table =
      enumerate_families(phi > 0 ? TableSign::positive : TableSign::zero);
  for (const auto& f : table)
    if (f.contains(p)) return f;
  return std::nullopt;  // unreachable for valid patterns
}

}  // namespace tess
