#include "tess/rational.hpp"

#include <cctype>

#include "tess/error.hpp"

namespace tess {

std::string format_rational(const Q& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Q parse_rational(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) fail(errc::malformed_input, "not a rational: '" + s + "'");
      return Q(BigInt(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || BigInt(den) == 0)
      fail(errc::malformed_input, "not a rational: '" + s + "'");
    return Q(BigInt(num), BigInt(den));
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::malformed_input, "not a rational: '" + s + "'");
  }
}

BigInt floor_rational(const Q& q) {
  BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;
  if (quot * den != num && num < 0) --quot;
  return quot;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

const char* to_string(errc c) {
  switch (c) {
    case errc::malformed_input: return "malformed-input";
    case errc::non_spherical_embedding: return "non-spherical-embedding";
    case errc::invalid_argument: return "invalid-argument";
    case errc::incomplete_pattern: return "incomplete-pattern";
    case errc::not_nonnegatively_curved: return "not-nonnegatively-curved";
    case errc::incompatible_boundaries: return "incompatible-boundaries";
    case errc::non_simple_result: return "non-simple-result";
    case errc::not_prismlike_structure: return "not-prismlike-structure";
    case errc::undefined_for_flat: return "undefined-for-flat";
  }
  return "unknown-error";
}

}  // namespace tess
