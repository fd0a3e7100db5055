#include "covariant/builtin_groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>

#include "covariant/errors.hpp"

namespace covariant {
namespace {

using Table = std::vector<std::vector<Element>>;

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterOutOfRange(message);
}

FiniteGroup cyclic(unsigned n) {
  require(n >= 1 && n <= 1024, "cyclic order must be in [1, 1024]; got " + std::to_string(n));
  Table t(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  for (unsigned a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (unsigned b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(t, std::move(labels), "Z" + std::to_string(n));
}

FiniteGroup dihedral(unsigned n) {
  require(n >= 1 && n <= 512, "dihedral parameter must be in [1, 512]; got " + std::to_string(n));
  const unsigned order = 2 * n;
  Table t(order, std::vector<Element>(order));
  std::vector<std::string> labels;
  auto rot = [](unsigned k) {
    return k == 0 ? std::string() : (k == 1 ? std::string("r") : "r" + std::to_string(k));
  };
  for (unsigned i = 0; i < order; ++i) {
    const unsigned k1 = i % n, e1 = i / n;
    std::string lbl = rot(k1) + (e1 ? "s" : "");
    labels.push_back(lbl.empty() ? "e" : lbl);
    for (unsigned j = 0; j < order; ++j) {
      const unsigned k2 = j % n, e2 = j / n;
      const unsigned k = e1 ? (k1 + n - k2) % n : (k1 + k2) % n;
      t[i][j] = ((e1 + e2) % 2) * n + k;
    }
  }
  return FiniteGroup::from_table(t, std::move(labels), "D" + std::to_string(n));
}

std::string cycle_label(const std::vector<unsigned>& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (unsigned i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += "(";
    for (unsigned j = i; !done[j]; j = p[j]) {
      done[j] = true;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

FiniteGroup symmetric(unsigned n) {
  require(n >= 1 && n <= 5, "symmetric degree must be in [1, 5]; got " + std::to_string(n));
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<unsigned>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  Table t(order, std::vector<Element>(order));
  std::vector<std::string> labels;
  std::vector<unsigned> composed(n);
  for (std::size_t a = 0; a < order; ++a) {
    labels.push_back(cycle_label(perms[a]));
    for (std::size_t b = 0; b < order; ++b) {
      for (unsigned i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(composed);
    }
  }
  return FiniteGroup::from_table(t, std::move(labels), "S" + std::to_string(n));
}

FiniteGroup quaternion8() {
  // unit u in {1,i,j,k} as 0..3; element index = 2*u + (negative ? 1 : 0).
  // unit_mul[u][v] = (sign, unit) of u*v.
  constexpr std::array<std::array<std::pair<int, unsigned>, 4>, 4> unit_mul{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  Table t(8, std::vector<Element>(8));
  for (unsigned a = 0; a < 8; ++a) {
    for (unsigned b = 0; b < 8; ++b) {
      auto [sign, unit] = unit_mul[a / 2][b / 2];
      if (a % 2) sign = -sign;
      if (b % 2) sign = -sign;
      t[a][b] = 2 * unit + (sign < 0 ? 1 : 0);
    }
  }
  return FiniteGroup::from_table(t, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
}

FiniteGroup heisenberg(unsigned p) {
  require(p == 2 || p == 3 || p == 5 || p == 7,
          "heisenberg_mod requires a prime p <= 7; got " + std::to_string(p));
  const unsigned order = p * p * p;
  Table t(order, std::vector<Element>(order));
  std::vector<std::string> labels;
  for (unsigned x = 0; x < order; ++x) {
    const unsigned a = x / (p * p), b = (x / p) % p, c = x % p;
    labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    for (unsigned y = 0; y < order; ++y) {
      const unsigned a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      t[x][y] = ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p;
    }
  }
  return FiniteGroup::from_table(t, std::move(labels), "H" + std::to_string(p));
}

unsigned parse_uint(std::string_view text, std::string_view selector) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw UnknownFamily("cannot parse group selector '" + std::string(selector) + "'");
  }
  return value;
}

FiniteGroup parse_factor(std::string_view s) {
  if (s == "trivial") return cyclic(1).renamed("trivial");
  if (s == "Q8") return quaternion8();
  if (auto colon = s.find(':'); colon != std::string_view::npos) {
    return builtin_group(s.substr(0, colon), parse_uint(s.substr(colon + 1), s));
  }
  if (s.size() < 2) throw UnknownFamily("unknown group selector '" + std::string(s) + "'");
  const unsigned n = parse_uint(s.substr(1), s);
  switch (s.front()) {
    case 'Z':
    case 'C':
      return cyclic(n);
    case 'D':
      return dihedral(n);
    case 'S':
      return symmetric(n);
    case 'H':
      return heisenberg(n);
    default:
      throw UnknownFamily("unknown group selector '" + std::string(s) + "'");
  }
}

}  // namespace

FiniteGroup builtin_group(GroupFamily family, unsigned parameter) {
  switch (family) {
    case GroupFamily::cyclic:
      return cyclic(parameter);
    case GroupFamily::dihedral:
      return dihedral(parameter);
    case GroupFamily::symmetric:
      return symmetric(parameter);
    case GroupFamily::quaternion8:
      require(parameter == 8, "quaternion8 takes parameter 8; got " + std::to_string(parameter));
      return quaternion8();
    case GroupFamily::heisenberg:
      return heisenberg(parameter);
  }
  throw UnknownFamily("unknown group family");
}

FiniteGroup builtin_group(std::string_view family, unsigned parameter) {
  if (family == "cyclic") return builtin_group(GroupFamily::cyclic, parameter);
  if (family == "dihedral") return builtin_group(GroupFamily::dihedral, parameter);
  if (family == "symmetric") return builtin_group(GroupFamily::symmetric, parameter);
  if (family == "quaternion8" || family == "quaternion") {
    return builtin_group(GroupFamily::quaternion8, parameter);
  }
  if (family == "heisenberg_mod" || family == "heisenberg") {
    return builtin_group(GroupFamily::heisenberg, parameter);
  }
  throw UnknownFamily("unknown group family '" + std::string(family) + "'");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order(), m = b.order();
  Table t(n * m, std::vector<Element>(n * m));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n * m; ++x) {
    const auto x1 = static_cast<Element>(x / m), x2 = static_cast<Element>(x % m);
    labels.push_back("(" + a.label(x1) + "," + b.label(x2) + ")");
    for (std::size_t y = 0; y < n * m; ++y) {
      const auto y1 = static_cast<Element>(y / m), y2 = static_cast<Element>(y % m);
      t[x][y] = static_cast<Element>(a.product(x1, y1) * m + b.product(x2, y2));
    }
  }
  return FiniteGroup::from_table(t, std::move(labels), a.name() + "x" + b.name());
}

FiniteGroup parse_group_selector(std::string_view selector) {
  if (selector.empty()) throw UnknownFamily("empty group selector");
  std::vector<std::string_view> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= selector.size(); ++i) {
    // 'x' separates factors; no factor name contains a lowercase x.
    if (i == selector.size() || selector[i] == 'x') {
      factors.push_back(selector.substr(start, i - start));
      start = i + 1;
    }
  }
  FiniteGroup g = parse_factor(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) {
    FiniteGroup h = parse_factor(factors[i]);
    if (g.order() * h.order() > 4096) {
      throw ParameterOutOfRange("direct product '" + std::string(selector) + "' exceeds order 4096");
    }
    g = direct_product(g, h);
  }
  return g;
}

std::vector<std::string> builtin_catalogue() {
  return {
      "Z<n>    cyclic group of order n (1 <= n <= 1024)",
      "D<n>    dihedral group of order 2n (1 <= n <= 512)",
      "S<n>    symmetric group on n points (1 <= n <= 5)",
      "Q8      quaternion group of order 8",
      "H<p>    Heisenberg group mod p, order p^3 (p in {2,3,5,7})",
      "AxB     direct product, e.g. Z2xZ2 or S3xZ2",
      "trivial the group of order 1",
  };
}

std::vector<std::string> standard_zoo() {
  return {"Z2", "Z4", "Z6", "Z2xZ2", "S3", "D4", "Q8", "H3"};
}

}  // namespace covariant
