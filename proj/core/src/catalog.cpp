#include "braceblock/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <numeric>

namespace braceblock {
namespace {

// ---- spec parsing -------------------------------------------------------

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, "group spec '" + std::string(text_) + "' at offset " +
                                           std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a group name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too long");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<int> int_args(std::size_t count) {
    if (!eat('(')) fail("expected '('");
    std::vector<int> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0 && !eat(',')) fail("expected ','");
      out.push_back(integer());
    }
    if (!eat(')')) fail("expected ')'");
    return out;
  }

  GroupSpec parse_spec() {
    const std::string name = ident();
    if (name == "quaternion8") return GroupSpec::quaternion8();
    if (name == "cyclic") return {GroupSpec::Kind::Cyclic, int_args(1), {}};
    if (name == "dihedral") return {GroupSpec::Kind::Dihedral, int_args(1), {}};
    if (name == "symmetric") return {GroupSpec::Kind::Symmetric, int_args(1), {}};
    if (name == "metacyclic") return {GroupSpec::Kind::Metacyclic, int_args(3), {}};
    if (name == "gl") return {GroupSpec::Kind::GL, int_args(2), {}};
    if (name == "sl") return {GroupSpec::Kind::SL, int_args(2), {}};
    if (name == "direct_product") {
      if (!eat('(')) fail("expected '('");
      std::vector<GroupSpec> factors{parse_spec()};
      while (eat(',')) factors.push_back(parse_spec());
      if (!eat(')')) fail("expected ')'");
      return GroupSpec::direct_product(std::move(factors));
    }
    fail("unknown group '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---- constructors -------------------------------------------------------

void require_order(long long order) {
  if (order > static_cast<long long>(kMaxOrder)) {
    throw Error(ErrorKind::TooLarge,
                "order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
  }
}

std::string power_name(const std::string& letter, int exponent) {
  if (exponent == 0) return "";
  if (exponent == 1) return letter;
  return letter + std::to_string(exponent);
}

std::string monomial(std::string head, std::string tail) {
  std::string s = std::move(head) + std::move(tail);
  return s.empty() ? "1" : s;
}

int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

FiniteGroup cyclic_group(int n, const std::string& name) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "cyclic(n) needs n >= 1");
  require_order(n);
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = monomial(power_name("x", i), "");
    for (int j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  std::vector<Element> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup::from_flat(n, std::move(table), std::move(names), name, gens);
}

FiniteGroup dihedral_group(int n, const std::string& name) {
  if (n < 2) throw Error(ErrorKind::BadParameters, "dihedral(n) needs n >= 2");
  require_order(2LL * n);
  const int order = 2 * n;
  auto index = [n](int i, int j) { return i + n * j; };
  std::vector<Element> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> names(order);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < n; ++i) {
      names[index(i, j)] = monomial(power_name("r", i), power_name("s", j));
      for (int l = 0; l < 2; ++l) {
        for (int k = 0; k < n; ++k) {
          const int rot = mod(i + (j == 0 ? k : -k), n);
          table[index(i, j) * order + index(k, l)] = static_cast<Element>(index(rot, (j + l) % 2));
        }
      }
    }
  }
  return FiniteGroup::from_flat(order, std::move(table), std::move(names), name,
                                {static_cast<Element>(index(1, 0)),
                                 static_cast<Element>(index(0, 1))});
}

FiniteGroup quaternion_group(const std::string& name) {
  // a^i b^j at index i + 4j, with b a = a^-1 b and b^2 = a^2.
  std::vector<Element> table(64);
  std::vector<std::string> names(8);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 4; ++i) {
      names[i + 4 * j] = monomial(power_name("a", i), power_name("b", j));
      for (int l = 0; l < 2; ++l) {
        for (int k = 0; k < 4; ++k) {
          int a_exp = i + (j == 0 ? k : -k);
          int b_exp = j + l;
          if (b_exp == 2) {
            a_exp += 2;
            b_exp = 0;
          }
          table[(i + 4 * j) * 8 + (k + 4 * l)] = static_cast<Element>(mod(a_exp, 4) + 4 * b_exp);
        }
      }
    }
  }
  return FiniteGroup::from_flat(8, std::move(table), std::move(names), name, {1, 4});
}

std::string cycle_name(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::string out;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += '(';
    for (int x = start; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

FiniteGroup symmetric_group(int n, const std::string& name) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "symmetric(n) needs n >= 1");
  long long order = 1;
  for (int i = 2; i <= n; ++i) {
    order *= i;
    require_order(order);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);

  const std::size_t m = perms.size();
  std::vector<Element> table(m * m);
  std::vector<std::string> names(m);
  std::vector<int> prod(n);
  for (std::size_t a = 0; a < m; ++a) {
    names[a] = cycle_name(perms[a]);
    for (std::size_t b = 0; b < m; ++b) {
      for (int x = 0; x < n; ++x) prod[x] = perms[a][perms[b][x]];
      table[a * m + b] = index.at(prod);
    }
  }
  std::vector<Element> gens;
  if (n >= 2) {
    std::vector<int> transposition(n), cycle(n);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (int x = 0; x < n; ++x) cycle[x] = (x + 1) % n;
    gens.push_back(index.at(transposition));
    if (n > 2) gens.push_back(index.at(cycle));
  }
  return FiniteGroup::from_flat(m, std::move(table), std::move(names), name, gens);
}

long long power_mod(long long base, long long exp, long long m) {
  long long r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

FiniteGroup metacyclic_group(int p, int q, int d, const std::string& name) {
  if (p < 2 || q < 2) throw Error(ErrorKind::BadParameters, "metacyclic(p,q,d) needs p, q >= 2");
  require_order(static_cast<long long>(p) * q);
  const int dd = mod(d, p);
  if (std::gcd(dd, p) != 1 || power_mod(dd, q, p) != 1) {
    throw Error(ErrorKind::BadParameters, "metacyclic(" + std::to_string(p) + "," +
                                              std::to_string(q) + "," + std::to_string(d) +
                                              "): d^q is not 1 mod p");
  }
  if (dd == 1 % p) {
    throw Error(ErrorKind::BadParameters, "metacyclic: d = 1 mod p gives an abelian group");
  }
  const int order = p * q;
  // t^j s^k = s^(k d^j) t^j
  std::vector<long long> dpow(q);
  for (int j = 0; j < q; ++j) dpow[j] = power_mod(dd, j, p);
  std::vector<Element> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> names(order);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      names[i * q + j] = monomial(power_name("s", i), power_name("t", j));
      for (int k = 0; k < p; ++k) {
        for (int l = 0; l < q; ++l) {
          const int s_exp = mod(i + k * dpow[j], p);
          const int t_exp = (j + l) % q;
          table[(i * q + j) * order + (k * q + l)] = static_cast<Element>(s_exp * q + t_exp);
        }
      }
    }
  }
  return FiniteGroup::from_flat(order, std::move(table), std::move(names), name,
                                {static_cast<Element>(q), static_cast<Element>(1)});
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

FiniteGroup matrix_group(int n, int q, bool special, const std::string& name) {
  if (n != 2) throw Error(ErrorKind::BadParameters, "matrix groups are limited to n = 2");
  if (!is_prime(q)) throw Error(ErrorKind::BadParameters, "field size must be prime");
  auto det = [q](const Matrix2& m) { return mod(m[0] * m[3] - m[1] * m[2], q); };
  const Matrix2 identity{1, 0, 0, 1};

  std::vector<Matrix2> elems{identity};
  Matrix2 m{};
  for (m[0] = 0; m[0] < q; ++m[0]) {
    for (m[1] = 0; m[1] < q; ++m[1]) {
      for (m[2] = 0; m[2] < q; ++m[2]) {
        for (m[3] = 0; m[3] < q; ++m[3]) {
          const int d = det(m);
          if (d == 0 || (special && d != 1) || m == identity) continue;
          elems.push_back(m);
          require_order(static_cast<long long>(elems.size()));
        }
      }
    }
  }
  std::map<Matrix2, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);

  const std::size_t order = elems.size();
  std::vector<Element> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    names[a] = matrix_name(elems[a]);
    const Matrix2& x = elems[a];
    for (std::size_t b = 0; b < order; ++b) {
      const Matrix2& y = elems[b];
      Matrix2 p{mod(x[0] * y[0] + x[1] * y[2], q), mod(x[0] * y[1] + x[1] * y[3], q),
                mod(x[2] * y[0] + x[3] * y[2], q), mod(x[2] * y[1] + x[3] * y[3], q)};
      table[a * order + b] = index.at(p);
    }
  }
  return FiniteGroup::from_flat(order, std::move(table), std::move(names), name);
}

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors, const std::string& name) {
  if (factors.empty()) throw Error(ErrorKind::BadParameters, "direct_product needs factors");
  long long order = 1;
  for (const auto& f : factors) {
    order *= static_cast<long long>(f.order());
    require_order(order);
  }
  // Mixed radix with the last factor fastest.
  const std::size_t n = static_cast<std::size_t>(order);
  std::vector<std::vector<Element>> coords(n, std::vector<Element>(factors.size()));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t f = factors.size(); f-- > 0;) {
      coords[x][f] = static_cast<Element>(rest % factors[f].order());
      rest /= factors[f].order();
    }
  }
  auto encode = [&](const std::vector<Element>& c) {
    std::size_t x = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) x = x * factors[f].order() + c[f];
    return static_cast<Element>(x);
  };
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  std::vector<Element> c(factors.size());
  for (std::size_t a = 0; a < n; ++a) {
    std::string nm = "(";
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f > 0) nm += ",";
      nm += factors[f].element_name(coords[a][f]);
    }
    names[a] = nm + ")";
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t f = 0; f < factors.size(); ++f) {
        c[f] = factors[f].mul(coords[a][f], coords[b][f]);
      }
      table[a * n + b] = encode(c);
    }
  }
  return FiniteGroup::from_flat(n, std::move(table), std::move(names), name);
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) { return SpecParser(text).parse_all(); }

std::string GroupSpec::to_string() const {
  auto args = [this] {
    std::string s = "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i > 0) s += ",";
      s += std::to_string(params[i]);
    }
    return s + ")";
  };
  switch (kind) {
    case Kind::Cyclic: return "cyclic" + args();
    case Kind::Dihedral: return "dihedral" + args();
    case Kind::Quaternion8: return "quaternion8";
    case Kind::Symmetric: return "symmetric" + args();
    case Kind::Metacyclic: return "metacyclic" + args();
    case Kind::GL: return "gl" + args();
    case Kind::SL: return "sl" + args();
    case Kind::DirectProduct: {
      std::string s = "direct_product(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) s += ",";
        s += factors[i].to_string();
      }
      return s + ")";
    }
  }
  return {};
}

FiniteGroup make_catalog_group(const GroupSpec& spec) {
  const std::string name = spec.to_string();
  auto param = [&](std::size_t i) {
    if (i >= spec.params.size()) throw Error(ErrorKind::BadParameters, name + ": missing parameter");
    return spec.params[i];
  };
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return cyclic_group(param(0), name);
    case GroupSpec::Kind::Dihedral: return dihedral_group(param(0), name);
    case GroupSpec::Kind::Quaternion8: return quaternion_group(name);
    case GroupSpec::Kind::Symmetric: return symmetric_group(param(0), name);
    case GroupSpec::Kind::Metacyclic: return metacyclic_group(param(0), param(1), param(2), name);
    case GroupSpec::Kind::GL: return matrix_group(param(0), param(1), false, name);
    case GroupSpec::Kind::SL: return matrix_group(param(0), param(1), true, name);
    case GroupSpec::Kind::DirectProduct: {
      std::vector<FiniteGroup> fs;
      for (const auto& f : spec.factors) fs.push_back(make_catalog_group(f));
      return direct_product(fs, name);
    }
  }
  throw Error(ErrorKind::BadParameters, "unknown group kind");
}

FiniteGroup make_catalog_group(std::string_view spec) {
  return make_catalog_group(GroupSpec::parse(spec));
}

std::optional<int> default_metacyclic_root(int p, int q) {
  for (int d = 2; d < p; ++d) {
    if (std::gcd(d, p) == 1 && power_mod(d, q, p) == 1) return d;
  }
  return std::nullopt;
}

std::string matrix_name(const Matrix2& m) {
  return "[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + ";" + std::to_string(m[2]) +
         "," + std::to_string(m[3]) + "]";
}

std::optional<Matrix2> matrix_of(const FiniteGroup& g, Element x) {
  const std::string& s = g.element_name(x);
  Matrix2 m{};
  if (std::sscanf(s.c_str(), "[%d,%d;%d,%d]", &m[0], &m[1], &m[2], &m[3]) != 4) {
    return std::nullopt;
  }
  return m;
}

}  // namespace braceblock
