#include "braceblock/ybe.hpp"

#include "braceblock/parallel.hpp"

namespace braceblock {
namespace {

using Triple = std::array<Element, 3>;

CheckReport report(std::string name, std::size_t cases) {
  CheckReport r;
  r.check = std::move(name);
  r.cases = cases;
  return r;
}

void fail(CheckReport& r, Triple w, std::string detail) {
  r.passed = false;
  r.witness = w;
  r.detail = std::move(detail);
}

YbeMap ybe_family(const BinaryOpTable& dot, const BinaryOpTable& circ, bool left) {
  if (auto rep = verify_brace(dot, circ); !rep) {
    throw Error(ErrorKind::NotABrace, "(dot, circ) is not a brace: " + rep.detail);
  }
  const std::size_t n = dot.order();
  const auto dinv = dot.inverses();
  const auto cinv = circ.inverses();
  std::vector<std::pair<Element, Element>> images(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ea = static_cast<Element>(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto eb = static_cast<Element>(b);
      const Element ab = circ(ea, eb);
      const Element x = left ? dot(dinv[ea], ab) : dot(ab, dinv[ea]);
      images[a * n + b] = {x, circ(circ(cinv[x], ea), eb)};
    }
  }
  return YbeMap(n, std::move(images));
}

}  // namespace

YbeMap::YbeMap(std::size_t order, std::vector<std::pair<Element, Element>> images)
    : order_(order), images_(std::move(images)) {
  if (images_.size() != order_ * order_) {
    throw Error(ErrorKind::BadTable, "YBE map table has the wrong size");
  }
}

bool YbeMap::is_bijective() const {
  std::vector<char> hit(images_.size(), 0);
  for (const auto& [x, y] : images_) {
    if (x >= order_ || y >= order_) return false;
    auto& h = hit[x * order_ + y];
    if (h) return false;
    h = 1;
  }
  return true;
}

YbeMap YbeMap::flip(std::size_t n) {
  std::vector<std::pair<Element, Element>> images(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      images[a * n + b] = {static_cast<Element>(b), static_cast<Element>(a)};
    }
  }
  return YbeMap(n, std::move(images));
}

YbeMap YbeMap::identity(std::size_t n) {
  std::vector<std::pair<Element, Element>> images(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      images[a * n + b] = {static_cast<Element>(a), static_cast<Element>(b)};
    }
  }
  return YbeMap(n, std::move(images));
}

YbeMap ybe_map(const BinaryOpTable& dot, const BinaryOpTable& circ) {
  return ybe_family(dot, circ, true);
}

YbeMap ybe_inverse_map(const BinaryOpTable& dot, const BinaryOpTable& circ) {
  return ybe_family(dot, circ, false);
}

CheckReport check_braid(const YbeMap& r, int threads) {
  const std::size_t n = r.order();
  CheckReport out = report("braid", n * n * n);
  auto r12 = [&](const Triple& t) {
    auto [x, y] = r(t[0], t[1]);
    return Triple{x, y, t[2]};
  };
  auto r23 = [&](const Triple& t) {
    auto [x, y] = r(t[1], t[2]);
    return Triple{t[0], x, y};
  };
  auto hit = detail::first_hit<Triple>(n, threads, [&](std::size_t a) -> std::optional<Triple> {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const Triple t{static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c)};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) return t;
      }
    }
    return std::nullopt;
  });
  if (hit) {
    fail(out, *hit,
         "braid relation fails at (" + std::to_string((*hit)[0]) + "," +
             std::to_string((*hit)[1]) + "," + std::to_string((*hit)[2]) + ")");
  }
  return out;
}

CheckReport check_nondegenerate(const YbeMap& r) {
  const std::size_t n = r.order();
  CheckReport out = report("nondegenerate", 2 * n);
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n && out.passed; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const Element x = r(static_cast<Element>(a), static_cast<Element>(b)).first;
      if (seen[x]) {
        fail(out, {static_cast<Element>(a), static_cast<Element>(b), 0},
             "sigma_" + std::to_string(a) + " is not injective");
        break;
      }
      seen[x] = 1;
    }
  }
  for (std::size_t b = 0; b < n && out.passed; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      const Element y = r(static_cast<Element>(a), static_cast<Element>(b)).second;
      if (seen[y]) {
        fail(out, {static_cast<Element>(a), static_cast<Element>(b), 1},
             "tau_" + std::to_string(b) + " is not injective");
        break;
      }
      seen[y] = 1;
    }
  }
  return out;
}

CheckReport check_inverse_pair(const YbeMap& r, const YbeMap& r_prime) {
  const std::size_t n = r.order();
  CheckReport out = report("inverse_pair", n * n);
  if (r_prime.order() != n) {
    fail(out, {0, 0, 0}, "carrier sizes differ");
    return out;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ea = static_cast<Element>(a);
      const auto eb = static_cast<Element>(b);
      const std::pair<Element, Element> p{ea, eb};
      auto [x, y] = r(ea, eb);
      auto [u, v] = r_prime(ea, eb);
      if (r_prime(x, y) != p || r(u, v) != p) {
        fail(out, {ea, eb, 0}, "R' R or R R' moves (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
        return out;
      }
    }
  }
  return out;
}

bool is_involutive(const YbeMap& r) {
  const std::size_t n = r.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto [x, y] = r(static_cast<Element>(a), static_cast<Element>(b));
      if (r(x, y) != std::pair<Element, Element>{static_cast<Element>(a), static_cast<Element>(b)}) {
        return false;
      }
    }
  }
  return true;
}

CheckReport check_involutive(const YbeMap& r, const BinaryOpTable& dot) {
  CheckReport out = report("involutive", r.order() * r.order());
  const bool inv = is_involutive(r);
  const bool comm = dot.is_commutative();
  out.detail = std::string("R^2 = id: ") + (inv ? "yes" : "no") +
               ", dot commutative: " + (comm ? "yes" : "no");
  out.passed = inv == comm;
  return out;
}

}  // namespace braceblock
