#include <cctype>
#include <limits>

#include "braceblock/maps.hpp"

namespace braceblock {

EndoWord::EndoWord(std::vector<WordTerm> terms) {
  for (auto& t : terms) {
    if (t.coeff != 0) terms_.push_back(std::move(t));
  }
}

EndoWord EndoWord::integer(const FiniteGroup& g, long long n) {
  if (n == 0) return {};
  return EndoWord({WordTerm{identity_map(g), n, "id"}});
}

EndoWord EndoWord::single(const GMap& endo, std::string name, long long coeff) {
  return EndoWord({WordTerm{endo, coeff, std::move(name)}});
}

Element EndoWord::operator()(const FiniteGroup& g, Element x) const {
  Element acc = kIdentity;
  for (const auto& t : terms_) acc = g.mul(acc, t.endo(g.pow(x, t.coeff)));
  return acc;
}

EndoWord EndoWord::operator+(const EndoWord& rhs) const {
  std::vector<WordTerm> out = terms_;
  out.insert(out.end(), rhs.terms_.begin(), rhs.terms_.end());
  return EndoWord(std::move(out));
}

EndoWord EndoWord::operator-() const {
  std::vector<WordTerm> out(terms_.rbegin(), terms_.rend());
  for (auto& t : out) t.coeff = -t.coeff;
  return EndoWord(std::move(out));
}

std::string EndoWord::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const long long mag = t.coeff < 0 ? -t.coeff : t.coeff;
    if (t.coeff < 0) {
      out += '-';
    } else if (i > 0) {
      out += '+';
    }
    if (t.name == "id") {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += t.name;
    } else {
      out += std::to_string(mag) + "*" + t.name;
    }
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(const FiniteGroup& g, std::string_view spec, const NameResolver& resolve)
      : g_(g), spec_(spec), resolve_(resolve) {}

  EndoWord parse() {
    std::vector<WordTerm> terms;
    skip_ws();
    if (at_end()) fail("empty word");
    long long sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    term(sign, terms);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      term(c == '-' ? -1 : 1, terms);
    }
    return EndoWord(std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= spec_.size(); }
  char peek() const { return spec_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    std::string token = at_end() ? "<end>" : std::string(1, spec_[pos_]);
    throw Error(ErrorKind::ParseError, "word '" + std::string(spec_) + "' at offset " +
                                           std::to_string(pos_) + " (token '" + token +
                                           "'): " + why);
  }

  static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }

  std::string name() {
    const std::size_t start = pos_;
    while (!at_end() && name_char(peek())) ++pos_;
    return std::string(spec_.substr(start, pos_ - start));
  }

  void term(long long sign, std::vector<WordTerm>& terms) {
    skip_ws();
    if (at_end()) fail("expected a term");
    long long coeff = 1;
    std::string nm;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ - start > 12) fail("coefficient too large");
      coeff = std::stoll(std::string(spec_.substr(start, pos_ - start)));
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !name_start(peek())) fail("expected a map name after '*'");
        nm = name();
      } else {
        nm = "id";
      }
    } else if (name_start(peek())) {
      nm = name();
    } else {
      fail("expected an integer or a map name");
    }
    coeff *= sign;
    if (coeff == 0) return;

    std::optional<GMap> endo;
    if (nm == "id") {
      endo = identity_map(g_);
    } else if (resolve_) {
      endo = resolve_(nm);
    }
    if (!endo) throw Error(ErrorKind::UnknownName, "no endomorphism named '" + nm + "'");
    if (!is_endomorphism(g_, *endo)) {
      throw Error(ErrorKind::NotEndomorphism, "'" + nm + "' is not an endomorphism");
    }
    terms.push_back(WordTerm{std::move(*endo), coeff, nm});
  }

  const FiniteGroup& g_;
  std::string_view spec_;
  const NameResolver& resolve_;
  std::size_t pos_ = 0;
};

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

EndoWord binomial_family(const FiniteGroup& g, const GMap& psi, std::string_view psi_name, int n,
                         int shift) {
  if (n < 0) throw Error(ErrorKind::BadParameters, "binomial word needs n >= 0");
  if (!is_abelian_map(g, psi)) {
    throw Error(ErrorKind::NotAbelian, std::string(psi_name) + " does not have abelian image");
  }
  std::vector<WordTerm> terms;
  GMap power = identity_map(g);
  for (int i = 0; i < n; ++i) {
    const long long c = (i % 2 == 0 ? 1 : -1) * binomial(n, i + shift);
    const std::string nm = i == 0 ? "id" : std::string(psi_name) + "^" + std::to_string(i);
    terms.push_back(WordTerm{power, c, nm});
    power = compose(psi, power);
  }
  return EndoWord(std::move(terms));
}

}  // namespace

EndoWord parse_word(const FiniteGroup& g, std::string_view spec, const NameResolver& resolve) {
  return WordParser(g, spec, resolve).parse();
}

Element eval_word(const FiniteGroup& g, const EndoWord& alpha, Element x) { return alpha(g, x); }

GMap psi_alpha_map(const FiniteGroup& g, const GMap& psi, const EndoWord& alpha) {
  GMap out{std::vector<Element>(g.order())};
  for (std::size_t x = 0; x < g.order(); ++x) out.images[x] = psi(alpha(g, static_cast<Element>(x)));
  return out;
}

EndoWord compose_word(const GMap& psi, std::string_view psi_name, const EndoWord& alpha) {
  std::vector<WordTerm> terms;
  for (const auto& t : alpha.terms()) {
    std::string nm = psi_name == "id" ? t.name
                     : t.name == "id" ? std::string(psi_name)
                                      : std::string(psi_name) + "." + t.name;
    terms.push_back(WordTerm{compose(psi, t.endo), t.coeff, std::move(nm)});
  }
  return EndoWord(std::move(terms));
}

EndoWord reverse_word(const EndoWord& alpha) {
  return EndoWord(std::vector<WordTerm>(alpha.terms().rbegin(), alpha.terms().rend()));
}

EndoWord binomial_word(const FiniteGroup& g, const GMap& psi, std::string_view psi_name, int n) {
  return binomial_family(g, psi, psi_name, n, 1);
}

EndoWord binomial_word_lower(const FiniteGroup& g, const GMap& psi, std::string_view psi_name,
                             int n) {
  return binomial_family(g, psi, psi_name, n, 0);
}

bool same_circle(const FiniteGroup& g, const GMap& psi, const EndoWord& alpha,
                 const EndoWord& beta) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    const Element a = psi(alpha(g, e));
    const Element b = psi(beta(g, e));
    if (!g.center().contains(g.mul(g.inv(a), b))) return false;
  }
  return true;
}

}  // namespace braceblock
