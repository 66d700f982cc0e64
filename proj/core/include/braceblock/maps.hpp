#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braceblock/gmap.hpp"
#include "braceblock/group.hpp"

namespace braceblock {

/// The unique endomorphism sending gens[i] to images[i], built by walking the
/// Cayley graph. Throws NotAHomomorphism when two paths to the same element
/// disagree, BadParameters when gens do not generate G.
GMap extend_from_generators(const FiniteGroup& g, std::span<const Element> gens,
                            std::span<const Element> images);

inline constexpr std::size_t kDefaultSearchBudget = 20'000'000;

/// All endomorphisms of G, lexicographic in the tuple of generator images.
/// Throws TooLarge when the candidate tuple count exceeds the budget.
std::vector<GMap> enumerate_endomorphisms(const FiniteGroup& g,
                                          std::size_t budget = kDefaultSearchBudget);

bool is_abelian_map(const FiniteGroup& g, const GMap& psi);
/// psi([G,G]) <= Z(G)
bool is_commutator_central(const FiniteGroup& g, const GMap& psi);
/// [psi(G), psi'(G)] <= Z(G)
bool images_commute_mod_center(const FiniteGroup& g, const GMap& psi, const GMap& psi_prime);

/// One signed term n*phi of a word; the name is used only for printing.
struct WordTerm {
  GMap endo;
  long long coeff = 1;
  std::string name;
};

/// An element of the free group on End(G), acting by
///   alpha(g) = phi_1(g^n_1) phi_2(g^n_2) ... phi_t(g^n_t).
/// The empty word is 0, the constant-identity map.
class EndoWord {
 public:
  EndoWord() = default;
  explicit EndoWord(std::vector<WordTerm> terms);

  static EndoWord zero() { return {}; }
  /// n * id
  static EndoWord integer(const FiniteGroup& g, long long n);
  static EndoWord single(const GMap& endo, std::string name, long long coeff = 1);

  const std::vector<WordTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Element operator()(const FiniteGroup& g, Element x) const;

  /// alpha + beta as concatenation.
  EndoWord operator+(const EndoWord& rhs) const;
  /// Group inverse in the free group: reverse and negate.
  EndoWord operator-() const;
  EndoWord operator-(const EndoWord& rhs) const { return *this + (-rhs); }

  /// Word-spec rendering, e.g. "f2+f3", "-1-f4", "3*f1-2*e5".
  std::string to_string() const;

 private:
  std::vector<WordTerm> terms_;
};

/// Resolves endomorphism names while parsing word specs.
using NameResolver = std::function<std::optional<GMap>(std::string_view)>;

/// Parses the word-spec mini-language
///   word := [sign] term (('+' | '-') term)*
///   term := int ['*' name] | name
/// A bare integer n stands for n*id. Throws ParseError naming the offending
/// token, UnknownName for unresolved names, NotEndomorphism if a resolved map
/// is not an endomorphism.
EndoWord parse_word(const FiniteGroup& g, std::string_view spec, const NameResolver& resolve);

Element eval_word(const FiniteGroup& g, const EndoWord& alpha, Element x);

/// g -> psi(alpha(g))
GMap psi_alpha_map(const FiniteGroup& g, const GMap& psi, const EndoWord& alpha);

/// Each term (phi, n) becomes (psi . phi, n), so evaluating the result equals
/// psi_alpha when psi is an endomorphism.
EndoWord compose_word(const GMap& psi, std::string_view psi_name, const EndoWord& alpha);

/// alpha* : terms in reverse order.
EndoWord reverse_word(const EndoWord& alpha);

/// alpha_n = sum_{i=0}^{n-1} (-1)^i C(n, i+1) psi^i, so that psi_{alpha_n}
/// equals 1 - (1 - psi)^n pointwise. Throws NotAbelian unless psi has abelian
/// image.
EndoWord binomial_word(const FiniteGroup& g, const GMap& psi, std::string_view psi_name, int n);

/// Same word with the coefficients C(n, i); kept for comparison against the
/// closed form in tests.
EndoWord binomial_word_lower(const FiniteGroup& g, const GMap& psi, std::string_view psi_name,
                             int n);

/// sigma -> 1 on [G,G], tau elsewhere. On symmetric groups this is the
/// sign-type map through A_n. Throws NotInvolution unless tau^2 = 1 and
/// NotAHomomorphism if the result is not an endomorphism.
GMap sign_map(const FiniteGroup& g, Element tau);

/// s -> 1, t -> t^n on a metacyclic catalog group.
GMap metacyclic_map(const FiniteGroup& g, int n);

/// A -> the identity matrix with row t (1-based) scaled by det A, on gl(2,q).
GMap det_row_map(const FiniteGroup& g, int row);

/// True iff psi_alpha(g)^-1 psi_beta(g) lies in Z(G) for every g.
bool same_circle(const FiniteGroup& g, const GMap& psi, const EndoWord& alpha,
                 const EndoWord& beta);

}  // namespace braceblock
