/**
 * @file engine.hpp
 * @brief The algebra U(D_red, ℓ) in triangular normal form U⁻ ⊗ U⁺ ⊗ kΓ.
 *
 * U⁺ is generated by E_i, U⁻ by F_i; both are presented by braided Serre
 * relations. Graded slices are built lazily and cached per degree. Letters
 * of words are 0-based vertex indices.
 */
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/datum.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

enum class Side { Plus, Minus };

using Word = std::vector<std::uint8_t>;
/// Linear combination of words in the free algebra on E_i (Plus) or F_i (Minus).
using FreeElement = std::map<Word, Scalar>;

DegreeVector word_degree(const Word& w, std::size_t theta);
/// "F1F2F1" with 1-based letters; "1" for the empty word.
std::string word_to_string(const Word& w, Side side);
std::string free_element_to_string(const FreeElement& x, Side side, const ParameterSpace& params);

/// All words of degree alpha in ascending lexicographic order.
std::vector<Word> words_of_degree(const DegreeVector& alpha);

struct SerreGenerator {
  std::size_t i = 0, j = 0;
  DegreeVector degree;
  FreeElement element;
};

/// Degree-α piece of U⁺ or U⁻.
struct GradedSlice {
  DegreeVector alpha;
  std::vector<Word> words;
  std::vector<Word> canonical;
  std::map<Word, std::size_t> word_index;
  std::map<Word, std::size_t> canonical_index;
  /// reduction[k] expresses words[k] in canonical coordinates.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> reduction;
  std::size_t ideal_rank = 0;
  /// Dimension pinned by the nondegenerate pairing; false means the Serre
  /// presentation was reduced by exact elimination only.
  bool certified = false;

  std::size_t dim() const { return canonical.size(); }
};

struct AlgebraTerm {
  Word f;  ///< canonical U⁻ word
  Word e;  ///< canonical U⁺ word
  GroupElement g;
  friend auto operator<=>(const AlgebraTerm&, const AlgebraTerm&) = default;
  friend bool operator==(const AlgebraTerm&, const AlgebraTerm&) = default;
};

/// Σ c · F_f E_e g with canonical words; zero coefficients are never stored.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement term(AlgebraTerm t, Scalar coefficient = Scalar(1));

  const std::map<AlgebraTerm, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const AlgebraTerm& t, const Scalar& coefficient);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement scaled(const Scalar& s) const;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  std::string to_string(const ParameterSpace& params) const;

 private:
  std::map<AlgebraTerm, Scalar> terms_;
};

/// Element of U ⊗ U as a sum of pure tensors of normal-form terms.
class TensorElement {
 public:
  static TensorElement pure(const AlgebraElement& a, const AlgebraElement& b);
  const std::map<std::pair<AlgebraTerm, AlgebraTerm>, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const AlgebraTerm& a, const AlgebraTerm& b, const Scalar& coefficient);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  std::map<std::pair<AlgebraTerm, AlgebraTerm>, Scalar> terms_;
};

enum class Derivation { R, RPrime, S, SPrime };

/// Recursions available for the bilinear form.
enum class PairingRoute {
  PeelRightF,  ///< (xF_i, y) = (x, r_i(y))(F_i, E_i)
  PeelLeftF,   ///< (F_i x, y) = (x, r'_i(y))(F_i, E_i)
  PeelLeftE,   ///< (x, E_i y) = (s_i(x), y)(F_i, E_i)
  PeelRightE,  ///< (x, y E_i) = (s'_i(x), y)(F_i, E_i)
};

struct DualBases {
  DegreeVector alpha;
  std::vector<Word> x_words;  ///< canonical F-words x^k
  std::vector<Word> e_words;  ///< canonical E-words
  Matrix<Scalar> y;           ///< row k: coordinates of y^k over e_words
};

int default_max_degree();

/// Lazily extended caches for U(D_red, ℓ). Queries lock internally, so a
/// handle may be shared between threads; warm() front-loads all building.
class AlgebraHandle {
 public:
  /// Throws NotCartan / NotSymmetrizable / validation errors from the datum.
  explicit AlgebraHandle(ReducedDatum datum, std::optional<int> max_degree = std::nullopt);
  ~AlgebraHandle();
  AlgebraHandle(AlgebraHandle&&) noexcept;
  AlgebraHandle& operator=(AlgebraHandle&&) noexcept;

  const ReducedDatum& datum() const;
  const CartanData& cartan() const;
  std::size_t theta() const;
  int max_degree() const;
  /// Set when the Serre presentation is not backed by a finite-type DJ2 twist.
  bool pre_nichols_assumption() const;

  const Scalar& q(std::size_t i, std::size_t j) const;
  /// χ_β(g) for β ∈ Z^θ.
  UnitScalar chi_degree(const DegreeVector& beta, const GroupElement& g) const;
  /// (F_i, E_i) = −ℓ_i.
  Scalar basic_pairing(std::size_t i) const;

  const std::vector<SerreGenerator>& serre_generators(Side side) const;
  /// Throws DegreeCapExceeded; slices with a negative coordinate are empty.
  const GradedSlice& slice(Side side, const DegreeVector& alpha) const;
  std::size_t dim(Side side, const DegreeVector& alpha) const;
  void warm(int degree) const;

  /// Rewrites into canonical words.
  FreeElement reduce(Side side, const FreeElement& x) const;
  std::vector<Scalar> coordinates(Side side, const DegreeVector& alpha, const FreeElement& x) const;
  FreeElement from_coordinates(Side side, const DegreeVector& alpha, const std::vector<Scalar>& coords) const;

  /// r, r' act on U⁺; s, s' on U⁻. Throws WrongSide.
  FreeElement skew_derivation(Side side, Derivation which, std::size_t i, const FreeElement& x) const;
  /// Matrix of a skew derivation U^±_α → U^±_{α−α_i} in canonical coordinates.
  const Matrix<Scalar>& derivation_matrix(Derivation which, std::size_t i, const DegreeVector& alpha) const;
  /// Matrix of left multiplication by E_j (Plus) or F_j (Minus) from degree α to α+α_j.
  const Matrix<Scalar>& left_multiplication_matrix(Side side, std::size_t j, const DegreeVector& alpha) const;

  /// (x, y) for x ∈ U⁻, y ∈ U⁺ (canonical or not), via the word recursion.
  Scalar pairing(const FreeElement& x, const FreeElement& y) const;
  /// Same form, computed on reduced elements through the chosen recursion.
  Scalar pairing_via(PairingRoute route, const FreeElement& x, const FreeElement& y) const;
  /// G_kl = (F_{c_k}, E_{c'_l}) on canonical words of degree α.
  Matrix<Scalar> gram(const DegreeVector& alpha) const;
  /// Throws SingularGram.
  const DualBases& dual_bases(const DegreeVector& alpha) const;
  TensorElement theta_element(const DegreeVector& alpha) const;

  AlgebraElement one() const;
  AlgebraElement E(std::size_t i) const;
  AlgebraElement F(std::size_t i) const;
  AlgebraElement group(const GroupElement& g) const;
  AlgebraElement from_pure(Side side, const FreeElement& x) const;
  /// Throws DegreeCapExceeded.
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  TensorElement multiply(const TensorElement& a, const TensorElement& b) const;
  /// S(x) for x ∈ U⁻, with S(F_i) = −F_i L_i.
  AlgebraElement antipode_uminus(const FreeElement& x) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace hopfkit
