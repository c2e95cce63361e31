#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ncdouble/scalar.hpp"

namespace ncd {

using Letter = char16_t;

/// Which side of a double a generator belongs to.
enum class Color : std::uint8_t { Plain, A, B };

struct Generator {
  std::string name;
  Color color = Color::Plain;

  friend bool operator==(const Generator&, const Generator&) = default;
};

class Alphabet {
 public:
  explicit Alphabet(std::vector<Generator> generators);

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](Letter l) const { return generators_.at(l); }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<Letter> find(std::string_view name) const;
  Letter at(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.generators_ == b.generators_; }

 private:
  std::vector<Generator> generators_;
  std::unordered_map<std::string, Letter> by_name_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(const std::vector<std::string>& names, Color color = Color::Plain);
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// Finite sequence of letters; the empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::u16string letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::u16string& letters() const { return letters_; }

  Word sub(std::size_t pos, std::size_t len = std::u16string::npos) const { return Word(letters_.substr(pos, len)); }
  Word& operator+=(const Word& o) {
    letters_ += o.letters_;
    return *this;
  }
  void push_back(Letter l) { letters_.push_back(l); }
  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend bool operator==(const Word&, const Word&) = default;

  std::string to_string(const Alphabet& alphabet) const;

 private:
  std::u16string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::u16string>{}(w.letters()); }
};

/// Degree first, then lexicographic by letter index.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters() < b.letters();
  }
};

inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Element of the free algebra over Scalar on a fixed alphabet.
class NCPoly {
 public:
  using TermMap = std::map<Word, Scalar, DegLexLess>;

  NCPoly() = default;
  explicit NCPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  static NCPoly constant(AlphabetPtr alphabet, const Scalar& c);
  static NCPoly monomial(AlphabetPtr alphabet, Word w, const Scalar& c = Scalar(1));
  static NCPoly generator(AlphabetPtr alphabet, std::string_view name);
  static NCPoly generator(AlphabetPtr alphabet, Letter l);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest word length in the support, kZeroDegree for 0.
  int degree() const;
  Scalar coefficient(const Word& w) const;

  /// Adds c*w in place.
  void add_term(const Word& w, const Scalar& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
  friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
  friend bool operator==(const NCPoly& a, const NCPoly& b);

  /// Same terms over another (compatible) alphabet pointer.
  NCPoly with_alphabet(AlphabetPtr alphabet) const;
  NCPoly map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

  /// Canonical text: deglex-descending terms, space separated generator names.
  std::string to_string() const;

 private:
  void unify_alphabet(const NCPoly& o);

  AlphabetPtr alphabet_;
  TermMap terms_;
};

NCPoly substitute(const NCPoly& p, const Assignment& assignment);

/// Unique algebra map extending a letter -> image assignment. Images must share
/// the target alphabet; letters absent from the map raise UnmappedGenerator.
NCPoly apply_linear(const std::map<Letter, NCPoly>& images, const NCPoly& p, AlphabetPtr target);

/// Re-expresses p over `target` by generator name.
NCPoly embed(const NCPoly& p, const AlphabetPtr& target);

/// Coefficient text as it appears in front of a word ("", "-", "h ", "(q + 1) ", ...).
std::string coefficient_prefix(const Scalar& c, bool leading);

}  // namespace ncd
