#pragma once

// Truncated multivariate formal series with exact rational coefficients.
//
// A series lives in a VarSpace (ordered variable names, some of which may
// carry negative exponents) and is truncated by a box: the grade variable is
// kept up to `order`, and any other non-Laurent variable may carry an
// additional cap. Every operation keeps exactly the terms inside the box, so
// results are exact there as long as no factor has negative exponents in a
// truncation variable (Laurent variables can never be truncation variables).

#include <gmpxx.h>

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stanleylab {

using Rational = mpq_class;

inline constexpr std::size_t kMaxVars = 8;
using Exponents = std::array<int, kMaxVars>;

class VarSpace {
 public:
  VarSpace(std::vector<std::string> names, const std::vector<std::string>& laurent = {});

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  bool is_laurent(std::size_t i) const { return laurent_.at(i); }
  bool contains(std::string_view name) const noexcept;
  /// Throws VariableMismatch for unknown names.
  std::size_t index(std::string_view name) const;

  bool operator==(const VarSpace&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<bool> laurent_;
};

/// Sparse product of variable powers, by name. Used for substitutions.
struct Monomial {
  Rational coeff{1};
  std::vector<std::pair<std::string, int>> powers;
};

class Series {
 public:
  using TermMap = std::map<Exponents, Rational>;

  /// The zero series truncated at `grade`^`order`.
  Series(std::shared_ptr<const VarSpace> space, std::string_view grade, int order);

  // Factories sharing this series' space and truncation box.
  Series zero() const;
  Series constant(const Rational& c) const;
  Series var(std::string_view name) const;
  Series monomial(const std::vector<std::pair<std::string, int>>& powers, const Rational& c = 1) const;

  /// Adds (or tightens) a cap on a non-Laurent, non-grade variable.
  Series with_cap(std::string_view name, int cap) const;

  const VarSpace& space() const noexcept { return *space_; }
  const std::shared_ptr<const VarSpace>& space_ptr() const noexcept { return space_; }
  const std::string& grade() const { return space_->name(grade_); }
  int order() const noexcept { return bounds_[grade_]; }
  /// The truncation bound of a variable, if it has one.
  std::optional<int> bound(std::string_view name) const;

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Rational coeff(const std::vector<std::pair<std::string, int>>& powers) const;
  /// [name^power] as a series in the remaining variables.
  Series coefficient(std::string_view name, int power) const;
  /// Smallest exponent of `name` over all terms (0 for the zero series).
  int min_exponent(std::string_view name) const;
  int max_exponent(std::string_view name) const;
  bool has_negative_exponents() const noexcept;
  bool all_integer() const;

  Series& operator+=(const Series& b);
  Series& operator-=(const Series& b);
  Series& operator*=(const Series& b);
  Series& operator*=(const Rational& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }
  Series operator-() const;

  Series pow(int n) const;

  /// Identical space, truncation box and terms.
  bool operator==(const Series& other) const;
  /// Same terms after both sides are cut to the intersection of their boxes.
  bool agrees_with(const Series& other) const;
  /// This series cut to `box`'s truncation (the tighter of the two bounds).
  Series truncated_like(const Series& box) const;

  /// Human readable form, e.g. "x*y*z + x^2*y*z^2".
  std::string to_string() const;

  // Lower-level access for the free functions below.
  const Exponents& bounds() const noexcept { return bounds_; }
  std::size_t grade_index() const noexcept { return grade_; }
  Series with_terms(TermMap terms) const;
  void add_term(const Exponents& e, const Rational& c);

 private:
  bool in_box(const Exponents& e) const noexcept;
  void check_compatible(const Series& b) const;
  void meet_bounds(const Series& b);
  void prune();

  std::shared_ptr<const VarSpace> space_;
  std::size_t grade_ = 0;
  Exponents bounds_{};  // -1 = unbounded
  TermMap terms_;

  friend Series regrade(const Series&, std::string_view, int);
  friend Series release_cap(const Series&, std::string_view);
  friend Series derivative(const Series&, std::string_view);
  friend Series embed(const Series&, std::shared_ptr<const VarSpace>);
};

/// Multiplicative inverse. The part of `a` free of every truncation variable
/// must be a single term c*m with m built from Laurent variables only.
/// Throws NotInvertible otherwise.
Series invert(const Series& a);

/// Replaces `var` by `m` in every term. A truncation variable may only be
/// replaced by a monomial containing it to a power >= 1, so no term can drop
/// below the box; anything else throws UnsoundSubstitution.
Series substitute_monomial(const Series& a, std::string_view var, const Monomial& m);

/// Formal partial derivative. Differentiating in a truncation variable lowers
/// its bound by one.
Series derivative(const Series& a, std::string_view var);

/// Moves the grade to another variable with a new order and drops the old
/// grade's bound. The caller guarantees that every term of the exact series
/// within the new box is already present in `a`.
Series regrade(const Series& a, std::string_view new_grade, int new_order);

/// Drops the cap on `var`; same caller guarantee as regrade.
Series release_cap(const Series& a, std::string_view var);

/// Re-expresses `a` over another variable space by name. Variables missing
/// from the target must not occur in `a`.
Series embed(const Series& a, std::shared_ptr<const VarSpace> target);

/// Iterates s <- step(s) from `seed` until two successive iterates coincide.
/// Throws NoContraction if that does not happen within `max_rounds`
/// (default: sum of the truncation bounds plus two).
Series solve_fixed_point(const std::function<Series(const Series&)>& step, const Series& seed,
                         std::optional<int> max_rounds = std::nullopt);

/// -1 + N/(L_1 - N/(L_2 - N/(L_3 - ...))) evaluated bottom-up.
struct ContinuedFraction {
  /// Partial denominator L_k for k >= 1.
  std::function<Series(int)> level;
  /// The constant partial numerator N.
  Series numerator;
  /// Value substituted for the remainder T_{depth+1}; with no tail the last
  /// level is used as is (T_depth = L_depth).
  std::optional<Series> tail;
};

/// Evaluates with `depth` levels and checks that depth + 1 levels give the
/// same series. Throws Unstable otherwise, and for depth < 1.
Series continued_fraction(const ContinuedFraction& cf, int depth);

}  // namespace stanleylab
