#include "stanleylab/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "stanleylab/error.hpp"

namespace stanleylab {

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : e) {
      h ^= static_cast<std::size_t>(x + 0x9e37);
      h *= 1099511628211ull;
    }
    return h;
  }
};

Exponents zero_exponents() {
  Exponents e{};
  e.fill(0);
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// VarSpace

VarSpace::VarSpace(std::vector<std::string> names, const std::vector<std::string>& laurent)
    : names_(std::move(names)), laurent_(names_.size(), false) {
  if (names_.size() > kMaxVars) {
    throw Error(ErrorCode::VariableMismatch, "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw Error(ErrorCode::VariableMismatch, "duplicate variable " + names_[i]);
    }
  }
  for (const auto& l : laurent) laurent_[index(l)] = true;
}

bool VarSpace::contains(std::string_view name) const noexcept {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t VarSpace::index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(ErrorCode::VariableMismatch, "unknown variable " + std::string(name));
  return static_cast<std::size_t>(it - names_.begin());
}

// ---------------------------------------------------------------------------
// Series basics

Series::Series(std::shared_ptr<const VarSpace> space, std::string_view grade, int order)
    : space_(std::move(space)) {
  grade_ = space_->index(grade);
  if (space_->is_laurent(grade_)) throw Error(ErrorCode::VariableMismatch, "the grade variable cannot be Laurent");
  if (order < 0) throw Error(ErrorCode::VariableMismatch, "negative order");
  bounds_.fill(-1);
  bounds_[grade_] = order;
}

Series Series::zero() const { return with_terms({}); }

Series Series::constant(const Rational& c) const {
  Series s = zero();
  s.add_term(zero_exponents(), c);
  return s;
}

Series Series::var(std::string_view name) const { return monomial({{std::string(name), 1}}); }

Series Series::monomial(const std::vector<std::pair<std::string, int>>& powers, const Rational& c) const {
  Exponents e = zero_exponents();
  for (const auto& [name, k] : powers) {
    const std::size_t i = space_->index(name);
    e[i] += k;
  }
  for (std::size_t i = 0; i < space_->size(); ++i) {
    if (e[i] < 0 && !space_->is_laurent(i)) {
      throw Error(ErrorCode::VariableMismatch, "negative power of non-Laurent variable " + space_->name(i));
    }
  }
  Series s = zero();
  s.add_term(e, c);
  return s;
}

Series Series::with_cap(std::string_view name, int cap) const {
  const std::size_t i = space_->index(name);
  if (space_->is_laurent(i)) throw Error(ErrorCode::VariableMismatch, "a Laurent variable cannot be capped");
  if (i == grade_) throw Error(ErrorCode::VariableMismatch, "the grade variable is bounded by its order");
  Series s = *this;
  s.bounds_[i] = (s.bounds_[i] < 0) ? cap : std::min(s.bounds_[i], cap);
  s.prune();
  return s;
}

std::optional<int> Series::bound(std::string_view name) const {
  const int b = bounds_[space_->index(name)];
  if (b < 0) return std::nullopt;
  return b;
}

Series Series::with_terms(TermMap terms) const {
  Series s(space_, space_->name(grade_), bounds_[grade_]);
  s.bounds_ = bounds_;
  s.terms_ = std::move(terms);
  s.prune();
  return s;
}

void Series::add_term(const Exponents& e, const Rational& c) {
  if (c == 0 || !in_box(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Series::in_box(const Exponents& e) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (bounds_[i] >= 0 && e[i] > bounds_[i]) return false;
  }
  return true;
}

void Series::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || !in_box(it->first)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

void Series::check_compatible(const Series& b) const {
  if (!(space_ == b.space_ || *space_ == *b.space_)) {
    throw Error(ErrorCode::VariableMismatch, "series live in different variable spaces");
  }
  if (grade_ != b.grade_) throw Error(ErrorCode::VariableMismatch, "series have different grade variables");
}

void Series::meet_bounds(const Series& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (b.bounds_[i] >= 0) bounds_[i] = (bounds_[i] < 0) ? b.bounds_[i] : std::min(bounds_[i], b.bounds_[i]);
  }
}

Rational Series::coeff(const std::vector<std::pair<std::string, int>>& powers) const {
  Exponents e = zero_exponents();
  for (const auto& [name, k] : powers) e[space_->index(name)] += k;
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Series Series::coefficient(std::string_view name, int power) const {
  const std::size_t i = space_->index(name);
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[i] != power) continue;
    Exponents f = e;
    f[i] = 0;
    out.emplace(f, c);
  }
  return with_terms(std::move(out));
}

int Series::min_exponent(std::string_view name) const {
  const std::size_t i = space_->index(name);
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[i] < m) m = e[i];
    first = false;
  }
  return m;
}

int Series::max_exponent(std::string_view name) const {
  const std::size_t i = space_->index(name);
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
  return m;
}

bool Series::has_negative_exponents() const noexcept {
  for (const auto& [e, c] : terms_) {
    for (int x : e) {
      if (x < 0) return true;
    }
  }
  return false;
}

bool Series::all_integer() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

// ---------------------------------------------------------------------------
// Arithmetic

Series& Series::operator+=(const Series& b) {
  check_compatible(b);
  meet_bounds(b);
  prune();
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& b) {
  check_compatible(b);
  meet_bounds(b);
  prune();
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

Series& Series::operator*=(const Series& b) {
  *this = *this * b;
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.check_compatible(b);
  Series out = a.zero();
  out.meet_bounds(b);
  if (a.terms_.empty() || b.terms_.empty()) return out;

  const std::size_t g = out.grade_;
  const int order = out.bounds_[g];
  std::vector<std::pair<const Exponents*, const Rational*>> rhs;
  rhs.reserve(b.terms_.size());
  for (const auto& [e, c] : b.terms_) rhs.emplace_back(&e, &c);
  std::stable_sort(rhs.begin(), rhs.end(), [g](const auto& l, const auto& r) { return (*l.first)[g] < (*r.first)[g]; });

  std::unordered_map<Exponents, Rational, ExponentsHash> acc;
  acc.reserve(a.terms_.size() + b.terms_.size());
  Exponents e{};
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    if (ea[g] > order) continue;
    for (const auto& [eb, cb] : rhs) {
      if (ea[g] + (*eb)[g] > order) break;
      for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = ea[i] + (*eb)[i];
      if (!out.in_box(e)) continue;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb->get_mpq_t());
      auto [it, inserted] = acc.try_emplace(e, prod);
      if (!inserted) it->second += prod;
    }
  }
  for (auto& [k, c] : acc) {
    if (c != 0) out.terms_.emplace(k, std::move(c));
  }
  return out;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& [e, c] : s.terms_) c = -c;
  return s;
}

Series Series::pow(int n) const {
  if (n < 0) return invert(*this).pow(-n);
  Series result = constant(1);
  Series base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool Series::operator==(const Series& other) const {
  return (space_ == other.space_ || *space_ == *other.space_) && grade_ == other.grade_ &&
         bounds_ == other.bounds_ && terms_ == other.terms_;
}

Series Series::truncated_like(const Series& box) const {
  check_compatible(box);
  Series s = *this;
  s.meet_bounds(box);
  s.prune();
  return s;
}

bool Series::agrees_with(const Series& other) const {
  return truncated_like(other).terms_ == other.truncated_like(*this).terms_;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  // Grade-major order reads like a power series: by grade exponent, then
  // lexicographically.
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  const std::size_t g = grade_;
  std::stable_sort(sorted.begin(), sorted.end(), [g](const auto& l, const auto& r) { return l.first[g] < r.first[g]; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rational mag = abs(c);
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < space_->size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = space_->name(i);
      if (e[i] != 1) f += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Free operations

Series invert(const Series& a) {
  const VarSpace& space = a.space();
  const Exponents& bounds = a.bounds();
  auto free_of_truncation = [&](const Exponents& e) {
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (bounds[i] >= 0 && e[i] != 0) return false;
    }
    return true;
  };
  const std::pair<const Exponents, Rational>* lead = nullptr;
  for (const auto& term : a.terms()) {
    if (!free_of_truncation(term.first)) continue;
    if (lead != nullptr) throw Error(ErrorCode::NotInvertible, "constant part has more than one term");
    lead = &term;
  }
  if (lead == nullptr) throw Error(ErrorCode::NotInvertible, "constant part is zero");
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (lead->first[i] != 0 && !space.is_laurent(i)) {
      throw Error(ErrorCode::NotInvertible, "constant part involves non-Laurent variable " + space.name(i));
    }
  }
  Exponents inv_e{};
  inv_e.fill(0);
  for (std::size_t i = 0; i < space.size(); ++i) inv_e[i] = -lead->first[i];
  Series b = a.zero();
  b.add_term(inv_e, 1 / lead->second);

  // Newton iteration b <- b (2 - a b); the error valuation doubles each round
  // and the box is finite, so the iterate becomes stationary.
  const Series two = a.constant(2);
  for (int round = 0; round < 64; ++round) {
    Series next = b * (two - a * b);
    if (next == b) return b;
    b = std::move(next);
  }
  throw Error(ErrorCode::NotInvertible, "inverse did not stabilise");
}

Series substitute_monomial(const Series& a, std::string_view var, const Monomial& m) {
  const VarSpace& space = a.space();
  const std::size_t vi = space.index(var);
  Exponents me{};
  me.fill(0);
  for (const auto& [name, k] : m.powers) me[space.index(name)] += k;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (a.bounds()[i] < 0) continue;
    if (me[i] < 0) {
      throw Error(ErrorCode::UnsoundSubstitution, "monomial has a negative power of truncation variable " + space.name(i));
    }
    if (i == vi && me[i] < 1) {
      throw Error(ErrorCode::UnsoundSubstitution, "truncation variable " + space.name(i) + " must map to a multiple of itself");
    }
  }
  Series out = a.zero();
  for (const auto& [e, c] : a.terms()) {
    const int k = e[vi];
    if (k == 0) {
      out.add_term(e, c);
      continue;
    }
    if (m.coeff == 0) {
      if (k < 0) throw Error(ErrorCode::UnsoundSubstitution, "negative power of a variable mapped to zero");
      continue;
    }
    Exponents f = e;
    f[vi] = 0;
    for (std::size_t i = 0; i < space.size(); ++i) f[i] += k * me[i];
    Rational factor = 1;
    mpz_class num = m.coeff.get_num();
    mpz_class den = m.coeff.get_den();
    mpz_class pn, pd;
    const unsigned long ak = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), ak);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), ak);
    factor = (k > 0) ? Rational(pn, pd) : Rational(pd, pn);
    factor.canonicalize();
    out.add_term(f, c * factor);
  }
  return out;
}

Series derivative(const Series& a, std::string_view var) {
  const std::size_t vi = a.space().index(var);
  Series out = a.zero();
  if (out.bounds_[vi] >= 0) out.bounds_[vi] = std::max(out.bounds_[vi] - 1, 0);
  for (const auto& [e, c] : a.terms()) {
    if (e[vi] == 0) continue;
    Exponents f = e;
    f[vi] -= 1;
    out.add_term(f, c * e[vi]);
  }
  return out;
}

Series regrade(const Series& a, std::string_view new_grade, int new_order) {
  const std::size_t gi = a.space().index(new_grade);
  if (a.space().is_laurent(gi)) throw Error(ErrorCode::VariableMismatch, "the grade variable cannot be Laurent");
  Series out = a;
  out.bounds_[out.grade_] = -1;
  out.grade_ = gi;
  out.bounds_[gi] = new_order;
  out.prune();
  return out;
}

Series release_cap(const Series& a, std::string_view var) {
  const std::size_t vi = a.space().index(var);
  if (vi == a.grade_) throw Error(ErrorCode::VariableMismatch, "use regrade to move the grade variable");
  Series out = a;
  out.bounds_[vi] = -1;
  return out;
}

Series embed(const Series& a, std::shared_ptr<const VarSpace> target) {
  const VarSpace& src = a.space();
  Series out(target, a.grade(), a.order());
  std::vector<std::size_t> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (target->contains(src.name(i))) {
      map[i] = target->index(src.name(i));
      if (a.bounds_[i] >= 0) out.bounds_[map[i]] = a.bounds_[i];
    } else {
      map[i] = kMaxVars;
    }
  }
  for (const auto& [e, c] : a.terms()) {
    Exponents f{};
    f.fill(0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] == kMaxVars) throw Error(ErrorCode::VariableMismatch, "variable " + src.name(i) + " missing in target space");
      f[map[i]] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

Series solve_fixed_point(const std::function<Series(const Series&)>& step, const Series& seed,
                         std::optional<int> max_rounds) {
  int rounds = 2;
  if (max_rounds) {
    rounds = *max_rounds;
  } else {
    for (int b : seed.bounds()) rounds += std::max(b, 0);
  }
  Series current = seed;
  for (int i = 0; i < rounds; ++i) {
    Series next = step(current);
    if (next == current) return next;
    current = std::move(next);
  }
  throw Error(ErrorCode::NoContraction, "iteration did not stabilise within " + std::to_string(rounds) + " rounds");
}

namespace {

Series evaluate_cf(const ContinuedFraction& cf, int depth) {
  Series t = cf.level(depth);
  if (cf.tail) t -= cf.numerator * invert(*cf.tail);
  for (int k = depth - 1; k >= 1; --k) t = cf.level(k) - cf.numerator * invert(t);
  return cf.numerator * invert(t) - t.constant(1);
}

}  // namespace

Series continued_fraction(const ContinuedFraction& cf, int depth) {
  if (depth < 1) throw Error(ErrorCode::Unstable, "a continued fraction needs at least one level");
  Series shallow = evaluate_cf(cf, depth);
  Series deep = evaluate_cf(cf, depth + 1);
  if (!(shallow == deep)) {
    throw Error(ErrorCode::Unstable, "depth " + std::to_string(depth) + " does not reach the requested order");
  }
  return shallow;
}

}  // namespace stanleylab
