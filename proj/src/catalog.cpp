#include "stanleylab/catalog.hpp"

#include <algorithm>

#include "stanleylab/error.hpp"

namespace stanleylab {

namespace {

using Powers = std::vector<std::pair<std::string, int>>;

// s / var^k for a series whose terms all carry var^k; the grade order drops
// by k.
Series shift_down(const Series& s, std::string_view var, int k) {
  const std::size_t vi = s.space().index(var);
  if (vi != s.grade_index()) throw Error(ErrorCode::VariableMismatch, "can only shift the grade variable");
  Series out(s.space_ptr(), s.grade(), std::max(s.order() - k, 0));
  for (const auto& [e, c] : s.terms()) {
    if (e[vi] < k) throw Error(ErrorCode::OutOfRange, "series is not divisible by " + std::string(var));
    Exponents f = e;
    f[vi] -= k;
    out.add_term(f, c);
  }
  return out;
}

Series substitute(const Series& s, std::string_view var, Powers powers, const Rational& c = 1) {
  return substitute_monomial(s, var, Monomial{c, std::move(powers)});
}

void require_no_negative(const Series& s, const char* what) {
  if (s.has_negative_exponents()) {
    throw Error(ErrorCode::CancellationFailure, std::string(what) + " keeps negative exponents");
  }
}

void require_equal(const Series& a, const Series& b, const std::string& what) {
  if (!a.agrees_with(b)) throw Error(ErrorCode::MismatchBetweenForms, what);
}

int triangular(int a, int b) { return a * b / 2; }

}  // namespace

// ---------------------------------------------------------------------------
// Integer sequences

mpz_class binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class catalan(int n) { return binomial(2 * n, n) / (n + 1); }

mpz_class fibonacci(int n) {
  mpz_class out;
  mpz_fib_ui(out.get_mpz_t(), static_cast<unsigned long>(std::max(n, 0)));
  return out;
}

std::vector<Rational> coefficients(const Series& s, std::string_view var) {
  const std::size_t vi = s.space().index(var);
  const int top = (vi == s.grade_index()) ? s.order() : s.max_exponent(var);
  std::vector<Rational> out(static_cast<std::size_t>(std::max(top, 0) + 1));
  for (const auto& [e, c] : s.terms()) {
    for (std::size_t i = 0; i < s.space().size(); ++i) {
      if (i != vi && e[i] != 0) {
        throw Error(ErrorCode::VariableMismatch, "series involves " + s.space().name(i) + " besides " + std::string(var));
      }
    }
    if (e[vi] < 0) throw Error(ErrorCode::VariableMismatch, "negative exponent of " + std::string(var));
    out[static_cast<std::size_t>(e[vi])] = c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Five-variable series

int max_area_for_columns(int columns) {
  // k rows of at most columns - k + 1 cells each.
  int best = 0;
  for (int k = 1; k <= columns; ++k) best = std::max(best, k * (columns - k + 1));
  return best;
}

std::shared_ptr<const VarSpace> full_space() {
  static const auto space =
      std::make_shared<const VarSpace>(std::vector<std::string>{"x", "y", "z", "p", "q", "u"},
                                       std::vector<std::string>{"p", "q"});
  return space;
}

namespace {

Series full_box(int order_x) {
  if (order_x < 1) throw Error(ErrorCode::OutOfRange, "order must be at least 1");
  return Series(full_space(), "x", order_x).with_cap("z", max_area_for_columns(order_x));
}

}  // namespace

Series gf_full_closed_form(int order_x) {
  const Series box = full_box(order_x);
  const Series one = box.constant(1);
  const Series p = box.var("p");
  const Series v = box.monomial({{"z", 1}, {"p", 1}, {"q", 1}});
  Series g = box.zero();
  Series h = box.zero();
  Series delta = one;  // Delta_l, built up factor by factor
  for (int l = 0; l < order_x; ++l) {
    const Series vl = v.pow(l);
    const Series xz_vl = box.monomial({{"x", 1}, {"z", 1}}) * vl;
    const Series g_num = box.monomial({{"x", l + 2}, {"y", l + 2}, {"p", triangular(l, l + 3)},
                                       {"q", triangular(l, l + 3)}, {"z", triangular(l + 3, l + 2)}}) *
                             (p - one) -
                         box.monomial({{"x", l + 1}, {"y", l + 1}, {"z", triangular(l + 2, l + 1)},
                                       {"p", triangular(l, l + 1) + 1}, {"q", triangular(l, l + 1)}});
    const Series inv_x_factor = invert(xz_vl - one);
    const Series g_den_mono = box.monomial({{"p", -(2 * l + 1)}, {"q", -l}});
    g += g_num * g_den_mono * inv_x_factor * delta;

    const Series h_num =
        (box.monomial({{"p", triangular(l, l + 5)}, {"q", triangular(l, l + 5) + 1}, {"z", triangular(l + 6, l + 1)}}) *
             (p - one) -
         box.monomial({{"p", triangular(l, l + 3)}, {"q", triangular(l, l + 3)}, {"z", triangular(l + 4, l + 1)}})) *
        box.monomial({{"x", l + 1}, {"y", l + 1}});
    const Series h_den_mono = box.monomial({{"p", -2 * l}, {"q", -l}});
    h += h_num * h_den_mono * inv_x_factor * invert(vl * v - one) * delta;

    // Delta_{l+1} = Delta_l / ((1 - xz v^l)(v^{l+1} - 1)).
    delta = delta * invert(one - xz_vl) * invert(vl * v - one);
  }
  return g * invert(one + h);
}

Series gf_full_iterated(int order_x) {
  const Series box = full_box(order_x);
  const Series one = box.constant(1);
  const Series p = box.var("p");
  const Series uxz = box.monomial({{"u", 1}, {"x", 1}, {"z", 1}});
  const Series uzqp = box.monomial({{"u", 1}, {"z", 1}, {"q", 1}, {"p", 1}});

  // F(u) = A(u) + B(u) F(1) + C(u) F(u z q p)
  const Series a = box.monomial({{"x", 1}, {"z", 1}, {"u", 1}, {"y", 1}}) *
                   (box.monomial({{"x", 1}, {"y", 1}, {"z", 2}, {"u", 1}}) * (p - one) - p) *
                   box.monomial({{"p", -1}}) * invert(uxz - one);
  const Series b = box.monomial({{"u", 2}, {"z", 2}, {"y", 1}, {"x", 1}}) *
                   (one - box.monomial({{"q", 1}, {"z", 1}, {"u", 1}}) * (p - one)) * invert(uxz - one) *
                   invert(uzqp - one);
  const Series c = box.monomial({{"y", 1}, {"x", 1}, {"u", 1}, {"z", 1}, {"q", -1}, {"p", -2}}) *
                   invert(one - uxz) * invert(uzqp - one);

  Series num = box.zero();
  Series den = one;
  Series c_prod = one;
  for (int l = 0; l < order_x; ++l) {
    const Powers vl{{"z", l}, {"p", l}, {"q", l}};
    num += substitute(a, "u", vl) * c_prod;
    den -= substitute(b, "u", vl) * c_prod;
    c_prod = c_prod * substitute(c, "u", vl);
  }
  return num * invert(den);
}

Series gf_full(int order_x) {
  const Series closed = gf_full_closed_form(order_x);
  const Series iterated = gf_full_iterated(order_x);
  require_no_negative(closed, "the closed form");
  require_no_negative(iterated, "the iterated form");
  if (!(closed == iterated)) throw Error(ErrorCode::MismatchBetweenForms, "closed and iterated forms differ");
  if (!closed.all_integer()) throw Error(ErrorCode::CancellationFailure, "non-integer coefficient");
  return closed;
}

// ---------------------------------------------------------------------------
// Kernel-method series

namespace {

std::shared_ptr<const VarSpace> xu_space() {
  static const auto space = std::make_shared<const VarSpace>(std::vector<std::string>{"x", "u"});
  return space;
}

// `t` is the kernel's linear coefficient: r solves x r^2 - t r + 1 = 0 and
// R = x r solves R = (x + R^2)/t. G(u) = lead * u / (1 - R u).
KernelGf kernel_gf(const Series& t, const Series& lead) {
  const Series box = t.zero();
  const Series x = box.var("x");
  const Series u = box.var("u");
  const Series one = box.constant(1);
  const Series t_inv = invert(t);
  KernelGf k{box, box, box, box};
  k.big_r = solve_fixed_point([&](const Series& s) { return (x + s * s) * t_inv; }, box.zero());
  k.r = solve_fixed_point([&](const Series& s) { return (one + x * s * s) * t_inv; }, one);
  require_equal(k.big_r, x * k.r, "R differs from x r");
  if (!(x * k.r * k.r - t * k.r + one).is_zero()) {
    throw Error(ErrorCode::MismatchBetweenForms, "kernel root fails its equation");
  }
  k.g_u = lead * u * invert(one - k.big_r * u);
  k.g_1 = lead * invert(one - k.big_r);
  require_equal(k.g_1 * k.r, k.r - one, "G(1) differs from (r - 1)/r");
  return k;
}

}  // namespace

KernelGf gf_columns(int order_x) {
  if (order_x < 1) throw Error(ErrorCode::OutOfRange, "order must be at least 1");
  const Series box(xu_space(), "x", order_x);
  return kernel_gf(box.constant(1), box.var("x"));
}

mpz_class coeff_columns(int n, int k) {
  if (n < 2 || k < 1 || k > n) throw Error(ErrorCode::OutOfRange, "need n >= 2 and 1 <= k <= n");
  const Rational c = Rational(k - 1, 2 * n - k - 1) * Rational(binomial(2 * n - k - 1, n - k));
  return c.get_num() / c.get_den();
}

KernelGf gf_semiperimeter(int order_x) {
  if (order_x < 1) throw Error(ErrorCode::OutOfRange, "order must be at least 1");
  const Series box(xu_space(), "x", order_x);
  const Series t = box.constant(1) + box.var("x") - box.monomial({{"x", 2}});
  return kernel_gf(t, box.monomial({{"x", 2}}));
}

mpz_class coeff_semiperimeter(int n, int k) {
  if (n < 1 || k < 1) throw Error(ErrorCode::OutOfRange, "need n >= 1 and k >= 1");
  if (k == 1) return n == 2 ? 1 : 0;
  if (n <= k) return 0;
  Rational total = 0;
  for (int j = 0; j <= n - k - 1; ++j) {
    const int l = n - k - 1 - j;
    mpz_class inner = 0;
    for (int b = 0; b <= l / 2; ++b) inner += binomial(n + j - b - 3, l - b) * binomial(l - b, b);
    const Rational lead = Rational(k - 1, 2 * j + k - 1) * Rational(binomial(2 * j + k - 1, j));
    total += lead * Rational((l % 2 == 0) ? inner : mpz_class(-inner));
  }
  total.canonicalize();
  if (total.get_den() != 1) throw Error(ErrorCode::CancellationFailure, "double sum is not an integer");
  return total.get_num();
}

ColumnsCorollaries gf_columns_corollaries(int order_x) {
  const KernelGf k = gf_columns(order_x);
  const Series box = k.g_u.zero();
  const Series x = box.var("x");
  const Series one = box.constant(1);
  ColumnsCorollaries c{box, box, box, {}};
  c.first_row_total = substitute(derivative(k.g_u, "u"), "u", {});
  c.edgint_free = x * (one - 2 * x) * invert(x * x - 3 * x + one);
  c.point_free = x * (one - x) * invert(one - 2 * x);
  for (int n = 1; n <= order_x; ++n) c.mean_first_row.emplace_back(catalan(n), catalan(n - 1));
  for (auto& r : c.mean_first_row) r.canonicalize();
  return c;
}

SemiperimeterCorollaries gf_semiperimeter_corollaries(int order_x) {
  const KernelGf k = gf_semiperimeter(order_x);
  const Series box = k.g_u.zero();
  const Series x = box.var("x");
  const Series one = box.constant(1);
  SemiperimeterCorollaries c{box, box, box};
  c.first_row_total = substitute(derivative(k.g_u, "u"), "u", {});
  c.convolution_square = shift_down(k.g_1 * k.g_1, "x", 2);
  require_equal(c.first_row_total, c.convolution_square, "first-row total differs from the convolution square");
  c.edgint_free = (x * x * x - x) * invert(x * x + x - one);
  return c;
}

// ---------------------------------------------------------------------------
// Area

Series gf_area(int order_z) {
  if (order_z < 1) throw Error(ErrorCode::OutOfRange, "order must be at least 1");
  static const auto space = std::make_shared<const VarSpace>(std::vector<std::string>{"z"});
  const Series box(space, "z", order_z);
  const Series one = box.constant(1);
  auto zp = [&](int k) { return box.monomial({{"z", k}}); };
  auto poch = [&](int l) {
    Series s = one;
    for (int j = 0; j < l; ++j) s *= one - zp(j + 1);
    return s;
  };
  Series num = box.zero();
  for (int l = 0; triangular(l + 2, l + 1) <= order_z; ++l) {
    const Series pl = poch(l);
    const Series term = zp(triangular(l + 2, l + 1)) * invert(pl * pl * (one - zp(l + 1)));
    num += (l % 2 == 0) ? term : -term;
  }
  Series den = one;
  for (int l = 0; triangular(l + 4, l + 1) <= order_z; ++l) {
    const Series pl = poch(l + 1);
    const Series term = zp(triangular(l + 4, l + 1)) * invert(pl * pl);
    den -= (l % 2 == 0) ? term : -term;
  }
  return num * invert(den);
}

// ---------------------------------------------------------------------------
// Continued fractions

Series cf_a(int order, std::optional<int> depth) {
  if (order < 1) throw Error(ErrorCode::OutOfRange, "order must be at least 1");
  static const auto space =
      std::make_shared<const VarSpace>(std::vector<std::string>{"p", "q", "v"}, std::vector<std::string>{"v"});
  const Series box(space, "q", order);
  const Series v = box.var("v");
  const Series base = box.constant(1) + v;
  ContinuedFraction cf{
      [&](int k) { return base - box.monomial({{"p", 1}, {"q", k}, {"v", k}}); },
      v,
      v,
  };
  Series a = continued_fraction(cf, depth.value_or(order + 2));
  require_no_negative(a, "A(p,q,v)");
  return a;
}

Series cf_v1(int order, int shift, std::optional<int> depth) {
  if (order < 1) throw Error(ErrorCode::OutOfRange, "order must be at least 1");
  static const auto space = std::make_shared<const VarSpace>(std::vector<std::string>{"q"});
  const Series box(space, "q", order);
  const Series two = box.constant(2);
  ContinuedFraction cf{
      [&](int k) { return two - box.monomial({{"q", k + shift}}); },
      box.constant(1),
      box.constant(1),
  };
  return continued_fraction(cf, depth.value_or(order + 2));
}

namespace {

// Re-expresses a series whose only variable is `var` as a series in `name`.
Series univariate(const Series& s, std::string_view var, std::string_view name, int order) {
  const auto space = std::make_shared<const VarSpace>(std::vector<std::string>{std::string(name)});
  Series out(space, name, order);
  const std::vector<Rational> c = coefficients(s, var);
  Series::TermMap terms;
  for (std::size_t n = 0; n < c.size(); ++n) {
    Exponents e{};
    e.fill(0);
    e[0] = static_cast<int>(n);
    if (c[n] != 0) terms.emplace(e, c[n]);
  }
  return out.with_terms(std::move(terms));
}

}  // namespace

CfRecord gf_continued_fractions(int order, std::optional<int> depth) {
  const Series a = cf_a(order, depth);
  CfRecord rec{a, a, a, a, a};

  const Series qq1 = substitute(substitute(substitute(a, "p", {{"p", 1}, {"q", 1}}), "v", {}), "p", {});
  const Series one_q1 = substitute(substitute(a, "p", {}), "v", {});
  const Series one_qq = substitute(substitute(a, "p", {}), "v", {{"q", 1}});
  const Series pp0 = substitute(substitute(substitute(a, "p", {{"p", 1}, {"q", 1}}), "v", {}, 0), "p", {});

  rec.a_qq1 = cf_v1(order, 1, depth);
  rec.a_1q1 = cf_v1(order, 0, depth);
  rec.a_1qq = univariate(one_qq, "q", "q", order);
  if (coefficients(qq1, "q") != coefficients(rec.a_qq1, "q")) {
    throw Error(ErrorCode::MismatchBetweenForms, "A(q,q,1): direct fraction differs from A(p,q,v)");
  }
  if (coefficients(one_q1, "q") != coefficients(rec.a_1q1, "q")) {
    throw Error(ErrorCode::MismatchBetweenForms, "A(1,q,1): direct fraction differs from A(p,q,v)");
  }
  rec.a_pp0 = univariate(pp0, "q", "p", order);
  const Series pbox = rec.a_pp0.zero();
  const Series p = pbox.var("p");
  const Series closed = p * p * invert(pbox.constant(1) - p - p * p);
  if (!(closed == rec.a_pp0)) throw Error(ErrorCode::MismatchBetweenForms, "A(p,p,0) differs from p^2/(1-p-p^2)");
  return rec;
}

}  // namespace stanleylab
