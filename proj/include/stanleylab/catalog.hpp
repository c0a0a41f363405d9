#pragma once

// Generating functions and coefficient formulas for Stanley polyominoes and
// the associated Dyck path statistics.

#include <gmpxx.h>

#include <optional>
#include <string_view>
#include <vector>

#include "stanleylab/series.hpp"

namespace stanleylab {

// Integer sequences -----------------------------------------------------------

mpz_class binomial(int n, int k);
mpz_class catalan(int n);
/// F_0 = 0, F_1 = 1.
mpz_class fibonacci(int n);

/// Coefficients [var^0..var^order] of a series in which no other variable
/// occurs. Throws VariableMismatch otherwise.
std::vector<Rational> coefficients(const Series& s, std::string_view var);

// Five-variable series -------------------------------------------------------

/// Largest area of a polyomino with at most `columns` columns.
int max_area_for_columns(int columns);

/// The space x, y, z, p, q, u (p and q Laurent) used by the five-variable
/// series; x marks columns, y rows, z area, p strictly internal edges,
/// q interior points and u the first row.
std::shared_ptr<const VarSpace> full_space();

/// G/(1 + H) with the Pochhammer-product factors, through x^order_x.
Series gf_full_closed_form(int order_x);
/// The iterated functional equation solved at u = 1, through x^order_x.
Series gf_full_iterated(int order_x);
/// Both forms; throws MismatchBetweenForms when they differ and
/// CancellationFailure when negative p or q powers survive.
Series gf_full(int order_x);

// Kernel-method series ------------------------------------------------------

struct KernelGf {
  /// Small root r of the kernel and R = x r, the fixed point used to build it.
  Series r;
  Series big_r;
  /// G(u) in x and u, and G(1).
  Series g_u;
  Series g_1;
};

/// Columns (x) and first row (u). Throws MismatchBetweenForms if the kernel
/// root fails its defining equation.
KernelGf gf_columns(int order_x);
/// ((k-1)/(2n-k-1)) binom(2n-k-1, n-k) for n >= 2, 1 <= k <= n.
mpz_class coeff_columns(int n, int k);

/// Semiperimeter (x) and first row (u).
KernelGf gf_semiperimeter(int order_x);
/// [x^n u^k] of the semiperimeter series by the double binomial sum
/// (k >= 2), and directly for k = 1. Zero when n <= k. Throws OutOfRange for
/// k < 1 or n < 1.
mpz_class coeff_semiperimeter(int n, int k);

struct ColumnsCorollaries {
  /// dG/du at u = 1: total first-row cells by columns.
  Series first_row_total;
  Series edgint_free;  // x(1-2x)/(x^2-3x+1)
  Series point_free;   // x(1-x)/(1-2x)
  /// Catalan(n)/Catalan(n-1) for n = 1..order: the mean first row at n columns.
  std::vector<Rational> mean_first_row;
};

ColumnsCorollaries gf_columns_corollaries(int order_x);

struct SemiperimeterCorollaries {
  /// dG/du at u = 1.
  Series first_row_total;
  /// G(1)^2 / x^2, which must equal first_row_total.
  Series convolution_square;
  Series edgint_free;  // (x^3-x)/(x^2+x-1)
};

/// Throws MismatchBetweenForms if the convolution identity fails.
SemiperimeterCorollaries gf_semiperimeter_corollaries(int order_x);

// Area ------------------------------------------------------------------------

/// The Pochhammer-ratio form in z through z^order_z.
Series gf_area(int order_z);

// Continued fractions ---------------------------------------------------------

struct CfRecord {
  /// A(p, q, v) with q as grade (p, v symbolic).
  Series a_full;
  /// Series in q alone: A(q,q,1), A(1,q,1), A(1,q,q).
  Series a_qq1;
  Series a_1q1;
  Series a_1qq;
  /// A(p,p,0) as a series in p.
  Series a_pp0;
};

/// A(p, q, v) through q^order by the continued fraction with levels
/// 1 + v - p q^k v^k (depth defaults to order + 2).
Series cf_a(int order, std::optional<int> depth = std::nullopt);
/// The v = 1 fraction -1 + 1/(L_1 - 1/(L_2 - ...)) with L_k = 2 - q^(k + shift):
/// shift 1 gives A(q,q,1), shift 0 gives A(1,q,1).
Series cf_v1(int order, int shift, std::optional<int> depth = std::nullopt);

/// A(p,q,v) and its specialisations through q^order (p^order for
/// A(p,p,0)). Throws MismatchBetweenForms when the direct
/// and substituted forms disagree or A(p,p,0) differs from p^2/(1-p-p^2), and
/// CancellationFailure if negative v powers survive.
CfRecord gf_continued_fractions(int order, std::optional<int> depth = std::nullopt);

}  // namespace stanleylab
