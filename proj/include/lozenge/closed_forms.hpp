#pragma once

#include "lozenge/families.hpp"
#include "lozenge/rational.hpp"

namespace lozenge {

/// 0! 1! ... (n-1)!, with H(0) = 1.
BigInt hyperfactorial(int n);

BigInt binomial(int n, int k);

/// Rising factorial extended to all integers k:
///   k > 0: alpha (alpha+1) ... (alpha+k-1)
///   k = 0: 1
///   k < 0: 1 / ((alpha-1)(alpha-2) ... (alpha+k))
/// Throws PochhammerPole if k < 0 and one of those factors is zero.
Rational pochhammer(const Rational& alpha, int k);

/// Tilings of the a,b,c,a,b,c hexagon:
/// H(a)H(b)H(c)H(a+b+c) / (H(a+b)H(a+c)H(b+c)).
BigInt macmahon(int a, int b, int c);

/// Proctor's double product for the hexagon with a maximal staircase removed.
/// 0 <= a <= b+1; a = b+1 evaluates as a = b.
BigInt proctor_count(int a, int b, int c);

/// The same count via the Pochhammer form
///   prod_{i=1}^{a} (c+i)_{b-a+1} (2c+b-a+1+i)_{i-1} / (i)_{b-a+i}.
BigInt proctor_count_alt(int a, int b, int c);

/// Weighted Proctor region (weight 1/2 along the staircase):
///   M(P) / 2^a * prod_{i=1}^{a} (2c+b-a+i)/(c+b-a+i).
Rational ciucu_weighted_count(int a, int b, int c);

/// Tilings of S_{a,b,c}. 0 <= a <= b+1; a = b+1 evaluates as a = b.
BigInt s_count(int a, int b, int c);

/// Matching generating function of S'_{a,b,c}:
///   M(S) / 2^(a+1) * (2c+b+2)/(c+b+1) * prod_{i=1}^{a} (2c+b+1-i)/(c+b+1-i).
/// A 2^a divisor here would overshoot the unweighted count already at a = 0
/// (e.g. 5 > M(S_{0,1,1}) = 3); both counting engines agree with 2^(a+1).
Rational s_prime_count(int a, int b, int c);

/// The same product divided by 2^a, kept so the discrepancy stays testable.
Rational s_prime_count_uncorrected(int a, int b, int c);

/// Tilings of STDH_{a,b,c} = 2^(a+1) M(S'_{a,b,c}) M(S_{a,b-1,c}).
/// Requires 0 <= a <= b, b >= 1.
BigInt stdh_count(int a, int b, int c);

/// Closed-form value for a named family. Throws DomainError for Custom.
Rational formula_value(const RegionSpec& spec);

}  // namespace lozenge
